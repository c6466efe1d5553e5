#pragma once

// Scalar fields used throughout the library:
//   Rational       exact elements of Q (GMP-backed, always in lowest terms)
//   Cyclotomic     exact elements of Q(zeta_m) in the power basis mod Phi_m
//   ComplexApprox  double-precision complex numbers with a zero tolerance
//
// Conductor 1 is Q itself; a conductor m = 2 mod 4 is stored as m/2. A rational-valued Cyclotomic combines with any
// conductor; two different conductors otherwise raise FieldMismatch unless one
// side is lifted explicitly with lift().

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "waring/error.hpp"

namespace waring {

class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string str() const;

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Integer power, exponent >= 0.
Rational pow(const Rational& base, int exponent);

/// Exact rational n-th root if one exists (n >= 1).
bool rational_root(const Rational& value, int n, Rational& root);

/// Closest fraction with denominator <= max_den (continued fractions).
Rational rationalize(double x, long max_den);

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int m);

struct ComplexApprox {
  static constexpr double kDefaultTol = 1e-9;

  std::complex<double> value{0.0, 0.0};
  double tol = kDefaultTol;

  ComplexApprox() = default;
  template <std::integral I>
  ComplexApprox(I n) : value(static_cast<double>(n), 0.0) {}  // NOLINT(google-explicit-constructor)
  ComplexApprox(double re, double im, double t = kDefaultTol) : value(re, im), tol(t) {}
  explicit ComplexApprox(std::complex<double> v, double t = kDefaultTol) : value(v), tol(t) {}

  double re() const { return value.real(); }
  double im() const { return value.imag(); }
  bool is_zero() const { return std::abs(value) <= tol; }

  ComplexApprox& operator+=(const ComplexApprox& o);
  ComplexApprox& operator-=(const ComplexApprox& o);
  ComplexApprox& operator*=(const ComplexApprox& o);
  ComplexApprox& operator/=(const ComplexApprox& o);
  friend ComplexApprox operator+(ComplexApprox a, const ComplexApprox& b) { return a += b; }
  friend ComplexApprox operator-(ComplexApprox a, const ComplexApprox& b) { return a -= b; }
  friend ComplexApprox operator*(ComplexApprox a, const ComplexApprox& b) { return a *= b; }
  friend ComplexApprox operator/(ComplexApprox a, const ComplexApprox& b) { return a /= b; }
  friend ComplexApprox operator-(const ComplexApprox& a) { return ComplexApprox(-a.value, a.tol); }
  friend bool operator==(const ComplexApprox& a, const ComplexApprox& b) {
    return std::abs(a.value - b.value) <= std::max(a.tol, b.tol);
  }
};

class Cyclotomic {
 public:
  Cyclotomic() : coeffs_{Rational(0)} {}
  template <std::integral I>
  Cyclotomic(I n) : coeffs_{Rational(n)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q) : coeffs_{q} {}  // NOLINT(google-explicit-constructor)
  /// Element sum_j coeffs[j] z^j of Q(zeta_m); any length, reduced mod Phi_m.
  Cyclotomic(int conductor, std::vector<Rational> coeffs);

  /// zeta_m = exp(2 pi i / m). zeta_2 is returned as the rational -1.
  static Cyclotomic zeta(int m);
  /// zeta_m^j for any integer j.
  static Cyclotomic zeta_power(int m, long j);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws InvalidArgument if the value is not rational.
  Rational rational_value() const;

  Cyclotomic inverse() const;
  ComplexApprox embed(double tol = ComplexApprox::kDefaultTol) const;
  std::string str() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

/// Re-express a in Q(zeta_m); m must be a multiple of a's conductor
/// (or a must be rational-valued).
Cyclotomic lift(const Cyclotomic& a, int m);

/// Smallest conductor containing both (lcm), for explicit lifting.
int common_conductor(int m1, int m2);

Cyclotomic pow(const Cyclotomic& base, int exponent);

inline ComplexApprox embed_complex(const Rational& q, double tol = ComplexApprox::kDefaultTol) {
  return ComplexApprox(q.to_double(), 0.0, tol);
}
inline ComplexApprox embed_complex(const Cyclotomic& a, double tol = ComplexApprox::kDefaultTol) {
  return a.embed(tol);
}
inline ComplexApprox embed_complex(const ComplexApprox& a, double = ComplexApprox::kDefaultTol) {
  return a;
}

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }
inline bool is_zero(const ComplexApprox& a) { return a.is_zero(); }

template <class F>
struct field_traits {
  static constexpr bool exact = true;
};
template <>
struct field_traits<ComplexApprox> {
  static constexpr bool exact = false;
};

template <class F>
concept Field = requires(F a, F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { is_zero(a) } -> std::convertible_to<bool>;
  F(0);
  F(1);
};

template <class F>
concept ExactField = Field<F> && field_traits<F>::exact;

}  // namespace waring

namespace Eigen {

template <>
struct NumTraits<waring::Rational> : GenericNumTraits<waring::Rational> {
  using Real = waring::Rational;
  using NonInteger = waring::Rational;
  using Literal = waring::Rational;
  using Nested = waring::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<waring::Cyclotomic> : GenericNumTraits<waring::Cyclotomic> {
  using Real = waring::Cyclotomic;
  using NonInteger = waring::Cyclotomic;
  using Literal = waring::Cyclotomic;
  using Nested = waring::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 400
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<waring::ComplexApprox> : GenericNumTraits<waring::ComplexApprox> {
  using Real = waring::ComplexApprox;
  using NonInteger = waring::ComplexApprox;
  using Literal = waring::ComplexApprox;
  using Nested = waring::ComplexApprox;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 6
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 15; }
};

}  // namespace Eigen
