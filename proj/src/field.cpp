#include "waring/field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>

namespace waring {

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

bool rational_root(const Rational& value, int n, Rational& root) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root index must be positive");
  if (n == 1 || value.is_zero()) {
    root = value;
    return true;
  }
  if (value.sign() < 0 && n % 2 == 0) return false;
  mpz_class num = abs(value.numerator());
  mpz_class den = value.denominator();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n)) == 0) return false;
  mpq_class r(rn, rd);
  r.canonicalize();
  if (value.sign() < 0) r = -r;
  root = Rational(r);
  return true;
}

Rational rationalize(double x, long max_den) {
  const bool negative = x < 0;
  double v = std::fabs(x);
  long h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  long best_h = static_cast<long>(std::llround(v)), best_k = 1;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(v);
    if (a > 1e15) break;
    const long ai = static_cast<long>(a);
    const long h = ai * h1 + h2;
    const long k = ai * k1 + k2;
    if (k > max_den) break;
    best_h = h;
    best_k = k;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
    const double frac = v - a;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  Rational r(best_h, best_k);
  return negative ? -r : r;
}

// ------------------------------------------------------- cyclotomic support

int euler_phi(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  std::vector<long> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

bool is_zero_poly(const QPoly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

void reduce_mod(QPoly& p, int m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t n = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > n;) {
    if (p[i].is_zero()) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j <= n; ++j)
      if (phi[j] != 0) p[i - n + j] -= c * Rational(phi[j]);
  }
  p.resize(n, Rational(0));
}

// Polynomial long division over Q: a = q*b + r.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  r = a;
  trim(r);
  QPoly bb = b;
  trim(bb);
  const std::size_t db = bb.size() - 1;
  if (r.size() < bb.size()) {
    q.assign(1, Rational(0));
    return;
  }
  q.assign(r.size() - db, Rational(0));
  const Rational lead_inv = bb.back().inverse();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const Rational c = r[i] * lead_inv;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * bb[j];
  }
  r.resize(std::max<std::size_t>(db, 1), Rational(0));
  trim(r);
  trim(q);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // Phi_m = (z^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide_exact(num, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(num)).first->second;
}

// --------------------------------------------------------------- ComplexApprox

ComplexApprox& ComplexApprox::operator+=(const ComplexApprox& o) {
  value += o.value;
  tol = std::max(tol, o.tol);
  return *this;
}
ComplexApprox& ComplexApprox::operator-=(const ComplexApprox& o) {
  value -= o.value;
  tol = std::max(tol, o.tol);
  return *this;
}
ComplexApprox& ComplexApprox::operator*=(const ComplexApprox& o) {
  value *= o.value;
  tol = std::max(tol, o.tol);
  return *this;
}
ComplexApprox& ComplexApprox::operator/=(const ComplexApprox& o) {
  if (o.value == std::complex<double>(0.0, 0.0))
    throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  value /= o.value;
  tol = std::max(tol, o.tol);
  return *this;
}

// ------------------------------------------------------------------ Cyclotomic

Cyclotomic::Cyclotomic(int conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  if (coeffs.empty()) coeffs.emplace_back(0);
  if (conductor == 2) {
    // Q(zeta_2) = Q with zeta_2 = -1.
    Rational value(0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) value += (j % 2 == 0) ? coeffs[j] : -coeffs[j];
    coeffs_ = {value};
    conductor_ = 1;
    return;
  }
  if (conductor % 4 == 2) {
    // zeta_m = -zeta_{m/2}^{(m/2+1)/2} for m/2 odd.
    const int half = conductor / 2;
    const Cyclotomic w = -zeta_power(half, (half + 1) / 2);
    Cyclotomic acc(0);
    for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * w + Cyclotomic(coeffs[j]);
    *this = std::move(acc);
    return;
  }
  conductor_ = conductor;
  reduce_mod(coeffs, conductor);
  coeffs_ = std::move(coeffs);
}

Cyclotomic Cyclotomic::zeta(int m) { return zeta_power(m, 1); }

Cyclotomic Cyclotomic::zeta_power(int m, long j) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  if (m == 1) return Cyclotomic(1);
  long e = j % m;
  if (e < 0) e += m;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
  c[static_cast<std::size_t>(e)] = Rational(1);
  return Cyclotomic(m, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (!coeffs_[j].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is not rational: " + str());
  return coeffs_[0];
}

namespace {

// Bring a and b to one conductor; returns the common conductor.
int align(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() == b.conductor()) return a.conductor();
  if (b.is_rational()) return a.conductor();
  if (a.is_rational()) return b.conductor();
  throw Error(ErrorCode::FieldMismatch, "operands from Q(zeta_" + std::to_string(a.conductor()) +
                                            ") and Q(zeta_" + std::to_string(b.conductor()) + ")");
}

std::vector<Rational> coefficients_in(const Cyclotomic& a, int m) {
  if (a.conductor() == m) return a.coeffs();
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  c[0] = a.coeffs()[0];
  return c;
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int m = align(*this, o);
  auto a = coefficients_in(*this, m);
  const auto b = coefficients_in(o, m);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  conductor_ = m;
  coeffs_ = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  const int m = align(*this, o);
  auto a = coefficients_in(*this, m);
  const auto b = coefficients_in(o, m);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  conductor_ = m;
  coeffs_ = std::move(a);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  const int m = align(*this, o);
  if (o.is_rational()) {
    const Rational s = o.coeffs_[0];
    auto a = coefficients_in(*this, m);
    for (auto& c : a) c *= s;
    conductor_ = m;
    coeffs_ = std::move(a);
    return *this;
  }
  if (is_rational()) {
    const Rational s = coeffs_[0];
    auto b = coefficients_in(o, m);
    for (auto& c : b) c *= s;
    conductor_ = m;
    coeffs_ = std::move(b);
    return *this;
  }
  auto prod = poly_mul(coeffs_, o.coeffs_);
  reduce_mod(prod, m);
  conductor_ = m;
  coeffs_ = std::move(prod);
  return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  // Different conductors and not both rational: compare in the common field.
  const int m = common_conductor(a.conductor_, b.conductor_);
  return lift(a, m).coeffs_ == lift(b, m).coeffs_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return Cyclotomic(coeffs_[0].inverse());
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  QPoly r0(phi_int.begin(), phi_int.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0{Rational(0)}, s1{Rational(1)};
  while (!is_zero_poly(r1)) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Phi_m is irreducible.
  const Rational g = r0[0].inverse();
  for (auto& c : s0) c *= g;
  return Cyclotomic(conductor_, std::move(s0));
}

ComplexApprox Cyclotomic::embed(double tol) const {
  std::complex<double> sum(0.0, 0.0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_;
    sum += coeffs_[j].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return ComplexApprox(sum, tol);
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coeffs_[0].str();
  std::string out = "{m:" + std::to_string(conductor_) + "}(";
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (j == 0) {
      out += mag.str();
      continue;
    }
    if (!(mag == Rational(1))) out += mag.str() + "*";
    out += "z";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

int common_conductor(int m1, int m2) { return std::lcm(m1, m2); }

Cyclotomic lift(const Cyclotomic& a, int m) {
  if (a.conductor() == m) return a;
  if (a.is_rational()) return Cyclotomic(m, {a.coeffs()[0]});
  if (m % a.conductor() != 0)
    throw Error(ErrorCode::FieldMismatch, "cannot lift Q(zeta_" + std::to_string(a.conductor()) +
                                              ") into Q(zeta_" + std::to_string(m) + ")");
  const std::size_t step = static_cast<std::size_t>(m / a.conductor());
  std::vector<Rational> c(a.coeffs().size() * step, Rational(0));
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) c[j * step] = a.coeffs()[j];
  return Cyclotomic(m, std::move(c));
}

Cyclotomic pow(const Cyclotomic& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Cyclotomic result(1);
  Cyclotomic b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

}  // namespace waring
