#pragma once

// Dense univariate polynomials over a field, lowest degree first.

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "waring/linalg.hpp"

namespace waring {

template <class F>
struct UniPoly {
  std::vector<F> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }
  static UniPoly constant(const F& a) { return UniPoly(std::vector<F>{a}); }
  static UniPoly linear(const F& a0, const F& a1) { return UniPoly(std::vector<F>{a0, a1}); }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero_poly() const { return c.empty(); }
  F coeff(int i) const { return i < 0 || i >= static_cast<int>(c.size()) ? F(0) : c[static_cast<std::size_t>(i)]; }
  F leading() const { return c.empty() ? F(0) : c.back(); }

  F operator()(const F& x) const {
    F v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
  }

  UniPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * F(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (c.empty()) return *this;
    const F inv = F(1) / c.back();
    UniPoly out = *this;
    for (auto& a : out.c) a = a * inv;
    return out;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c.empty() || b.c.empty()) return UniPoly();
    std::vector<F> r(a.c.size() + b.c.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
    return UniPoly(std::move(r));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }
};

template <class F>
UniPoly<F> pow(const UniPoly<F>& p, int e) {
  UniPoly<F> r = UniPoly<F>::constant(F(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

/// Quotient and remainder; b must be nonzero.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero_poly()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<F> r = a.c;
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<F>(), a};
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db + 1), F(0));
  const F inv = F(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const F f = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    if (is_zero(f)) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] = r[static_cast<std::size_t>(i - db + j)] - f * b.c[static_cast<std::size_t>(j)];
  }
  return {UniPoly<F>(std::move(q)), UniPoly<F>(std::move(r))};
}

/// Monic gcd (zero if both are zero).
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero_poly()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Resultant with formal degrees da >= deg a, db >= deg b (Sylvester determinant).
template <class F>
F resultant(const UniPoly<F>& a, int da, const UniPoly<F>& b, int db) {
  const Index n = da + db;
  if (n == 0) return F(1);
  Matrix<F> s = Matrix<F>::Constant(n, n, F(0));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) s(i, i + j) = a.coeff(da - j);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) s(db + i, i + j) = b.coeff(db - j);
  return determinant<F>(s);
}

/// Eigenvalues of the companion matrix of a polynomial with complex coefficients.
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace waring
