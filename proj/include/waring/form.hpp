#pragma once

// Sparse homogeneous forms, the apolar (differentiation) pairing and
// catalecticant matrices.
//
// Monomials of a fixed degree are ordered graded-lexicographically with
// x > y > z (x0 > x1 > ...), i.e. exponent tuples in decreasing lexicographic
// order. Rows and columns of every matrix built here follow that order.

#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "waring/linalg.hpp"

namespace waring {

using Exponent = std::vector<int>;

enum class Side { Primal, Dual };

long binomial(int n, int k);
long factorial(int n);

/// dim S^degree of an nvars-dimensional space.
Index dim_forms(int nvars, int degree);

/// All exponent tuples of the given degree in graded-lex order.
std::vector<Exponent> monomials(int nvars, int degree);

class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);
  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Index size() const { return static_cast<Index>(monos_.size()); }
  const Exponent& operator[](Index i) const { return monos_[static_cast<std::size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return monos_; }
  Index index_of(const Exponent& e) const;

 private:
  int nvars_, degree_;
  std::vector<Exponent> monos_;
  std::map<Exponent, Index> index_;
};

std::string variable_name(int nvars, int i, Side side);

template <class F>
class HomogeneousForm {
 public:
  using Terms = std::map<Exponent, F, std::greater<>>;

  HomogeneousForm() : HomogeneousForm(1, 0) {}
  HomogeneousForm(int nvars, int degree, Side side = Side::Primal)
      : nvars_(nvars), degree_(degree), side_(side) {
    if (nvars < 1) throw Error(ErrorCode::InvalidArgument, "form needs at least one variable");
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  }

  static HomogeneousForm monomial(const Exponent& e, const F& coeff, Side side = Side::Primal) {
    int d = 0;
    for (int a : e) d += a;
    HomogeneousForm f(static_cast<int>(e.size()), d, side);
    f.add_term(e, coeff);
    return f;
  }

  static HomogeneousForm from_coefficients(const MonomialBasis& basis, const Vector<F>& c,
                                           Side side = Side::Primal) {
    HomogeneousForm f(basis.nvars(), basis.degree(), side);
    for (Index i = 0; i < basis.size(); ++i)
      if (!waring::is_zero(c(i))) f.terms_.emplace(basis[i], c(i));
    return f;
  }

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Side side() const { return side_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  F coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? F(0) : it->second;
  }

  /// Adds coeff * monomial(e); drops the term if it cancels.
  void add_term(const Exponent& e, const F& coeff) {
    if (static_cast<int>(e.size()) != nvars_)
      throw Error(ErrorCode::ArityMismatch, "exponent length does not match the number of variables");
    int d = 0;
    for (int a : e) {
      if (a < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
      d += a;
    }
    if (d != degree_) throw NonHomogeneous(degree_, d);
    if (waring::is_zero(coeff)) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (waring::is_zero(it->second)) terms_.erase(it);
    }
  }

  Vector<F> coefficients(const MonomialBasis& basis) const {
    if (basis.nvars() != nvars_ || basis.degree() != degree_)
      throw Error(ErrorCode::DegreeMismatch, "basis does not match the form");
    Vector<F> c = Vector<F>::Constant(basis.size(), F(0));
    for (const auto& [e, a] : terms_) c(basis.index_of(e)) = a;
    return c;
  }

  F evaluate(const Vector<F>& point) const {
    if (point.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "point has wrong arity");
    std::vector<std::vector<F>> powers(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
      auto& p = powers[static_cast<std::size_t>(i)];
      p.reserve(static_cast<std::size_t>(degree_) + 1);
      p.push_back(F(1));
      for (int k = 1; k <= degree_; ++k) p.push_back(p.back() * point(i));
    }
    F sum(0);
    for (const auto& [e, a] : terms_) {
      F term = a;
      for (int i = 0; i < nvars_; ++i)
        if (e[static_cast<std::size_t>(i)] > 0)
          term = term * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
      sum = sum + term;
    }
    return sum;
  }

  HomogeneousForm with_side(Side side) const {
    HomogeneousForm f = *this;
    f.side_ = side;
    return f;
  }

  template <class Fn>
  auto map_coefficients(Fn&& fn) const {
    using G = std::decay_t<decltype(fn(std::declval<F>()))>;
    HomogeneousForm<G> g(nvars_, degree_, side_);
    for (const auto& [e, a] : terms_) g.add_term(e, fn(a));
    return g;
  }

  HomogeneousForm& operator+=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [e, a] : o.terms_) add_term(e, a);
    return *this;
  }
  HomogeneousForm& operator-=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [e, a] : o.terms_) add_term(e, F(0) - a);
    return *this;
  }
  HomogeneousForm& operator*=(const F& s) {
    if (waring::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, a] : terms_) a = a * s;
    return *this;
  }
  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
  friend HomogeneousForm operator*(HomogeneousForm a, const F& s) { return a *= s; }
  friend HomogeneousForm operator*(const F& s, HomogeneousForm a) { return a *= s; }

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars_ != b.nvars_) throw Error(ErrorCode::ArityMismatch, "product of forms in different rings");
    if (a.side_ != b.side_) throw Error(ErrorCode::InvalidArgument, "product of primal and dual forms");
    HomogeneousForm out(a.nvars_, a.degree_ + b.degree_, a.side_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_ || a.side_ != b.side_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (it->first != e || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }

 private:
  void check_compatible(const HomogeneousForm& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorCode::ArityMismatch, "forms in different rings");
    if (o.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "forms of different degree");
    if (o.side_ != side_) throw Error(ErrorCode::InvalidArgument, "primal and dual forms mixed");
  }

  int nvars_, degree_;
  Side side_;
  Terms terms_;
};

/// Homogeneous coordinates of a point [l] of PV; equality is proportionality.
template <class F>
class LinearFormPoint {
 public:
  explicit LinearFormPoint(Vector<F> coords) : coords_(std::move(coords)) {
    bool nonzero = false;
    for (Index i = 0; i < coords_.size(); ++i) nonzero = nonzero || !is_zero(coords_(i));
    if (!nonzero) throw Error(ErrorCode::InvalidArgument, "point with all coordinates zero");
  }
  LinearFormPoint(std::initializer_list<F> coords) : LinearFormPoint(to_vector(coords)) {}

  int nvars() const { return static_cast<int>(coords_.size()); }
  const Vector<F>& coords() const { return coords_; }
  const F& operator[](Index i) const { return coords_(i); }

  bool proportional_to(const LinearFormPoint& o) const {
    if (o.nvars() != nvars()) return false;
    for (Index i = 0; i < coords_.size(); ++i)
      for (Index j = i + 1; j < coords_.size(); ++j)
        if (!is_zero(coords_(i) * o.coords_(j) - coords_(j) * o.coords_(i))) return false;
    return true;
  }
  friend bool operator==(const LinearFormPoint& a, const LinearFormPoint& b) { return a.proportional_to(b); }

  /// Scaled so that the first nonzero coordinate is one.
  LinearFormPoint normalized() const {
    for (Index i = 0; i < coords_.size(); ++i)
      if (!is_zero(coords_(i))) {
        const F inv = F(1) / coords_(i);
        Vector<F> c = coords_;
        for (Index j = 0; j < c.size(); ++j) c(j) = c(j) * inv;
        return LinearFormPoint(std::move(c));
      }
    return *this;
  }

 private:
  static Vector<F> to_vector(std::initializer_list<F> list) {
    Vector<F> v(static_cast<Index>(list.size()));
    Index i = 0;
    for (const auto& c : list) v(i++) = c;
    return v;
  }
  Vector<F> coords_;
};

/// Expansion of l^d with exact multinomial coefficients.
template <class F>
HomogeneousForm<F> power_of_linear(const LinearFormPoint<F>& l, int d) {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative power");
  const int n = l.nvars();
  std::vector<std::vector<F>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& p = powers[static_cast<std::size_t>(i)];
    p.push_back(F(1));
    for (int k = 1; k <= d; ++k) p.push_back(p.back() * l[i]);
  }
  HomogeneousForm<F> f(n, d, Side::Primal);
  const long dfact = factorial(d);
  for (const Exponent& e : monomials(n, d)) {
    long multinomial = dfact;
    F c(1);
    for (int i = 0; i < n; ++i) {
      const int a = e[static_cast<std::size_t>(i)];
      multinomial /= factorial(a);
      if (a > 0) c = c * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
    }
    if (!is_zero(c)) f.add_term(e, F(multinomial) * c);
  }
  return f;
}

/// D applied to f as a constant-coefficient differential operator.
template <class F>
HomogeneousForm<F> apolar_apply(const HomogeneousForm<F>& op, const HomogeneousForm<F>& f) {
  if (op.nvars() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "operator and form in different rings");
  if (op.degree() > f.degree())
    throw Error(ErrorCode::DegreeMismatch, "operator degree " + std::to_string(op.degree()) +
                                               " exceeds form degree " + std::to_string(f.degree()));
  const int n = f.nvars();
  HomogeneousForm<F> out(n, f.degree() - op.degree(), Side::Primal);
  Exponent e(static_cast<std::size_t>(n));
  for (const auto& [a, da] : op.terms()) {
    for (const auto& [b, fb] : f.terms()) {
      long scale = 1;
      bool divides = true;
      for (std::size_t i = 0; i < e.size() && divides; ++i) {
        if (b[i] < a[i]) {
          divides = false;
          break;
        }
        e[i] = b[i] - a[i];
        for (int k = b[i]; k > e[i]; --k) scale *= k;
      }
      if (divides) out.add_term(e, da * fb * F(scale));
    }
  }
  return out;
}

/// Matrix of cat_p(f): S^p V* -> S^{d-p} V. Columns are degree-p dual
/// monomials, rows degree-(d-p) primal monomials.
template <class F>
struct CatalecticantMatrix {
  int p = 0;
  int d = 0;
  Matrix<F> entries;
};

template <class F>
CatalecticantMatrix<F> catalecticant(const HomogeneousForm<F>& f, int p) {
  if (p < 0 || p > f.degree())
    throw Error(ErrorCode::DegreeMismatch, "catalecticant order " + std::to_string(p) +
                                               " outside [0, " + std::to_string(f.degree()) + "]");
  const int n = f.nvars();
  const MonomialBasis cols(n, p), rows(n, f.degree() - p);
  CatalecticantMatrix<F> cat{p, f.degree(), Matrix<F>::Constant(rows.size(), cols.size(), F(0))};
  Exponent e(static_cast<std::size_t>(n));
  // Entry (beta - alpha, alpha) receives f_beta * beta!/(beta-alpha)!.
  for (Index j = 0; j < cols.size(); ++j) {
    const Exponent& a = cols[j];
    for (const auto& [b, fb] : f.terms()) {
      long scale = 1;
      bool divides = true;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (b[i] < a[i]) {
          divides = false;
          break;
        }
        e[i] = b[i] - a[i];
        for (int k = b[i]; k > e[i]; --k) scale *= k;
      }
      if (divides) cat.entries(rows.index_of(e), j) = fb * F(scale);
    }
  }
  return cat;
}

/// Rows are points, columns the degree-t monomials evaluated there.
template <class F>
Matrix<F> evaluation_matrix(const std::vector<LinearFormPoint<F>>& points, int nvars, int t) {
  const MonomialBasis basis(nvars, t);
  Matrix<F> m(static_cast<Index>(points.size()), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto& pt = points[r];
    if (pt.nvars() != nvars) throw Error(ErrorCode::ArityMismatch, "point has wrong arity");
    std::vector<std::vector<F>> powers(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
      auto& p = powers[static_cast<std::size_t>(i)];
      p.push_back(F(1));
      for (int k = 1; k <= t; ++k) p.push_back(p.back() * pt[i]);
    }
    for (Index c = 0; c < basis.size(); ++c) {
      F v(1);
      for (int i = 0; i < nvars; ++i) {
        const int a = basis[c][static_cast<std::size_t>(i)];
        if (a > 0) v = v * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
      }
      m(static_cast<Index>(r), c) = v;
    }
  }
  return m;
}

/// Forms whose coefficient vectors are the given vectors in the degree basis.
template <class F>
std::vector<HomogeneousForm<F>> forms_from_vectors(const MonomialBasis& basis,
                                                   const std::vector<Vector<F>>& vectors, Side side) {
  std::vector<HomogeneousForm<F>> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(HomogeneousForm<F>::from_coefficients(basis, v, side));
  return out;
}

}  // namespace waring
