#pragma once

// Finite point sets in P^1 / P^2: Hilbert functions, first differences,
// Cayley-Bacharach, liaison arithmetic on Dh sequences and Hilbert-Burch
// degree data.

#include <optional>
#include <utility>
#include <vector>

#include "waring/form.hpp"
#include "waring/univariate.hpp"

namespace waring {

template <class F>
class PointSet {
 public:
  using Point = LinearFormPoint<F>;

  explicit PointSet(int nvars) : nvars_(nvars) {}
  PointSet(int nvars, std::vector<Point> points) : nvars_(nvars) {
    for (auto& p : points) push_back(std::move(p));
  }
  explicit PointSet(std::vector<Point> points)
      : PointSet(points.empty() ? 3 : points.front().nvars(), std::move(points)) {}

  int nvars() const { return nvars_; }
  Index size() const { return static_cast<Index>(points_.size()); }
  bool empty() const { return points_.empty(); }
  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](Index i) const { return points_[static_cast<std::size_t>(i)]; }

  std::optional<Index> find(const Point& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].proportional_to(p)) return static_cast<Index>(i);
    return std::nullopt;
  }
  bool contains(const Point& p) const { return find(p).has_value(); }

  /// Throws DuplicatePoint if p is proportional to a member.
  void push_back(Point p) {
    if (p.nvars() != nvars_) throw Error(ErrorCode::ArityMismatch, "point has wrong arity");
    if (contains(p)) throw Error(ErrorCode::DuplicatePoint, "point already in the set");
    points_.push_back(std::move(p));
  }

  PointSet without(Index i) const {
    PointSet out(nvars_);
    for (Index j = 0; j < size(); ++j)
      if (j != i) out.points_.push_back(points_[static_cast<std::size_t>(j)]);
    return out;
  }

  PointSet subset(const std::vector<Index>& indices) const {
    PointSet out(nvars_);
    for (Index j : indices) out.points_.push_back(points_[static_cast<std::size_t>(j)]);
    return out;
  }

  PointSet union_with(const PointSet& o) const {
    PointSet out = *this;
    for (const auto& p : o.points_) out.push_back(p);
    return out;
  }

 private:
  int nvars_;
  std::vector<Point> points_;
};

struct DhSequence {
  enum class Source { Computed, Declared };

  std::vector<int> values;
  Source source = Source::Declared;

  DhSequence() = default;
  explicit DhSequence(std::vector<int> v, Source s = Source::Declared) : values(std::move(v)), source(s) { trim(); }

  void trim() {
    while (!values.empty() && values.back() == 0) values.pop_back();
  }
  int at(int t) const { return t < 0 || t >= static_cast<int>(values.size()) ? 0 : values[static_cast<std::size_t>(t)]; }
  int total() const;
  int size() const { return static_cast<int>(values.size()); }
  friend bool operator==(const DhSequence& a, const DhSequence& b) { return a.values == b.values; }
};

struct ResolutionDegrees {
  std::vector<int> generators;
  std::vector<int> syzygies;

  void sort();
  friend bool operator==(const ResolutionDegrees& a, const ResolutionDegrees& b) {
    return a.generators == b.generators && a.syzygies == b.syzygies;
  }
};

struct LiaisonResolution {
  ResolutionDegrees non_minimal;
  ResolutionDegrees minimal;
  bool cancelled = false;
};

struct Plateau {
  int t0;
  int height;
  friend bool operator==(const Plateau&, const Plateau&) = default;
};

std::vector<Plateau> detect_plateaus(const DhSequence& dh);

/// Dh of a complete intersection of type (d1, d2).
DhSequence ci_dh(int d1, int d2);

/// Dh of the residual in the complete intersection (d1, d2).
DhSequence liaison_dh(const DhSequence& dh_union, const DhSequence& dh_x, int d1, int d2);

LiaisonResolution liaison_resolution_degrees(const ResolutionDegrees& res, int d1, int d2);

/// Syzygy degrees forced by the Hilbert series of dh and the generator degrees.
std::vector<int> syzygies_from_hilbert_series(const DhSequence& dh, const std::vector<int>& generators,
                                              int nvars = 3);

/// Exact check of sum Dh(t) s^t (1-s)^(nvars-1) = 1 - sum s^b + sum s^c.
bool hilbert_series_identity(const DhSequence& dh, const ResolutionDegrees& res, int nvars = 3);

/// The Dh profile of a decomposition union of length 2(k+1)^2+1 for
/// (x y z)^k, with the value at 2k+2 equal to k+1.
DhSequence overcomplete_union_profile(int k);

/// Degree-t forms vanishing on X, as coefficient vectors in MonomialBasis(nvars, t).
template <class F>
std::vector<Vector<F>> ideal_of_points(const PointSet<F>& x, int t) {
  const MonomialBasis basis(x.nvars(), t);
  if (x.empty()) {
    std::vector<Vector<F>> all;
    for (Index i = 0; i < basis.size(); ++i) {
      Vector<F> v = Vector<F>::Constant(basis.size(), F(0));
      v(i) = F(1);
      all.push_back(std::move(v));
    }
    return all;
  }
  return exact_rank<F>(evaluation_matrix<F>(x.points(), x.nvars(), t)).kernel;
}

template <class F>
Index hilbert_function(const PointSet<F>& x, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (x.empty()) return 0;
  return rank_of<F>(evaluation_matrix<F>(x.points(), x.nvars(), t));
}

template <class F>
DhSequence dh(const PointSet<F>& x) {
  std::vector<int> values;
  Index prev = 0;
  for (int t = 0; prev < x.size(); ++t) {
    const Index h = hilbert_function(x, t);
    values.push_back(static_cast<int>(h - prev));
    prev = h;
  }
  return DhSequence(std::move(values), DhSequence::Source::Computed);
}

template <class F>
int regularity(const PointSet<F>& x) {
  return std::max(1, dh(x).size());
}

template <class F>
struct CayleyBacharachResult {
  bool holds = true;
  std::optional<Index> failing_point;
};

template <class F>
CayleyBacharachResult<F> cayley_bacharach(const PointSet<F>& x, int d) {
  CayleyBacharachResult<F> out;
  const Index full = hilbert_function(x, d);
  for (Index i = 0; i < x.size(); ++i) {
    if (hilbert_function(x.without(i), d) != full) {
      out.holds = false;
      out.failing_point = i;
      return out;
    }
  }
  return out;
}

namespace detail {

/// Coefficient vectors of the variable multiples of the given degree-(t-1) forms.
template <class F>
std::vector<Vector<F>> variable_multiples(const std::vector<Vector<F>>& lower, int nvars, int t) {
  std::vector<Vector<F>> out;
  if (t < 1) return out;
  const MonomialBasis from(nvars, t - 1), to(nvars, t);
  for (const auto& v : lower) {
    for (int i = 0; i < nvars; ++i) {
      Vector<F> w = Vector<F>::Constant(to.size(), F(0));
      for (Index j = 0; j < from.size(); ++j) {
        if (is_zero(v(j))) continue;
        Exponent e = from[j];
        ++e[static_cast<std::size_t>(i)];
        w(to.index_of(e)) = v(j);
      }
      out.push_back(std::move(w));
    }
  }
  return out;
}

/// Rows of the RREF of the part of `upper` not in the span of `multiples`.
template <class F>
std::vector<Vector<F>> new_generators(const std::vector<Vector<F>>& multiples,
                                      const std::vector<Vector<F>>& upper, Index dim) {
  std::vector<Index> pivots;
  const Matrix<F> span = multiples.empty() ? Matrix<F>(0, dim) : rref<F>(stack_rows(multiples, dim), &pivots);
  std::vector<Vector<F>> residuals;
  for (Vector<F> v : upper) {
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const F c = v(pivots[i]);
      if (is_zero(c)) continue;
      for (Index j = 0; j < dim; ++j)
        if (!is_zero(span(static_cast<Index>(i), j))) v(j) = v(j) - c * span(static_cast<Index>(i), j);
    }
    residuals.push_back(std::move(v));
  }
  std::vector<Vector<F>> out;
  if (residuals.empty()) return out;
  const Matrix<F> r = rref<F>(stack_rows(residuals, dim));
  for (Index i = 0; i < r.rows(); ++i) out.push_back(r.row(i).transpose());
  return out;
}

}  // namespace detail

template <class F>
ResolutionDegrees generator_degrees(const PointSet<F>& x, int tmax) {
  const DhSequence h = dh(x);
  const int reg = std::max(1, h.size());
  if (tmax < reg + 1)
    throw Error(ErrorCode::InsufficientDegreeBound,
                "degree bound " + std::to_string(tmax) + " below regularity + 1 = " + std::to_string(reg + 1));
  ResolutionDegrees res;
  std::vector<Vector<F>> lower;
  for (int t = 1; t <= tmax; ++t) {
    std::vector<Vector<F>> upper = ideal_of_points(x, t);
    const auto mult = detail::variable_multiples<F>(lower, x.nvars(), t);
    const Index spanned = mult.empty() ? 0 : rank_of<F>(stack_rows(mult, dim_forms(x.nvars(), t)));
    const Index fresh = static_cast<Index>(upper.size()) - spanned;
    for (Index i = 0; i < fresh; ++i) res.generators.push_back(t);
    lower = std::move(upper);
  }
  res.syzygies = syzygies_from_hilbert_series(h, res.generators, x.nvars());
  res.sort();
  return res;
}

/// True iff the ternary dual forms f and g have no common factor.
template <class F>
bool common_factor_free(const HomogeneousForm<F>& f, const HomogeneousForm<F>& g) {
  if (f.nvars() != 3 || g.nvars() != 3) throw Error(ErrorCode::ArityMismatch, "common_factor_free expects ternary forms");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::InvalidArgument, "common_factor_free of a zero form");
  const int df = f.degree(), dg = g.degree();
  if (df == 0 || dg == 0) return true;
  // Shear Y -> Y + aX, Z -> Z + bX until f contains X^df.
  int a = -1, b = -1;
  for (int s = 0; s <= 2 * df + 2 && a < 0; ++s)
    for (int i = 0; i <= s; ++i) {
      Vector<F> p(3);
      p << F(1), F(i), F(s - i);
      if (!is_zero(f.evaluate(p))) {
        a = i;
        b = s - i;
        break;
      }
    }
  if (a < 0) throw Error(ErrorCode::Internal, "no shear found");
  auto specialize = [&](const HomogeneousForm<F>& h, long j) {
    const UniPoly<F> y = UniPoly<F>::linear(F(1), F(a));
    const UniPoly<F> z = UniPoly<F>::linear(F(j), F(b));
    const UniPoly<F> xvar = UniPoly<F>::linear(F(0), F(1));
    UniPoly<F> out;
    for (const auto& [e, c] : h.terms())
      out = out + UniPoly<F>::constant(c) * pow(xvar, e[0]) * pow(y, e[1]) * pow(z, e[2]);
    return out;
  };
  for (long j = 0; j <= static_cast<long>(df) * dg; ++j) {
    if (!is_zero(resultant(specialize(f, j), df, specialize(g, j), dg))) return true;
  }
  return false;
}

}  // namespace waring
