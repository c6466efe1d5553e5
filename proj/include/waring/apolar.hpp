#pragma once

// Graded pieces of the apolar ideal Ann(f) and the apolarity containment test.

#include <optional>
#include <utility>
#include <vector>

#include "waring/form.hpp"
#include "waring/pointset.hpp"

namespace waring {

template <class F>
struct GradedIdealSlice {
  int t = 0;
  Index ambient_dim = 0;
  /// Set when t exceeds deg f: the slice is all of S^t V* and `basis` is empty.
  bool full = false;
  std::vector<HomogeneousForm<F>> basis;

  Index dim() const { return full ? ambient_dim : static_cast<Index>(basis.size()); }
};

template <class F>
struct GeneratorProfile {
  std::vector<std::pair<int, int>> degrees;  // (t, number of new minimal generators)
  std::vector<HomogeneousForm<F>> generators;

  int count() const {
    int n = 0;
    for (const auto& [t, m] : degrees) n += m;
    return n;
  }
};

template <class F>
GradedIdealSlice<F> ann_degree(const HomogeneousForm<F>& f, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  GradedIdealSlice<F> slice;
  slice.t = t;
  slice.ambient_dim = dim_forms(f.nvars(), t);
  if (t > f.degree()) {
    slice.full = true;
    return slice;
  }
  const auto r = exact_rank<F>(catalecticant(f, t).entries);
  slice.basis = forms_from_vectors(MonomialBasis(f.nvars(), t), r.kernel, Side::Dual);
  return slice;
}

/// Minimal generators of Ann(f) in degrees 1..tmax (tmax < 0 means deg f + 1).
template <class F>
GeneratorProfile<F> ann_generators(const HomogeneousForm<F>& f, int tmax = -1) {
  if (tmax < 0) tmax = f.degree() + 1;
  const int n = f.nvars();
  GeneratorProfile<F> out;
  std::vector<Vector<F>> lower;
  for (int t = 1; t <= tmax; ++t) {
    const MonomialBasis basis(n, t);
    std::vector<Vector<F>> upper;
    if (t > f.degree()) {
      for (Index i = 0; i < basis.size(); ++i) {
        Vector<F> v = Vector<F>::Constant(basis.size(), F(0));
        v(i) = F(1);
        upper.push_back(std::move(v));
      }
    } else {
      upper = exact_rank<F>(catalecticant(f, t).entries).kernel;
    }
    const auto mult = detail::variable_multiples<F>(lower, n, t);
    const auto fresh = detail::new_generators<F>(mult, upper, basis.size());
    if (!fresh.empty()) {
      out.degrees.emplace_back(t, static_cast<int>(fresh.size()));
      for (const auto& v : fresh) out.generators.push_back(HomogeneousForm<F>::from_coefficients(basis, v, Side::Dual));
    }
    lower = std::move(upper);
  }
  return out;
}

template <class F>
struct ContainmentResult {
  bool contained = true;
  std::optional<HomogeneousForm<F>> witness;  // in I(X)_t, not annihilating f
};

/// Tests I(X)_t in Ann(f)_t for t = 1..deg f.
template <class F>
ContainmentResult<F> ideal_contained_in_ann(const PointSet<F>& x, const HomogeneousForm<F>& f) {
  if (x.nvars() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "points and form in different spaces");
  ContainmentResult<F> out;
  for (int t = 1; t <= f.degree(); ++t) {
    const MonomialBasis basis(f.nvars(), t);
    for (const auto& v : ideal_of_points(x, t)) {
      auto op = HomogeneousForm<F>::from_coefficients(basis, v, Side::Dual);
      if (!apolar_apply(op, f).is_zero()) {
        out.contained = false;
        out.witness = std::move(op);
        return out;
      }
    }
  }
  return out;
}

}  // namespace waring
