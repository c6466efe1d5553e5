#pragma once

// Waring decompositions f = sum c_i l_i^d: exact coefficient solving,
// irredundancy, monomial complete-intersection decompositions, the
// decomposition of (x_0 ... x_n)^k through a given point, and the
// overcomplete-decomposition experiments.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "waring/apolar.hpp"
#include "waring/pointset.hpp"

namespace waring {

using Form = HomogeneousForm<Cyclotomic>;
using Point = LinearFormPoint<Cyclotomic>;
using Points = PointSet<Cyclotomic>;

enum class DecompositionStatus { VerifiedExact, VerifiedNumeric, Unverified };

std::string_view status_name(DecompositionStatus s);

struct NumericDecomposition {
  std::vector<std::vector<std::complex<double>>> points;
  std::vector<std::complex<double>> coeffs;
  double residual = 0.0;
};

struct Decomposition {
  Form target;
  Points points{3};
  std::vector<Cyclotomic> coeffs;
  DecompositionStatus status = DecompositionStatus::Unverified;
  /// Filled when status is VerifiedNumeric.
  std::optional<NumericDecomposition> numeric;
  /// Dimension of the solution space of the power system; zero means unique.
  Index kernel_dim = 0;

  int degree() const { return target.degree(); }
  Index length() const {
    return numeric && status == DecompositionStatus::VerifiedNumeric ? static_cast<Index>(numeric->coeffs.size())
                                                                     : points.size();
  }
};

/// NotInSpan carrying a dual form D in I(X)_d with D applied to f nonzero.
class NotInSpanError : public Error {
 public:
  explicit NotInSpanError(Form certificate);
  const Form& certificate() const { return certificate_; }

 private:
  Form certificate_;
};

struct Lambda0Certificate {
  Point ell;
  int n = 0;
  int k = 0;
  Cyclotomic lambda0;
  Decomposition full_decomposition;
};

struct IrredundancyResult {
  bool irredundant = true;
  /// Indices of a proper subset that still decomposes the target.
  std::vector<Index> witness;
  /// Coefficients on the witness subset.
  std::vector<Cyclotomic> witness_coeffs;
};

struct TrialReport {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<long> roots;  // r_i with alpha_i = r_i^(k+1)
  std::vector<long> extra_point;
  int resamples = 0;
  bool redundant = false;
  std::vector<Index> witness;
};

struct ExperimentReport {
  int k = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int redundant_count = 0;
  std::vector<TrialReport> details;
  std::vector<int> counterexamples;  // trial indices found irredundant
};

Form to_cyclotomic(const HomogeneousForm<Rational>& f);
Point to_cyclotomic(const LinearFormPoint<Rational>& p);

/// (x_0 ... x_n)^k.
Form monomial_product(int n, int k);

/// Columns: coefficient vectors of l_i^d in MonomialBasis(nvars, d).
Matrix<Cyclotomic> power_matrix(const Points& x, int d);

/// Exact re-check of sum c_i l_i^d == target.
bool reconstructs(const Decomposition& dec);

Decomposition solve_coefficients(const Form& f, const Points& x);

/// alpha_i must have a rational (k+1)-st root of 1/alpha_i; else RootNotInField.
Decomposition monomial_ci_decomposition(int n, int k, const std::vector<Cyclotomic>& alpha);

Lambda0Certificate decomposition_through_point(int n, int k, const Point& ell);

IrredundancyResult irredundant(const Decomposition& dec);

/// L1, L2 are binary dual linear forms.
Decomposition binary_overcomplete(int k, const Form& l1, const Form& l2);

ExperimentReport overcomplete_redundancy_experiment(int k, int trials, std::uint64_t seed);

/// Per-trial seed derived from the experiment seed.
std::uint64_t derive_seed(std::uint64_t seed, int trial);

}  // namespace waring
