#pragma once

// Binary forms: square-free test, roots of dual forms and Sylvester's
// algorithm for the Waring rank.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "waring/decomp.hpp"

namespace waring {

/// True iff the binary dual form has no repeated projective root.
bool squarefree(const Form& f);

struct BinaryRoots {
  /// Points (alpha, beta) of P^1 with F(alpha, beta) = 0, approximately.
  std::vector<std::array<std::complex<double>, 2>> numeric;
  /// Same points as exact cyclotomic coordinates when every root was recognized.
  std::optional<std::vector<Point>> exact;
};

BinaryRoots binary_roots(const Form& f);

/// Tries z = r * zeta_M^j with r rational (denominator <= max_den) and M <= max_order.
std::optional<Cyclotomic> recognize_cyclotomic(std::complex<double> z, int max_order = 24, long max_den = 1000);

/// Decomposition of f supported on the roots of a square-free apolar form.
Decomposition decomposition_from_witness(const Form& f, const Form& witness);

struct SylvesterResult {
  int deg_f1 = 0;
  int deg_f2 = 0;
  int rank = 0;
  Form witness;
  Decomposition decomposition;
};

SylvesterResult sylvester_rank(const Form& f);

struct BinaryBinomialResult {
  int rank = 0;
  std::optional<Cyclotomic> lambda0;
  Decomposition decomposition;
  int sylvester = 0;
  bool agrees = false;
};

/// f = x^k y^k + lambda (a x + b y)^(2k).
BinaryBinomialResult classify_binary_binomial(int k, const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& lambda);

}  // namespace waring
