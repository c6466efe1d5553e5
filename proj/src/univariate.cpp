#include "waring/univariate.hpp"

#include <Eigen/Eigenvalues>

namespace waring {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> x) {
  std::complex<double> v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
  std::vector<std::complex<double>> c = coeffs;
  while (!c.empty() && c.back() == std::complex<double>(0)) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<std::complex<double>> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  std::vector<std::complex<double>> dc;
  for (int i = 1; i <= n; ++i) dc.push_back(c[static_cast<std::size_t>(i)] * static_cast<double>(i));
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const auto d = horner(dc, r);
      if (std::abs(d) < 1e-300) break;
      r -= horner(c, r) / d;
    }
  }
  return roots;
}

}  // namespace waring
