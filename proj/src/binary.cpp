#include "waring/binary.hpp"

#include <Eigen/QR>
#include <cmath>
#include <numbers>
#include <numeric>

#include "waring/univariate.hpp"

namespace waring {

namespace {

// p(t) = F(t, 1); coefficient i is that of X^i Y^(n-i).
UniPoly<Cyclotomic> dehomogenize(const Form& f) {
  std::vector<Cyclotomic> c(static_cast<std::size_t>(f.degree()) + 1, Cyclotomic(0));
  for (const auto& [e, a] : f.terms()) c[static_cast<std::size_t>(e[0])] = a;
  return UniPoly<Cyclotomic>(std::move(c));
}

void check_binary(const Form& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::ArityMismatch, "binary form expected");
}

int conductor_of(const std::vector<Cyclotomic>& v) {
  int m = 1;
  for (const auto& a : v)
    if (!a.is_rational()) m = common_conductor(m, a.conductor());
  return m;
}

}  // namespace

bool squarefree(const Form& f) {
  check_binary(f);
  if (f.is_zero()) return false;
  const auto p = dehomogenize(f);
  if (f.degree() - p.degree() > 1) return false;
  if (p.degree() <= 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::optional<Cyclotomic> recognize_cyclotomic(std::complex<double> z, int max_order, long max_den) {
  const double mag = std::abs(z);
  const double scale = std::max(1.0, mag);
  if (mag < 1e-12) return Cyclotomic(0);
  const Rational r = rationalize(mag, max_den);
  if (std::abs(r.to_double() - mag) > 1e-9 * scale) return std::nullopt;
  const double theta = std::arg(z);
  for (int m = 1; m <= max_order; ++m) {
    long j = std::lround(theta * m / (2 * std::numbers::pi));
    j = ((j % m) + m) % m;
    const std::complex<double> cand = r.to_double() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / m);
    if (std::abs(cand - z) > 1e-8 * scale) continue;
    const long g = std::gcd(j, static_cast<long>(m));
    const int mm = j == 0 ? 1 : static_cast<int>(m / g);
    return Cyclotomic(r) * Cyclotomic::zeta_power(mm, j == 0 ? 0 : j / g);
  }
  return std::nullopt;
}

BinaryRoots binary_roots(const Form& f) {
  check_binary(f);
  BinaryRoots out;
  const auto p = dehomogenize(f);
  std::vector<std::complex<double>> coeffs;
  for (const auto& a : p.c) coeffs.push_back(a.embed().value);
  const auto roots = complex_roots(coeffs);
  for (const auto& z : roots) out.numeric.push_back({z, std::complex<double>(1.0)});
  const bool at_infinity = f.degree() > p.degree();
  if (at_infinity) out.numeric.push_back({std::complex<double>(1.0), std::complex<double>(0.0)});

  std::vector<Cyclotomic> exact_roots;
  for (const auto& z : roots) {
    auto r = recognize_cyclotomic(z);
    if (!r) return out;
    exact_roots.push_back(*r);
  }
  std::vector<Cyclotomic> all = p.c;
  all.insert(all.end(), exact_roots.begin(), exact_roots.end());
  const int m = conductor_of(all);
  std::vector<Cyclotomic> lifted;
  for (const auto& a : p.c) lifted.push_back(lift(a, m));
  const UniPoly<Cyclotomic> pl(lifted);
  std::vector<Point> pts;
  for (const auto& r : exact_roots) {
    const Cyclotomic rl = lift(r, m);
    if (!pl(rl).is_zero()) return out;
    pts.push_back(Point{rl, Cyclotomic(1)});
  }
  if (at_infinity) pts.push_back(Point{Cyclotomic(1), Cyclotomic(0)});
  out.exact = std::move(pts);
  return out;
}

Decomposition decomposition_from_witness(const Form& f, const Form& witness) {
  check_binary(f);
  const auto roots = binary_roots(witness);
  if (roots.exact) {
    Points x(2);
    for (const auto& p : *roots.exact) x.push_back(p);
    return solve_coefficients(f, x);
  }
  const int d = f.degree();
  const MonomialBasis basis(2, d);
  const Index r = static_cast<Index>(roots.numeric.size());
  auto pts = roots.numeric;
  for (auto& pt : pts) {
    const double s = std::max(std::abs(pt[0]), std::abs(pt[1]));
    pt[0] /= s;
    pt[1] /= s;
  }
  Eigen::MatrixXcd a(basis.size(), r);
  Eigen::VectorXcd b(basis.size());
  for (Index i = 0; i < basis.size(); ++i) {
    const int e0 = basis[i][0], e1 = basis[i][1];
    b(i) = f.coefficient(basis[i]).embed().value;
    for (Index j = 0; j < r; ++j) {
      const auto& pt = pts[static_cast<std::size_t>(j)];
      a(i, j) = static_cast<double>(binomial(d, e0)) * std::pow(pt[0], e0) * std::pow(pt[1], e1);
    }
  }
  const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(b);
  Decomposition dec;
  dec.target = f;
  dec.points = Points(2);
  NumericDecomposition num;
  for (const auto& pt : pts) num.points.push_back({pt[0], pt[1]});
  for (Index j = 0; j < r; ++j) num.coeffs.push_back(c(j));
  num.residual = (a * c - b).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  dec.status = num.residual <= ComplexApprox::kDefaultTol * scale ? DecompositionStatus::VerifiedNumeric
                                                                   : DecompositionStatus::Unverified;
  dec.numeric = std::move(num);
  return dec;
}

SylvesterResult sylvester_rank(const Form& f) {
  check_binary(f);
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "sylvester_rank of the zero form");
  if (f.degree() < 1) throw Error(ErrorCode::InvalidArgument, "sylvester_rank needs positive degree");
  const int d = f.degree();
  const auto gens = ann_generators(f);
  std::vector<int> degs;
  for (const auto& [t, m] : gens.degrees)
    for (int i = 0; i < m; ++i) degs.push_back(t);
  if (degs.size() != 2 || degs[0] + degs[1] != d + 2)
    throw Error(ErrorCode::Internal, "apolar ideal of a binary form is not a complete intersection");
  SylvesterResult out;
  out.deg_f1 = degs[0];
  out.deg_f2 = degs[1];

  auto slice_basis = [&](int t) {
    const auto s = ann_degree(f, t);
    if (!s.full) return s.basis;
    std::vector<Form> all;
    for (const auto& e : monomials(2, t)) all.push_back(Form::monomial(e, Cyclotomic(1), Side::Dual));
    return all;
  };

  std::optional<Form> witness;
  const auto low = slice_basis(out.deg_f1);
  if (low.size() == 1) {
    if (squarefree(low[0])) witness = low[0];
  } else {
    for (long t = 0; t < 2L * out.deg_f1 && !witness; ++t) {
      const Form c = low[0] - low[1] * Cyclotomic(t);
      if (squarefree(c)) witness = c;
    }
  }
  if (witness) {
    out.rank = out.deg_f1;
  } else {
    out.rank = out.deg_f2;
    const auto high = slice_basis(out.deg_f2);
    const long bound = (2L * out.deg_f2 - 2) * static_cast<long>(high.size() - 1) + 1;
    for (long t = 0; t <= bound && !witness; ++t) {
      Form c(2, out.deg_f2, Side::Dual);
      Cyclotomic w(1);
      for (const auto& b : high) {
        c += b * w;
        w = w * Cyclotomic(t);
      }
      if (squarefree(c)) witness = c;
    }
    if (!witness) throw Error(ErrorCode::Internal, "no square-free element found in the apolar ideal");
  }
  out.witness = *witness;
  out.decomposition = decomposition_from_witness(f, out.witness);
  return out;
}

BinaryBinomialResult classify_binary_binomial(int k, const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& lambda) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda must be nonzero");
  const Point ell{a, b};
  const Form f = Form::monomial({k, k}, Cyclotomic(1)) + power_of_linear(ell, 2 * k) * lambda;
  BinaryBinomialResult out;
  if (!a.is_zero() && !b.is_zero()) {
    const auto cert = decomposition_through_point(1, k, ell);
    out.lambda0 = cert.lambda0;
    const Points& x = cert.full_decomposition.points;
    if (lambda == cert.lambda0) {
      out.rank = k;
      out.decomposition = solve_coefficients(f, x.without(0));
    } else {
      out.rank = k + 1;
      out.decomposition = solve_coefficients(f, x);
    }
  } else {
    out.rank = k + 1;
  }
  const auto syl = sylvester_rank(f);
  out.sylvester = syl.rank;
  if (!out.lambda0) out.decomposition = syl.decomposition;
  out.agrees = out.sylvester == out.rank;
  return out;
}

}  // namespace waring
