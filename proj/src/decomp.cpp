#include "waring/decomp.hpp"

#include <Eigen/QR>
#include <random>

#include "waring/binary.hpp"

namespace waring {

std::string_view status_name(DecompositionStatus s) {
  switch (s) {
    case DecompositionStatus::VerifiedExact: return "verified-exact";
    case DecompositionStatus::VerifiedNumeric: return "verified-numeric";
    case DecompositionStatus::Unverified: return "unverified";
  }
  return "unverified";
}

NotInSpanError::NotInSpanError(Form certificate)
    : Error(ErrorCode::NotInSpan, "form is not in the span of the given powers"),
      certificate_(std::move(certificate)) {}

Form to_cyclotomic(const HomogeneousForm<Rational>& f) {
  return f.map_coefficients([](const Rational& q) { return Cyclotomic(q); });
}

Point to_cyclotomic(const LinearFormPoint<Rational>& p) {
  Vector<Cyclotomic> c(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) c(i) = Cyclotomic(p[i]);
  return Point(c);
}

Form monomial_product(int n, int k) {
  return Form::monomial(Exponent(static_cast<std::size_t>(n + 1), k), Cyclotomic(1));
}

Matrix<Cyclotomic> power_matrix(const Points& x, int d) {
  const MonomialBasis basis(x.nvars(), d);
  Matrix<Cyclotomic> a(basis.size(), x.size());
  for (Index j = 0; j < x.size(); ++j) a.col(j) = power_of_linear(x[j], d).coefficients(basis);
  return a;
}

bool reconstructs(const Decomposition& dec) {
  if (static_cast<Index>(dec.coeffs.size()) != dec.points.size()) return false;
  Form sum(dec.target.nvars(), dec.target.degree());
  for (Index i = 0; i < dec.points.size(); ++i)
    sum += power_of_linear(dec.points[i], dec.target.degree()) * dec.coeffs[static_cast<std::size_t>(i)];
  return sum == dec.target;
}

Decomposition solve_coefficients(const Form& f, const Points& x) {
  if (x.nvars() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "points and form in different spaces");
  const int d = f.degree();
  const MonomialBasis basis(f.nvars(), d);
  const Matrix<Cyclotomic> a = power_matrix(x, d);
  Matrix<Cyclotomic> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = f.coefficients(basis);
  std::vector<Index> pivots;
  const Matrix<Cyclotomic> r = rref<Cyclotomic>(aug, &pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) {
    for (const auto& v : ideal_of_points(x, d)) {
      Form op = Form::from_coefficients(basis, v, Side::Dual);
      if (!apolar_apply(op, f).is_zero()) throw NotInSpanError(std::move(op));
    }
    throw Error(ErrorCode::Internal, "inconsistent system without a separating functional");
  }
  Decomposition dec;
  dec.target = f;
  dec.points = x;
  dec.coeffs.assign(static_cast<std::size_t>(x.size()), Cyclotomic(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    dec.coeffs[static_cast<std::size_t>(pivots[i])] = r(static_cast<Index>(i), a.cols());
  dec.kernel_dim = x.size() - static_cast<Index>(pivots.size());
  dec.status = reconstructs(dec) ? DecompositionStatus::VerifiedExact : DecompositionStatus::Unverified;
  return dec;
}

namespace {

// All tuples in [0, m)^n, lexicographic.
std::vector<std::vector<int>> index_tuples(int n, int m) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int j = 0; j < m; ++j) {
        auto u = t;
        u.push_back(j);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Decomposition monomial_ci_decomposition(int n, int k, const std::vector<Cyclotomic>& alpha) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  if (static_cast<int>(alpha.size()) != n) throw Error(ErrorCode::InvalidArgument, "need one alpha per variable x_1..x_n");
  std::vector<Cyclotomic> rho;
  for (const auto& a : alpha) {
    if (a.is_zero()) throw Error(ErrorCode::InvalidArgument, "alpha must be nonzero");
    Rational r;
    if (!a.is_rational() || !rational_root(a.rational_value().inverse(), k + 1, r))
      throw Error(ErrorCode::RootNotInField,
                  "no (k+1)-st root of 1/alpha = " + a.inverse().str() + " in the cyclotomic field");
    rho.emplace_back(r);
  }
  Points x(n + 1);
  for (const auto& j : index_tuples(n, k + 1)) {
    Vector<Cyclotomic> c(n + 1);
    c(0) = Cyclotomic(1);
    for (int i = 0; i < n; ++i) c(i + 1) = rho[static_cast<std::size_t>(i)] * Cyclotomic::zeta_power(k + 1, j[static_cast<std::size_t>(i)]);
    x.push_back(Point(c));
  }
  return solve_coefficients(monomial_product(n, k), x);
}

Lambda0Certificate decomposition_through_point(int n, int k, const Point& ell) {
  if (n < 1 || k < 1) throw Error(ErrorCode::InvalidArgument, "n and k must be positive");
  if (ell.nvars() != n + 1) throw Error(ErrorCode::ArityMismatch, "point must have n+1 coordinates");
  for (int i = 0; i <= n; ++i)
    if (is_zero(ell[i])) throw Error(ErrorCode::DegeneratePoint, "coordinate " + std::to_string(i) + " of the point is zero");
  Points x(n + 1);
  for (const auto& j : index_tuples(n, k + 1)) {
    Vector<Cyclotomic> c(n + 1);
    c(0) = ell[0];
    for (int i = 0; i < n; ++i) c(i + 1) = ell[i + 1] * Cyclotomic::zeta_power(k + 1, j[static_cast<std::size_t>(i)]);
    x.push_back(Point(c));
  }
  Lambda0Certificate cert{ell, n, k, Cyclotomic(0), solve_coefficients(monomial_product(n, k), x)};
  cert.lambda0 = -cert.full_decomposition.coeffs.front();
  return cert;
}

IrredundancyResult irredundant(const Decomposition& dec) {
  IrredundancyResult out;
  if (dec.status == DecompositionStatus::VerifiedNumeric && dec.numeric) {
    const auto& num = *dec.numeric;
    const double tol = ComplexApprox::kDefaultTol;
    for (std::size_t i = 0; i < num.coeffs.size(); ++i)
      if (std::abs(num.coeffs[i]) <= tol) out.irredundant = false;
    const int d = dec.degree();
    const MonomialBasis basis(dec.target.nvars(), d);
    Eigen::MatrixXcd a(basis.size(), static_cast<Index>(num.points.size()));
    for (Index j = 0; j < a.cols(); ++j)
      for (Index r = 0; r < basis.size(); ++r) {
        std::complex<double> v = static_cast<double>(factorial(d));
        for (std::size_t i = 0; i < basis[r].size(); ++i) {
          v /= static_cast<double>(factorial(basis[r][i]));
          v *= std::pow(num.points[static_cast<std::size_t>(j)][i], basis[r][i]);
        }
        a(r, j) = v;
      }
    if (numeric_rank(a, 1e-7) < a.cols()) out.irredundant = false;
    return out;
  }
  if (dec.status != DecompositionStatus::VerifiedExact)
    throw Error(ErrorCode::InvalidArgument, "irredundancy needs a verified decomposition");
  const std::vector<Cyclotomic>& c = dec.coeffs;
  auto finish = [&](const std::vector<Cyclotomic>& sol) {
    out.irredundant = false;
    for (std::size_t i = 0; i < sol.size(); ++i)
      if (!sol[i].is_zero()) {
        out.witness.push_back(static_cast<Index>(i));
        out.witness_coeffs.push_back(sol[i]);
      }
    return out;
  };
  for (const auto& ci : c)
    if (ci.is_zero()) return finish(c);
  if (dec.kernel_dim == 0) return out;
  const auto kernel = exact_rank<Cyclotomic>(power_matrix(dec.points, dec.degree())).kernel;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& v : kernel) {
      if (v(static_cast<Index>(i)).is_zero()) continue;
      const Cyclotomic s = c[i] / v(static_cast<Index>(i));
      std::vector<Cyclotomic> sol = c;
      for (std::size_t j = 0; j < sol.size(); ++j) sol[j] = sol[j] - s * v(static_cast<Index>(j));
      return finish(sol);
    }
  return out;
}

Decomposition binary_overcomplete(int k, const Form& l1, const Form& l2) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  for (const Form* l : {&l1, &l2})
    if (l->nvars() != 2 || l->degree() != 1) throw Error(ErrorCode::InvalidArgument, "L1 and L2 must be binary linear forms");
  const Cyclotomic det = l1.coefficient({1, 0}) * l2.coefficient({0, 1}) - l1.coefficient({0, 1}) * l2.coefficient({1, 0});
  if (det.is_zero()) throw Error(ErrorCode::DependentLinearForms, "L1 and L2 are linearly dependent");
  const Form xk = Form::monomial({k + 1, 0}, Cyclotomic(1), Side::Dual);
  const Form yk = Form::monomial({0, k + 1}, Cyclotomic(1), Side::Dual);
  const Form witness = l1.with_side(Side::Dual) * xk + l2.with_side(Side::Dual) * yk;
  if (!squarefree(witness)) throw Error(ErrorCode::NotSquareFree, "L1 X^(k+1) + L2 Y^(k+1) has a repeated root");
  return decomposition_from_witness(Form::monomial({k, k}, Cyclotomic(1)), witness);
}

std::uint64_t derive_seed(std::uint64_t seed, int trial) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ExperimentReport overcomplete_redundancy_experiment(int k, int trials, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  ExperimentReport report;
  report.k = k;
  report.trials = trials;
  report.seed = seed;
  const Form g = monomial_product(2, k);
  for (int t = 0; t < trials; ++t) {
    TrialReport tr;
    tr.index = t;
    tr.seed = derive_seed(seed, t);
    std::mt19937_64 rng(tr.seed);
    std::uniform_int_distribution<long> root(1, 10), coord(-5, 5);
    Points x(3);
    for (int i = 0; i < 2; ++i) {
      long r = root(rng);
      tr.roots.push_back(r <= 5 ? r - 6 : r - 5);
    }
    const Cyclotomic inv1 = Cyclotomic(Rational(1, tr.roots[0])), inv2 = Cyclotomic(Rational(1, tr.roots[1]));
    for (int j1 = 0; j1 <= k; ++j1)
      for (int j2 = 0; j2 <= k; ++j2)
        x.push_back(Point{Cyclotomic(1), inv1 * Cyclotomic::zeta_power(k + 1, j1), inv2 * Cyclotomic::zeta_power(k + 1, j2)});
    for (;;) {
      std::vector<long> p{coord(rng), coord(rng), coord(rng)};
      if (p[0] == 0 && p[1] == 0 && p[2] == 0) continue;
      const Point q{Cyclotomic(p[0]), Cyclotomic(p[1]), Cyclotomic(p[2])};
      if (x.contains(q)) {
        ++tr.resamples;
        continue;
      }
      x.push_back(q);
      tr.extra_point = p;
      break;
    }
    const auto dec = solve_coefficients(g, x);
    const auto ir = irredundant(dec);
    tr.redundant = !ir.irredundant;
    tr.witness = ir.witness;
    if (tr.redundant) {
      ++report.redundant_count;
    } else {
      report.counterexamples.push_back(t);
    }
    report.details.push_back(std::move(tr));
  }
  return report;
}

}  // namespace waring
