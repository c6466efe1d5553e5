#include "waring/classify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "waring/univariate.hpp"

namespace waring {

std::string_view provenance_name(Provenance p) {
  return p == Provenance::Computed ? "COMPUTED" : "THEOREM";
}

int RankCertificate::computed_lower() const {
  int v = 0;
  for (const auto& b : lower_bounds)
    if (b.provenance == Provenance::Computed) v = std::max(v, b.value);
  return v;
}

bool RankCertificate::machine_certified() const {
  return upper_bound && upper_bound->status == DecompositionStatus::VerifiedExact && reconstructs(*upper_bound) &&
         upper_bound->length() == claimed_rank && computed_lower() == claimed_rank;
}

int catalecticant_lower_bound(const Form& f) {
  Index best = 0;
  for (int p = 0; p <= f.degree() / 2; ++p) best = std::max(best, rank_of<Cyclotomic>(catalecticant(f, p).entries));
  return static_cast<int>(best);
}

namespace {

Vector<Cyclotomic> multiply_linear(const Vector<Cyclotomic>& v, const MonomialBasis& from, const MonomialBasis& to,
                                   const std::array<Cyclotomic, 3>& h) {
  Vector<Cyclotomic> w = Vector<Cyclotomic>::Constant(to.size(), Cyclotomic(0));
  for (Index j = 0; j < from.size(); ++j) {
    if (v(j).is_zero()) continue;
    for (int i = 0; i < 3; ++i) {
      if (h[static_cast<std::size_t>(i)].is_zero()) continue;
      Exponent e = from[j];
      ++e[static_cast<std::size_t>(i)];
      const Index r = to.index_of(e);
      w(r) = w(r) + v(j) * h[static_cast<std::size_t>(i)];
    }
  }
  return w;
}

std::vector<Index> non_pivots(const std::vector<Index>& pivots, Index n) {
  std::vector<Index> out;
  for (Index i = 0; i < n; ++i)
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) out.push_back(i);
  return out;
}

using Poly = UniPoly<Cyclotomic>;

Poly det3(const std::array<std::array<Poly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::optional<bool> cubic_rank_three(const Form& f) {
  if (f.nvars() != 3 || f.degree() != 3) throw Error(ErrorCode::InvalidArgument, "ternary cubic expected");
  if (rank_of<Cyclotomic>(catalecticant(f, 1).entries) != 3) return std::nullopt;
  const auto net = exact_rank<Cyclotomic>(catalecticant(f, 2).entries).kernel;
  const MonomialBasis b2(3, 2), b3(3, 3), b4(3, 4);

  std::vector<Index> piv3, piv4;
  const auto j3 = detail::variable_multiples<Cyclotomic>(net, 3, 3);
  const Matrix<Cyclotomic> r3 = rref<Cyclotomic>(stack_rows(j3, b3.size()), &piv3);
  if (b3.size() - static_cast<Index>(piv3.size()) != 3) return false;
  std::vector<Vector<Cyclotomic>> rows3;
  for (std::size_t i = 0; i < piv3.size(); ++i) rows3.push_back(r3.row(static_cast<Index>(i)).transpose());
  const auto j4 = detail::variable_multiples<Cyclotomic>(rows3, 3, 4);
  const Matrix<Cyclotomic> r4 = rref<Cyclotomic>(stack_rows(j4, b4.size()), &piv4);
  if (b4.size() - static_cast<Index>(piv4.size()) != 3) return false;
  const auto s3 = non_pivots(piv3, b3.size()), s4 = non_pivots(piv4, b4.size());

  // Multiplication by a linear form from A_3 to A_4 on standard monomials.
  auto mult = [&](const std::array<Cyclotomic, 3>& h) {
    Matrix<Cyclotomic> m(3, 3);
    for (Index c = 0; c < 3; ++c) {
      Vector<Cyclotomic> e = Vector<Cyclotomic>::Constant(b3.size(), Cyclotomic(0));
      e(s3[static_cast<std::size_t>(c)]) = Cyclotomic(1);
      Vector<Cyclotomic> v = multiply_linear(e, b3, b4, h);
      for (std::size_t i = 0; i < piv4.size(); ++i) {
        const Cyclotomic a = v(piv4[i]);
        if (a.is_zero()) continue;
        v -= r4.row(static_cast<Index>(i)).transpose() * a;
      }
      for (Index r = 0; r < 3; ++r) m(r, c) = v(s4[static_cast<std::size_t>(r)]);
    }
    return m;
  };

  std::optional<Matrix<Cyclotomic>> hmat;
  for (long j = 0; j <= 6 && !hmat; ++j) {
    Matrix<Cyclotomic> h = mult({Cyclotomic(1), Cyclotomic(j), Cyclotomic(j * j)});
    if (!determinant<Cyclotomic>(h).is_zero()) hmat = std::move(h);
  }
  if (!hmat) return false;
  for (long j = 0; j <= 6; ++j) {
    const Matrix<Cyclotomic> g = mult({Cyclotomic(j * j), Cyclotomic(j), Cyclotomic(1)});
    std::array<std::array<Poly, 3>, 3> pencil;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) pencil[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = Poly::linear(-g(r, c), (*hmat)(r, c));
    const Poly chi = det3(pencil);
    if (gcd(chi, chi.derivative()).degree() == 0) return true;
  }
  return false;
}

Form ternary_binomial(int k, const Point& ell, const Cyclotomic& lambda) {
  if (ell.nvars() != 3) throw Error(ErrorCode::ArityMismatch, "ternary point expected");
  return monomial_product(2, k) + power_of_linear(ell, 3 * k) * lambda;
}

namespace {

bool all_nonzero(const Point& p) {
  for (int i = 0; i < p.nvars(); ++i)
    if (p[i].is_zero()) return false;
  return true;
}

void check_upper(const Decomposition& dec, Index expected) {
  if (dec.status != DecompositionStatus::VerifiedExact || dec.points.size() != expected)
    throw Error(ErrorCode::Internal, "upper-bound decomposition failed to verify");
  for (const auto& c : dec.coeffs)
    if (c.is_zero()) throw Error(ErrorCode::Internal, "upper-bound decomposition has a zero coefficient");
}

// xyz + lambda l^3 with a coordinate of l zero, via a 4-point decomposition of
// x'y'z' + nu x'^3 or x'y'z' + nu (x'+y')^3 in rescaled coordinates.
Decomposition degenerate_cubic_decomposition(const Form& f, const Point& ell, const Cyclotomic& nu) {
  int k0 = 0;
  while (!ell[k0].is_zero()) ++k0;
  int i = (k0 + 1) % 3, j = (k0 + 2) % 3;
  if (ell[i].is_zero()) std::swap(i, j);
  std::array<Cyclotomic, 3> s;
  s[static_cast<std::size_t>(i)] = ell[i];
  s[static_cast<std::size_t>(j)] = ell[j].is_zero() ? Cyclotomic(1) : ell[j];
  s[static_cast<std::size_t>(k0)] = (s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)]).inverse();
  auto back = [&](const Cyclotomic& p0, const Cyclotomic& p1, const Cyclotomic& p2) {
    Vector<Cyclotomic> v(3);
    v(i) = s[static_cast<std::size_t>(i)] * p0;
    v(j) = s[static_cast<std::size_t>(j)] * p1;
    v(k0) = s[static_cast<std::size_t>(k0)] * p2;
    return Point(v);
  };
  if (ell[j].is_zero()) {
    const Cyclotomic beta = (Cyclotomic(4) * nu).inverse();
    const Points x(std::vector<Point>{back(2, beta, 1), back(-2, beta, 1), back(1, -beta, 1), back(-1, -beta, 1)});
    return solve_coefficients(f, x);
  }
  const Cyclotomic w = Cyclotomic(36) * nu * nu;
  for (long m = 1; m <= 16; ++m) {
    const Cyclotomic mm(m);
    if ((mm * mm - w).is_zero() || (mm * mm + w).is_zero()) continue;
    const Cyclotomic a = (mm + w / mm) / Cyclotomic(2), b = (w / mm - mm) / Cyclotomic(2);
    const Cyclotomic c = Cyclotomic(6) * nu;
    try {
      const Points x(std::vector<Point>{back(c + a, c + a, 1), back(c - a, c - a, 1), back(b, -b, 1), back(-b, b, 1)});
      auto dec = solve_coefficients(f, x);
      if (std::none_of(dec.coeffs.begin(), dec.coeffs.end(), [](const Cyclotomic& z) { return z.is_zero(); })) return dec;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::Internal, "no 4-point decomposition found");
}

}  // namespace

RankCertificate classify_ternary_cubic(const Point& ell, const Cyclotomic& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda must be nonzero");
  RankCertificate cert;
  cert.target = ternary_binomial(1, ell, lambda);
  cert.lower_bounds.push_back({catalecticant_lower_bound(cert.target), Provenance::Computed, "catalecticant"});
  Decomposition dec;
  if (all_nonzero(ell)) {
    const auto tp = decomposition_through_point(2, 1, ell);
    cert.lambda0 = tp.lambda0;
    Points x = tp.full_decomposition.points;
    if (lambda == tp.lambda0) x = x.without(*x.find(ell));
    dec = solve_coefficients(cert.target, x);
  } else {
    dec = degenerate_cubic_decomposition(cert.target, ell, lambda);
  }
  cert.claimed_rank = static_cast<int>(dec.points.size());
  check_upper(dec, cert.claimed_rank);
  const auto three = cubic_rank_three(cert.target);
  if (!three || *three != (cert.claimed_rank == 3))
    throw Error(ErrorCode::Internal, "rank-three test disagrees with the constructed decomposition");
  if (cert.claimed_rank == 4) cert.lower_bounds.push_back({4, Provenance::Computed, "rank-three-exclusion"});
  cert.upper_bound = std::move(dec);
  return cert;
}

RankCertificate classify_ternary_binomial(int k, const Point& ell, const Cyclotomic& lambda, int max_k) {
  if (k < 1 || k > max_k)
    throw Error(ErrorCode::UnsupportedK, "k = " + std::to_string(k) + " outside [1, " + std::to_string(max_k) + "]");
  if (k == 1) return classify_ternary_cubic(ell, lambda);
  if (lambda.is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda must be nonzero");
  RankCertificate cert;
  cert.target = ternary_binomial(k, ell, lambda);
  cert.lower_bounds.push_back({catalecticant_lower_bound(cert.target), Provenance::Computed, "catalecticant"});
  const int full = (k + 1) * (k + 1);
  Points x(3);
  std::string theorem;
  if (all_nonzero(ell)) {
    const auto tp = decomposition_through_point(2, k, ell);
    cert.lambda0 = tp.lambda0;
    x = tp.full_decomposition.points;
    if (lambda == tp.lambda0) {
      x = x.without(*x.find(ell));
      theorem = "binomial-rank-drop-at-lambda0";
    } else {
      theorem = "binomial-rank-generic-lambda";
    }
  } else {
    x = monomial_ci_decomposition(2, k, {Cyclotomic(1), Cyclotomic(1)}).points;
    x.push_back(ell);
    theorem = "no-irredundant-overcomplete-decomposition";
  }
  auto dec = solve_coefficients(cert.target, x);
  cert.claimed_rank = static_cast<int>(x.size());
  check_upper(dec, cert.claimed_rank);
  if (cert.claimed_rank != full - 1 && cert.claimed_rank != full && cert.claimed_rank != full + 1)
    throw Error(ErrorCode::Internal, "unexpected decomposition length");
  cert.lower_bounds.push_back({cert.claimed_rank, Provenance::Theorem, theorem});
  cert.upper_bound = std::move(dec);
  return cert;
}

namespace {

std::optional<Decomposition> monomial_upper(const Form& f) {
  if (f.terms().size() != 1) return std::nullopt;
  const Exponent& e = f.terms().begin()->first;
  const int n = f.nvars();
  std::vector<int> support;
  for (int i = 0; i < n; ++i)
    if (e[static_cast<std::size_t>(i)] > 0) support.push_back(i);
  if (support.empty()) return std::nullopt;
  const int i0 = *std::min_element(support.begin(), support.end(), [&](int a, int b) {
    return e[static_cast<std::size_t>(a)] < e[static_cast<std::size_t>(b)];
  });
  std::vector<int> rest;
  int l = 1;
  for (int i : support)
    if (i != i0) {
      rest.push_back(i);
      l = std::lcm(l, e[static_cast<std::size_t>(i)] + 1);
    }
  Points x(n);
  std::vector<int> j(rest.size(), 0);
  for (;;) {
    Vector<Cyclotomic> v = Vector<Cyclotomic>::Constant(n, Cyclotomic(0));
    v(i0) = Cyclotomic(1);
    for (std::size_t r = 0; r < rest.size(); ++r) {
      const int m = e[static_cast<std::size_t>(rest[r])] + 1;
      v(rest[r]) = Cyclotomic::zeta_power(l, static_cast<long>(j[r]) * (l / m));
    }
    x.push_back(Point(v));
    std::size_t r = 0;
    while (r < rest.size() && ++j[r] == e[static_cast<std::size_t>(rest[r])] + 1) j[r++] = 0;
    if (r == rest.size()) break;
  }
  return solve_coefficients(f, x);
}

std::optional<Decomposition> rank_one_upper(const Form& f) {
  if (f.degree() < 1) return std::nullopt;
  const auto cat = catalecticant(f, f.degree() - 1).entries;
  for (Index c = 0; c < cat.cols(); ++c) {
    Vector<Cyclotomic> v = cat.col(c);
    bool nonzero = false;
    for (Index i = 0; i < v.size(); ++i) nonzero = nonzero || !v(i).is_zero();
    if (!nonzero) continue;
    try {
      return solve_coefficients(f, Points(std::vector<Point>{Point(v)}));
    } catch (const NotInSpanError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Decomposition> user_upper(const Form& f, const Points& x) {
  Decomposition dec;
  try {
    dec = solve_coefficients(f, x);
  } catch (const NotInSpanError&) {
    return std::nullopt;
  }
  if (dec.status != DecompositionStatus::VerifiedExact) return std::nullopt;
  std::vector<Index> keep;
  for (std::size_t i = 0; i < dec.coeffs.size(); ++i)
    if (!dec.coeffs[i].is_zero()) keep.push_back(static_cast<Index>(i));
  if (static_cast<Index>(keep.size()) == x.size()) return dec;
  return solve_coefficients(f, x.subset(keep));
}

}  // namespace

RankBounds rank_bounds(const Form& f, const std::optional<Points>& user_points) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "rank bounds of the zero form");
  RankBounds out;
  out.lower = catalecticant_lower_bound(f);
  auto consider = [&](std::optional<Decomposition> dec, const char* source) {
    if (!dec || dec->status != DecompositionStatus::VerifiedExact) return;
    const int len = static_cast<int>(dec->points.size());
    if (!out.upper || len < *out.upper) {
      out.upper = len;
      out.decomposition = std::move(dec);
      out.upper_source = source;
    }
  };
  if (out.lower == 1) consider(rank_one_upper(f), "rank-one");
  consider(monomial_upper(f), "monomial");
  if (user_points) consider(user_upper(f, *user_points), "user");
  return out;
}

}  // namespace waring
