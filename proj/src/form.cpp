#include "waring/form.hpp"

#include <cctype>

namespace waring {

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative factorial");
  if (n > 20) throw Error(ErrorCode::InvalidArgument, "factorial overflows");
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Index dim_forms(int nvars, int degree) {
  if (degree < 0) return 0;
  return binomial(degree + nvars - 1, nvars - 1);
}

namespace {

void fill(int var, int remaining, Exponent& e, std::vector<Exponent>& out) {
  const int n = static_cast<int>(e.size());
  if (var == n - 1) {
    e[static_cast<std::size_t>(var)] = remaining;
    out.push_back(e);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    e[static_cast<std::size_t>(var)] = a;
    fill(var + 1, remaining - a, e, out);
  }
}

}  // namespace

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars < 1 || degree < 0) return out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  fill(0, degree, e, out);
  return out;
}

MonomialBasis::MonomialBasis(int nvars, int degree)
    : nvars_(nvars), degree_(degree), monos_(monomials(nvars, degree)) {
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<Index>(i));
}

Index MonomialBasis::index_of(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw Error(ErrorCode::DegreeMismatch, "monomial not in basis");
  return it->second;
}

std::string variable_name(int nvars, int i, Side side) {
  std::string name;
  if (nvars <= 3) {
    static const char* primal[] = {"x", "y", "z"};
    name = primal[i];
  } else {
    name = "x" + std::to_string(i);
  }
  if (side == Side::Dual) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  return name;
}

}  // namespace waring
