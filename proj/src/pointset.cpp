#include "waring/pointset.hpp"

#include <algorithm>
#include <numeric>

namespace waring {

int DhSequence::total() const { return std::accumulate(values.begin(), values.end(), 0); }

void ResolutionDegrees::sort() {
  std::sort(generators.begin(), generators.end());
  std::sort(syzygies.begin(), syzygies.end());
}

std::vector<Plateau> detect_plateaus(const DhSequence& dh) {
  std::vector<Plateau> out;
  for (int t = 0; t + 1 < dh.size(); ++t) {
    const int s = dh.at(t);
    if (s > 0 && s == dh.at(t + 1) && s <= t) out.push_back({t, s});
  }
  return out;
}

DhSequence ci_dh(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw Error(ErrorCode::InvalidArgument, "complete intersection degrees must be positive");
  if (d1 > d2) std::swap(d1, d2);
  std::vector<int> v(static_cast<std::size_t>(d1 + d2 - 1), 0);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d2; ++j) ++v[static_cast<std::size_t>(i + j)];
  return DhSequence(std::move(v), DhSequence::Source::Declared);
}

DhSequence liaison_dh(const DhSequence& dh_union, const DhSequence& dh_x, int d1, int d2) {
  if (!(dh_union == ci_dh(d1, d2)))
    throw Error(ErrorCode::InvalidArgument, "union profile is not the complete intersection profile");
  const int s = d1 + d2 - 2;
  if (dh_x.size() > s + 1) throw Error(ErrorCode::NotSubCI, "profile extends past the socle degree");
  for (int t = 0; t <= s; ++t)
    if (dh_x.at(t) > dh_union.at(t))
      throw Error(ErrorCode::NotSubCI, "profile exceeds the complete intersection in degree " + std::to_string(t));
  std::vector<int> y;
  for (int t = 0; t <= s; ++t) y.push_back(dh_union.at(s - t) - dh_x.at(s - t));
  return DhSequence(std::move(y), DhSequence::Source::Declared);
}

LiaisonResolution liaison_resolution_degrees(const ResolutionDegrees& res, int d1, int d2) {
  LiaisonResolution out;
  const int sum = d1 + d2;
  out.non_minimal.generators = {d1, d2};
  for (int c : res.syzygies) out.non_minimal.generators.push_back(sum - c);
  for (int b : res.generators) out.non_minimal.syzygies.push_back(sum - b);
  out.non_minimal.sort();

  std::vector<int> gens = out.non_minimal.generators;
  std::vector<int> syz;
  for (int c : out.non_minimal.syzygies) {
    auto it = std::find(gens.begin(), gens.end(), c);
    if (it != gens.end()) {
      gens.erase(it);
      out.cancelled = true;
    } else {
      syz.push_back(c);
    }
  }
  out.minimal = {gens, syz};
  out.minimal.sort();
  return out;
}

namespace {

// Coefficients of sum Dh(t) s^t (1-s)^(nvars-1).
std::vector<long> numerator_polynomial(const DhSequence& dh, int nvars) {
  std::vector<long> p(dh.values.begin(), dh.values.end());
  for (int r = 0; r < nvars - 1; ++r) {
    p.push_back(0);
    for (std::size_t i = p.size() - 1; i > 0; --i) p[i] -= p[i - 1];
  }
  return p;
}

}  // namespace

std::vector<int> syzygies_from_hilbert_series(const DhSequence& dh, const std::vector<int>& generators, int nvars) {
  std::vector<long> q = numerator_polynomial(dh, nvars);
  int top = static_cast<int>(q.size());
  for (int b : generators) top = std::max(top, b + 1);
  q.resize(static_cast<std::size_t>(top), 0);
  q[0] -= 1;
  for (int b : generators) q[static_cast<std::size_t>(b)] += 1;
  std::vector<int> syz;
  for (int c = 0; c < top; ++c) {
    if (q[static_cast<std::size_t>(c)] < 0)
      throw Error(ErrorCode::Internal, "generator degrees inconsistent with the Hilbert function");
    for (long i = 0; i < q[static_cast<std::size_t>(c)]; ++i) syz.push_back(c);
  }
  return syz;
}

bool hilbert_series_identity(const DhSequence& dh, const ResolutionDegrees& res, int nvars) {
  std::vector<long> lhs = numerator_polynomial(dh, nvars);
  int top = static_cast<int>(lhs.size());
  for (int b : res.generators) top = std::max(top, b + 1);
  for (int c : res.syzygies) top = std::max(top, c + 1);
  lhs.resize(static_cast<std::size_t>(top), 0);
  std::vector<long> rhs(static_cast<std::size_t>(top), 0);
  rhs[0] = 1;
  for (int b : res.generators) rhs[static_cast<std::size_t>(b)] -= 1;
  for (int c : res.syzygies) rhs[static_cast<std::size_t>(c)] += 1;
  return lhs == rhs;
}

DhSequence overcomplete_union_profile(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  std::vector<int> v;
  for (int t = 0; t <= k; ++t) v.push_back(t + 1);
  for (int t = k + 1; t <= 2 * k + 2; ++t) v.push_back(k + 1);
  for (int t = 2 * k + 3; t <= 3 * k + 1; ++t) v.push_back(3 * k + 2 - t);
  return DhSequence(std::move(v), DhSequence::Source::Declared);
}

}  // namespace waring
