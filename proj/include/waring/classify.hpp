#pragma once

// Rank classifiers for (x y z)^k + lambda l^(3k) and ternary cubics, and a
// generic lower/upper bound entry point. Every bound carries a provenance tag.

#include <optional>
#include <string>
#include <vector>

#include "waring/decomp.hpp"

namespace waring {

enum class Provenance { Computed, Theorem };

std::string_view provenance_name(Provenance p);

struct LowerBound {
  int value = 0;
  Provenance provenance = Provenance::Computed;
  std::string method;  // e.g. "catalecticant", "rank-three-exclusion" or a theorem slug
};

struct RankCertificate {
  Form target;
  int claimed_rank = 0;
  std::optional<Decomposition> upper_bound;
  Provenance upper_provenance = Provenance::Computed;
  std::vector<LowerBound> lower_bounds;
  std::optional<Cyclotomic> lambda0;

  int computed_lower() const;
  /// Upper bound verified exactly and a computed lower bound meets it.
  bool machine_certified() const;
};

/// max_p rank cat_p(f).
int catalecticant_lower_bound(const Form& f);

/// For a ternary cubic with cat_1 of rank 3: whether R(f) = 3. nullopt otherwise.
std::optional<bool> cubic_rank_three(const Form& f);

/// f = (xyz)^k + lambda (a x + b y + c z)^(3k).
Form ternary_binomial(int k, const Point& ell, const Cyclotomic& lambda);

RankCertificate classify_ternary_binomial(int k, const Point& ell, const Cyclotomic& lambda, int max_k = 4);

RankCertificate classify_ternary_cubic(const Point& ell, const Cyclotomic& lambda);

struct RankBounds {
  int lower = 0;
  std::optional<int> upper;
  std::optional<Decomposition> decomposition;
  std::string upper_source;  // "monomial", "rank-one", "user"
};

RankBounds rank_bounds(const Form& f, const std::optional<Points>& user_points = std::nullopt);

}  // namespace waring
