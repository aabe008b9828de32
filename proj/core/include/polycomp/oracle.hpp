#pragma once

#include <cstdint>
#include <optional>

#include "polycomp/completion.hpp"

namespace polycomp {

// Finite search space of polynomial completions W over GF(p): z added rows
// with every entry of degree <= degree_bound. A completed matrix whose first
// target order is q_1 has degree -q_1, so a space with degree_bound >= -q_1
// is complete for that target.
struct SearchSpace {
  PolyMatrix source;
  int added_rows = 1;
  int degree_bound = 1;
  std::optional<int> rank_increment;  // keep only completions of rank r + x

  const Field& field() const { return source.field(); }
  // p^(z * n * (degree_bound + 1)), saturating at 2^63.
  unsigned long long size() const;
};

inline constexpr unsigned long long kDefaultOracleBudget = 1ull << 24;

// Deduplicated structural data reachable by some W in the space, each with
// one witness (the candidate of smallest encoding index).
struct AchievableSet {
  std::vector<StructuralData> items;       // sorted by canonical key
  std::vector<PolyMatrix> witnesses;       // aligned with items
  bool exhaustive = true;

  bool contains(const StructuralData& d) const;
  const PolyMatrix* witness_for(const StructuralData& d) const;
};

AchievableSet enumerate_completions(const SearchSpace& space,
                                    unsigned long long budget = kDefaultOracleBudget,
                                    bool randomized_fallback = false, std::uint64_t seed = 0,
                                    unsigned long long samples = 1ull << 14);

struct OracleDisagreement {
  std::string target;   // canonical target key
  bool predicate_feasible = false;
  bool ground_truth_feasible = false;
};

struct OracleReport {
  Mode mode = Mode::complete;
  std::string kind;  // "search-differential" or "projection-coherence"
  long long targets_checked = 0;
  long long feasible_targets = 0;
  std::vector<OracleDisagreement> disagreements;
  bool exhaustive = true;
  bool ok() const { return disagreements.empty(); }
};

// Targets in the given mode: projections of every achievable tuple plus
// near-miss perturbations (one family nudged at a time), capped at the
// degree the space can verify.
std::vector<PrescribedData> project_targets(const AchievableSet& ach, const StructuralData& src,
                                            Mode mode, int z, int degree_cap);

// Predicate verdict vs membership of the projected target in the
// exhaustively achievable set.
OracleReport differential_test(const SearchSpace& space, Mode mode,
                               unsigned long long budget = kDefaultOracleBudget);
OracleReport differential_test(const SearchSpace& space, Mode mode, const AchievableSet& ach);

// Partial-mode predicate vs the exists-projection of the complete predicate
// over the omitted families; the vanishing structural sum bounds every
// omitted family.
OracleReport projection_coherence_test(const SearchSpace& space, Mode mode,
                                       unsigned long long budget = kDefaultOracleBudget);
OracleReport projection_coherence_test(const SearchSpace& space, Mode mode,
                                       const AchievableSet& ach);

// Canonical serialization of a prescription, used for dedup and reports.
std::string target_key(const PrescribedData& t);

PolyMatrix random_instance(const Field& f, int rows, int cols, int max_deg, std::uint64_t seed);
RatMatrix random_rational_instance(const Field& f, int rows, int cols, int max_deg,
                                   std::uint64_t seed);

// All monic polynomials of the exact degree over a finite field.
std::vector<Poly> monic_polys_of_degree(const Field& f, int degree);

}  // namespace polycomp
