#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ekcodes/bounds.hpp"
#include "ekcodes/core.hpp"
#include "ekcodes/verify.hpp"

namespace ekc {

/// Exact minimum pairwise distance; records it in code.verified_min_distance
/// (left empty for codes with fewer than two words, whose distance is infinite).
MinDistanceResult verify_code(Code& code);

/// Pairwise witness-disjointness at distance d: true iff no two words share a
/// witness {U, V}, which holds iff the minimum distance is >= d.
/// Set-world pair codes only.
bool witness_conflict_free(const Code& code, int d);

enum class GreedyAcceptance {
  automatic,       // witness index for set-world pairs, direct distance otherwise
  witness_index,   // claim witnesses; s = 2 set-world only
  direct_distance  // compare against every accepted word
};

struct GreedyOptions {
  int n = 0;
  int k = 1;
  int d = 1;
  std::uint64_t seed = 1;
  int s = 2;
  int q = 0;  // 0: set-world; >= 2: q-ary words (s = 1) or pairs of them (s = 2)
  GreedyAcceptance acceptance = GreedyAcceptance::automatic;
};

/// One seeded pass over the whole word space in a random order, keeping each
/// word compatible with everything kept so far. The result is maximal.
Code greedy_code(const GreedyOptions& options);

struct SearchBudget {
  double seconds = 0.0;     // 0: unlimited
  std::uint64_t nodes = 0;  // 0: unlimited
};

struct SearchReport {
  Code best_code;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  bool wall_budget_hit = false;
  bool node_budget_hit = false;
  BigInt upper_bound_floor;
  /// best_code reaches floor(upper_bound), which certifies exactness on its own.
  bool meets_upper_bound = false;
};

inline constexpr std::size_t kDefaultWordCeiling = 5000;

/// Maximum 2-(n,k,d) code by branch and bound over the compatibility graph
/// (canonical word order, colouring bound, witness-cover bound, global cut at
/// floor(upper_bound)). Refuses universes larger than `ceiling` words.
SearchReport exact_max_code(int n, int k, int d, SearchBudget budget = {},
                            std::size_t ceiling = kDefaultWordCeiling);

struct RatioRow {
  int n = 0;
  std::size_t greedy_size = 0;
  BigInt upper_bound_floor;
  double ratio_to_bound = 0.0;    // greedy / exact upper bound
  double normalized_ratio = 0.0;  // greedy / n^(2k-d+1)
  Rational theorem2_constant;
};

/// Best greedy size over `repetitions` seeds (seed, seed+1, ...) for each n.
std::vector<RatioRow> ratio_experiment(int k, int d, const std::vector<int>& n_values,
                                       std::uint64_t seed, int repetitions);

/// Header "n,greedy_size,upper_bound_floor,ratio_to_bound,normalized_ratio,theorem2_constant".
std::string ratio_csv(const std::vector<RatioRow>& rows);

}  // namespace ekc
