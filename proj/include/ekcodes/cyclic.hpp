#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ekcodes/core.hpp"

namespace ekc {

/// Disjoint k-subsets S, T of Z_m. Residues are reduced mod m on construction.
class CyclicGeneratorPair {
 public:
  CyclicGeneratorPair(int m, const std::vector<int>& s, const std::vector<int>& t);

  int m() const { return m_; }
  int k() const { return static_cast<int>(s_.size()); }
  const std::vector<int>& s() const { return s_; }
  const std::vector<int>& t() const { return t_; }

  friend bool operator==(const CyclicGeneratorPair&, const CyclicGeneratorPair&) = default;
  friend auto operator<=>(const CyclicGeneratorPair&, const CyclicGeneratorPair&) = default;

 private:
  int m_;
  std::vector<int> s_;
  std::vector<int> t_;
};

/// Shorter way around the circle: min(r, m - r) with r = (b - a) mod m.
int circular_distance(std::int64_t a, std::int64_t b, int m);

enum class AntagonismViolation {
  none,
  within_repeat,   // (i): two within-set distances coincide
  cross_repeat,    // (ii): two cross distances coincide
  cross_antipodal  // (iii): a cross distance equals m/2
};

struct AntagonismReport {
  bool antagonistic = false;
  AntagonismViolation violation = AntagonismViolation::none;
  /// The residue pairs involved, e.g. {(1,2), (3,4)} for a within repeat.
  std::vector<std::pair<int, int>> colliding;
  int distance = 0;

  std::string describe() const;
};

AntagonismReport is_antagonistic(const CyclicGeneratorPair& g);

/// Lexicographically least image under rotation x -> x + c, reflection x -> -x
/// and swapping S with T. Its S always contains 0.
CyclicGeneratorPair canonical_form(const CyclicGeneratorPair& g);

/// A search-tree node: S placed first (0 fixed), then T, both ascending.
struct PartialAssignment {
  std::vector<int> s;
  std::vector<int> t;
  friend bool operator==(const PartialAssignment&, const PartialAssignment&) = default;
};

struct AntagonisticSearchOptions {
  int k = 2;
  int m = 9;
  std::size_t limit = 0;        // 0: no limit
  double budget_seconds = 0.0;  // 0: no wall-clock budget
  std::uint64_t node_budget = 0;  // 0: no node budget
  /// Placed-element depth at which the tree is cut into independent work items.
  int split_depth = 3;
  /// Resume from these nodes instead of the root.
  std::vector<PartialAssignment> resume_from;
};

struct AntagonisticSearchResult {
  std::vector<CyclicGeneratorPair> pairs;  // canonical forms, sorted
  bool exhausted = false;                  // every work item traversed completely
  bool budget_hit = false;
  std::uint64_t nodes = 0;
  /// Work items not fully traversed; feed back through resume_from.
  std::vector<PartialAssignment> frontier;
};

/// Backtracking over S (with 0 in S) then T, pruning any partial assignment
/// that already repeats a within or cross distance or hits m/2. Only canonical
/// forms are reported, so each rotation/reflection/swap class appears once.
/// Work items run in parallel; output order is independent of thread count.
AntagonisticSearchResult search_antagonistic(const AntagonisticSearchOptions& options);

/// One node per line as "s1,s2,...|t1,...", after a "# k=.. m=.." header.
std::string frontier_to_text(int k, int m, const std::vector<PartialAssignment>& frontier);
/// Returns the header's (k, m) and the nodes.
std::pair<std::pair<int, int>, std::vector<PartialAssignment>> frontier_from_text(
    const std::string& text);

class NotAntagonisticError : public ParameterError {
 public:
  explicit NotAntagonisticError(AntagonismReport report)
      : ParameterError("pair is not antagonistic: " + report.describe()),
        report_(std::move(report)) {}
  const AntagonismReport& report() const { return report_; }

 private:
  AntagonismReport report_;
};

/// The m shifts {S+u, T+u}; design distance 2k-1. Refuses non-antagonistic input.
Code orbit_code(const CyclicGeneratorPair& g);

class OrbitCollisionError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// Union of the full cyclic orbits of the generators over Z_m, with its
/// minimum distance verified exhaustively (no antagonism assumed).
Code multi_orbit_code(int m, const std::vector<DisjointPair>& generators, int claimed_d);

}  // namespace ekc
