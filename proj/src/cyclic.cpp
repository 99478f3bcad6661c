#include "ekcodes/cyclic.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>

#include "ekcodes/verify.hpp"

namespace ekc {

namespace {

int reduce(std::int64_t x, int m) {
  const std::int64_t r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

std::vector<int> shifted(const std::vector<int>& set, int sign, int shift, int m) {
  std::vector<int> out;
  out.reserve(set.size());
  for (const int x : set) out.push_back(reduce(static_cast<std::int64_t>(sign) * x + shift, m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CyclicGeneratorPair::CyclicGeneratorPair(int m, const std::vector<int>& s,
                                         const std::vector<int>& t)
    : m_(m) {
  if (m < 1) throw ParameterError("modulus m must be >= 1");
  if (s.empty() || s.size() != t.size()) {
    throw ParameterError("S and T must be nonempty and of equal size");
  }
  for (const int x : s) s_.push_back(reduce(x, m));
  for (const int x : t) t_.push_back(reduce(x, m));
  std::sort(s_.begin(), s_.end());
  std::sort(t_.begin(), t_.end());
  std::vector<int> all = s_;
  all.insert(all.end(), t_.begin(), t_.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw ParameterError("S and T must be disjoint sets of distinct residues mod m");
  }
}

int circular_distance(std::int64_t a, std::int64_t b, int m) {
  if (m < 1) throw ParameterError("modulus m must be >= 1");
  const int r = reduce(b - a, m);
  return std::min(r, m - r);
}

std::string AntagonismReport::describe() const {
  std::ostringstream out;
  auto pairs = [&] {
    for (std::size_t i = 0; i < colliding.size(); ++i) {
      out << (i ? ", " : "") << "(" << colliding[i].first << "," << colliding[i].second << ")";
    }
  };
  switch (violation) {
    case AntagonismViolation::none:
      return "antagonistic";
    case AntagonismViolation::within_repeat:
      out << "condition (i): within-set distance " << distance << " repeats for ";
      pairs();
      break;
    case AntagonismViolation::cross_repeat:
      out << "condition (ii): cross distance " << distance << " repeats for ";
      pairs();
      break;
    case AntagonismViolation::cross_antipodal:
      out << "condition (iii): cross distance equals m/2 = " << distance << " for ";
      pairs();
      break;
  }
  return out.str();
}

AntagonismReport is_antagonistic(const CyclicGeneratorPair& g) {
  const int m = g.m();
  AntagonismReport report;
  auto first_repeat = [&](const std::vector<std::pair<int, int>>& pairs,
                          AntagonismViolation kind) {
    std::map<int, std::pair<int, int>> seen;
    for (const auto& [a, b] : pairs) {
      const int dist = circular_distance(a, b, m);
      const auto [it, inserted] = seen.emplace(dist, std::make_pair(a, b));
      if (!inserted) {
        report.violation = kind;
        report.distance = dist;
        report.colliding = {it->second, {a, b}};
        return true;
      }
    }
    return false;
  };

  std::vector<std::pair<int, int>> within;
  for (const auto* set : {&g.s(), &g.t()}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      for (std::size_t j = i + 1; j < set->size(); ++j) within.emplace_back((*set)[i], (*set)[j]);
    }
  }
  if (first_repeat(within, AntagonismViolation::within_repeat)) return report;

  std::vector<std::pair<int, int>> cross;
  for (const int s : g.s()) {
    for (const int t : g.t()) cross.emplace_back(s, t);
  }
  if (first_repeat(cross, AntagonismViolation::cross_repeat)) return report;

  if (m % 2 == 0) {
    for (const auto& [s, t] : cross) {
      if (circular_distance(s, t, m) * 2 == m) {
        report.violation = AntagonismViolation::cross_antipodal;
        report.distance = m / 2;
        report.colliding = {{s, t}};
        return report;
      }
    }
  }
  report.antagonistic = true;
  return report;
}

CyclicGeneratorPair canonical_form(const CyclicGeneratorPair& g) {
  const int m = g.m();
  std::pair<std::vector<int>, std::vector<int>> best{g.s(), g.t()};
  bool have = false;
  for (const int sign : {1, -1}) {
    for (const bool swap : {false, true}) {
      const auto& first = swap ? g.t() : g.s();
      const auto& second = swap ? g.s() : g.t();
      // the least image has 0 in its first set
      for (const int x : first) {
        const int shift = reduce(-static_cast<std::int64_t>(sign) * x, m);
        std::pair<std::vector<int>, std::vector<int>> image{shifted(first, sign, shift, m),
                                                            shifted(second, sign, shift, m)};
        if (!have || image < best) {
          best = std::move(image);
          have = true;
        }
      }
    }
  }
  return CyclicGeneratorPair(m, best.first, best.second);
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedControl {
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t node_budget = 0;
  bool has_deadline = false;
  Clock::time_point deadline;
};

class AntagonisticSearcher {
 public:
  AntagonisticSearcher(int k, int m, SharedControl* control)
      : k_(k), m_(m), half_(m / 2), control_(control),
        used_(m, 0), within_(half_ + 1, 0), cross_(half_ + 1, 0) {}

  /// Replays a node; false when the node itself violates a condition.
  bool load(const PartialAssignment& node) {
    if (node.s.empty() || node.s.front() != 0 || static_cast<int>(node.s.size()) > k_ ||
        static_cast<int>(node.t.size()) > k_ ||
        (!node.t.empty() && static_cast<int>(node.s.size()) != k_)) {
      return false;
    }
    for (std::size_t i = 0; i < node.s.size(); ++i) {
      const int x = node.s[i];
      if (x < 0 || x >= m_ || (i > 0 && x <= node.s[i - 1]) || !place(x, true)) return false;
    }
    for (std::size_t i = 0; i < node.t.size(); ++i) {
      const int x = node.t[i];
      if (x < 0 || x >= m_ || (i > 0 && x <= node.t[i - 1]) || !place(x, false)) return false;
    }
    return true;
  }

  /// Collects the nodes at `depth` placed elements (or complete leaves above it).
  void collect(int depth, std::vector<PartialAssignment>& out) {
    if (placed() >= depth || complete()) {
      out.push_back({s_, t_});
      return;
    }
    for_each_child([&] {
      collect(depth, out);
      return true;
    });
  }

  /// Full traversal below the loaded node. Returns true iff it completed.
  bool explore(std::size_t limit, std::vector<CyclicGeneratorPair>& found) {
    if (control_->stop.load(std::memory_order_relaxed)) return false;
    if (++local_nodes_ % kBudgetStride == 0 && !check_budget(kBudgetStride)) return false;
    if (complete()) {
      CyclicGeneratorPair candidate(m_, s_, t_);
      if (canonical_form(candidate) == candidate) found.push_back(std::move(candidate));
      return limit == 0 || found.size() < limit;
    }
    return for_each_child([&] { return explore(limit, found); });
  }

  /// Adds the uncounted nodes; a finished item can still trip the budget so
  /// that many small items cannot run past it.
  void flush_nodes() {
    check_budget(local_nodes_ % kBudgetStride);
    local_nodes_ = 0;
  }

 private:
  int placed() const { return static_cast<int>(s_.size() + t_.size()); }
  bool complete() const { return static_cast<int>(t_.size()) == k_; }

  static constexpr std::uint64_t kBudgetStride = 256;

  bool check_budget(std::uint64_t added) {
    const auto total = control_->nodes.fetch_add(added, std::memory_order_relaxed) + added;
    if ((control_->node_budget && total >= control_->node_budget) ||
        (control_->has_deadline && Clock::now() >= control_->deadline)) {
      control_->stop = true;
      return false;
    }
    return true;
  }

  template <typename Fn>
  bool for_each_child(Fn&& fn) {
    const bool in_s = static_cast<int>(s_.size()) < k_;
    const int start = in_s ? s_.back() + 1 : (t_.empty() ? 1 : t_.back() + 1);
    for (int x = start; x < m_; ++x) {
      if (used_[x]) continue;
      if (!place(x, in_s)) continue;
      const bool keep_going = fn();
      unplace(in_s);
      if (!keep_going) return false;
    }
    return true;
  }

  // Adds x and its distances; rolls back and returns false on any collision.
  bool place(int x, bool in_s) {
    auto& own = in_s ? s_ : t_;
    const std::size_t mark_within = added_within_.size();
    const std::size_t mark_cross = added_cross_.size();
    auto fail = [&] {
      rollback(mark_within, mark_cross);
      return false;
    };
    for (const int y : own) {
      const int dist = circular_distance(x, y, m_);
      if (within_[dist]) return fail();
      within_[dist] = 1;
      added_within_.push_back(dist);
    }
    if (!in_s) {
      for (const int y : s_) {
        const int dist = circular_distance(x, y, m_);
        if (cross_[dist] || (m_ % 2 == 0 && dist == half_)) return fail();
        cross_[dist] = 1;
        added_cross_.push_back(dist);
      }
    }
    used_[x] = 1;
    own.push_back(x);
    marks_.emplace_back(mark_within, mark_cross);
    return true;
  }

  void unplace(bool in_s) {
    auto& own = in_s ? s_ : t_;
    used_[own.back()] = 0;
    own.pop_back();
    rollback(marks_.back().first, marks_.back().second);
    marks_.pop_back();
  }

  void rollback(std::size_t mark_within, std::size_t mark_cross) {
    while (added_within_.size() > mark_within) {
      within_[added_within_.back()] = 0;
      added_within_.pop_back();
    }
    while (added_cross_.size() > mark_cross) {
      cross_[added_cross_.back()] = 0;
      added_cross_.pop_back();
    }
  }

  int k_;
  int m_;
  int half_;
  SharedControl* control_;
  std::vector<int> s_;
  std::vector<int> t_;
  std::vector<char> used_;
  std::vector<char> within_;
  std::vector<char> cross_;
  std::vector<int> added_within_;
  std::vector<int> added_cross_;
  std::vector<std::pair<std::size_t, std::size_t>> marks_;
  std::uint64_t local_nodes_ = 0;
};

struct ItemOutcome {
  std::vector<CyclicGeneratorPair> found;
  bool complete = false;
  bool ran = false;
};

}  // namespace

AntagonisticSearchResult search_antagonistic(const AntagonisticSearchOptions& options) {
  const int k = options.k;
  const int m = options.m;
  if (k < 1) throw ParameterError("k must be >= 1");
  if (2 * k > m) throw ParameterError("infeasible parameters: 2k > m");

  SharedControl control;
  control.node_budget = options.node_budget;
  if (options.budget_seconds > 0) {
    control.has_deadline = true;
    control.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(options.budget_seconds));
  }

  std::vector<PartialAssignment> items;
  if (!options.resume_from.empty()) {
    items = options.resume_from;
  } else {
    AntagonisticSearcher root(k, m, &control);
    if (root.load({{0}, {}})) root.collect(std::max(1, options.split_depth), items);
  }

  std::vector<ItemOutcome> outcomes(items.size());
  const std::size_t limit = options.limit;
  // fixed chunk so the explored prefix, and hence the frontier, ignores thread count
  const std::size_t chunk = limit == 0 ? items.size() : std::size_t{32};
  std::size_t found_so_far = 0;
  std::size_t next = 0;
  while (next < items.size() && !control.stop && (limit == 0 || found_so_far < limit)) {
    const std::size_t end = std::min(items.size(), next + chunk);
    const auto first = static_cast<std::int64_t>(next);
    const auto last = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = first; i < last; ++i) {
      auto& outcome = outcomes[i];
      if (control.stop.load(std::memory_order_relaxed)) continue;
      AntagonisticSearcher searcher(k, m, &control);
      outcome.ran = true;
      if (!searcher.load(items[i])) {
        outcome.complete = true;  // violating node: empty subtree
        continue;
      }
      outcome.complete = searcher.explore(limit, outcome.found);
      searcher.flush_nodes();
    }
    for (std::size_t i = next; i < end; ++i) found_so_far += outcomes[i].found.size();
    next = end;
  }

  AntagonisticSearchResult result;
  result.nodes = control.nodes.load();
  result.budget_hit = control.stop.load();
  result.exhausted = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& outcome = outcomes[i];
    for (auto& pair : outcome.found) result.pairs.push_back(std::move(pair));
    if (!outcome.complete) {
      result.exhausted = false;
      result.frontier.push_back(items[i]);
    }
  }
  if (limit != 0 && result.pairs.size() > limit) result.pairs.erase(result.pairs.begin() + static_cast<std::ptrdiff_t>(limit), result.pairs.end());
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

std::string frontier_to_text(int k, int m, const std::vector<PartialAssignment>& frontier) {
  std::ostringstream out;
  out << "# antagonistic-frontier k=" << k << " m=" << m << "\n";
  auto list = [&](const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  };
  for (const auto& node : frontier) {
    list(node.s);
    out << "|";
    list(node.t);
    out << "\n";
  }
  return out.str();
}

std::pair<std::pair<int, int>, std::vector<PartialAssignment>> frontier_from_text(
    const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int k = -1;
  int m = -1;
  std::vector<PartialAssignment> nodes;
  auto parse_list = [](const std::string& part) {
    std::vector<int> out;
    std::istringstream items(part);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (std::sscanf(line.c_str(), "# antagonistic-frontier k=%d m=%d", &k, &m) != 2) {
        throw ParameterError("bad frontier header: " + line);
      }
      continue;
    }
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw ParameterError("bad frontier line: " + line);
    try {
      nodes.push_back({parse_list(line.substr(0, bar)), parse_list(line.substr(bar + 1))});
    } catch (const std::exception&) {
      throw ParameterError("bad frontier line: " + line);
    }
  }
  if (k < 1 || m < 1) throw ParameterError("frontier file lacks a header");
  return {{k, m}, nodes};
}

Code orbit_code(const CyclicGeneratorPair& g) {
  auto report = is_antagonistic(g);
  if (!report.antagonistic) throw NotAntagonisticError(std::move(report));
  const int m = g.m();
  std::vector<Codeword> words;
  words.reserve(m);
  for (int u = 0; u < m; ++u) words.push_back({shifted(g.s(), 1, u, m), shifted(g.t(), 1, u, m)});
  return make_code(CodeParams{m, g.k(), 2, 0}, 2 * g.k() - 1, std::move(words));
}

Code multi_orbit_code(int m, const std::vector<DisjointPair>& generators, int claimed_d) {
  if (generators.empty()) throw ParameterError("need at least one generator");
  const int k = generators.front().k();
  std::map<Codeword, std::size_t> owner;
  std::vector<Codeword> words;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& g = generators[gi];
    if (g.n() != m || g.k() != k) {
      throw ParameterError("generator " + std::to_string(gi) + " is not a k-pair over [0, m)");
    }
    for (int u = 0; u < m; ++u) {
      Codeword word{shifted(g.a().vec(), 1, u, m), shifted(g.b().vec(), 1, u, m)};
      std::sort(word.begin(), word.end());
      const auto [it, inserted] = owner.emplace(word, gi);
      if (!inserted) {
        if (it->second == gi) {
          throw OrbitCollisionError("generator " + std::to_string(gi) +
                                    " has a short orbit: shift " + std::to_string(u) +
                                    " repeats an earlier word");
        }
        throw OrbitCollisionError("generators " + std::to_string(it->second) + " and " +
                                  std::to_string(gi) + " lie in the same orbit");
      }
      words.push_back(std::move(word));
    }
  }
  Code code = make_code(CodeParams{m, k, 2, 0}, claimed_d, std::move(words));
  const auto result = min_distance(code);
  if (!result.infinite()) code.verified_min_distance = result.distance;
  return code;
}

}  // namespace ekc
