#include "ekcodes/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ekcodes/metric.hpp"

namespace ekc {

MinDistanceResult verify_code(Code& code) {
  const auto result = min_distance(code);
  if (result.infinite()) {
    code.verified_min_distance.reset();
  } else {
    code.verified_min_distance = result.distance;
  }
  return result;
}

bool witness_conflict_free(const Code& code, int d) {
  const auto& p = code.params;
  if (!p.set_world() || p.s != 2) {
    throw ParameterError("witness check applies to set-world pair codes only");
  }
  const WitnessKeyer keyer(p.n, witness_size(p.k, d));
  std::unordered_set<std::uint64_t> claimed;
  for (const auto& word : code.words) {
    bool clash = false;
    // a word's own witnesses are distinct, so any repeat comes from another word
    keyer.for_each_key(word[0], word[1], [&](std::uint64_t key) {
      if (!claimed.insert(key).second) clash = true;
    });
    if (clash) return false;
  }
  return true;
}

namespace {

/// Claimed-witness set; dense when the key space is small.
class WitnessIndex {
 public:
  explicit WitnessIndex(std::uint64_t key_space) {
    if (key_space <= (std::uint64_t{1} << 30)) dense_.assign(key_space, 0);
  }
  bool claimed(std::uint64_t key) const {
    return dense_.empty() ? sparse_.count(key) != 0 : dense_[key] != 0;
  }
  void claim(std::uint64_t key) {
    if (dense_.empty()) {
      sparse_.insert(key);
    } else {
      dense_[key] = 1;
    }
  }

 private:
  std::vector<char> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

}  // namespace

Code greedy_code(const GreedyOptions& o) {
  const CodeParams params{o.n, o.k, o.s, o.q};
  validate_params(params);
  if (o.d < 1) throw ParameterError("distance d must be >= 1");
  GreedyAcceptance mode = o.acceptance;
  const bool pair_sets = params.set_world() && params.s == 2;
  if (mode == GreedyAcceptance::automatic) {
    mode = pair_sets ? GreedyAcceptance::witness_index : GreedyAcceptance::direct_distance;
  }
  if (mode == GreedyAcceptance::witness_index && !pair_sets) {
    throw ParameterError("witness-index acceptance needs set-world pairs (q = 0, s = 2)");
  }

  const WordSpace space(params);
  std::vector<Codeword> accepted;
  if (space.degenerate()) return make_code(params, o.d, {});
  const std::uint64_t total = space.ordered_size();
  const SeededPermutation order(total, o.seed);
  Codeword word;

  if (mode == GreedyAcceptance::witness_index) {
    const WitnessKeyer keyer(o.n, witness_size(o.k, o.d));
    WitnessIndex index(keyer.key_space());
    std::vector<std::uint64_t> keys;
    for (std::uint64_t i = 0; i < total; ++i) {
      if (!space.unrank(order(i), word)) continue;
      keys.clear();
      bool free = true;
      keyer.for_each_key(word[0], word[1], [&](std::uint64_t key) {
        if (free && index.claimed(key)) free = false;
        keys.push_back(key);
      });
      if (!free) continue;
      for (const auto key : keys) index.claim(key);
      accepted.push_back(word);
    }
  } else {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (!space.unrank(order(i), word)) continue;
      const bool ok = std::all_of(accepted.begin(), accepted.end(), [&](const Codeword& other) {
        return word_distance(params, word, other) >= o.d;
      });
      if (ok) accepted.push_back(word);
    }
  }
  return make_code(params, o.d, std::move(accepted));
}

namespace {

using Clock = std::chrono::steady_clock;

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1u; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (const auto w : words_) c += std::popcount(w);
    return c;
  }
  /// Index of the lowest set bit; size() when empty.
  std::size_t first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    }
    return bits_;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  void and_with(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  std::size_t size() const { return bits_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

class MaxCodeSearch {
 public:
  MaxCodeSearch(const std::vector<Bitset>& compatible,
                const std::vector<std::vector<std::uint32_t>>& witness_ids,
                std::size_t witness_count, std::size_t witnesses_per_word, std::size_t target,
                SearchBudget budget)
      : compatible_(compatible), witness_ids_(witness_ids), per_word_(witnesses_per_word),
        stamp_(witness_count, 0), target_(target), budget_(budget), start_(Clock::now()) {}

  void seed_incumbent(std::vector<std::size_t> incumbent) { best_ = std::move(incumbent); }

  /// True iff the tree was exhausted (or the target reached).
  bool run() {
    Bitset all(compatible_.size());
    for (std::size_t i = 0; i < compatible_.size(); ++i) all.set(i);
    if (best_.size() < target_ && all.any()) expand(all);
    return !stopped_;
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool wall_hit() const { return wall_hit_; }
  bool node_hit() const { return node_hit_; }

 private:
  bool out_of_budget() {
    if (budget_.nodes && nodes_ >= budget_.nodes) {
      node_hit_ = true;
      return true;
    }
    if (budget_.seconds > 0 && nodes_ % 256 == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - start_;
      if (elapsed.count() >= budget_.seconds) {
        wall_hit_ = true;
        return true;
      }
    }
    return false;
  }

  // Chosen words claim pairwise disjoint witness sets of the balanced split.
  std::size_t witness_cover_bound(const Bitset& candidates) {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    std::size_t distinct = 0;
    candidates.for_each([&](std::size_t v) {
      for (const auto id : witness_ids_[v]) {
        if (stamp_[id] != generation_) {
          stamp_[id] = generation_;
          ++distinct;
        }
      }
    });
    return distinct / per_word_;
  }

  void expand(Bitset candidates) {
    ++nodes_;
    if (out_of_budget()) {
      stopped_ = true;
      return;
    }
    if (current_.size() + witness_cover_bound(candidates) <= best_.size()) return;

    std::vector<std::size_t> order;
    std::vector<std::size_t> colour_bound;
    {
      Bitset uncoloured = candidates;
      std::size_t colour = 0;
      while (uncoloured.any()) {
        ++colour;
        Bitset cls = uncoloured;
        while (cls.any()) {
          const std::size_t v = cls.first();
          uncoloured.reset(v);
          cls.reset(v);
          cls.and_not(compatible_[v]);
          order.push_back(v);
          colour_bound.push_back(colour);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour_bound[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      Bitset next = candidates;
      next.and_with(compatible_[v]);
      if (next.any()) {
        expand(next);
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      if (stopped_ || best_.size() >= target_) return;
      candidates.reset(v);
    }
  }

  const std::vector<Bitset>& compatible_;
  const std::vector<std::vector<std::uint32_t>>& witness_ids_;
  std::size_t per_word_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::size_t target_;
  SearchBudget budget_;
  Clock::time_point start_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  bool wall_hit_ = false;
  bool node_hit_ = false;
};

}  // namespace

SearchReport exact_max_code(int n, int k, int d, SearchBudget budget, std::size_t ceiling) {
  const auto bound = upper_bound(n, k, d);
  const CodeParams params{n, k, 2, 0};
  const BigInt universe_size = word_count(n, k, 2);
  if (universe_size > ceiling) {
    throw ParameterError("instance too large: " + universe_size.str() +
                         " words exceed the ceiling of " + std::to_string(ceiling));
  }
  const std::vector<Codeword> words = all_words(params);
  const std::size_t count = words.size();

  std::vector<Bitset> compatible(count, Bitset(count));
  const auto rows = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (static_cast<std::size_t>(i) != j && word_distance(params, words[i], words[j]) >= d) {
        compatible[i].set(j);
      }
    }
  }

  const auto [u, v] = balanced_split(k, d);
  const WitnessKeyer keyer(n, u + v);
  std::unordered_map<std::uint64_t, std::uint32_t> dense_id;
  std::vector<std::vector<std::uint32_t>> witness_ids(count);
  std::size_t per_word = 1;
  for (std::size_t i = 0; i < count; ++i) {
    const DisjointPair pair(words[i][0], words[i][1], n);
    const auto family = witness_split(pair, u, v);
    per_word = family.size();
    for (const auto& w : family) {
      const auto [it, inserted] =
          dense_id.emplace(keyer.key(w), static_cast<std::uint32_t>(dense_id.size()));
      witness_ids[i].push_back(it->second);
    }
  }

  const BigInt bound_floor = bound.floor_value;
  const std::size_t target =
      bound_floor < count ? bound_floor.convert_to<std::size_t>() : count;

  // first-fit in canonical order as the starting incumbent
  std::vector<std::size_t> incumbent;
  for (std::size_t i = 0; i < count; ++i) {
    if (std::all_of(incumbent.begin(), incumbent.end(),
                    [&](std::size_t j) { return compatible[i].test(j); })) {
      incumbent.push_back(i);
    }
  }

  MaxCodeSearch search(compatible, witness_ids, dense_id.size(), per_word, target, budget);
  search.seed_incumbent(incumbent);
  const bool finished = search.run();

  std::vector<Codeword> chosen;
  for (const auto i : search.best()) chosen.push_back(words[i]);
  SearchReport report;
  report.best_code = make_code(params, d, std::move(chosen));
  verify_code(report.best_code);
  report.optimal = finished;
  report.nodes_explored = search.nodes();
  report.wall_budget_hit = search.wall_hit();
  report.node_budget_hit = search.node_hit();
  report.upper_bound_floor = bound_floor;
  report.meets_upper_bound = BigInt(report.best_code.size()) == bound_floor;
  return report;
}

std::vector<RatioRow> ratio_experiment(int k, int d, const std::vector<int>& n_values,
                                       std::uint64_t seed, int repetitions) {
  if (repetitions < 1) throw ParameterError("repetitions must be >= 1");
  const Rational constant = asymptotic_pair(k, d).coefficient;
  std::vector<RatioRow> rows;
  for (const int n : n_values) {
    const auto bound = upper_bound(n, k, d);
    std::size_t best = 0;
    for (int rep = 0; rep < repetitions; ++rep) {
      GreedyOptions options;
      options.n = n;
      options.k = k;
      options.d = d;
      options.seed = seed + static_cast<std::uint64_t>(rep);
      best = std::max(best, greedy_code(options).size());
    }
    RatioRow row;
    row.n = n;
    row.greedy_size = best;
    row.upper_bound_floor = bound.floor_value;
    row.ratio_to_bound = static_cast<double>(best) / bound.exact_value.convert_to<double>();
    row.normalized_ratio =
        static_cast<double>(best) / std::pow(static_cast<double>(n), 2 * k - d + 1);
    row.theorem2_constant = constant;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
  std::ostringstream out;
  out << "n,greedy_size,upper_bound_floor,ratio_to_bound,normalized_ratio,theorem2_constant\n";
  char buffer[64];
  for (const auto& row : rows) {
    out << row.n << "," << row.greedy_size << "," << row.upper_bound_floor.str() << ",";
    std::snprintf(buffer, sizeof buffer, "%.6f", row.ratio_to_bound);
    out << buffer << ",";
    std::snprintf(buffer, sizeof buffer, "%.9f", row.normalized_ratio);
    out << buffer << "," << format_rational(row.theorem2_constant) << "\n";
  }
  return out.str();
}

}  // namespace ekc
