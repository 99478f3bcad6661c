#include "ekcodes/designs.hpp"

#include <algorithm>
#include <set>

namespace ekc {

const char* to_string(DesignStatus status) {
  switch (status) {
    case DesignStatus::packing:
      return "packing";
    case DesignStatus::design:
      return "design";
    case DesignStatus::invalid:
      return "invalid";
  }
  return "unknown";
}

namespace {

// Block-level checks shared by both verifiers; fills verdict on failure.
bool blocks_well_formed(const BlockDesign& design, DesignVerdict& verdict) {
  if (design.t < 1) throw ParameterError("design strength t must be >= 1");
  for (const auto& block : design.blocks) {
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    const bool out_of_range =
        !sorted.empty() && (sorted.front() < 0 || sorted.back() >= design.v);
    const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    if (out_of_range || repeats) {
      verdict.status = DesignStatus::invalid;
      verdict.certificate = block;
      verdict.reason = out_of_range ? "block has a point outside [0, v)" : "block repeats a point";
      return false;
    }
  }
  return true;
}

std::uint64_t tset_count(const BlockDesign& design) {
  const std::uint64_t total = binomial_u64(design.v, design.t);
  if (total > kMaxDesignTsets) {
    throw ParameterError("design too large to verify exhaustively: C(v,t) = " +
                         std::to_string(total));
  }
  return total;
}

template <typename AddBlock>
void count_block_tsets(const std::vector<int>& block, int t, const BinomialTable& binom,
                       AddBlock&& add) {
  std::vector<int> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  for_each_subset_of(sorted, t, [&](std::span<const int> sub) {
    add(colex_rank(sub, binom));
    return true;
  });
}

DesignVerdict summarize(const BlockDesign& design, const std::vector<std::uint32_t>& counts,
                        const BinomialTable& binom) {
  DesignVerdict verdict;
  verdict.total_tsets = counts.size();
  std::optional<std::uint64_t> first_double;
  std::optional<std::uint64_t> first_missing;
  for (std::uint64_t r = 0; r < counts.size(); ++r) {
    if (counts[r] > 0) ++verdict.covered_tsets;
    if (counts[r] > 1 && !first_double) first_double = r;
    if (counts[r] == 0 && !first_missing) first_missing = r;
  }
  auto unrank = [&](std::uint64_t r) {
    std::vector<int> out(design.t);
    colex_unrank(r, design.t, design.v, binom, out);
    return out;
  };
  if (first_double) {
    verdict.status = DesignStatus::invalid;
    verdict.certificate = unrank(*first_double);
    verdict.reason = "t-set covered more than once";
  } else if (first_missing) {
    verdict.status = DesignStatus::packing;
    verdict.certificate = unrank(*first_missing);
    verdict.reason = "t-set not covered";
  } else {
    verdict.status = DesignStatus::design;
  }
  return verdict;
}

}  // namespace

DesignVerdict verify_design_serial(const BlockDesign& design) {
  DesignVerdict verdict;
  if (!blocks_well_formed(design, verdict)) return verdict;
  const std::uint64_t total = tset_count(design);
  const BinomialTable binom(std::max(design.v, 1), design.t);
  std::vector<std::uint32_t> counts(total, 0);
  for (const auto& block : design.blocks) {
    count_block_tsets(block, design.t, binom, [&](std::uint64_t r) { ++counts[r]; });
  }
  return summarize(design, counts, binom);
}

DesignVerdict verify_design(const BlockDesign& design) {
  DesignVerdict verdict;
  if (!blocks_well_formed(design, verdict)) return verdict;
  const std::uint64_t total = tset_count(design);
  const BinomialTable binom(std::max(design.v, 1), design.t);
  std::vector<std::uint32_t> counts(total, 0);
  const auto blocks = static_cast<std::int64_t>(design.blocks.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t b = 0; b < blocks; ++b) {
    count_block_tsets(design.blocks[b], design.t, binom, [&](std::uint64_t r) {
#pragma omp atomic
      ++counts[r];
    });
  }
  return summarize(design, counts, binom);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

BlockDesign affine_plane(int p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  BlockDesign design;
  design.v = p * p;
  design.t = 2;
  design.claim = DesignKind::design;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      std::vector<int> line;
      for (int x = 0; x < p; ++x) line.push_back(x * p + (a * x + b) % p);
      std::sort(line.begin(), line.end());
      design.blocks.push_back(std::move(line));
    }
  }
  for (int c = 0; c < p; ++c) {
    std::vector<int> vertical;
    for (int y = 0; y < p; ++y) vertical.push_back(c * p + y);
    design.blocks.push_back(std::move(vertical));
  }
  return design;
}

BlockDesign zero_sum_quadruples(int r) {
  if (r < 2) throw ParameterError("zero-sum quadruples need r >= 2");
  if (r > 20) throw ParameterError("r too large");
  const int v = 1 << r;
  BlockDesign design;
  design.v = v;
  design.t = 3;
  design.claim = DesignKind::design;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      for (int c = b + 1; c < v; ++c) {
        const int d = a ^ b ^ c;
        if (d > c) design.blocks.push_back({a, b, c, d});
      }
    }
  }
  return design;
}

namespace {

bool extend_difference_set(std::vector<int>& set, std::vector<char>& used_diff, int m,
                           int size) {
  if (static_cast<int>(set.size()) == size) return true;
  for (int x = set.back() + 1; x < m; ++x) {
    std::vector<int> added;
    bool ok = true;
    for (const int y : set) {
      const int d1 = (x - y) % m;
      const int d2 = m - d1;
      if (used_diff[d1] || used_diff[d2] || d1 == d2) {
        ok = false;
        break;
      }
      used_diff[d1] = used_diff[d2] = 1;
      added.push_back(d1);
    }
    if (ok) {
      set.push_back(x);
      if (extend_difference_set(set, used_diff, m, size)) return true;
      set.pop_back();
    }
    for (const int d1 : added) used_diff[d1] = used_diff[m - d1] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> planar_difference_set(int q) {
  if (q < 2) throw ParameterError("planar difference sets need q >= 2");
  const int m = q * q + q + 1;
  // every nonzero difference occurs once, so some translate contains 0 and 1
  std::vector<int> set{0, 1};
  std::vector<char> used(m, 0);
  used[1] = used[m - 1] = 1;
  if (extend_difference_set(set, used, m, q + 1)) return set;
  return std::nullopt;
}

BlockDesign develop_difference_set(const std::vector<int>& base, int m, int t) {
  if (m < 1) throw ParameterError("modulus must be >= 1");
  BlockDesign design;
  design.v = m;
  design.t = t;
  for (int u = 0; u < m; ++u) {
    std::vector<int> block;
    for (const int x : base) block.push_back(((x + u) % m + m) % m);
    std::sort(block.begin(), block.end());
    design.blocks.push_back(std::move(block));
  }
  return design;
}

BlockDesign greedy_packing(int v, int block_size, int t, std::uint64_t seed) {
  if (!(v >= block_size && block_size >= t && t >= 1)) {
    throw ParameterError("need v >= p >= t >= 1");
  }
  const std::uint64_t candidates = binomial_u64(v, block_size);
  const std::uint64_t tsets = binomial_u64(v, t);
  if (tsets > kMaxDesignTsets || candidates > (std::uint64_t{1} << 32)) {
    throw ParameterError("greedy packing instance too large");
  }
  const BinomialTable binom(v, block_size);
  std::vector<char> covered(tsets, 0);
  BlockDesign design;
  design.v = v;
  design.t = t;
  const SeededPermutation order(candidates, seed);
  std::vector<int> block(block_size);
  std::vector<std::uint64_t> ranks;
  for (std::uint64_t i = 0; i < candidates; ++i) {
    colex_unrank(order(i), block_size, v, binom, block);
    ranks.clear();
    bool free = true;
    for_each_subset_of(block, t, [&](std::span<const int> sub) {
      const auto r = colex_rank(sub, binom);
      if (covered[r]) {
        free = false;
        return false;
      }
      ranks.push_back(r);
      return true;
    });
    if (!free) continue;
    for (const auto r : ranks) covered[r] = 1;
    design.blocks.push_back(block);
  }
  std::sort(design.blocks.begin(), design.blocks.end());
  return design;
}

ComposeResult compose_code(const BlockDesign& design, const std::map<int, Code>& base, int k,
                           int d) {
  if (k < 1 || d < 1 || d > 2 * k) throw ParameterError("need k >= 1 and 1 <= d <= 2k");
  const int t = 2 * k - d + 1;
  if (design.t != t) {
    throw ParameterError("design strength t=" + std::to_string(design.t) +
                         " does not match 2k-d+1=" + std::to_string(t));
  }
  const auto verdict = verify_design(design);
  if (verdict.status == DesignStatus::invalid) {
    throw ParameterError("design is not a " + std::to_string(t) + "-packing: " + verdict.reason);
  }
  for (const auto& [size, code] : base) {
    const auto& p = code.params;
    if (p.n != size || p.k != k || p.s != 2 || p.q != 0) {
      throw ParameterError("base code for block size " + std::to_string(size) +
                           " has mismatched parameters");
    }
    const bool vacuous = code.words.size() <= 1;
    if (!vacuous && (!code.verified_min_distance || *code.verified_min_distance < d)) {
      throw ParameterError("base code for block size " + std::to_string(size) +
                           " lacks a verified minimum distance >= " + std::to_string(d));
    }
  }

  ComposeResult result;
  std::set<int> missing;
  std::vector<Codeword> words;
  for (const auto& block : design.blocks) {
    const auto it = base.find(static_cast<int>(block.size()));
    if (it == base.end()) {
      missing.insert(static_cast<int>(block.size()));
      continue;
    }
    std::vector<int> points = block;
    std::sort(points.begin(), points.end());
    for (const auto& word : it->second.words) {
      Codeword mapped;
      for (const auto& part : word) {
        std::vector<int> image;
        for (const int e : part) image.push_back(points[e]);
        mapped.push_back(std::move(image));
      }
      words.push_back(std::move(mapped));
    }
  }
  for (const int size : missing) {
    result.warnings.push_back("no base code for block size " + std::to_string(size) +
                              "; those blocks contribute nothing");
  }
  result.code = make_code(CodeParams{design.v, k, 2, 0}, d, std::move(words));
  return result;
}

}  // namespace ekc
