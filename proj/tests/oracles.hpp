#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library's algorithms; inputs and outputs are plain vectors and bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<std::vector<int>>;

inline int set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (const int x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) ++count;
  }
  return count;
}

/// min over all s! matchings, enumerated with next_permutation.
inline int tuple_distance(const Parts& x, const Parts& y) {
  std::vector<int> perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  int best = 1 << 30;
  do {
    int sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += set_minus(x[i], y[perm[i]]);
    best = std::min(best, sum);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int hamming(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a[i] != b[i];
  return count;
}

using Mask = std::uint32_t;

/// Unordered pair of disjoint k-subsets of [0, n) as bitmasks, low-bit side first.
struct PairMask {
  Mask a = 0;
  Mask b = 0;
  friend bool operator==(const PairMask&, const PairMask&) = default;
  friend auto operator<=>(const PairMask&, const PairMask&) = default;
};

inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1) {
    if (m & 1u) out.push_back(i);
  }
  return out;
}

/// All k-bit masks below 2^n, by counting and filtering.
inline std::vector<Mask> masks_of_weight(int n, int k) {
  std::vector<Mask> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) == k) out.push_back(static_cast<Mask>(m));
  }
  return out;
}

inline std::vector<PairMask> all_pairs(int n, int k) {
  std::vector<PairMask> out;
  const auto masks = masks_of_weight(n, k);
  for (const Mask a : masks) {
    for (const Mask b : masks) {
      if (a & b) continue;
      if ((a & (~a + 1)) < (b & (~b + 1))) out.push_back({a, b});
    }
  }
  return out;
}

inline int pair_distance(const PairMask& p, const PairMask& q) {
  auto minus = [](Mask x, Mask y) { return std::popcount(x & ~y); };
  return std::min(minus(p.a, q.a) + minus(p.b, q.b), minus(p.a, q.b) + minus(p.b, q.a));
}

/// {U, V} with U inside one side and V inside the other, |U| + |V| = t, as an
/// ordered (min, max) mask pair.
inline std::set<std::pair<Mask, Mask>> witnesses(const PairMask& p, int t) {
  std::set<std::pair<Mask, Mask>> out;
  for (Mask u = p.a;; u = (u - 1) & p.a) {
    for (Mask v = p.b;; v = (v - 1) & p.b) {
      if (std::popcount(u) + std::popcount(v) == t) out.insert(std::minmax(u, v));
      if (v == 0) break;
    }
    if (u == 0) break;
  }
  return out;
}

/// Maximum clique by Bron-Kerbosch with pivoting over an adjacency matrix.
class MaxClique {
 public:
  explicit MaxClique(std::vector<std::vector<char>> adjacent) : adj_(std::move(adjacent)) {}

  std::vector<int> run() {
    std::vector<int> p(adj_.size());
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> r;
    expand(r, p, {});
    return best_;
  }

 private:
  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      if (r.size() > best_.size()) best_ = r;
      return;
    }
    if (r.size() + p.size() <= best_.size()) return;
    int pivot = p.empty() ? x.front() : p.front();
    std::size_t most = 0;
    for (const auto& pool : {p, x}) {
      for (const int u : pool) {
        std::size_t c = 0;
        for (const int w : p) c += adj_[u][w];
        if (c > most) {
          most = c;
          pivot = u;
        }
      }
    }
    const std::vector<int> candidates = p;
    for (const int v : candidates) {
      if (adj_[pivot][v]) continue;
      std::vector<int> np;
      std::vector<int> nx;
      for (const int w : p) {
        if (adj_[v][w]) np.push_back(w);
      }
      for (const int w : x) {
        if (adj_[v][w]) nx.push_back(w);
      }
      r.push_back(v);
      expand(r, np, nx);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::vector<std::vector<char>> adj_;
  std::vector<int> best_;
};

/// C(n, k, d) by maximum clique over the compatibility graph.
inline std::size_t max_code_size(int n, int k, int d) {
  const auto words = all_pairs(n, k);
  std::vector<std::vector<char>> adj(words.size(), std::vector<char>(words.size(), 0));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      adj[i][j] = i != j && pair_distance(words[i], words[j]) >= d;
    }
  }
  return MaxClique(std::move(adj)).run().size();
}

inline int circ(int a, int b, int m) {
  const int r = ((b - a) % m + m) % m;
  return std::min(r, m - r);
}

/// The three antagonism conditions, straight from their statement.
inline bool antagonistic(const std::vector<int>& s, const std::vector<int>& t, int m) {
  std::vector<int> within;
  for (const auto* side : {&s, &t}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        within.push_back(circ((*side)[i], (*side)[j], m));
      }
    }
  }
  std::vector<int> cross;
  for (const int a : s) {
    for (const int b : t) cross.push_back(circ(a, b, m));
  }
  auto distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct(within) || !distinct(cross)) return false;
  if (m % 2 == 0 && std::count(cross.begin(), cross.end(), m / 2) > 0) return false;
  return true;
}

/// Orbit representative under rotation, reflection and swap: the least
/// (S, T) image as sorted vectors.
inline std::pair<std::vector<int>, std::vector<int>> canonical(const std::vector<int>& s,
                                                              const std::vector<int>& t, int m) {
  std::pair<std::vector<int>, std::vector<int>> best;
  bool first = true;
  for (int sign : {1, -1}) {
    for (int c = 0; c < m; ++c) {
      auto map = [&](const std::vector<int>& v) {
        std::vector<int> out;
        for (const int x : v) out.push_back(((sign * x + c) % m + m) % m);
        std::sort(out.begin(), out.end());
        return out;
      };
      for (const bool swap : {false, true}) {
        auto image = swap ? std::pair{map(t), map(s)} : std::pair{map(s), map(t)};
        if (first || image < best) best = image;
        first = false;
      }
    }
  }
  return best;
}

/// Every antagonistic class mod m, by full enumeration of (S, T) with 0 in S.
inline std::set<std::pair<std::vector<int>, std::vector<int>>> antagonistic_classes(int k,
                                                                                    int m) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  const auto masks = masks_of_weight(m, k);
  for (const Mask sm : masks) {
    if (!(sm & 1u)) continue;
    const auto s = elements(sm);
    for (const Mask tm : masks) {
      if (tm & sm) continue;
      const auto t = elements(tm);
      if (antagonistic(s, t, m)) out.insert(canonical(s, t, m));
    }
  }
  return out;
}

}  // namespace oracle
