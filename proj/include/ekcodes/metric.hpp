#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "ekcodes/core.hpp"

namespace ekc {

/// |a \ b| for sorted spans.
int set_difference_size(std::span<const int> a, std::span<const int> b);

/// Number of coordinates where a and b differ.
int hamming_distance(std::span<const int> a, std::span<const int> b);

/// Minimum-cost perfect matching of an s x s integer cost matrix (row-major).
/// Exact; Hungarian method with potentials.
int min_assignment(std::span<const int> cost, int s);

/// Transportation distance on disjoint pairs:
/// min(|A1-B1| + |A2-B2|, |A1-B2| + |A2-B1|).
int pair_distance(const DisjointPair& p, const DisjointPair& q);

/// min over matchings pi of sum_i |A_i \ B_pi(i)|, solved as an assignment problem.
int tuple_distance(const STuple& x, const STuple& y);

int qary_distance(const QaryWord& u, const QaryWord& v);

/// min(rho(u,w) + rho(v,z), rho(u,z) + rho(v,w)) with rho the Hamming distance.
int qary_pair_distance(const QaryPairWord& x, const QaryPairWord& y);

/// Distance between two canonical codewords of the same space. Part distance is
/// |A \ B| in set-world and Hamming for q-ary words; parts are matched optimally.
int word_distance(const CodeParams& params, const Codeword& x, const Codeword& y);

/// {U, V}: disjoint subsets of [0, n) with |U| + |V| = 2k - d + 1. Stored so that
/// first <= second lexicographically (the empty set sorts first).
struct WitnessPair {
  std::vector<int> first;
  std::vector<int> second;

  WitnessPair() = default;
  WitnessPair(std::vector<int> u, std::vector<int> v);

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
  friend auto operator<=>(const WitnessPair&, const WitnessPair&) = default;
};

/// Witness size 2k - d + 1; throws ParameterError unless 1 <= d <= 2k.
int witness_size(int k, int d);

/// Every {U, V} with U a subset of one side, V of the other, |U| + |V| = 2k-d+1.
/// Sorted. Splits with an empty side are included.
std::vector<WitnessPair> witness_set(const DisjointPair& p, int d);

/// The witnesses with one side of size u and the other of size v. For u != v
/// this family has 2 C(k,u) C(k,v) members; for u == v the unordered family
/// has C(k,u)^2.
std::vector<WitnessPair> witness_split(const DisjointPair& p, int u, int v);

/// 2 C(k,u) C(k,v): ordered (U, V) placements counted with both orientations.
std::uint64_t witness_split_count(int k, int u, int v);

bool witness_sets_intersect(const DisjointPair& p, const DisjointPair& q, int d);

/// Maps a witness {U, V} over [0, n) with |U| + |V| = t to a unique 64-bit key:
/// colex rank of U u V, times 2^t, plus the membership mask of the side not
/// holding the smallest element.
class WitnessKeyer {
 public:
  WitnessKeyer(int n, int t);

  int n() const { return n_; }
  int t() const { return t_; }
  /// Upper bound (exclusive) on keys.
  std::uint64_t key_space() const { return key_space_; }

  /// Calls fn(key) for every witness of the pair (a, b), where a and b are
  /// sorted k-subsets. Each witness is reported once.
  template <typename Fn>
  void for_each_key(std::span<const int> a, std::span<const int> b, Fn&& fn) const {
    const int k = static_cast<int>(a.size());
    int merged[64];
    int from_a[64];
    for (int u = std::max(0, t_ - k); u <= std::min(t_, k); ++u) {
      for (std::uint64_t ma = first_mask(u); ma < (std::uint64_t{1} << k); ma = next_mask(ma)) {
        for (std::uint64_t mb = first_mask(t_ - u); mb < (std::uint64_t{1} << k);
             mb = next_mask(mb)) {
          int ia = 0;
          int ib = 0;
          int len = 0;
          // merge the selected elements of a and b, tracking which came from a
          while (true) {
            while (ia < k && !(ma >> ia & 1u)) ++ia;
            while (ib < k && !(mb >> ib & 1u)) ++ib;
            if (ia >= k && ib >= k) break;
            if (ib >= k || (ia < k && a[ia] < b[ib])) {
              merged[len] = a[ia++];
              from_a[len++] = 1;
            } else {
              merged[len] = b[ib++];
              from_a[len++] = 0;
            }
          }
          fn(encode(std::span<const int>(merged, len), from_a));
          if (mb == 0) break;
        }
        if (ma == 0) break;
      }
    }
  }

  std::uint64_t key(const WitnessPair& w) const;

 private:
  static std::uint64_t first_mask(int bits) { return (std::uint64_t{1} << bits) - 1; }
  // next larger mask with the same popcount
  static std::uint64_t next_mask(std::uint64_t x) {
    if (x == 0) return 0;
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    return ripple | (((x ^ ripple) >> 2) / low);
  }

  std::uint64_t encode(std::span<const int> merged, const int* side) const;

  int n_;
  int t_;
  std::uint64_t key_space_;
  BinomialTable binom_;
};

}  // namespace ekc
