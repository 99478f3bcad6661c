#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekcodes/core.hpp"

namespace ekc {

enum class DesignKind { packing, design };

/// Blocks on the point set [0, v); every t-subset should be covered at most
/// once (packing) or exactly once (design).
struct BlockDesign {
  int v = 0;
  int t = 2;
  std::vector<std::vector<int>> blocks;  // each block sorted ascending
  DesignKind claim = DesignKind::packing;
};

enum class DesignStatus { packing, design, invalid };

const char* to_string(DesignStatus status);

struct DesignVerdict {
  DesignStatus status = DesignStatus::invalid;
  /// invalid: a t-set covered more than once, or the offending block.
  /// packing: the first uncovered t-set.
  std::vector<int> certificate;
  std::string reason;
  std::uint64_t covered_tsets = 0;
  std::uint64_t total_tsets = 0;
};

/// Largest C(v, t) verify_design will enumerate.
inline constexpr std::uint64_t kMaxDesignTsets = 20'000'000;

/// Exhaustive t-subset coverage count. OpenMP-parallel over blocks.
/// Throws ParameterError when C(v, t) exceeds kMaxDesignTsets.
DesignVerdict verify_design(const BlockDesign& design);
/// Single-threaded reference with identical results.
DesignVerdict verify_design_serial(const BlockDesign& design);

bool is_prime(int p);

/// S(p^2, p, 2): lines y = a*x + b and verticals x = c over Z_p; point (x, y) is x*p + y.
BlockDesign affine_plane(int p);

/// S(2^r, 4, 3): every 4-subset of GF(2)^r whose XOR is zero.
BlockDesign zero_sum_quadruples(int r);

/// A (q+1)-subset of Z_{q^2+q+1} whose nonzero differences are all distinct,
/// found by backtracking with 0 and 1 fixed. nullopt when the search exhausts.
std::optional<std::vector<int>> planar_difference_set(int q);

/// Blocks {D + u mod m : u in [0, m)}.
BlockDesign develop_difference_set(const std::vector<int>& base, int m, int t = 2);

/// Random-order greedy t-packing of block_size-subsets of [0, v).
BlockDesign greedy_packing(int v, int block_size, int t, std::uint64_t seed);

struct ComposeResult {
  Code code;
  std::vector<std::string> warnings;
};

/// Places a base code on every block (points in ascending order act as the
/// base ground set [0, |P|)). The design must verify as a (2k-d+1)-packing and
/// every base code must carry a verified minimum distance >= d.
ComposeResult compose_code(const BlockDesign& design, const std::map<int, Code>& base, int k,
                           int d);

}  // namespace ekc
