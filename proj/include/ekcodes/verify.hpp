#pragma once

#include <cstdint>
#include <limits>

#include "ekcodes/core.hpp"

namespace ekc {

/// Minimum distance of a code with fewer than two words.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

struct MinDistanceResult {
  int distance = kInfiniteDistance;
  /// Lexicographically first pair of word indices attaining the minimum.
  std::size_t first = 0;
  std::size_t second = 0;
  std::uint64_t pairs_checked = 0;

  bool infinite() const { return distance == kInfiniteDistance; }
  friend bool operator==(const MinDistanceResult&, const MinDistanceResult&) = default;
};

/// All-pairs minimum, one thread. Reference for min_distance.
MinDistanceResult min_distance_serial(const Code& code);

/// All-pairs minimum, OpenMP over rows with a deterministic min-reduction:
/// identical to min_distance_serial for any thread count.
MinDistanceResult min_distance(const Code& code);

/// Sets the OpenMP thread count; n <= 0 leaves the runtime default.
void set_thread_count(int n);
int thread_count();

}  // namespace ekc
