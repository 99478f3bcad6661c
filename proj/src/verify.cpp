#include "ekcodes/verify.hpp"

#include <omp.h>

#include "ekcodes/metric.hpp"

namespace ekc {

namespace {

struct Best {
  int distance = kInfiniteDistance;
  std::size_t first = 0;
  std::size_t second = 0;

  void offer(int d, std::size_t i, std::size_t j) {
    if (d < distance || (d == distance && (i < first || (i == first && j < second)))) {
      distance = d;
      first = i;
      second = j;
    }
  }
};

std::uint64_t pair_count(std::size_t n) {
  return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

}  // namespace

MinDistanceResult min_distance_serial(const Code& code) {
  Best best;
  const auto& words = code.words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best.offer(word_distance(code.params, words[i], words[j]), i, j);
    }
  }
  return {best.distance, best.first, best.second, pair_count(words.size())};
}

MinDistanceResult min_distance(const Code& code) {
  const auto& words = code.words;
  const auto n = static_cast<std::int64_t>(words.size());
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(dynamic, 8) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        local.offer(word_distance(code.params, words[i], words[j]), static_cast<std::size_t>(i),
                    static_cast<std::size_t>(j));
      }
    }
#pragma omp critical(ekc_min_distance)
    best.offer(local.distance, local.first, local.second);
  }
  if (best.distance == kInfiniteDistance) return {kInfiniteDistance, 0, 0, pair_count(words.size())};
  return {best.distance, best.first, best.second, pair_count(words.size())};
}

void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace ekc
