#include "ekcodes/combinatorics.hpp"

#include <limits>
#include <numeric>

namespace ekc {

BigInt binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw OverflowError("count exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t r) {
  BigInt value = binomial(n, r);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError("binomial coefficient exceeds 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw ParameterError("factorial of a negative number");
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BinomialTable::BinomialTable(int max_n, int max_r)
    : max_n_(max_n), max_r_(max_r),
      table_(static_cast<std::size_t>(max_n + 1) * (max_r + 1), 0) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int n = 0; n <= max_n; ++n) {
    auto* row = &table_[static_cast<std::size_t>(n) * (max_r + 1)];
    row[0] = 1;
    if (n == 0) continue;
    const auto* prev = &table_[static_cast<std::size_t>(n - 1) * (max_r + 1)];
    for (int r = 1; r <= std::min(n, max_r); ++r) {
      const std::uint64_t a = prev[r - 1];
      const std::uint64_t b = r <= n - 1 ? prev[r] : 0;
      row[r] = (a > kMax - b) ? kMax : a + b;
    }
  }
}

std::uint64_t colex_rank(std::span<const int> sorted_subset, const BinomialTable& binom) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
    rank += binom(sorted_subset[i], static_cast<int>(i) + 1);
  }
  return rank;
}

void colex_unrank(std::uint64_t rank, int r, int n, const BinomialTable& binom,
                  std::span<int> out) {
  int hi = n - 1;
  for (int i = r; i >= 2; --i) {
    // largest c in [i-1, hi] with C(c, i) <= rank
    int lo = i - 1;
    int top = hi;
    while (lo < top) {
      const int mid = lo + (top - lo + 1) / 2;
      if (binom(mid, i) <= rank) {
        lo = mid;
      } else {
        top = mid - 1;
      }
    }
    out[i - 1] = lo;
    rank -= binom(lo, i);
    hi = lo - 1;
  }
  if (r >= 1) out[0] = static_cast<int>(rank);  // C(c, 1) = c
}

void for_each_subset_of(std::span<const int> elements, int r,
                        const std::function<bool(std::span<const int>)>& fn) {
  const int n = static_cast<int>(elements.size());
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> chosen(r);
  while (true) {
    for (int i = 0; i < r; ++i) chosen[i] = elements[idx[i]];
    if (!fn(chosen)) return;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void for_each_combination(int n, int r, const std::function<bool(std::span<const int>)>& fn) {
  std::vector<int> all(std::max(n, 0));
  std::iota(all.begin(), all.end(), 0);
  for_each_subset_of(all, r, fn);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeededPermutation::SeededPermutation(std::uint64_t size, std::uint64_t seed) : size_(size) {
  int bits = 2;
  while (bits < 64 && (std::uint64_t{1} << bits) < size) ++bits;
  high_bits_ = bits - bits / 2;
  low_bits_ = bits / 2;
  high_mask_ = (std::uint64_t{1} << high_bits_) - 1;
  low_mask_ = (std::uint64_t{1} << low_bits_) - 1;
  std::uint64_t state = seed;
  for (auto& key : keys_) {
    state = splitmix64(state);
    key = state;
  }
}

std::uint64_t SeededPermutation::encrypt(std::uint64_t x) const {
  // (hi, lo) -> (lo, hi ^ F(lo)) with fixed split widths: each round is a
  // bijection of the bit-string space whatever the widths
  for (const auto key : keys_) {
    const std::uint64_t hi = x >> low_bits_;
    const std::uint64_t lo = x & low_mask_;
    x = (lo << high_bits_) | ((hi ^ splitmix64(lo ^ key)) & high_mask_);
  }
  return x;
}

std::uint64_t SeededPermutation::operator()(std::uint64_t index) const {
  if (index >= size_) throw ParameterError("permutation index out of range");
  std::uint64_t x = encrypt(index);
  while (x >= size_) x = encrypt(x);
  return x;
}

}  // namespace ekc
