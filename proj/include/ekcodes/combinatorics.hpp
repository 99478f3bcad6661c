#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ekc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown for any call whose arguments violate a documented precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact count does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// C(n, r) as an exact big integer; zero when r < 0 or r > n.
BigInt binomial(std::int64_t n, std::int64_t r);

/// C(n, r) in 64 bits. Throws OverflowError instead of wrapping.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t r);

BigInt factorial(std::int64_t n);

/// Overflow-checked product.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

/// ceil(a / b) and floor(a / b) for b > 0 with correct rounding of negative a.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// Table of C(i, j) for i <= max_n, j <= max_r. Entries saturate at UINT64_MAX.
class BinomialTable {
 public:
  BinomialTable(int max_n, int max_r);
  std::uint64_t operator()(int n, int r) const {
    if (r < 0 || n < 0 || r > n) return 0;
    return table_[static_cast<std::size_t>(n) * (max_r_ + 1) + r];
  }
  int max_n() const { return max_n_; }
  int max_r() const { return max_r_; }

 private:
  int max_n_;
  int max_r_;
  std::vector<std::uint64_t> table_;
};

/// Rank of a sorted r-subset of [0, n) in colexicographic order.
std::uint64_t colex_rank(std::span<const int> sorted_subset, const BinomialTable& binom);

/// Inverse of colex_rank: writes the r-subset with the given rank into out (ascending).
void colex_unrank(std::uint64_t rank, int r, int n, const BinomialTable& binom, std::span<int> out);

/// Calls fn once per r-subset of [0, n), in lexicographic order.
/// fn returns false to stop early.
void for_each_combination(int n, int r, const std::function<bool(std::span<const int>)>& fn);

/// Same, over subsets of an explicit element list (subsets keep the list's order).
void for_each_subset_of(std::span<const int> elements, int r,
                        const std::function<bool(std::span<const int>)>& fn);

std::uint64_t splitmix64(std::uint64_t x);

/// A keyed bijection of [0, size): an unbalanced Feistel network on the next
/// power of two, cycle-walked back into range. Deterministic given (size, seed).
class SeededPermutation {
 public:
  SeededPermutation(std::uint64_t size, std::uint64_t seed);
  std::uint64_t size() const { return size_; }
  std::uint64_t operator()(std::uint64_t index) const;

 private:
  std::uint64_t encrypt(std::uint64_t x) const;

  std::uint64_t size_;
  int high_bits_;  // bits rewritten per round
  int low_bits_;   // bits fed to the round function
  std::uint64_t high_mask_;
  std::uint64_t low_mask_;
  std::uint64_t keys_[6];
};

}  // namespace ekc
