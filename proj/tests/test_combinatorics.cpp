#include <doctest.h>

#include <set>

#include "ekcodes/combinatorics.hpp"

using namespace ekc;

TEST_SUITE("combinatorics") {

TEST_CASE("binomials") {
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK(binomial_u64(62, 31) == 465428353255261088ULL);
  CHECK_THROWS_AS(binomial_u64(70, 35), OverflowError);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(checked_mul(~std::uint64_t{0}, 2), OverflowError);
}

TEST_CASE("rounding division") {
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(0, 3) == 0);
}

TEST_CASE("binomial table saturates") {
  const BinomialTable t(70, 35);
  CHECK(t(10, 3) == 120);
  CHECK(t(3, 10) == 0);
  CHECK(t(70, 35) == ~std::uint64_t{0});
}

TEST_CASE("colex rank is a bijection") {
  const BinomialTable binom(12, 4);
  std::set<std::uint64_t> seen;
  std::uint64_t expected = 0;
  // colex order on 4-subsets of [0,12): increasing largest element, then recursively
  std::vector<std::vector<int>> subsets;
  for_each_combination(12, 4, [&](std::span<const int> s) {
    subsets.emplace_back(s.begin(), s.end());
    return true;
  });
  CHECK(subsets.size() == 495);
  for (const auto& s : subsets) {
    const auto r = colex_rank(s, binom);
    CHECK(r < 495);
    seen.insert(r);
    std::vector<int> back(4);
    colex_unrank(r, 4, 12, binom, back);
    CHECK(back == s);
  }
  CHECK(seen.size() == 495);
  std::vector<int> out(4);
  colex_unrank(expected, 4, 12, binom, out);
  CHECK(out == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("subsets of a list come in lexicographic order and can stop early") {
  const std::vector<int> items{2, 5, 7};
  std::vector<std::vector<int>> got;
  for_each_subset_of(items, 2, [&](std::span<const int> s) {
    got.emplace_back(s.begin(), s.end());
    return true;
  });
  CHECK(got == std::vector<std::vector<int>>{{2, 5}, {2, 7}, {5, 7}});
  int calls = 0;
  for_each_subset_of(items, 1, [&](std::span<const int>) { return ++calls < 2; });
  CHECK(calls == 2);
  calls = 0;
  for_each_subset_of(items, 0, [&](std::span<const int> s) {
    CHECK(s.empty());
    ++calls;
    return true;
  });
  CHECK(calls == 1);
}

TEST_CASE("seeded permutation is a bijection and depends on the seed") {
  for (const std::uint64_t size : {1ULL, 2ULL, 3ULL, 17ULL, 1000ULL, 4096ULL, 5001ULL}) {
    const SeededPermutation perm(size, 42);
    std::vector<char> hit(size, 0);
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto x = perm(i);
      REQUIRE(x < size);
      CHECK_FALSE(hit[x]);
      hit[x] = 1;
    }
  }
  const SeededPermutation a(1000, 1);
  const SeededPermutation b(1000, 2);
  const SeededPermutation a2(1000, 1);
  int differ = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    differ += a(i) != b(i);
    CHECK(a(i) == a2(i));
  }
  CHECK(differ > 900);
  CHECK_THROWS_AS(a(1000), ParameterError);
}

}
