#include <doctest.h>

#include <set>

#include "ekcodes/core.hpp"

using namespace ekc;

namespace {

WordErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const WordError& e) {
    return e.kind();
  }
  FAIL("no WordError raised");
  return WordErrorKind::bad_parameters;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("canonicalize sorts elements and parts") {
  const auto a = canonicalize({{3, 1}, {2, 4}}, 5, 2);
  const auto b = canonicalize({{2, 4}, {1, 3}}, 5, 2);
  CHECK(a == b);
  CHECK(a.part(0).vec() == std::vector<int>{1, 3});
  CHECK(a.part(1).vec() == std::vector<int>{2, 4});
  CHECK(canonicalize(to_codeword(a), 5, 2) == a);
}

TEST_CASE("each rule violation has its own error kind") {
  CHECK(kind_of([] { canonicalize({{1, 2}, {2, 3}}, 5, 2); }) == WordErrorKind::overlap);
  CHECK(kind_of([] { canonicalize({{1, 5}, {2, 3}}, 5, 2); }) == WordErrorKind::out_of_range);
  CHECK(kind_of([] { canonicalize({{-1, 0}, {2, 3}}, 5, 2); }) == WordErrorKind::out_of_range);
  CHECK(kind_of([] { canonicalize({{1}, {2, 3}}, 5, 2); }) == WordErrorKind::wrong_size);
  CHECK(kind_of([] { canonicalize({{1, 1}, {2, 3}}, 5, 2); }) != WordErrorKind::wrong_size);
  CHECK(kind_of([] { canonicalize({{}, {}}, 5, 0); }) == WordErrorKind::bad_parameters);
  CHECK(kind_of([] {
          make_code(CodeParams{5, 2, 2, 0}, 1, {{{0, 1}, {2, 3}}, {{3, 2}, {1, 0}}});
        }) == WordErrorKind::duplicate);
}

TEST_CASE("disjoint pair and tuple round trip") {
  const DisjointPair p({4, 2}, {0, 3}, 6);
  CHECK(p.a().vec() == std::vector<int>{0, 3});
  CHECK(p.b().vec() == std::vector<int>{2, 4});
  CHECK(DisjointPair(p.to_tuple()) == p);
  CHECK_THROWS_AS(DisjointPair(canonicalize({{0}, {1}, {2}}, 3, 1)), ParameterError);
}

TEST_CASE("q-ary words") {
  const QaryWord w({1, 0, 2, 0}, 3);
  CHECK(w.weight() == 2);
  CHECK_THROWS_AS(QaryWord({3, 0}, 3), ParameterError);
  CHECK_THROWS_AS(QaryWord({1, 0}, 1), ParameterError);
  const QaryPairWord x(QaryWord({0, 0, 1, 1}, 2), QaryWord({1, 1, 0, 0}, 2));
  CHECK(x.u().vec() == std::vector<int>{0, 0, 1, 1});
  CHECK_THROWS_AS(QaryPairWord(QaryWord({1, 1, 0}, 2), QaryWord({0, 1, 1}, 2)), ParameterError);
  CHECK_THROWS_AS(QaryPairWord(QaryWord({1, 0, 0}, 2), QaryWord({0, 1, 1}, 2)), ParameterError);
}

TEST_CASE("enumerate_words examples") {
  auto count = [](int n, int k, int s) {
    auto stream = enumerate_words(n, k, s);
    std::size_t c = 0;
    while (stream.next()) ++c;
    return c;
  };
  CHECK(count(9, 2, 2) == 378);
  CHECK(count(4, 2, 2) == 3);
  auto single = enumerate_words(2, 1, 2);
  const auto w = single.next();
  REQUIRE(w);
  CHECK(w->part(0).vec() == std::vector<int>{0});
  CHECK(w->part(1).vec() == std::vector<int>{1});
  CHECK_FALSE(single.next());
  auto empty = enumerate_words(5, 3, 2);
  CHECK(empty.degenerate());
  CHECK_FALSE(empty.next());
}

TEST_CASE("word counts match the closed form for n <= 12, k <= 3, s <= 3") {
  for (int s = 1; s <= 3; ++s) {
    for (int k = 1; k <= 3; ++k) {
      for (int n = 1; n <= 12; ++n) {
        std::set<STuple> seen;
        auto stream = enumerate_words(n, k, s);
        while (auto w = stream.next()) {
          CHECK(canonicalize(to_codeword(*w), n, k) == *w);
          seen.insert(*w);
        }
        CHECK(BigInt(seen.size()) == word_count(n, k, s));
      }
    }
  }
  CHECK(word_count(9, 2, 2) == 378);
}

TEST_CASE("all_words covers q-ary spaces") {
  // weight-2 ternary words of length 4: C(4,2) * 2^2
  CHECK(all_words(CodeParams{4, 2, 1, 3}).size() == 24);
  // unordered pairs of disjoint weight-1 binary words of length 3
  CHECK(all_words(CodeParams{3, 1, 2, 2}).size() == 3);
  const auto words = all_words(CodeParams{6, 2, 2, 0});
  CHECK(words.size() == 45);
  CHECK(std::is_sorted(words.begin(), words.end()));
}

TEST_CASE("word space decodes every ordered tuple once") {
  const WordSpace space(CodeParams{7, 2, 2, 0});
  std::set<Codeword> canonical;
  std::size_t canonical_hits = 0;
  Codeword w;
  for (std::uint64_t i = 0; i < space.ordered_size(); ++i) {
    if (space.unrank(i, w)) {
      ++canonical_hits;
      canonical.insert(w);
    }
  }
  CHECK(space.ordered_size() == 21 * 10);
  CHECK(canonical_hits == 105);
  CHECK(canonical.size() == 105);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(validate_params(CodeParams{5, 0, 2, 0}), WordError);
  CHECK_THROWS_AS(validate_params(CodeParams{5, 2, 0, 0}), WordError);
  CHECK_THROWS_AS(validate_params(CodeParams{5, 2, 2, 1}), WordError);
  CHECK_NOTHROW(validate_params(CodeParams{5, 2, 2, 3}));
}

}
