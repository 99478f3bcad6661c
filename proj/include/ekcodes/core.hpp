#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ekcodes/combinatorics.hpp"

namespace ekc {

/// Which input rule canonicalize rejected.
enum class WordErrorKind { overlap, out_of_range, wrong_size, bad_parameters, duplicate };

class WordError : public ParameterError {
 public:
  WordError(WordErrorKind kind, const std::string& what) : ParameterError(what), kind_(kind) {}
  WordErrorKind kind() const { return kind_; }

 private:
  WordErrorKind kind_;
};

/// Sorted k-subset of the ground set [0, n).
class KSubset {
 public:
  KSubset() = default;
  /// Sorts and validates; throws WordError on repeats or out-of-range elements.
  KSubset(std::vector<int> elements, int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(elements_.size()); }
  std::span<const int> elements() const { return elements_; }
  const std::vector<int>& vec() const { return elements_; }
  bool contains(int e) const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset& a, const KSubset& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::vector<int> elements_;
  int n_ = 0;
};

/// Unordered s-tuple of pairwise disjoint k-subsets, stored with parts in
/// lexicographic order.
class STuple {
 public:
  STuple() = default;
  int n() const { return n_; }
  int k() const { return k_; }
  int s() const { return static_cast<int>(parts_.size()); }
  const std::vector<KSubset>& parts() const { return parts_; }
  const KSubset& part(int i) const { return parts_[i]; }

  friend bool operator==(const STuple&, const STuple&) = default;
  friend auto operator<=>(const STuple& a, const STuple& b) { return a.parts_ <=> b.parts_; }

 private:
  friend STuple canonicalize(const std::vector<std::vector<int>>& raw, int n, int k);
  std::vector<KSubset> parts_;
  int n_ = 0;
  int k_ = 0;
};

/// Validates and canonicalizes raw parts. Each rule violation raises a
/// WordError with its own kind. Idempotent.
STuple canonicalize(const std::vector<std::vector<int>>& raw, int n, int k);

/// The s = 2 case.
class DisjointPair {
 public:
  DisjointPair() = default;
  DisjointPair(const std::vector<int>& a, const std::vector<int>& b, int n);
  explicit DisjointPair(const STuple& tuple);

  const KSubset& a() const { return a_; }
  const KSubset& b() const { return b_; }
  int n() const { return a_.n(); }
  int k() const { return a_.size(); }
  STuple to_tuple() const;

  friend bool operator==(const DisjointPair&, const DisjointPair&) = default;
  friend auto operator<=>(const DisjointPair&, const DisjointPair&) = default;

 private:
  KSubset a_;
  KSubset b_;
};

/// Length-n word over {0..q-1}; weight is its number of nonzero symbols.
class QaryWord {
 public:
  QaryWord() = default;
  QaryWord(std::vector<int> symbols, int q);

  int n() const { return static_cast<int>(symbols_.size()); }
  int q() const { return q_; }
  int weight() const;
  std::span<const int> symbols() const { return symbols_; }
  const std::vector<int>& vec() const { return symbols_; }

  friend bool operator==(const QaryWord&, const QaryWord&) = default;
  friend auto operator<=>(const QaryWord& a, const QaryWord& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<int> symbols_;
  int q_ = 2;
};

/// Unordered pair of equal-weight q-ary words with disjoint supports.
class QaryPairWord {
 public:
  QaryPairWord() = default;
  QaryPairWord(QaryWord u, QaryWord v);

  const QaryWord& u() const { return u_; }
  const QaryWord& v() const { return v_; }

  friend bool operator==(const QaryPairWord&, const QaryPairWord&) = default;

 private:
  QaryWord u_;
  QaryWord v_;
};

/// Raw canonical parts. Set-world (q = 0): sorted k-subsets of [0, n).
/// q-ary (q >= 2): symbol vectors of length n, weight k, disjoint supports.
using Codeword = std::vector<std::vector<int>>;

struct CodeParams {
  int n = 0;
  int k = 0;
  int s = 2;
  int q = 0;  // 0 = set-world

  bool set_world() const { return q == 0; }
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

/// Throws WordError unless params describe a valid word space.
void validate_params(const CodeParams& params);

/// Canonical form of a raw codeword in the given space; throws WordError.
Codeword canonical_word(const CodeParams& params, Codeword raw);

Codeword to_codeword(const STuple& tuple);
Codeword to_codeword(const DisjointPair& pair);
Codeword to_codeword(const QaryWord& word);
Codeword to_codeword(const QaryPairWord& word);
STuple to_stuple(const CodeParams& params, const Codeword& word);

struct Code {
  CodeParams params;
  int design_distance = 1;
  std::vector<Codeword> words;  // canonical, sorted, unique
  std::optional<int> verified_min_distance;

  std::size_t size() const { return words.size(); }
};

/// Canonicalizes every word, sorts, and rejects duplicates (WordError::duplicate).
Code make_code(const CodeParams& params, int design_distance, std::vector<Codeword> words);

/// Re-checks the container invariants of a code read from outside.
void validate_code(const Code& code);

/// The space of ordered s-tuples (parts in any order). Index i is decoded part
/// by part, each part taken in colex order from the positions not yet used.
/// Every canonical word appears s! times; unrank reports which index is the
/// canonical one, so a scan over [0, ordered_size()) visits each word once.
class WordSpace {
 public:
  explicit WordSpace(const CodeParams& params);

  const CodeParams& params() const { return params_; }
  /// True when s*k > n: the space is empty.
  bool degenerate() const { return degenerate_; }
  /// Throws OverflowError past 64 bits.
  std::uint64_t ordered_size() const;
  /// Decodes index into out (resized as needed). Returns true iff the decoded
  /// ordered tuple is already in canonical order.
  bool unrank(std::uint64_t index, Codeword& out) const;

 private:
  CodeParams params_;
  bool degenerate_ = false;
  std::uint64_t ordered_size_ = 0;
  bool overflow_ = false;
  std::vector<std::uint64_t> part_sizes_;     // per part: C(n - i*k, k) * (q-1)^k
  std::vector<std::uint64_t> support_sizes_;  // per part: C(n - i*k, k)
  BinomialTable binom_;
};

/// Single-consumer stream over every canonical s-tuple of [0, n).
class WordStream {
 public:
  WordStream(int n, int k, int s);
  bool degenerate() const { return space_.degenerate(); }
  std::optional<STuple> next();

 private:
  WordSpace space_;
  std::uint64_t cursor_ = 0;
  std::uint64_t end_ = 0;
  Codeword buffer_;
};

WordStream enumerate_words(int n, int k, int s);

/// All canonical words of a (set-world or q-ary) space, sorted.
std::vector<Codeword> all_words(const CodeParams& params);

/// (1/s!) * prod_{i<s} C(n - i*k, k) as an exact integer.
BigInt word_count(int n, int k, int s);

}  // namespace ekc
