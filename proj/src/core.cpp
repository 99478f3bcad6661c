#include "ekcodes/core.hpp"

#include <algorithm>

namespace ekc {

namespace {

std::string describe(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

void require_disjoint(const std::vector<std::vector<int>>& parts, bool q_ary) {
  // Parts are already validated individually; a merged support with repeats is an overlap.
  std::vector<int> support;
  for (const auto& part : parts) {
    if (q_ary) {
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (part[i] != 0) support.push_back(static_cast<int>(i));
      }
    } else {
      support.insert(support.end(), part.begin(), part.end());
    }
  }
  std::sort(support.begin(), support.end());
  const auto dup = std::adjacent_find(support.begin(), support.end());
  if (dup != support.end()) {
    throw WordError(WordErrorKind::overlap,
                    "parts overlap at element " + std::to_string(*dup));
  }
}

}  // namespace

KSubset::KSubset(std::vector<int> elements, int n) : elements_(std::move(elements)), n_(n) {
  std::sort(elements_.begin(), elements_.end());
  for (const int e : elements_) {
    if (e < 0 || e >= n) {
      throw WordError(WordErrorKind::out_of_range,
                      "element " + std::to_string(e) + " outside [0," + std::to_string(n) + ")");
    }
  }
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw WordError(WordErrorKind::overlap, "repeated element in " + describe(elements_));
  }
}

bool KSubset::contains(int e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

STuple canonicalize(const std::vector<std::vector<int>>& raw, int n, int k) {
  if (k < 1 || n < 1) {
    throw WordError(WordErrorKind::bad_parameters, "need n >= 1 and k >= 1");
  }
  if (raw.empty()) throw WordError(WordErrorKind::bad_parameters, "a word needs s >= 1 parts");
  STuple tuple;
  tuple.n_ = n;
  tuple.k_ = k;
  tuple.parts_.reserve(raw.size());
  for (const auto& part : raw) {
    if (static_cast<int>(part.size()) != k) {
      throw WordError(WordErrorKind::wrong_size, "part " + describe(part) + " has size " +
                                                     std::to_string(part.size()) + ", expected " +
                                                     std::to_string(k));
    }
    tuple.parts_.emplace_back(part, n);
  }
  std::vector<std::vector<int>> sorted;
  for (const auto& p : tuple.parts_) sorted.push_back(p.vec());
  require_disjoint(sorted, false);
  std::sort(tuple.parts_.begin(), tuple.parts_.end());
  return tuple;
}

DisjointPair::DisjointPair(const std::vector<int>& a, const std::vector<int>& b, int n)
    : DisjointPair(canonicalize({a, b}, n, static_cast<int>(a.size()))) {}

DisjointPair::DisjointPair(const STuple& tuple) {
  if (tuple.s() != 2) {
    throw WordError(WordErrorKind::bad_parameters, "a disjoint pair needs exactly two parts");
  }
  a_ = tuple.part(0);
  b_ = tuple.part(1);
}

STuple DisjointPair::to_tuple() const { return canonicalize({a_.vec(), b_.vec()}, n(), k()); }

QaryWord::QaryWord(std::vector<int> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
  if (q < 2) throw WordError(WordErrorKind::bad_parameters, "alphabet size q must be >= 2");
  for (const int x : symbols_) {
    if (x < 0 || x >= q) {
      throw WordError(WordErrorKind::out_of_range,
                      "symbol " + std::to_string(x) + " outside [0," + std::to_string(q) + ")");
    }
  }
}

int QaryWord::weight() const {
  return static_cast<int>(std::count_if(symbols_.begin(), symbols_.end(),
                                        [](int x) { return x != 0; }));
}

QaryPairWord::QaryPairWord(QaryWord u, QaryWord v) {
  if (u.n() != v.n() || u.q() != v.q()) {
    throw WordError(WordErrorKind::bad_parameters, "q-ary pair parts differ in length or alphabet");
  }
  if (u.weight() != v.weight()) {
    throw WordError(WordErrorKind::wrong_size, "q-ary pair parts differ in weight");
  }
  require_disjoint({u.vec(), v.vec()}, true);
  if (v < u) std::swap(u, v);
  u_ = std::move(u);
  v_ = std::move(v);
}

void validate_params(const CodeParams& p) {
  if (p.n < 1 || p.k < 1 || p.s < 1) {
    throw WordError(WordErrorKind::bad_parameters, "need n >= 1, k >= 1, s >= 1");
  }
  if (p.q == 1 || p.q < 0) {
    throw WordError(WordErrorKind::bad_parameters, "q must be 0 (set-world) or >= 2");
  }
}

Codeword canonical_word(const CodeParams& p, Codeword raw) {
  validate_params(p);
  if (static_cast<int>(raw.size()) != p.s) {
    throw WordError(WordErrorKind::wrong_size, "word has " + std::to_string(raw.size()) +
                                                   " parts, expected s=" + std::to_string(p.s));
  }
  if (p.set_world()) return to_codeword(canonicalize(raw, p.n, p.k));
  for (auto& part : raw) {
    if (static_cast<int>(part.size()) != p.n) {
      throw WordError(WordErrorKind::wrong_size, "q-ary part has length " +
                                                     std::to_string(part.size()) + ", expected " +
                                                     std::to_string(p.n));
    }
    const QaryWord w(part, p.q);
    if (w.weight() != p.k) {
      throw WordError(WordErrorKind::wrong_size, "q-ary part has weight " +
                                                     std::to_string(w.weight()) + ", expected " +
                                                     std::to_string(p.k));
    }
  }
  require_disjoint(raw, true);
  std::sort(raw.begin(), raw.end());
  return raw;
}

Codeword to_codeword(const STuple& tuple) {
  Codeword out;
  for (const auto& part : tuple.parts()) out.push_back(part.vec());
  return out;
}

Codeword to_codeword(const DisjointPair& pair) { return {pair.a().vec(), pair.b().vec()}; }
Codeword to_codeword(const QaryWord& word) { return {word.vec()}; }
Codeword to_codeword(const QaryPairWord& word) { return {word.u().vec(), word.v().vec()}; }

STuple to_stuple(const CodeParams& params, const Codeword& word) {
  if (!params.set_world()) {
    throw WordError(WordErrorKind::bad_parameters, "q-ary words are not s-tuples of sets");
  }
  return canonicalize(word, params.n, params.k);
}

Code make_code(const CodeParams& params, int design_distance, std::vector<Codeword> words) {
  validate_params(params);
  Code code;
  code.params = params;
  code.design_distance = design_distance;
  code.words.reserve(words.size());
  for (auto& w : words) code.words.push_back(canonical_word(params, std::move(w)));
  std::sort(code.words.begin(), code.words.end());
  const auto dup = std::adjacent_find(code.words.begin(), code.words.end());
  if (dup != code.words.end()) {
    throw WordError(WordErrorKind::duplicate, "duplicate codeword in code");
  }
  return code;
}

void validate_code(const Code& code) {
  validate_params(code.params);
  for (const auto& w : code.words) {
    if (canonical_word(code.params, w) != w) {
      throw WordError(WordErrorKind::bad_parameters, "codeword not in canonical form");
    }
  }
  if (!std::is_sorted(code.words.begin(), code.words.end()) ||
      std::adjacent_find(code.words.begin(), code.words.end()) != code.words.end()) {
    throw WordError(WordErrorKind::duplicate, "codewords must be sorted and unique");
  }
}

WordSpace::WordSpace(const CodeParams& params)
    : params_(params), binom_(std::max(params.n, 1), std::max(params.k, 1)) {
  validate_params(params);
  degenerate_ = params.s * params.k > params.n;
  if (degenerate_) return;
  if (params.s * params.k > 64) throw ParameterError("word spaces support s*k <= 64");
  std::uint64_t symbol_choices = 1;
  if (!params.set_world()) {
    for (int i = 0; i < params.k; ++i) {
      symbol_choices = checked_mul(symbol_choices, static_cast<std::uint64_t>(params.q - 1));
    }
  }
  ordered_size_ = 1;
  for (int i = 0; i < params.s; ++i) {
    const std::uint64_t support = binomial_u64(params.n - i * params.k, params.k);
    support_sizes_.push_back(support);
    try {
      part_sizes_.push_back(checked_mul(support, symbol_choices));
      if (!overflow_) ordered_size_ = checked_mul(ordered_size_, part_sizes_.back());
    } catch (const OverflowError&) {
      overflow_ = true;
      part_sizes_.push_back(0);
    }
  }
}

std::uint64_t WordSpace::ordered_size() const {
  if (degenerate_) return 0;
  if (overflow_) throw OverflowError("word space exceeds 64-bit indexing");
  return ordered_size_;
}

bool WordSpace::unrank(std::uint64_t index, Codeword& out) const {
  const int n = params_.n;
  const int k = params_.k;
  const int s = params_.s;
  const bool sets = params_.set_world();
  out.resize(s);
  int used[64];
  int used_count = 0;
  int positions[64];
  for (int i = 0; i < s; ++i) {
    const std::uint64_t digit = index % part_sizes_[i];
    index /= part_sizes_[i];
    std::uint64_t symbols = digit / support_sizes_[i];
    colex_unrank(digit % support_sizes_[i], k, n - i * k, binom_, std::span<int>(positions, k));
    // position p among unused elements -> actual element
    for (int j = 0; j < k; ++j) {
      int e = positions[j];
      for (int u = 0; u < used_count; ++u) {
        if (used[u] <= e) ++e;
      }
      positions[j] = e;
    }
    auto& part = out[i];
    if (sets) {
      part.assign(positions, positions + k);
    } else {
      part.assign(n, 0);
      for (int j = 0; j < k; ++j) {
        part[positions[j]] = 1 + static_cast<int>(symbols % (params_.q - 1));
        symbols /= (params_.q - 1);
      }
    }
    // keep used sorted for the mapping above
    for (int j = 0; j < k; ++j) {
      int pos = used_count++;
      while (pos > 0 && used[pos - 1] > positions[j]) {
        used[pos] = used[pos - 1];
        --pos;
      }
      used[pos] = positions[j];
    }
  }
  for (int i = 0; i + 1 < s; ++i) {
    if (!(out[i] < out[i + 1])) return false;
  }
  return true;
}

WordStream::WordStream(int n, int k, int s) : space_(CodeParams{n, k, s, 0}) {
  end_ = space_.ordered_size();
}

std::optional<STuple> WordStream::next() {
  while (cursor_ < end_) {
    if (space_.unrank(cursor_++, buffer_)) {
      return canonicalize(buffer_, space_.params().n, space_.params().k);
    }
  }
  return std::nullopt;
}

WordStream enumerate_words(int n, int k, int s) { return WordStream(n, k, s); }

std::vector<Codeword> all_words(const CodeParams& params) {
  WordSpace space(params);
  std::vector<Codeword> words;
  Codeword buffer;
  const std::uint64_t total = space.ordered_size();
  for (std::uint64_t i = 0; i < total; ++i) {
    if (space.unrank(i, buffer)) words.push_back(buffer);
  }
  std::sort(words.begin(), words.end());
  return words;
}

BigInt word_count(int n, int k, int s) {
  if (s * k > n) return 0;
  BigInt total = 1;
  for (int i = 0; i < s; ++i) total *= binomial(n - i * k, k);
  return total / factorial(s);
}

}  // namespace ekc
