#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ekcodes/combinatorics.hpp"

namespace ekc {

enum class BoundKind { upper_bound, exact, conjectured_exact, asymptotic_constant };

const char* to_string(BoundKind kind);

/// Exact value of a bound formula. All arithmetic is big-integer rational.
struct BoundReport {
  Rational exact_value;
  BigInt floor_value;
  /// (u, v) witness split realizing an upper bound; absent otherwise.
  std::optional<std::pair<int, int>> realizing_split;
  BoundKind kind = BoundKind::upper_bound;
  std::string source;
};

BigInt floor_of(const Rational& x);
/// "p/q", or "p" for integers.
std::string format_rational(const Rational& x);

/// C(v, t) / C(k, t): no t-packing of k-sets on v points is larger.
BoundReport packing_bound(int v, int k, int t);

/// Balanced witness split (k - ceil((d-1)/2), k - floor((d-1)/2)).
std::pair<int, int> balanced_split(int k, int d);

/// 1/2 * n(n-1)...(n-2k+d) / (k(k-1)...ceil((d+1)/2) * k(k-1)...floor((d+1)/2)).
/// Empty products are 1. Requires 1 <= d <= 2k <= n.
BoundReport upper_bound(int n, int k, int d);

/// C(n,u) C(n-u,v) / (2 C(k,u) C(k,v)) for u + v = 2k-d+1, 0 <= u <= v <= k.
BoundReport upper_bound_split(int n, int k, int d, int u, int v);

/// Known exact values of C(n,k,d): the trivial d = 1 and d = 2k cases, the d = 2
/// formula under the divisibility conditions, and n(n-1)/8, n(n-1)/18 for
/// (k,d) = (2,3), (3,5) in the right residue classes. Labelled exact only where
/// this library builds a matching construction.
std::optional<BoundReport> known_value(int n, int k, int d);

/// Per level i < t: is C(v-i, t-i) / C(k-i, t-i) an integer?
std::vector<bool> divisibility_levels(int v, int k, int t);
bool divisibility_check(int v, int k, int t);

/// gcd{C(k,2) : k in K} | C(v,2) and gcd{k-1 : k in K} | v-1.
bool generalized_divisibility_check(int v, const std::vector<int>& block_sizes);

class TheoremDoesNotApply : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// coefficient * n^n_exponent * (q-1)^q_exponent.
struct AsymptoticConstant {
  Rational coefficient;
  int n_exponent = 0;
  int q_exponent = 0;
  friend bool operator==(const AsymptoticConstant&, const AsymptoticConstant&) = default;
};

enum class AsymptoticVariant { pair, stuple, qary, qary_pair };

struct AsymptoticParams {
  int s = 2;
  int k = 1;
  int d = 1;
  int q = 2;
};

/// Limit of C(n,k,d) / n^(2k-d+1).
AsymptoticConstant asymptotic_pair(int k, int d);
/// Limit of C_s(n,k,d) / n^(sk-d+1).
AsymptoticConstant asymptotic_stuple(int s, int k, int d);
/// A_q(n,d,k), constant-weight q-ary words.
AsymptoticConstant asymptotic_qary(int q, int d, int k);
/// A_q^2(n,d,k), pairs of q-ary words (distance counted on both words).
AsymptoticConstant asymptotic_qary_pair(int q, int d, int k);

AsymptoticConstant asymptotic_constant(AsymptoticVariant variant, const AsymptoticParams& p);

/// Number of codewords {A, B} whose witness family holds a fixed {U, V}:
/// C(n-u-v, k-u) C(n-k-v, k-v).
BigInt witness_degree(int n, int k, int d, int u, int v);

/// Total weight |Y| * ceil((d-1)/2)! floor((d-1)/2)! / n^(d-1) of the constant
/// fractional matching on the witness hypergraph.
Rational fractional_value(int n, int k, int d);

}  // namespace ekc
