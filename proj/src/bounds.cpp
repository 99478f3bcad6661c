#include "ekcodes/bounds.hpp"

#include <numeric>

namespace ekc {

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::upper_bound:
      return "upper-bound";
    case BoundKind::exact:
      return "exact";
    case BoundKind::conjectured_exact:
      return "conjectured-exact";
    case BoundKind::asymptotic_constant:
      return "asymptotic-constant";
  }
  return "unknown";
}

BigInt floor_of(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

std::string format_rational(const Rational& x) {
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

namespace {

BoundReport report(Rational value, BoundKind kind, std::string source,
                   std::optional<std::pair<int, int>> split = std::nullopt) {
  BoundReport r;
  r.floor_value = floor_of(value);
  r.exact_value = std::move(value);
  r.kind = kind;
  r.source = std::move(source);
  r.realizing_split = split;
  return r;
}

// n(n-1)...(low), empty when low > n
BigInt falling_to(std::int64_t n, std::int64_t low) {
  BigInt result = 1;
  for (std::int64_t x = n; x >= low; --x) result *= x;
  return result;
}

void require_code_params(int n, int k, int d) {
  if (k < 1) throw ParameterError("k must be >= 1");
  if (d < 1 || d > 2 * k) throw ParameterError("distance d must lie in [1, 2k]");
  if (2 * k > n) throw ParameterError("need 2k <= n");
}

bool divides(const BigInt& a, const BigInt& b) { return a == 0 ? b == 0 : b % a == 0; }

}  // namespace

BoundReport packing_bound(int v, int k, int t) {
  if (!(v >= k && k >= t && t >= 1)) throw ParameterError("need v >= k >= t >= 1");
  return report(Rational(binomial(v, t), binomial(k, t)), BoundKind::upper_bound,
                "packing bound C(v,t)/C(k,t)");
}

std::pair<int, int> balanced_split(int k, int d) {
  return {k - static_cast<int>(ceil_div(d - 1, 2)), k - static_cast<int>(floor_div(d - 1, 2))};
}

BoundReport upper_bound(int n, int k, int d) {
  require_code_params(n, k, d);
  const BigInt numerator = falling_to(n, n - 2 * k + d);
  const BigInt denominator =
      falling_to(k, ceil_div(d + 1, 2)) * falling_to(k, floor_div(d + 1, 2));
  return report(Rational(numerator, 2 * denominator), BoundKind::upper_bound,
                "product formula over the balanced witness split", balanced_split(k, d));
}

BoundReport upper_bound_split(int n, int k, int d, int u, int v) {
  require_code_params(n, k, d);
  if (u + v != 2 * k - d + 1 || u < 0 || u > v || v > k) {
    throw ParameterError("split must satisfy u + v = 2k-d+1 and 0 <= u <= v <= k");
  }
  const BigInt witnesses = binomial(n, u) * binomial(n - u, v);
  const BigInt per_word = 2 * binomial(k, u) * binomial(k, v);
  return report(Rational(witnesses, per_word), BoundKind::upper_bound,
                "witness-disjointness bound for split (u,v)", std::make_pair(u, v));
}

std::optional<BoundReport> known_value(int n, int k, int d) {
  require_code_params(n, k, d);
  if (d == 2 * k) {
    return report(Rational(n / (2 * k)), BoundKind::exact, "disjoint supports: floor(n/2k)");
  }
  if (d == 1) {
    return report(Rational(binomial(n, k) * binomial(n - k, k) / 2), BoundKind::exact,
                  "every pair: C(n,k)C(n-k,k)/2");
  }
  if (d == 2) {
    if (!divisibility_check(n, 2 * k, 2 * k - 1)) return std::nullopt;
    const Rational value = Rational(binomial(n, 2 * k - 1) * binomial(2 * k, k), 4 * k);
    // S(2^r, 4, 3) from zero-sum quadruples certifies k = 2 at powers of two
    const bool built = k == 2 && n >= 4 && (n & (n - 1)) == 0;
    return report(value, built ? BoundKind::exact : BoundKind::conjectured_exact,
                  "C(n,2k-1) C(2k,k) / 4k under the divisibility conditions");
  }
  if (k == 2 && d == 3 && n % 8 == 1) {
    const bool built = n == 9 || n == 17 || n == 73;
    return report(Rational(static_cast<std::int64_t>(n) * (n - 1), 8),
                  built ? BoundKind::exact : BoundKind::conjectured_exact,
                  "n(n-1)/8 for n = 1 mod 8");
  }
  if (k == 3 && d == 5 && (n % 342 == 1 || n % 342 == 19)) {
    const bool built = n == 19 || n == 361;
    return report(Rational(static_cast<std::int64_t>(n) * (n - 1), 18),
                  built ? BoundKind::exact : BoundKind::conjectured_exact,
                  "n(n-1)/18 for n = 1, 19 mod 342");
  }
  return std::nullopt;
}

std::vector<bool> divisibility_levels(int v, int k, int t) {
  if (!(v >= k && k >= t && t >= 1)) throw ParameterError("need v >= k >= t >= 1");
  std::vector<bool> levels;
  for (int i = 0; i < t; ++i) {
    levels.push_back(divides(binomial(k - i, t - i), binomial(v - i, t - i)));
  }
  return levels;
}

bool divisibility_check(int v, int k, int t) {
  const auto levels = divisibility_levels(v, k, t);
  return std::all_of(levels.begin(), levels.end(), [](bool ok) { return ok; });
}

bool generalized_divisibility_check(int v, const std::vector<int>& block_sizes) {
  if (block_sizes.empty()) throw ParameterError("block size set K must be nonempty");
  BigInt pair_gcd = 0;
  std::int64_t degree_gcd = 0;
  for (const int k : block_sizes) {
    if (k < 1) throw ParameterError("block sizes must be positive");
    pair_gcd = boost::multiprecision::gcd(pair_gcd, binomial(k, 2));
    degree_gcd = std::gcd(degree_gcd, static_cast<std::int64_t>(k - 1));
  }
  return divides(pair_gcd, binomial(v, 2)) && divides(BigInt(degree_gcd), BigInt(v - 1));
}

AsymptoticConstant asymptotic_pair(int k, int d) {
  if (k < 1 || d < 1 || d > 2 * k) throw TheoremDoesNotApply("pair constant needs 1 <= d <= 2k");
  const BigInt num = factorial(ceil_div(d - 1, 2)) * factorial(floor_div(d - 1, 2));
  const BigInt kf = factorial(k);
  return {Rational(num, 2 * kf * kf), 2 * k - d + 1, 0};
}

AsymptoticConstant asymptotic_stuple(int s, int k, int d) {
  if (s < 1 || k < 1 || d < 1 || d > s * k) {
    throw TheoremDoesNotApply("s-tuple constant needs s, k >= 1 and 1 <= d <= sk");
  }
  BigInt num = 1;
  for (int j = 1; j <= s; ++j) num *= factorial(ceil_div(d - j, s));
  BigInt den = factorial(s);
  for (int i = 0; i < s; ++i) den *= factorial(k);
  return {Rational(num, den), s * k - d + 1, 0};
}

AsymptoticConstant asymptotic_qary(int q, int d, int k) {
  if (q < 2 || k < 1 || d < 1 || d > 2 * k) {
    throw TheoremDoesNotApply("q-ary constant needs q >= 2 and 1 <= d <= 2k");
  }
  if (d % 2 == 1) {
    const int e = k - (d - 1) / 2;
    return {Rational(factorial((d - 1) / 2), factorial(k)), e, e};
  }
  const int e = k - d / 2 + 1;
  return {Rational(factorial(d / 2 - 1), factorial(k)), e, e};
}

AsymptoticConstant asymptotic_qary_pair(int q, int d, int k) {
  if (k < 1 || d < 1 || d > 4 * k) {
    throw TheoremDoesNotApply("q-ary pair constant needs 1 <= d <= 4k");
  }
  const BigInt kf = factorial(k);
  if (d % 2 == 1) {
    if (q < 3) throw TheoremDoesNotApply("q-ary pair constant with odd d needs q >= 3");
    const BigInt num = factorial(floor_div(d - 1, 4)) * factorial(ceil_div(d - 1, 4));
    const int e = 2 * k - (d - 1) / 2;
    return {Rational(num, 2 * kf * kf), e, e};
  }
  if (q < 2) throw TheoremDoesNotApply("q-ary pair constant needs q >= 2");
  const BigInt num = factorial(floor_div(d, 4)) * factorial(ceil_div(d, 4) - 1);
  return {Rational(num, 2 * kf * kf), 2 * k - d / 2 + 1, 2 * k - d / 2};
}

AsymptoticConstant asymptotic_constant(AsymptoticVariant variant, const AsymptoticParams& p) {
  switch (variant) {
    case AsymptoticVariant::pair:
      return asymptotic_pair(p.k, p.d);
    case AsymptoticVariant::stuple:
      return asymptotic_stuple(p.s, p.k, p.d);
    case AsymptoticVariant::qary:
      return asymptotic_qary(p.q, p.d, p.k);
    case AsymptoticVariant::qary_pair:
      return asymptotic_qary_pair(p.q, p.d, p.k);
  }
  throw ParameterError("unknown asymptotic variant");
}

BigInt witness_degree(int n, int k, int d, int u, int v) {
  require_code_params(n, k, d);
  if (u + v != 2 * k - d + 1 || u < 0 || v < 0 || u > k || v > k) {
    throw ParameterError("split must satisfy u + v = 2k-d+1 with 0 <= u, v <= k");
  }
  return binomial(n - u - v, k - u) * binomial(n - k - v, k - v);
}

Rational fractional_value(int n, int k, int d) {
  require_code_params(n, k, d);
  const BigInt words = binomial(n, k) * binomial(n - k, k) / 2;
  const BigInt weight = factorial(ceil_div(d - 1, 2)) * factorial(floor_div(d - 1, 2));
  BigInt scale = 1;
  for (int i = 0; i < d - 1; ++i) scale *= n;
  return Rational(words * weight, scale);
}

}  // namespace ekc
