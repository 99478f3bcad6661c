#include "ekcodes/metric.hpp"

#include <algorithm>
#include <limits>

namespace ekc {

int set_difference_size(std::span<const int> a, std::span<const int> b) {
  int common = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<int>(a.size()) - common;
}

int hamming_distance(std::span<const int> a, std::span<const int> b) {
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += a[i] != b[i];
  return count;
}

int min_assignment(std::span<const int> cost, int s) {
  if (s == 0) return 0;
  if (s == 1) return cost[0];
  if (s == 2) return std::min(cost[0] + cost[3], cost[1] + cost[2]);
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> row_pot(s + 1, 0), col_pot(s + 1, 0), match(s + 1, 0), way(s + 1, 0);
  std::vector<int> min_slack(s + 1);
  std::vector<char> used(s + 1);
  for (int i = 1; i <= s; ++i) {
    match[0] = i;
    int j0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = match[j0];
      int delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= s; ++j) {
        if (used[j]) continue;
        const int cur = cost[(i0 - 1) * s + (j - 1)] - row_pot[i0] - col_pot[j];
        if (cur < min_slack[j]) {
          min_slack[j] = cur;
          way[j] = j0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= s; ++j) {
        if (used[j]) {
          row_pot[match[j]] += delta;
          col_pot[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  int total = 0;
  for (int j = 1; j <= s; ++j) total += cost[(match[j] - 1) * s + (j - 1)];
  return total;
}

namespace {

void require_same(bool same, const char* what) {
  if (!same) throw ParameterError(std::string("distance arguments differ in ") + what);
}

}  // namespace

int pair_distance(const DisjointPair& p, const DisjointPair& q) {
  require_same(p.n() == q.n() && p.k() == q.k(), "(n, k)");
  const int straight = set_difference_size(p.a().elements(), q.a().elements()) +
                       set_difference_size(p.b().elements(), q.b().elements());
  const int crossed = set_difference_size(p.a().elements(), q.b().elements()) +
                      set_difference_size(p.b().elements(), q.a().elements());
  return std::min(straight, crossed);
}

int tuple_distance(const STuple& x, const STuple& y) {
  require_same(x.n() == y.n() && x.k() == y.k() && x.s() == y.s(), "(n, k, s)");
  const int s = x.s();
  std::vector<int> cost(static_cast<std::size_t>(s) * s);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      cost[i * s + j] = set_difference_size(x.part(i).elements(), y.part(j).elements());
    }
  }
  return min_assignment(cost, s);
}

int qary_distance(const QaryWord& u, const QaryWord& v) {
  require_same(u.n() == v.n() && u.q() == v.q(), "(n, q)");
  return hamming_distance(u.symbols(), v.symbols());
}

int qary_pair_distance(const QaryPairWord& x, const QaryPairWord& y) {
  require_same(x.u().n() == y.u().n() && x.u().q() == y.u().q() &&
                   x.u().weight() == y.u().weight(),
               "(n, q, k)");
  return std::min(qary_distance(x.u(), y.u()) + qary_distance(x.v(), y.v()),
                  qary_distance(x.u(), y.v()) + qary_distance(x.v(), y.u()));
}

int word_distance(const CodeParams& params, const Codeword& x, const Codeword& y) {
  const int s = params.s;
  auto part = [&](int i, int j) {
    return params.set_world() ? set_difference_size(x[i], y[j]) : hamming_distance(x[i], y[j]);
  };
  if (s == 1) return part(0, 0);
  if (s == 2) return std::min(part(0, 0) + part(1, 1), part(0, 1) + part(1, 0));
  int stack_cost[64];
  std::vector<int> heap_cost;
  std::span<int> cost;
  if (s * s <= 64) {
    cost = std::span<int>(stack_cost, s * s);
  } else {
    heap_cost.resize(static_cast<std::size_t>(s) * s);
    cost = heap_cost;
  }
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) cost[i * s + j] = part(i, j);
  }
  return min_assignment(cost, s);
}

WitnessPair::WitnessPair(std::vector<int> u, std::vector<int> v) {
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  if (v < u) std::swap(u, v);
  first = std::move(u);
  second = std::move(v);
}

int witness_size(int k, int d) {
  if (d < 1 || d > 2 * k) throw ParameterError("distance d must lie in [1, 2k]");
  return 2 * k - d + 1;
}

std::vector<WitnessPair> witness_split(const DisjointPair& p, int u, int v) {
  const int k = p.k();
  if (u < 0 || v < 0 || u > k || v > k) throw ParameterError("split sizes must lie in [0, k]");
  std::vector<WitnessPair> out;
  auto add_oriented = [&](const KSubset& from_u, const KSubset& from_v) {
    for_each_subset_of(from_u.elements(), u, [&](std::span<const int> us) {
      const std::vector<int> uvec(us.begin(), us.end());
      for_each_subset_of(from_v.elements(), v, [&](std::span<const int> vs) {
        out.emplace_back(uvec, std::vector<int>(vs.begin(), vs.end()));
        return true;
      });
      return true;
    });
  };
  add_oriented(p.a(), p.b());
  add_oriented(p.b(), p.a());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<WitnessPair> witness_set(const DisjointPair& p, int d) {
  const int k = p.k();
  const int t = witness_size(k, d);
  std::vector<WitnessPair> out;
  for (int u = std::max(0, t - k); u <= std::min(k, t); ++u) {
    for (auto& w : witness_split(p, u, t - u)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t witness_split_count(int k, int u, int v) {
  return 2 * binomial_u64(k, u) * binomial_u64(k, v);
}

bool witness_sets_intersect(const DisjointPair& p, const DisjointPair& q, int d) {
  const auto wp = witness_set(p, d);
  const auto wq = witness_set(q, d);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < wp.size() && j < wq.size()) {
    if (wp[i] < wq[j]) {
      ++i;
    } else if (wq[j] < wp[i]) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

WitnessKeyer::WitnessKeyer(int n, int t) : n_(n), t_(t), binom_(std::max(n, 1), std::max(t, 1)) {
  if (t < 1 || t > 62 || t > n) throw ParameterError("witness size must lie in [1, min(n, 62)]");
  const std::uint64_t ranks = binomial_u64(n, t);
  key_space_ = checked_mul(ranks, std::uint64_t{1} << t);
}

std::uint64_t WitnessKeyer::encode(std::span<const int> merged, const int* side) const {
  // the side holding merged[0] is the reference; record membership of the other
  std::uint64_t mask = 0;
  for (int i = 0; i < t_; ++i) {
    if (side[i] != side[0]) mask |= std::uint64_t{1} << i;
  }
  return colex_rank(merged, binom_) * (std::uint64_t{1} << t_) + mask;
}

std::uint64_t WitnessKeyer::key(const WitnessPair& w) const {
  if (static_cast<int>(w.first.size() + w.second.size()) != t_) {
    throw ParameterError("witness has the wrong total size");
  }
  int merged[64];
  int side[64];
  std::size_t i = 0;
  std::size_t j = 0;
  int len = 0;
  while (i < w.first.size() || j < w.second.size()) {
    if (j >= w.second.size() || (i < w.first.size() && w.first[i] < w.second[j])) {
      merged[len] = w.first[i++];
      side[len++] = 1;
    } else {
      merged[len] = w.second[j++];
      side[len++] = 0;
    }
  }
  return encode(std::span<const int>(merged, len), side);
}

}  // namespace ekc
