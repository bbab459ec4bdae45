#pragma once

#include <jacgen/numeric.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace jacgen {

// Weakly decreasing list of positive integers; the empty partition has size 0.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

inline bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

// Degree ascending, then lexicographically descending within a degree.
// This is the canonical iteration and reporting order throughout.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    int sa = partition_size(a), sb = partition_size(b);
    if (sa != sb) return sa < sb;
    return a > b;
  }
};

// All partitions of n, lexicographically descending.
inline const std::vector<Partition>& partitions_of(int n) {
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return cache.emplace(n, std::move(out)).first->second;
}

// Order of the centraliser of a permutation of cycle type mu.
inline Int z_of(const Partition& mu) {
  Int z = 1;
  int prev = -1, mult = 0;
  for (int part : mu) {
    z *= part;
    if (part == prev) {
      ++mult;
    } else {
      prev = part;
      mult = 1;
    }
    z *= mult;
  }
  return z;
}

namespace detail {

// Border-strip removal in beta-number form.  The beta set of lambda padded to
// l rows is {lambda_j + (l-1-j)}, a set of distinct nonnegative integers.
// Removing a border strip of size r replaces some b by b-r (if unoccupied),
// with sign (-1)^{#entries strictly between b-r and b}.  The set size stays
// fixed; the empty partition is the staircase {l-1, ..., 1, 0}.
inline Int mn_beta(const std::vector<int>& beta, const Partition& mu,
                   std::map<std::pair<std::vector<int>, Partition>, Int>& memo) {
  if (mu.empty()) {
    int l = static_cast<int>(beta.size());
    int s = 0;
    for (int b : beta) s += b;
    return s == l * (l - 1) / 2 ? 1 : 0;
  }
  auto key = std::make_pair(beta, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int r = mu.front();
  Partition rest(mu.begin() + 1, mu.end());
  Int total = 0;
  for (size_t j = 0; j < beta.size(); ++j) {
    int target = beta[j] - r;
    if (target < 0) continue;
    bool occupied = false;
    int crossings = 0;
    for (size_t k = 0; k < beta.size(); ++k) {
      if (k == j) continue;
      if (beta[k] == target) occupied = true;
      if (beta[k] < beta[j] && beta[k] > target) ++crossings;
    }
    if (occupied) continue;
    std::vector<int> nb = beta;
    nb[j] = target;
    std::sort(nb.rbegin(), nb.rend());
    Int sub = mn_beta(nb, rest, memo);
    total += (crossings % 2 == 0) ? sub : -sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// Irreducible character chi^lambda evaluated on the class of cycle type mu.
// Memoised; the cache behaves as a thread-safe idempotent map.
inline Int mn_character(const Partition& lambda, const Partition& mu) {
  if (!is_valid_partition(lambda) || !is_valid_partition(mu))
    throw std::invalid_argument("character: arguments must be partitions");
  if (partition_size(lambda) != partition_size(mu))
    throw std::invalid_argument("character: |lambda| != |mu|");
  if (lambda.empty()) return 1;
  int l = static_cast<int>(lambda.size());
  std::vector<int> beta(lambda.begin(), lambda.end());
  for (int j = 0; j < l; ++j) beta[static_cast<size_t>(j)] += l - 1 - j;

  static std::map<std::pair<std::vector<int>, Partition>, Int> memo;
  static std::mutex lock_mu;
  std::lock_guard<std::mutex> lock(lock_mu);
  return detail::mn_beta(beta, mu, memo);
}

}  // namespace jacgen
