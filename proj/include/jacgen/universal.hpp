#pragma once

// Classification data for genus-1 fine compactified universal Jacobians with
// n markings: a pair (f, g) where f assigns an integer to every nonempty
// subset of {1, ..., n-1} subject to mild superadditivity
//
//     0 <= f(I u J) - f(I) - f(J) <= 1   for disjoint I, J,
//
// and g is an arbitrary integer function on the subsets of {1, ..., n} with
// at least two elements.  Universal polarisations live in coordinates
// (x_1, ..., x_{n-1}, y_T); the space decomposes into open cells cut out by
// subset-sum walls in x and half-integer walls in y.  A pair is of polarised
// origin exactly when the strict system f(I) < sum_{i in I} x_i < f(I) + 1
// admits a solution, which is decided by exact linear programming; when it
// does not, the dual weights form an independently checkable refutation.
//
// Subsets are encoded as bitmasks (bit i-1 for element i) and always
// iterated in ascending mask order.

#include <jacgen/errors.hpp>
#include <jacgen/lp.hpp>
#include <jacgen/necklace.hpp>
#include <jacgen/numeric.hpp>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace jacgen {

inline std::vector<int> mask_to_elements(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

inline uint32_t elements_to_mask(const std::vector<int>& elems) {
  uint32_t m = 0;
  for (int e : elems) m |= 1u << (e - 1);
  return m;
}

struct FFunction {
  int n = 0;
  std::vector<long long> values;  // indexed by mask over {1..n-1}; entry 0 unused

  static FFunction zero(int n) {
    if (n < 1 || n > 30)
      throw std::invalid_argument("FFunction: marking count out of range");
    FFunction f;
    f.n = n;
    f.values.assign(size_t{1} << (n - 1), 0);
    return f;
  }
  uint32_t full_mask() const { return (1u << (n - 1)) - 1; }
  long long value(uint32_t mask) const {
    if (mask == 0 || mask > full_mask())
      throw std::invalid_argument("FFunction: mask out of range");
    return values[mask];
  }
  long long& value(uint32_t mask) {
    if (mask == 0 || mask > full_mask())
      throw std::invalid_argument("FFunction: mask out of range");
    return values[mask];
  }
};

struct GFunction {
  int n = 0;
  std::map<uint32_t, long long> values;  // masks over {1..n} with >= 2 bits

  static GFunction zero(int n) {
    if (n < 1 || n > 20)
      throw std::invalid_argument("GFunction: marking count out of range");
    GFunction g;
    g.n = n;
    for (uint32_t mask = 1; mask < (1u << n); ++mask)
      if (__builtin_popcount(mask) >= 2) g.values[mask] = 0;
    return g;
  }
  long long value(uint32_t mask) const {
    auto it = values.find(mask);
    if (it == values.end())
      throw std::invalid_argument("GFunction: mask out of range");
    return it->second;
  }
};

struct SuperadditivityReport {
  bool ok = true;
  uint32_t first_I = 0, first_J = 0;  // first violating pair, mask order
};

inline SuperadditivityReport is_mildly_superadditive(const FFunction& f) {
  SuperadditivityReport rep;
  uint32_t full = f.full_mask();
  for (uint32_t I = 1; I <= full; ++I) {
    for (uint32_t J = I + 1; J <= full; ++J) {
      if (I & J) continue;
      long long gap = f.values[I | J] - f.values[I] - f.values[J];
      if (gap < 0 || gap > 1) {
        rep.ok = false;
        rep.first_I = I;
        rep.first_J = J;
        return rep;
      }
    }
  }
  return rep;
}

struct FarkasLine {
  uint32_t subset_mask;
  bool upper;   // false: weight on  sum_I x > f(I); true: on  sum_I x < f(I)+1
  Rat weight;
};

struct FarkasCertificate {
  std::vector<FarkasLine> lines;
};

// A certificate refutes the strict system when the weights are nonnegative
// and not all zero, the weighted linear parts cancel, and the weighted
// constant term is nonpositive: any solution would then satisfy 0 < 0.
inline bool verify_certificate(const FFunction& f, const FarkasCertificate& cert) {
  std::vector<Rat> lin(static_cast<size_t>(f.n - 1), Rat(0));
  Rat constant(0), total(0);
  for (const auto& line : cert.lines) {
    if (line.weight < 0) return false;
    if (line.subset_mask == 0 || line.subset_mask > f.full_mask()) return false;
    total += line.weight;
    long long fv = f.values[line.subset_mask];
    for (int i : mask_to_elements(line.subset_mask))
      lin[static_cast<size_t>(i - 1)] += line.upper ? -line.weight : line.weight;
    constant += line.weight * (line.upper ? Rat(fv + 1) : Rat(-fv));
  }
  if (!(total > 0)) return false;
  for (const auto& v : lin)
    if (v != 0) return false;
  return constant <= 0;
}

struct RealizabilityResult {
  bool feasible = false;
  Rat margin;
  std::vector<Rat> x;                        // interior witness when feasible
  std::optional<FarkasCertificate> certificate;  // refutation otherwise
};

inline RealizabilityResult realizable_phi(const FFunction& f) {
  auto rep = is_mildly_superadditive(f);
  if (!rep.ok)
    throw NotSuperadditive("function is not mildly superadditive");

  RealizabilityResult out;
  if (f.n == 1) {
    out.feasible = true;
    out.margin = Rat(1, 2);
    return out;
  }
  std::vector<MarginConstraint> cons;
  for (uint32_t mask = 1; mask <= f.full_mask(); ++mask)
    cons.push_back({mask_to_elements(mask), f.values[mask]});
  MarginSolveResult lp = solve_margin_lp(f.n - 1, cons);
  out.margin = lp.margin;
  if (lp.margin > 0) {
    out.feasible = true;
    out.x = lp.x;
  } else {
    FarkasCertificate cert;
    for (const auto& dw : lp.dual)
      cert.lines.push_back({elements_to_mask(cons[dw.constraint].support),
                            dw.upper, dw.weight});
    if (!verify_certificate(f, cert))
      throw std::logic_error("realizable_phi: produced certificate failed verification");
    out.certificate = std::move(cert);
  }
  return out;
}

// f(I) = 1 when {1,3,5} or {2,4,5} is contained in I, and 0 otherwise.
// Mildly superadditive for every n >= 6, yet not of polarised origin.
inline FFunction exotic_f(int n) {
  if (n < 6) throw NTooSmall("exotic function needs at least 6 markings");
  FFunction f = FFunction::zero(n);
  uint32_t odd = elements_to_mask({1, 3, 5});
  uint32_t even = elements_to_mask({2, 4, 5});
  for (uint32_t mask = 1; mask <= f.full_mask(); ++mask)
    if ((mask & odd) == odd || (mask & even) == even) f.values[mask] = 1;
  return f;
}

// Floor of the subset sums of a nondegenerate rational vector; always mildly
// superadditive.
inline FFunction f_from_phi(const std::vector<Rat>& x) {
  FFunction f;
  f.n = static_cast<int>(x.size()) + 1;
  f.values.assign(size_t{1} << (f.n - 1), 0);
  for (uint32_t mask = 1; mask <= f.full_mask(); ++mask) {
    Rat s(0);
    for (int i : mask_to_elements(mask)) s += x[static_cast<size_t>(i - 1)];
    if (is_integer(s))
      throw DegenerateWall("subset sum is integral on subset mask " +
                           std::to_string(mask));
    f.values[mask] = static_cast<long long>(rat_floor(s));
  }
  return f;
}

// Nearest integer to each y-coordinate; half-integers are walls.
inline GFunction g_from_phi(int n, const std::map<uint32_t, Rat>& y) {
  GFunction g;
  g.n = n;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    auto it = y.find(mask);
    if (it == y.end())
      throw std::invalid_argument("g_from_phi: missing y-coordinate");
    Rat twice = 2 * it->second;
    if (is_integer(twice) && !is_integer(it->second))
      throw DegenerateWall("y-coordinate on a half-integer wall at mask " +
                           std::to_string(mask));
    g.values[mask] = static_cast<long long>(rat_floor(it->second + Rat(1, 2)));
  }
  return g;
}

// A universal polarisation in cell coordinates: the x_i govern two-vertex
// necklace types (subset-sum walls at the integers), the y_T govern
// one-separating-node types (walls at the half-integers).
struct UniversalPolarisation {
  long long d = 0;
  std::vector<Rat> x;             // indexed by 1..n-1
  std::map<uint32_t, Rat> y;      // masks over {1..n} with >= 2 bits

  int n() const { return static_cast<int>(x.size()) + 1; }

  bool nondegenerate() const {
    for (uint32_t mask = 1; mask < (1u << x.size()); ++mask) {
      Rat s(0);
      for (int i : mask_to_elements(mask)) s += x[static_cast<size_t>(i - 1)];
      if (is_integer(s)) return false;
    }
    for (const auto& [mask, v] : y)
      if (is_integer(2 * v) && !is_integer(v)) return false;
    return true;
  }
};

// The classification pair cut out by a nondegenerate universal polarisation.
inline std::pair<FFunction, GFunction> classify(const UniversalPolarisation& phi) {
  return {f_from_phi(phi.x), g_from_phi(phi.n(), phi.y)};
}

// Restriction of f to the subsets that are consecutive for the given cyclic
// ordering of {1..n}, relabelled so the distinguished element n sits last.
// The result feeds fcj_from_f to produce the Jacobian over the corresponding
// necklace topological type.
inline ConsecutiveF restrict_f_to_order(const FFunction& f,
                                        const std::vector<int>& cyclic_order) {
  auto rep = is_mildly_superadditive(f);
  if (!rep.ok) throw NotSuperadditive("function is not mildly superadditive");
  int n = f.n;
  if (static_cast<int>(cyclic_order.size()) != n)
    throw std::invalid_argument("cyclic order has wrong length");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : cyclic_order) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
      throw std::invalid_argument("cyclic order is not a permutation");
    seen[static_cast<size_t>(v - 1)] = true;
  }
  // Rotate so that n is the last entry.
  size_t pos = 0;
  while (cyclic_order[pos] != n) ++pos;
  std::vector<int> relabel;  // relabel[k] = original marking at position k+1
  for (int k = 1; k < n; ++k)
    relabel.push_back(cyclic_order[(pos + static_cast<size_t>(k)) % n]);

  ConsecutiveF out;
  out.n = n;
  for (int r = 1; r <= n - 1; ++r)
    for (int s = r; s <= n - 1; ++s) {
      uint32_t mask = 0;
      for (int k = r; k <= s; ++k)
        mask |= 1u << (relabel[static_cast<size_t>(k - 1)] - 1);
      out.values[{r, s}] = f.values[mask];
    }
  return out;
}

namespace detail {

// Decompositions of each subset into two disjoint nonempty parts, used for
// constraint propagation: any consistent f satisfies
//   max over splits (f(I) + f(J))  <=  f(S)  <=  min over splits + 1.
inline std::vector<std::vector<std::pair<uint32_t, uint32_t>>> subset_splits(
    uint32_t full) {
  std::vector<std::vector<std::pair<uint32_t, uint32_t>>> splits(full + 1);
  for (uint32_t S = 1; S <= full; ++S) {
    if (__builtin_popcount(S) < 2) continue;
    // Proper nonempty submasks of S, counted once per unordered split.
    for (uint32_t I = (S - 1) & S; I; I = (I - 1) & S) {
      uint32_t J = S ^ I;
      if (I < J) continue;
      splits[S].push_back({J, I});
    }
  }
  return splits;
}

}  // namespace detail

// Number of mildly superadditive functions with every singleton value zero:
// the translation classes of universal Jacobians for fixed n.  Exhaustive
// search with interval propagation over subsets in (popcount, mask) order.
inline long long count_translation_classes(int n, int bound = 6) {
  if (n < 2) throw std::invalid_argument("count needs n >= 2");
  if (n > bound) throw BoundExceeded("translation-class count above configured bound");
  uint32_t full = (1u << (n - 1)) - 1;

  std::vector<uint32_t> order;  // composite subsets, by size then mask
  for (int size = 2; size <= n - 1; ++size)
    for (uint32_t S = 1; S <= full; ++S)
      if (__builtin_popcount(S) == size) order.push_back(S);
  auto splits = detail::subset_splits(full);

  std::vector<long long> f(full + 1, 0);
  long long count = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      ++count;
      return;
    }
    uint32_t S = order[idx];
    long long lo = LLONG_MIN, hi = LLONG_MAX;
    for (const auto& [I, J] : splits[S]) {
      long long s = f[I] + f[J];
      lo = std::max(lo, s);
      hi = std::min(hi, s + 1);
    }
    for (long long v = lo; v <= hi; ++v) {
      f[S] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// All mildly superadditive interval functions with the given singleton
// values; there are exactly (n-1)! of them for every choice.
inline std::vector<ConsecutiveF> enumerate_consecutive_superadditive(
    int n, const std::vector<long long>& singletons) {
  if (n < 2 || static_cast<int>(singletons.size()) != n - 1)
    throw std::invalid_argument("enumerate_consecutive_superadditive: bad input");
  ConsecutiveF f;
  f.n = n;
  for (int i = 1; i <= n - 1; ++i)
    f.values[{i, i}] = singletons[static_cast<size_t>(i - 1)];

  std::vector<std::pair<int, int>> order;  // intervals by length then start
  for (int len = 2; len <= n - 1; ++len)
    for (int r = 1; r + len - 1 <= n - 1; ++r) order.push_back({r, r + len - 1});

  std::vector<ConsecutiveF> out;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      out.push_back(f);
      return;
    }
    auto [r, s] = order[idx];
    long long lo = LLONG_MIN, hi = LLONG_MAX;
    for (int t = r; t < s; ++t) {
      long long sum = f.values[{r, t}] + f.values[{t + 1, s}];
      lo = std::max(lo, sum);
      hi = std::min(hi, sum + 1);
    }
    for (long long v = lo; v <= hi; ++v) {
      f.values[{r, s}] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline long long count_consecutive_superadditive(
    int n, const std::vector<long long>& singletons) {
  return static_cast<long long>(
      enumerate_consecutive_superadditive(n, singletons).size());
}

// Enumerates all mildly superadditive f with zero singleton values (used by
// the exhaustive realizability scan for small n).
inline std::vector<FFunction> enumerate_translation_classes(int n, int bound = 6) {
  if (n < 2) throw std::invalid_argument("enumerate needs n >= 2");
  if (n > bound) throw BoundExceeded("translation-class enumeration above bound");
  uint32_t full = (1u << (n - 1)) - 1;
  std::vector<uint32_t> order;
  for (int size = 2; size <= n - 1; ++size)
    for (uint32_t S = 1; S <= full; ++S)
      if (__builtin_popcount(S) == size) order.push_back(S);
  auto splits = detail::subset_splits(full);

  FFunction f = FFunction::zero(n);
  std::vector<FFunction> out;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == order.size()) {
      out.push_back(f);
      return;
    }
    uint32_t S = order[idx];
    long long lo = LLONG_MIN, hi = LLONG_MAX;
    for (const auto& [I, J] : splits[S]) {
      long long s = f.values[I] + f.values[J];
      lo = std::max(lo, s);
      hi = std::min(hi, s + 1);
    }
    for (long long v = lo; v <= hi; ++v) {
      f.values[S] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// The canonical name of a fine compactified universal Jacobian.
struct PairRecord {
  int n = 0;
  long long d = 0;
  FFunction f;
  GFunction g;
  bool valid = false;  // f mildly superadditive; g is unconstrained
};

inline PairRecord pair_check(const FFunction& f, const GFunction& g, long long d) {
  PairRecord rec;
  rec.n = f.n;
  rec.d = d;
  rec.f = f;
  rec.g = g;
  rec.valid = is_mildly_superadditive(f).ok && g.n == f.n;
  return rec;
}

}  // namespace jacgen
