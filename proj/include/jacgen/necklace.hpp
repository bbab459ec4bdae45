#pragma once

// Combinatorics of fine compactified Jacobians of necklace curves: a cycle of
// n rational components C_1, ..., C_n with C_i meeting C_{i+1} at the node
// P_i (indices cyclic).  A degree-d fine compactified Jacobian is determined
// by a base multidegree D and a node sequence (j_1, ..., j_m) hitting every
// index the same number rho of times; its components carry the multidegrees
// D + d_k for the prefix sums d_k = sum_{l<=k} (e_{j_l} - e_{j_l+1}) and its
// singular points are the sheaves N_{j_k} with multidegree D + d_k - e_{j_k}.
// It is smoothable exactly when m = n, in which case the sequence is an
// n-cycle and the space is cut out by the polarisation obtained by averaging
// the component multidegrees.

#include <jacgen/errors.hpp>
#include <jacgen/lp.hpp>
#include <jacgen/numeric.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jacgen {

using MultiDeg = std::vector<long long>;

inline long long total_degree(const MultiDeg& d) {
  long long s = 0;
  for (long long x : d) s += x;
  return s;
}

struct SeqValidation {
  bool valid = false;
  int rho = 0;
  std::string reason;
};

// A sequence is admissible when every index 1..n occurs the same number rho
// of times and no cyclic window of length rho'*n (1 <= rho' < rho) is itself
// balanced.  The window criterion is equivalent to the derived component
// multidegrees being pairwise distinct; both are checked and must agree.
inline SeqValidation validate_seq(int n, const std::vector<int>& seq) {
  SeqValidation out;
  if (n < 1) {
    out.reason = "component count must be positive";
    return out;
  }
  int m = static_cast<int>(seq.size());
  if (m == 0 || m % n != 0) {
    out.reason = "length must be a positive multiple of the component count";
    return out;
  }
  std::vector<int> count(static_cast<size_t>(n), 0);
  for (int j : seq) {
    if (j < 1 || j > n) {
      out.reason = "entry out of range 1.." + std::to_string(n);
      return out;
    }
    ++count[static_cast<size_t>(j - 1)];
  }
  int rho = m / n;
  for (int c : count)
    if (c != rho) {
      out.reason = "indices do not occur with uniform multiplicity";
      return out;
    }

  bool window_ok = true;
  for (int rp = 1; rp < rho && window_ok; ++rp) {
    int len = rp * n;
    for (int start = 0; start < m && window_ok; ++start) {
      std::vector<int> wc(static_cast<size_t>(n), 0);
      for (int k = 0; k < len; ++k)
        ++wc[static_cast<size_t>(seq[static_cast<size_t>((start + k) % m)] - 1)];
      bool balanced = true;
      for (int c : wc)
        if (c != rp) {
          balanced = false;
          break;
        }
      if (balanced) window_ok = false;
    }
  }

  // Independent criterion: distinctness of the prefix-sum multidegrees.
  std::set<MultiDeg> seen;
  MultiDeg acc(static_cast<size_t>(n), 0);
  bool distinct_ok = true;
  seen.insert(acc);
  for (int k = 0; k + 1 < m; ++k) {
    int j = seq[static_cast<size_t>(k)];
    ++acc[static_cast<size_t>(j - 1)];
    --acc[static_cast<size_t>(j % n)];
    if (!seen.insert(acc).second) distinct_ok = false;
  }
  if (window_ok != distinct_ok)
    throw std::logic_error("validate_seq: window and distinctness criteria disagree");

  out.valid = window_ok;
  out.rho = rho;
  if (!out.valid) out.reason = "a proper cyclic window is balanced";
  return out;
}

struct NecklaceFcj {
  int n = 0;
  long long d = 0;
  int rho = 1;
  std::vector<int> seq;     // node sequence (j_1, ..., j_m)
  MultiDeg base;            // multidegree of the component preceding node j_1
  std::vector<MultiDeg> components;               // D + d_k, k = 1..m
  std::vector<std::pair<int, MultiDeg>> nodes;    // (j_k, D + d_k - e_{j_k})
  bool smoothable = false;
};

inline NecklaceFcj build_fcj(int n, long long d, const MultiDeg& base,
                             const std::vector<int>& seq) {
  SeqValidation v = validate_seq(n, seq);
  if (!v.valid) throw InvalidSequence("inadmissible node sequence: " + v.reason);
  if (static_cast<int>(base.size()) != n)
    throw std::invalid_argument("base multidegree has wrong length");
  if (total_degree(base) != d)
    throw std::invalid_argument("base multidegree total does not equal the degree");

  NecklaceFcj fcj;
  fcj.n = n;
  fcj.d = d;
  fcj.rho = v.rho;
  fcj.seq = seq;
  fcj.base = base;
  MultiDeg acc = base;
  for (int j : seq) {
    MultiDeg node = acc;
    --node[static_cast<size_t>(j % n)];  // D + d_{k-1} - e_{j_k + 1} = D + d_k - e_{j_k}
    fcj.nodes.emplace_back(j, node);
    ++acc[static_cast<size_t>(j - 1)];
    --acc[static_cast<size_t>(j % n)];
    fcj.components.push_back(acc);
  }
  fcj.smoothable = (static_cast<int>(seq.size()) == n);
  return fcj;
}

// sigma in one-line notation: sigma[i-1] is the image of i.
inline bool is_n_cycle(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  std::vector<bool> hit(static_cast<size_t>(n), false);
  int cur = 1;
  for (int steps = 0; steps < n; ++steps) {
    if (cur < 1 || cur > n || hit[static_cast<size_t>(cur - 1)]) return false;
    hit[static_cast<size_t>(cur - 1)] = true;
    cur = sigma[static_cast<size_t>(cur - 1)];
  }
  return cur == 1;
}

inline NecklaceFcj from_cycle(const std::vector<int>& sigma, const MultiDeg& base,
                              long long d) {
  int n = static_cast<int>(sigma.size());
  if (!is_n_cycle(sigma))
    throw NotAnNCycle("permutation is not a single n-cycle");
  std::vector<int> seq;
  seq.reserve(static_cast<size_t>(n));
  int cur = 1;
  for (int k = 0; k < n; ++k) {
    seq.push_back(cur);
    cur = sigma[static_cast<size_t>(cur - 1)];
  }
  return build_fcj(n, d, base, seq);
}

inline std::vector<int> to_cycle(const NecklaceFcj& fcj) {
  if (!fcj.smoothable) throw NotSmoothable("node sequence is not an n-cycle");
  int n = fcj.n;
  std::vector<int> sigma(static_cast<size_t>(n), 0);
  for (int k = 0; k < n; ++k)
    sigma[static_cast<size_t>(fcj.seq[static_cast<size_t>(k)] - 1)] =
        fcj.seq[static_cast<size_t>((k + 1) % n)];
  return sigma;
}

struct Polarisation {
  std::vector<Rat> phi;

  int n() const { return static_cast<int>(phi.size()); }
  Rat total() const {
    Rat s(0);
    for (const auto& v : phi) s += v;
    return s;
  }
  Rat arc_sum(int start, int len) const {  // start 0-based, cyclic
    Rat s(0);
    for (int k = 0; k < len; ++k)
      s += phi[static_cast<size_t>((start + k) % n())];
    return s;
  }
  // Nondegenerate iff no proper cyclic arc has an integral coordinate sum.
  bool nondegenerate() const {
    for (int len = 1; len < n(); ++len)
      for (int start = 0; start < n(); ++start)
        if (is_integer(arc_sum(start, len))) return false;
    return true;
  }
};

// phi is the average of the component multidegrees; n * phi is integral.
inline Polarisation polarisation_of(const NecklaceFcj& fcj) {
  if (!fcj.smoothable)
    throw NotSmoothable("polarisation exists only for smoothable Jacobians");
  Polarisation p;
  p.phi.assign(static_cast<size_t>(fcj.n), Rat(0));
  for (const auto& comp : fcj.components)
    for (int i = 0; i < fcj.n; ++i)
      p.phi[static_cast<size_t>(i)] += Rat(comp[static_cast<size_t>(i)], fcj.n);
  return p;
}

// Stability of a sheaf of the given multidegree against phi.  With no
// singular node the sheaf is a line bundle and the total must equal d; with
// one it is the multidegree on the partial normalisation at node P_j and the
// total must be d - 1.  Each proper cyclic arc A imposes
//   | deg_A + [node interior to A] - phi(A) + delta/2 |  <  (2 - delta)/2
// where delta counts boundary nodes of A at which the sheaf is singular.
// Any exact equality means phi lies on a wall.
inline bool is_stable(const Polarisation& phi, const MultiDeg& deg,
                      std::optional<int> singular_node = std::nullopt) {
  int n = phi.n();
  if (static_cast<int>(deg.size()) != n)
    throw std::invalid_argument("is_stable: multidegree length mismatch");
  Rat d = phi.total();
  if (!is_integer(d))
    throw std::invalid_argument("is_stable: polarisation total is not an integer");
  long long expected = static_cast<long long>(rat_num(d)) - (singular_node ? 1 : 0);
  if (total_degree(deg) != expected)
    throw std::invalid_argument("is_stable: wrong total degree for this sheaf");
  if (singular_node && (*singular_node < 1 || *singular_node > n))
    throw std::invalid_argument("is_stable: node index out of range");
  if (!phi.nondegenerate())
    throw DegeneratePolarisation("polarisation lies on a wall");
  if (n == 1) return true;

  for (int start = 0; start < n; ++start) {
    for (int len = 1; len < n; ++len) {
      // Arc of components C_{start+1}, ..., C_{start+len} (1-based), with
      // boundary nodes P_start and P_{start+len} and interior nodes between.
      Rat lhs(0);
      for (int k = 0; k < len; ++k) {
        int i = (start + k) % n;
        lhs += Rat(deg[static_cast<size_t>(i)]) - phi.phi[static_cast<size_t>(i)];
      }
      int delta = 0;
      if (singular_node) {
        int j = *singular_node;  // node P_j, between C_j and C_{j+1}
        int left = start == 0 ? n : start;           // P_{start}
        int right = (start + len) % n == 0 ? n : (start + len) % n;
        if (j == left || j == right) {
          delta = 1;
        } else {
          // interior iff both C_j and C_{j+1} lie on the arc
          auto on_arc = [&](int comp1based) {
            int off = (comp1based - 1 - start % n + 2 * n) % n;
            return off < len;
          };
          if (on_arc(j) && on_arc(j % n + 1)) lhs += 1;
        }
      }
      Rat shifted = lhs + Rat(delta, 2);
      Rat rhs = Rat(2 - delta, 2);
      Rat mag = shifted < 0 ? Rat(-shifted) : shifted;
      if (mag == rhs)
        throw DegeneratePolarisation("stability constraint met with equality");
      if (mag > rhs) return false;
    }
  }
  return true;
}

// All integral multidegrees of line bundles stable for phi.  Any stable
// vector satisfies the singleton-arc bound |d_i - phi_i| < 1, so the search
// over the box |d_i - phi_i| < n reduces to floor/ceiling choices.
inline std::vector<MultiDeg> stable_multidegrees(const Polarisation& phi) {
  if (!phi.nondegenerate())
    throw DegeneratePolarisation("polarisation lies on a wall");
  Rat dt = phi.total();
  if (!is_integer(dt))
    throw std::invalid_argument("stable_multidegrees: total is not an integer");
  long long d = static_cast<long long>(rat_num(dt));
  int n = phi.n();

  std::vector<MultiDeg> out;
  MultiDeg cur(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i, long long partial) -> void {
    if (i == n) {
      if (partial == d && is_stable(phi, cur)) out.push_back(cur);
      return;
    }
    long long fl = static_cast<long long>(rat_floor(phi.phi[static_cast<size_t>(i)]));
    for (long long v : {fl, fl + 1}) {
      cur[static_cast<size_t>(i)] = v;
      self(self, i + 1, partial + v);
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Integer function on the intervals {r, ..., s} of {1, ..., n-1}.
struct ConsecutiveF {
  int n = 0;
  std::map<std::pair<int, int>, long long> values;

  long long value(int r, int s) const {
    auto it = values.find({r, s});
    if (it == values.end())
      throw std::invalid_argument("consecutive-set function: missing interval");
    return it->second;
  }
};

// f(I) = minimum over components of the I-coordinate sum of the multidegree.
inline ConsecutiveF f_of_fcj(const NecklaceFcj& fcj) {
  if (!fcj.smoothable)
    throw NotSmoothable("interval function exists only for smoothable Jacobians");
  ConsecutiveF f;
  f.n = fcj.n;
  for (int r = 1; r <= fcj.n - 1; ++r) {
    for (int s = r; s <= fcj.n - 1; ++s) {
      long long best = 0;
      bool first = true;
      for (const auto& comp : fcj.components) {
        long long sum = 0;
        for (int i = r; i <= s; ++i) sum += comp[static_cast<size_t>(i - 1)];
        if (first || sum < best) {
          best = sum;
          first = false;
        }
      }
      f.values[{r, s}] = best;
    }
  }
  return f;
}

inline void check_consecutive_superadditive(const ConsecutiveF& f) {
  for (int r = 1; r <= f.n - 1; ++r)
    for (int s = r; s <= f.n - 1; ++s)
      for (int t = s + 1; t <= f.n - 1; ++t) {
        long long gap = f.value(r, t) - f.value(r, s) - f.value(s + 1, t);
        if (gap < 0 || gap > 1)
          throw NotSuperadditive("interval function violates mild superadditivity");
      }
}

// Reconstructs the unique smoothable Jacobian whose interval function is f:
// an interior point of the open cell f(I) < sum_{i in I} x_i < f(I) + 1 is
// found by the margin program, the stable multidegrees are enumerated, and
// the node sequence is read off from the adjacency structure of that set.
inline NecklaceFcj fcj_from_f(int n, long long d, const ConsecutiveF& f) {
  if (n == 1) return build_fcj(1, d, MultiDeg{d}, {1});
  if (f.n != n) throw std::invalid_argument("fcj_from_f: size mismatch");
  check_consecutive_superadditive(f);

  std::vector<MarginConstraint> cons;
  for (int r = 1; r <= n - 1; ++r)
    for (int s = r; s <= n - 1; ++s) {
      MarginConstraint c;
      for (int i = r; i <= s; ++i) c.support.push_back(i);
      c.bound = f.value(r, s);
      cons.push_back(std::move(c));
    }
  MarginSolveResult lp = solve_margin_lp(n - 1, cons);
  if (!(lp.margin > 0))
    throw InternalCellEmpty("open stability cell is empty for a superadditive function");

  Polarisation phi;
  phi.phi = lp.x;
  Rat last(d);
  for (const auto& v : lp.x) last -= v;
  phi.phi.push_back(last);

  std::vector<MultiDeg> S = stable_multidegrees(phi);
  if (static_cast<int>(S.size()) != n)
    throw InternalCellEmpty("stable multidegree set has unexpected size");

  // Edges u -> v with v = u + e_j - e_{j+1}; node label j appears once.
  std::set<MultiDeg> inS(S.begin(), S.end());
  std::map<MultiDeg, std::pair<int, MultiDeg>> succ;  // u -> (j, v)
  std::vector<bool> label_used(static_cast<size_t>(n), false);
  int edges = 0;
  for (const auto& u : S) {
    for (int j = 1; j <= n; ++j) {
      MultiDeg v = u;
      ++v[static_cast<size_t>(j - 1)];
      --v[static_cast<size_t>(j % n)];
      if (!inS.count(v)) continue;
      if (succ.count(u) || label_used[static_cast<size_t>(j - 1)])
        throw std::logic_error("fcj_from_f: ambiguous adjacency structure");
      succ[u] = {j, v};
      label_used[static_cast<size_t>(j - 1)] = true;
      ++edges;
    }
  }
  if (edges != n)
    throw std::logic_error("fcj_from_f: adjacency structure is not a single cycle");

  // Start at the edge labelled 1; its source is the base component.
  MultiDeg base;
  for (const auto& [u, jv] : succ)
    if (jv.first == 1) base = u;
  std::vector<int> seq;
  MultiDeg cur = base;
  for (int k = 0; k < n; ++k) {
    auto it = succ.find(cur);
    if (it == succ.end())
      throw std::logic_error("fcj_from_f: broken cycle");
    seq.push_back(it->second.first);
    cur = it->second.second;
  }
  if (cur != base) throw std::logic_error("fcj_from_f: cycle does not close");
  return build_fcj(n, d, base, seq);
}

// All smoothable degree-d Jacobians up to translation, one per n-cycle, with
// the base normalised so the component preceding the first visit to node 1
// carries the entire degree on its first coordinate.  Cycles are listed by
// their cycle word (1, a_2, ..., a_n) in lexicographic order.
inline std::vector<NecklaceFcj> enumerate_smoothable(int n, long long d) {
  if (n < 1) throw std::invalid_argument("enumerate_smoothable: n must be >= 1");
  MultiDeg base(static_cast<size_t>(n), 0);
  base[0] = d;
  if (n == 1) return {build_fcj(1, d, base, {1})};

  std::vector<int> rest;
  for (int i = 2; i <= n; ++i) rest.push_back(i);
  std::vector<NecklaceFcj> out;
  do {
    std::vector<int> seq{1};
    seq.insert(seq.end(), rest.begin(), rest.end());
    out.push_back(build_fcj(n, d, base, seq));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

// Canonical representative under cyclic shift: lexicographically minimal
// rotation.  Used to decide equality of node sequences.
inline std::vector<int> canonical_rotation(const std::vector<int>& seq) {
  size_t m = seq.size();
  std::vector<int> best = seq;
  std::vector<int> probe(m);
  for (size_t r = 1; r < m; ++r) {
    for (size_t k = 0; k < m; ++k) probe[k] = seq[(r + k) % m];
    if (probe < best) best = probe;
  }
  return best;
}

}  // namespace jacgen
