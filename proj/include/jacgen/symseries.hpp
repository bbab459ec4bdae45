#pragma once

// Graded symmetric functions with coefficients in the elliptic motive ring,
// truncated at a fixed maximal degree.  The internal canonical basis is the
// power sums: plethysm, derivatives and Adams operations are monomial there.
// Schur and complete-homogeneous coordinates exist at I/O boundaries only.

#include <jacgen/errors.hpp>
#include <jacgen/motive.hpp>
#include <jacgen/partitions.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jacgen {

enum class Basis { powersum, schur, homogeneous };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::powersum: return "powersum";
    case Basis::schur: return "schur";
    case Basis::homogeneous: return "homogeneous";
  }
  return "?";
}

class SymSeries {
 public:
  using Map = std::map<Partition, Motive, PartitionOrder>;

  explicit SymSeries(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0)
      throw std::invalid_argument("SymSeries: negative truncation bound");
  }

  static SymSeries zero(int N) { return SymSeries(N); }
  static SymSeries one(int N) {
    SymSeries s(N);
    s.set_coeff({}, Motive(1));
    return s;
  }
  static SymSeries p(int k, int N) {
    SymSeries s(N);
    if (k < 1) throw std::invalid_argument("p_k: k must be >= 1");
    if (k <= N) s.set_coeff({k}, Motive(1));
    return s;
  }
  // p_lambda with a scalar coefficient.
  static SymSeries p_term(const Partition& lambda, const Motive& coeff, int N) {
    SymSeries s(N);
    if (!is_valid_partition(lambda))
      throw std::invalid_argument("p_term: not a partition");
    if (partition_size(lambda) <= N) s.set_coeff(lambda, coeff);
    return s;
  }
  // h_n = sum over mu of p_mu / z_mu.
  static SymSeries h(int n, int N) {
    SymSeries s(N);
    if (n > N) return s;
    for (const auto& mu : partitions_of(n))
      s.set_coeff(mu, Motive(Rat(Int(1), z_of(mu))));
    return s;
  }
  // s_lambda = sum over mu of chi^lambda(mu)/z_mu * p_mu.
  static SymSeries schur(const Partition& lambda, int N) {
    if (!is_valid_partition(lambda))
      throw std::invalid_argument("schur: not a partition");
    SymSeries s(N);
    int n = partition_size(lambda);
    if (n > N) return s;
    for (const auto& mu : partitions_of(n)) {
      Int chi = mn_character(lambda, mu);
      if (chi != 0) s.set_coeff(mu, Motive(Rat(chi, z_of(mu))));
    }
    return s;
  }

  int max_degree() const { return max_degree_; }
  const Map& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Motive coeff(const Partition& lambda) const {
    auto it = coeffs_.find(lambda);
    return it == coeffs_.end() ? Motive() : it->second;
  }

  void set_coeff(const Partition& lambda, const Motive& value) {
    if (partition_size(lambda) > max_degree_) return;
    if (value.is_zero())
      coeffs_.erase(lambda);
    else
      coeffs_[lambda] = value;
  }
  void add_coeff(const Partition& lambda, const Motive& value) {
    if (partition_size(lambda) > max_degree_ || value.is_zero()) return;
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) {
      coeffs_.emplace(lambda, value);
    } else {
      it->second = it->second + value;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  SymSeries truncated(int N) const {
    SymSeries r(std::min(N, max_degree_));
    for (const auto& [lam, v] : coeffs_) r.set_coeff(lam, v);
    return r;
  }

  // The homogeneous part of the given degree, kept at the same truncation.
  SymSeries degree_part(int n) const {
    SymSeries r(max_degree_);
    for (const auto& [lam, v] : coeffs_)
      if (partition_size(lam) == n) r.set_coeff(lam, v);
    return r;
  }

  int low_degree() const {  // smallest degree with a nonzero term; -1 if zero
    if (coeffs_.empty()) return -1;
    return partition_size(coeffs_.begin()->first);
  }

  friend SymSeries operator+(const SymSeries& a, const SymSeries& b) {
    SymSeries r(std::min(a.max_degree_, b.max_degree_));
    for (const auto& [lam, v] : a.coeffs_)
      if (partition_size(lam) <= r.max_degree_) r.add_coeff(lam, v);
    for (const auto& [lam, v] : b.coeffs_)
      if (partition_size(lam) <= r.max_degree_) r.add_coeff(lam, v);
    return r;
  }
  friend SymSeries operator-(const SymSeries& a, const SymSeries& b) {
    SymSeries r(std::min(a.max_degree_, b.max_degree_));
    for (const auto& [lam, v] : a.coeffs_)
      if (partition_size(lam) <= r.max_degree_) r.add_coeff(lam, v);
    for (const auto& [lam, v] : b.coeffs_)
      if (partition_size(lam) <= r.max_degree_) r.add_coeff(lam, -v);
    return r;
  }
  friend SymSeries operator*(const Motive& s, const SymSeries& a) {
    SymSeries r(a.max_degree_);
    for (const auto& [lam, v] : a.coeffs_) r.set_coeff(lam, s * v);
    return r;
  }
  friend SymSeries operator*(const Rat& s, const SymSeries& a) {
    return Motive(s) * a;
  }
  friend bool operator==(const SymSeries& a, const SymSeries& b) {
    return a.max_degree_ == b.max_degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int max_degree_;
  Map coeffs_;
};

// Graded product: in the p-basis, p_lambda * p_mu = p_{lambda union mu}.
inline SymSeries multiply(const SymSeries& a, const SymSeries& b) {
  SymSeries r(std::min(a.max_degree(), b.max_degree()));
  int N = r.max_degree();
  for (const auto& [la, va] : a.coeffs()) {
    int da = partition_size(la);
    if (da > N) continue;
    for (const auto& [lb, vb] : b.coeffs()) {
      if (da + partition_size(lb) > N) continue;
      Partition merged;
      merged.reserve(la.size() + lb.size());
      std::merge(la.begin(), la.end(), lb.begin(), lb.end(),
                 std::back_inserter(merged), std::greater<int>());
      r.add_coeff(merged, va * vb);
    }
  }
  return r;
}

// p_k . g: substitutes p_m -> p_{km} and applies the k-th Adams operation to
// every coefficient of g.
inline SymSeries adams_operation(int k, const SymSeries& g) {
  if (k < 1) throw std::invalid_argument("adams_operation: k must be >= 1");
  SymSeries r(g.max_degree());
  for (const auto& [lam, v] : g.coeffs()) {
    if (k * partition_size(lam) > g.max_degree()) continue;
    Partition scaled = lam;
    for (auto& part : scaled) part *= k;
    r.add_coeff(scaled, adams(k, v));
  }
  return r;
}

// Plethysm f . g.  Requires g to have zero degree-0 term; scalars of f pass
// through untouched and the p_k act on g through adams_operation.
inline SymSeries plethysm(const SymSeries& f, const SymSeries& g) {
  if (!g.coeff({}).is_zero())
    throw PositiveDegreeRequired("plethysm: inner series has a degree-0 term");
  int N = std::min(f.max_degree(), g.max_degree());
  SymSeries result(N);

  // psi_k(g) computed once per distinct part size.
  std::map<int, SymSeries> psi;
  auto psi_of = [&](int k) -> const SymSeries& {
    auto it = psi.find(k);
    if (it == psi.end())
      it = psi.emplace(k, adams_operation(k, g.truncated(N))).first;
    return it->second;
  };

  for (const auto& [lam, coeff] : f.coeffs()) {
    if (lam.empty()) {
      result.add_coeff({}, coeff);
      continue;
    }
    // Parts below the degree already reached contribute nothing after
    // truncation: prune by the minimal attainable degree.
    int min_deg = 0;
    for (int part : lam) min_deg += part;  // each psi_k(g) starts at degree k
    if (min_deg > N) continue;
    SymSeries term = SymSeries::one(N);
    for (int part : lam) term = multiply(term, psi_of(part));
    result = result + coeff * term;
  }
  return result;
}

// Formal partial derivative with respect to p_k.
inline SymSeries p_derivative(int k, const SymSeries& f) {
  if (k < 1) throw std::invalid_argument("p_derivative: k must be >= 1");
  SymSeries r(f.max_degree());
  for (const auto& [lam, v] : f.coeffs()) {
    int mult = static_cast<int>(std::count(lam.begin(), lam.end(), k));
    if (mult == 0) continue;
    Partition reduced;
    reduced.reserve(lam.size() - 1);
    bool removed = false;
    for (int part : lam) {
      if (!removed && part == k) {
        removed = true;
        continue;
      }
      reduced.push_back(part);
    }
    r.add_coeff(reduced, Rat(mult) * v);
  }
  return r;
}

// Inverse for composition: g with f . g = g . f = p_1 up to the truncation
// bound, solved degree by degree.  Requires f = p_1 + (degree >= 2).
inline SymSeries plethystic_inverse(const SymSeries& f) {
  if (!f.coeff({}).is_zero() || f.coeff({1}) != Motive(1))
    throw BadLeadingTerm("plethystic_inverse: series must start with p_1");
  for (const auto& [lam, v] : f.coeffs())
    if (partition_size(lam) == 1 && lam != Partition{1})
      throw BadLeadingTerm("plethystic_inverse: degree-1 part is not p_1");

  int N = f.max_degree();
  SymSeries f_plus = f;  // the part of degree >= 2
  f_plus.set_coeff({1}, Motive());

  SymSeries g = SymSeries::p(1, N);
  for (int d = 2; d <= N; ++d) {
    // The degree-d part of f_plus . g only involves g below degree d.
    SymSeries correction = plethysm(f_plus, g).degree_part(d);
    for (const auto& [lam, v] : correction.coeffs()) g.add_coeff(lam, -v);
  }
  return g;
}

// log(1 - g) = -sum_{m>=1} g^m / m, truncated.
inline SymSeries log_one_minus(const SymSeries& g) {
  if (!g.coeff({}).is_zero())
    throw PositiveDegreeRequired("log_one_minus: series has a degree-0 term");
  int N = g.max_degree();
  SymSeries acc(N);
  if (g.is_zero()) return acc;
  SymSeries power = SymSeries::one(N);
  int low = std::max(1, g.low_degree());
  for (int m = 1; m * low <= N; ++m) {
    power = multiply(power, g);
    acc = acc - Rat(Int(1), Int(m)) * power;
  }
  return acc;
}

// (1 - g)^{-1} = sum_{m>=0} g^m, truncated.
inline SymSeries geometric_inverse(const SymSeries& g) {
  if (!g.coeff({}).is_zero())
    throw PositiveDegreeRequired("geometric_inverse: series has a degree-0 term");
  int N = g.max_degree();
  SymSeries acc = SymSeries::one(N);
  if (g.is_zero()) return acc;
  SymSeries power = SymSeries::one(N);
  int low = std::max(1, g.low_degree());
  for (int m = 1; m * low <= N; ++m) {
    power = multiply(power, g);
    acc = acc + power;
  }
  return acc;
}

using BasisExpansion = std::vector<std::pair<Partition, Motive>>;

namespace detail {

// h_mu (product of complete homogeneous) in the p-basis, per fixed degree.
inline SymSeries h_mu_series(const Partition& mu, int N) {
  SymSeries r = SymSeries::one(N);
  for (int part : mu) r = multiply(r, SymSeries::h(part, N));
  return r;
}

}  // namespace detail

// Exact basis conversion.  Output is listed degree ascending, partitions
// lexicographically descending.  With assert_integral set, a Schur target
// raises NonIntegralSchur if any coefficient has a denominator.
inline BasisExpansion change_basis(const SymSeries& f, Basis target,
                                   bool assert_integral = false) {
  BasisExpansion out;
  for (int n = 0; n <= f.max_degree(); ++n) {
    SymSeries part = f.degree_part(n);
    if (part.is_zero()) continue;
    if (target == Basis::powersum) {
      for (const auto& [lam, v] : part.coeffs()) out.emplace_back(lam, v);
      continue;
    }
    if (target == Basis::schur) {
      for (const auto& lam : partitions_of(n)) {
        Motive acc;
        for (const auto& [mu, a] : part.coeffs())
          acc = acc + Rat(mn_character(lam, mu)) * a;
        if (!acc.is_zero()) {
          if (assert_integral && !acc.is_integral())
            throw NonIntegralSchur("non-integral Schur coefficient in degree " +
                                   std::to_string(n));
          out.emplace_back(lam, acc);
        }
      }
      continue;
    }
    // Homogeneous target: solve the per-degree linear system M x = v where
    // column mu of M is h_mu written in the p-basis.  Gaussian elimination
    // with rational pivots; the right-hand side entries are motives.
    const auto& parts = partitions_of(n);
    size_t k = parts.size();
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < k; ++i) index[parts[i]] = i;

    std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k, Rat(0)));
    for (size_t j = 0; j < k; ++j) {
      SymSeries h = detail::h_mu_series(parts[j], n);
      for (const auto& [mu, v] : h.coeffs()) {
        if (partition_size(mu) != n) continue;
        // h_mu has rational scalar coordinates in the p-basis.
        M[index[mu]][j] = v.coeff(0, 0);
      }
    }
    std::vector<Motive> rhs(k);
    for (const auto& [mu, v] : part.coeffs()) rhs[index[mu]] = v;

    // Forward elimination with partial pivoting by first nonzero.
    std::vector<size_t> colperm(k);
    for (size_t i = 0; i < k; ++i) colperm[i] = i;
    std::vector<Motive> x(k);
    std::vector<std::vector<Rat>>& A = M;
    std::vector<size_t> pivot_row(k, SIZE_MAX);
    size_t row = 0;
    for (size_t col = 0; col < k && row < k; ++col) {
      size_t pr = SIZE_MAX;
      for (size_t r = row; r < k; ++r)
        if (A[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr == SIZE_MAX) continue;
      std::swap(A[row], A[pr]);
      std::swap(rhs[row], rhs[pr]);
      for (size_t r = row + 1; r < k; ++r) {
        if (A[r][col] == 0) continue;
        Rat factor = A[r][col] / A[row][col];
        for (size_t cc = col; cc < k; ++cc) A[r][cc] -= factor * A[row][cc];
        rhs[r] = rhs[r] - factor * rhs[row];
      }
      pivot_row[col] = row;
      ++row;
    }
    // Back substitution (the transition matrix is invertible).
    for (size_t col = k; col-- > 0;) {
      size_t r = pivot_row[col];
      if (r == SIZE_MAX)
        throw std::logic_error("homogeneous transition matrix is singular");
      Motive acc = rhs[r];
      for (size_t cc = col + 1; cc < k; ++cc)
        acc = acc - A[r][cc] * x[cc];
      x[col] = Rat(1) / A[r][col] * acc;
    }
    for (size_t j = 0; j < k; ++j)
      if (!x[j].is_zero()) out.emplace_back(parts[j], x[j]);
  }
  return out;
}

// Rebuild a series in the internal p-basis from a basis expansion.
inline SymSeries from_basis(const BasisExpansion& terms, Basis basis, int N) {
  SymSeries r(N);
  for (const auto& [lam, coeff] : terms) {
    switch (basis) {
      case Basis::powersum:
        r.add_coeff(lam, coeff);
        break;
      case Basis::schur:
        r = r + coeff * SymSeries::schur(lam, N);
        break;
      case Basis::homogeneous:
        r = r + coeff * detail::h_mu_series(lam, N);
        break;
    }
  }
  return r;
}

// n! times the coefficient of p_1^n in the degree-n part: the value of the
// underlying non-equivariant Euler characteristic.
inline Motive dimension_specialization(const SymSeries& f, int n) {
  Partition ones(static_cast<size_t>(n), 1);
  return Rat(factorial(n)) * f.coeff(ones);
}

}  // namespace jacgen
