#pragma once

// Coefficient ring for Hodge-theoretic Euler characteristics of genus <= 1
// moduli problems.  An element is a polynomial in two commuting generators:
//
//   L, the Lefschetz class (class of the affine line), and
//   c, the class of the weight-1 local system of an elliptic fibre,
//
// viewed as the symmetric functions L = alpha*beta, c = alpha + beta of a
// formal pair of roots.  Every symmetric polynomial in (alpha, beta) has a
// unique (L, c) representation, which is the stored normal form.
//
// The Adams operations act through alpha -> alpha^k, beta -> beta^k, the
// V_k basis consists of the classes of the k-th symmetric powers of the
// standard local system, and the Eichler-Shimura map integrates a V_k
// decomposition over the modular base.

#include <jacgen/errors.hpp>
#include <jacgen/numeric.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace jacgen {

// Univariate polynomial in L with rational coefficients, ascending order.
// Elements of the Tate subring (c-degree zero) are carried in this form at
// I/O boundaries; table entries always have integer coefficients.
class TatePoly {
 public:
  TatePoly() = default;
  explicit TatePoly(std::vector<Rat> ascending) : coeffs_(std::move(ascending)) {
    trim();
  }
  TatePoly(long v) { coeffs_.assign(1, Rat(v)); trim(); }
  TatePoly(const Rat& v) { coeffs_.assign(1, v); trim(); }

  static TatePoly L(int power = 1) {
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = 1;
    return TatePoly(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool is_integral() const {
    for (const auto& c : coeffs_)
      if (!is_integer(c)) return false;
    return true;
  }

  friend TatePoly operator+(const TatePoly& a, const TatePoly& b) {
    std::vector<Rat> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return TatePoly(std::move(r));
  }
  friend TatePoly operator-(const TatePoly& a, const TatePoly& b) {
    std::vector<Rat> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return TatePoly(std::move(r));
  }
  friend TatePoly operator*(const TatePoly& a, const TatePoly& b) {
    if (a.is_zero() || b.is_zero()) return TatePoly();
    std::vector<Rat> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return TatePoly(std::move(r));
  }
  TatePoly operator-() const {
    std::vector<Rat> r = coeffs_;
    for (auto& c : r) c = -c;
    return TatePoly(std::move(r));
  }
  friend bool operator==(const TatePoly& a, const TatePoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const TatePoly& a, const TatePoly& b) {
    return !(a == b);
  }

  // Descending powers of L, the layout used by the printed tables,
  // e.g. "L^3 + 3L^2 + 3L + 1".
  std::string pretty() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      Rat c = coeff(i);
      if (c == 0) continue;
      bool neg = c < 0;
      Rat a = neg ? Rat(-c) : c;
      if (first) {
        if (neg) out << "-";
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      std::string mag = is_integer(a) ? rat_num(a).str()
                                      : "(" + format_fraction(a) + ")";
      if (i == 0) {
        out << mag;
      } else {
        if (mag != "1") out << mag;
        out << "L";
        if (i > 1) out << "^" << i;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;  // coeffs_[i] multiplies L^i
};

class Motive {
 public:
  using Key = std::pair<int, int>;  // (deg_L, deg_c)

  Motive() = default;
  Motive(long v) { add_term(0, 0, Rat(v)); }
  Motive(const Rat& v) { add_term(0, 0, v); }
  Motive(const TatePoly& t) {
    for (int i = 0; i <= t.degree(); ++i) add_term(i, 0, t.coeff(i));
  }

  static Motive L(int power = 1) { return monomial(power, 0, Rat(1)); }
  static Motive c(int power = 1) { return monomial(0, power, Rat(1)); }
  static Motive monomial(int dL, int dc, const Rat& coeff) {
    Motive m;
    m.add_term(dL, dc, coeff);
    return m;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, Rat>& terms() const { return terms_; }

  Rat coeff(int dL, int dc) const {
    auto it = terms_.find({dL, dc});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int c_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
  }
  int l_degree() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.first);
    return d;
  }
  bool is_tate() const { return c_degree() == 0; }
  bool is_integral() const {
    for (const auto& [k, v] : terms_)
      if (!is_integer(v)) return false;
    return true;
  }

  void add_term(int dL, int dc, const Rat& coeff) {
    if (coeff == 0) return;
    Key key{dL, dc};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Motive operator+(const Motive& a, const Motive& b) {
    Motive r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, v);
    return r;
  }
  friend Motive operator-(const Motive& a, const Motive& b) {
    Motive r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, -v);
    return r;
  }
  Motive operator-() const {
    Motive r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
  }
  friend Motive operator*(const Motive& a, const Motive& b) {
    Motive r;
    for (const auto& [ka, va] : a.terms_)
      for (const auto& [kb, vb] : b.terms_)
        r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
  }
  friend Motive operator*(const Rat& s, const Motive& a) {
    Motive r;
    if (s == 0) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, s * v);
    return r;
  }
  friend bool operator==(const Motive& a, const Motive& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Motive& a, const Motive& b) { return !(a == b); }
  // Deterministic total order so motives can key containers.
  friend bool operator<(const Motive& a, const Motive& b) {
    return a.terms_ < b.terms_;
  }

  // Requires a Tate element.
  TatePoly tate() const {
    std::vector<Rat> c;
    for (const auto& [k, v] : terms_) {
      if (k.second != 0)
        throw std::invalid_argument("motive has positive c-degree");
      if (static_cast<int>(c.size()) <= k.first) c.resize(k.first + 1, Rat(0));
      c[static_cast<size_t>(k.first)] = v;
    }
    return TatePoly(std::move(c));
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << format_fraction(v) << ")";
      if (k.first) out << "*L^" << k.first;
      if (k.second) out << "*c^" << k.second;
    }
    return out.str();
  }

 private:
  std::map<Key, Rat> terms_;  // canonical form: no zero coefficients stored
};

// Power sums of the formal roots: adams_c(k) = alpha^k + beta^k as an (L, c)
// polynomial, via the Newton recurrence c_k = c*c_{k-1} - L*c_{k-2}.
inline Motive adams_of_c(int k) {
  Motive cm2 = Motive(2);     // c_0
  Motive cm1 = Motive::c();   // c_1
  if (k == 0) return cm2;
  for (int i = 2; i <= k; ++i) {
    Motive ci = Motive::c() * cm1 - Motive::L() * cm2;
    cm2 = std::move(cm1);
    cm1 = std::move(ci);
  }
  return cm1;
}

// Ring endomorphism with alpha -> alpha^k, beta -> beta^k.
inline Motive adams(int k, const Motive& x) {
  if (k < 1) throw std::invalid_argument("adams: k must be >= 1");
  if (k == 1) return x;
  Motive ck = adams_of_c(k);
  // Powers of ck needed up to the c-degree of x.
  std::vector<Motive> ck_pow{Motive(1)};
  Motive r;
  for (const auto& [key, v] : x.terms()) {
    auto [dL, dc] = key;
    while (static_cast<int>(ck_pow.size()) <= dc)
      ck_pow.push_back(ck_pow.back() * ck);
    r = r + v * (Motive::monomial(k * dL, 0, Rat(1)) *
                 ck_pow[static_cast<size_t>(dc)]);
  }
  return r;
}

// Decomposition x = sum coeff_k * h_k(alpha, beta) with h_0 = 1, h_1 = c and
// c*h_k = h_{k+1} + L*h_{k-1}.  The h_k are the classes of the symmetric
// powers V_k; the decomposition is unique and reassembles exactly.
inline std::vector<std::pair<int, TatePoly>> to_vk_basis(const Motive& x) {
  // h_k as (L, c) polynomials, by the recurrence h_{k+1} = c*h_k - L*h_{k-1}.
  int top = x.c_degree();
  std::vector<Motive> h{Motive(1), Motive::c()};
  while (static_cast<int>(h.size()) <= top)
    h.push_back(Motive::c() * h.back() - Motive::L() * h[h.size() - 2]);

  Motive rest = x;
  std::map<int, TatePoly> out;
  while (!rest.is_zero()) {
    int d = rest.c_degree();
    // Extract the coefficient of c^d as a polynomial in L.
    Motive lead;
    for (const auto& [k, v] : rest.terms())
      if (k.second == d) lead.add_term(k.first, 0, v);
    out[d] = lead.tate();
    rest = rest - lead * h[static_cast<size_t>(d)];
  }
  std::vector<std::pair<int, TatePoly>> result(out.begin(), out.end());
  return result;
}

inline Motive from_vk_basis(const std::vector<std::pair<int, TatePoly>>& terms) {
  int top = 0;
  for (const auto& [k, v] : terms) top = std::max(top, k);
  std::vector<Motive> h{Motive(1), Motive::c()};
  while (static_cast<int>(h.size()) <= top)
    h.push_back(Motive::c() * h.back() - Motive::L() * h[h.size() - 2]);
  Motive r;
  for (const auto& [k, v] : terms) r = r + Motive(v) * h[static_cast<size_t>(k)];
  return r;
}

// Integration over the genus-1 modular base: V_0 -> L, V_k -> 0 for odd k,
// V_k -> -1 for even 2 <= k <= max_weight_guard - 2.  A nonzero even V_k
// beyond that range hits a nonzero cusp-form motive and leaves the Tate ring.
inline TatePoly eichler_shimura(const Motive& x, int max_weight_guard = 10) {
  TatePoly result;
  for (const auto& [k, coeff] : to_vk_basis(x)) {
    if (coeff.is_zero()) continue;
    if (k == 0) {
      result = result + coeff * TatePoly::L();
    } else if (k % 2 == 0) {
      if (k + 2 > max_weight_guard) throw NonTateRegime(k + 2);
      result = result - coeff;
    }
    // odd k: the local system has no invariants, contributes zero
  }
  return result;
}

// Exact division in the (L, c) polynomial ring: returns q with q*y == x when
// such q exists, nullopt otherwise.  The ring is a domain, so q is unique.
// Division by leading-term cancellation in (deg_c, deg_L)-lexicographic order.
inline std::optional<Motive> div_exact(const Motive& x, const Motive& y) {
  if (y.is_zero()) throw std::invalid_argument("div_exact: division by zero");

  auto leading = [](const Motive& m) {
    // Largest (dc, dL) pair.
    Motive::Key best{-1, -1};
    Rat coeff;
    for (const auto& [k, v] : m.terms()) {
      std::pair<int, int> probe{k.second, k.first};
      std::pair<int, int> cur{best.second, best.first};
      if (best.first < 0 || probe > cur) {
        best = k;
        coeff = v;
      }
    }
    return std::make_pair(best, coeff);
  };

  auto [ly, cy] = leading(y);
  Motive rest = x;
  Motive q;
  while (!rest.is_zero()) {
    auto [lx, cx] = leading(rest);
    int dL = lx.first - ly.first;
    int dc = lx.second - ly.second;
    if (dL < 0 || dc < 0) return std::nullopt;
    Motive t = Motive::monomial(dL, dc, cx / cy);
    q = q + t;
    rest = rest - t * y;
  }
  return q;
}

}  // namespace jacgen
