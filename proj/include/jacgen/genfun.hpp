#pragma once

// Generating functions for equivariant Hodge Euler characteristics of the
// genus-0 and genus-1 moduli spaces and of the genus-1 fine compactified
// universal Jacobians.
//
//   a0        open moduli of marked genus-0 curves, degrees n >= 3
//   a1        open moduli of marked genus-1 curves, degrees n >= 1
//   b0_prime  derivative of the stable genus-0 series, via its rooted-tree
//             fixed point  f = a0' . (p_1 + f)
//   b1_nr     moduli of marked necklace curves (no rational tails)
//   b1        stable genus-1 moduli:  b1_nr . (p_1 + b0')
//   jbar      fine compactified universal Jacobians:
//             ((1 + p_1) b1_nr') . (p_1 + b0'), independent of the degree
//
// a0 is realised by configuration spaces of the projective line divided by
// the automorphism class L^3 - L; a1 by fibrewise configurations of the
// universal genus-1 curve (fibre class 1 - c + L) divided by the translation
// action, evaluated through the Eichler-Shimura map.  Every step is exact and
// separately testable (divisibility, integrality, palindromicity).

#include <jacgen/errors.hpp>
#include <jacgen/series_io.hpp>
#include <jacgen/symseries.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>

namespace jacgen {

enum class SeriesTag { a0, a1, b0_prime, b1_nr, b1, jbar };

inline std::string series_tag_name(SeriesTag t) {
  switch (t) {
    case SeriesTag::a0: return "a0";
    case SeriesTag::a1: return "a1";
    case SeriesTag::b0_prime: return "b0_prime";
    case SeriesTag::b1_nr: return "b1_nr";
    case SeriesTag::b1: return "b1";
    case SeriesTag::jbar: return "jbar";
  }
  return "?";
}

inline SeriesTag series_tag_from_name(const std::string& s) {
  if (s == "a0") return SeriesTag::a0;
  if (s == "a1") return SeriesTag::a1;
  if (s == "b0_prime" || s == "b0prime") return SeriesTag::b0_prime;
  if (s == "b1_nr" || s == "b1nr") return SeriesTag::b1_nr;
  if (s == "b1") return SeriesTag::b1;
  if (s == "jbar") return SeriesTag::jbar;
  throw std::invalid_argument("unknown series tag: " + s);
}

// Truncation guards.  The Eichler-Shimura evaluation supports symmetric
// powers of weight at most 10; beyond these bounds the computation would
// need nonzero cusp-form motives and fails fast instead.
inline constexpr int kMaxWeight = 10;
inline constexpr int kA1MaxDegree = 9;
inline constexpr int kB1MaxDegree = 9;
inline constexpr int kJbarMaxDegree = 8;

inline void check_guard(SeriesTag tag, int N) {
  switch (tag) {
    case SeriesTag::a1:
    case SeriesTag::b1_nr:
      if (N > kA1MaxDegree) throw NonTateRegime(N + 1);
      break;
    case SeriesTag::b1:
      if (N > kB1MaxDegree) throw NonTateRegime(N + 1);
      break;
    case SeriesTag::jbar:
      if (N > kJbarMaxDegree) throw NonTateRegime(N + 2);
      break;
    default:
      break;
  }
}

// S_k-equivariant classes of ordered configuration spaces of a space of
// class e, all k <= N at once:  (sum_n h_n . (e p_1)) . E^{-1}, where E^{-1}
// is the plethystic inverse of sum_{m>=1} h_m.  Degree 0 is 1, degree 1 is
// e p_1.
inline SymSeries conf_series(const Motive& e, int N) {
  SymSeries tuples(N);  // sum_n h_n . (e p_1)
  for (int n = 0; n <= N; ++n) {
    for (const auto& mu : partitions_of(n)) {
      Motive coeff(Rat(Int(1), z_of(mu)));
      for (int part : mu) coeff = coeff * adams(part, e);
      tuples.add_coeff(mu, coeff);
    }
  }
  SymSeries sets(N);  // sum_{m>=1} h_m
  for (int m = 1; m <= N; ++m) sets = sets + SymSeries::h(m, N);
  if (N < 1) return tuples;  // degree 0 only
  SymSeries inv = plethystic_inverse(sets);

  SymSeries positive = tuples;
  positive.set_coeff({}, Motive());
  SymSeries result = plethysm(positive, inv);
  result.add_coeff({}, tuples.coeff({}));
  return result;
}

struct SeriesProvider {
  virtual ~SeriesProvider() = default;
  virtual SymSeries get(SeriesTag tag, int N) = 0;
};

inline SymSeries compute_series(SeriesTag tag, int N, SeriesProvider& sub) {
  check_guard(tag, N);
  switch (tag) {
    case SeriesTag::a0: {
      if (N < 3) throw std::invalid_argument("a0: truncation bound must be >= 3");
      SymSeries conf = conf_series(Motive(1) + Motive::L(), N);
      Motive group = Motive::L(3) - Motive::L();  // automorphisms of the line
      SymSeries r(N);
      for (const auto& [lam, v] : conf.coeffs()) {
        if (partition_size(lam) < 3) continue;
        auto q = div_exact(v, group);
        if (!q) throw NotDivisible("a0: configuration class not divisible by L^3 - L");
        r.set_coeff(lam, *q);
      }
      return r;
    }
    case SeriesTag::a1: {
      Motive fibre = Motive(1) - Motive::c() + Motive::L();
      SymSeries conf = conf_series(fibre, N);
      SymSeries r(N);
      for (const auto& [lam, v] : conf.coeffs()) {
        if (lam.empty()) continue;
        auto q = div_exact(v, fibre);
        if (!q)
          throw NotDivisible("a1: configuration class not divisible by the fibre class");
        TatePoly evaluated = eichler_shimura(*q, kMaxWeight);
        r.set_coeff(lam, Motive(evaluated));
      }
      return r;
    }
    case SeriesTag::b0_prime: {
      SymSeries a0p = p_derivative(1, sub.get(SeriesTag::a0, std::max(N + 1, 4)))
                          .truncated(N);
      // Fixed point f = a0' . (p_1 + f) with zero part in degrees <= 1,
      // solved degree by degree (the degree-d part of the right-hand side
      // only involves f below degree d).
      SymSeries f(N);
      for (int d = 2; d <= N; ++d) {
        SymSeries rhs = plethysm(a0p, SymSeries::p(1, N) + f).degree_part(d);
        for (const auto& [lam, v] : rhs.coeffs()) f.set_coeff(lam, v);
      }
      return f;
    }
    case SeriesTag::b1_nr: {
      SymSeries A1 = sub.get(SeriesTag::a1, N);
      SymSeries A0 = sub.get(SeriesTag::a0, N + 2);
      SymSeries a0pp = p_derivative(1, p_derivative(1, A0)).truncated(N);
      SymSeries a0dot = p_derivative(2, A0).truncated(N);

      SymSeries logsum(N);
      for (int n = 1; n <= N; ++n) {
        SymSeries psi_n = adams_operation(n, a0pp);
        if (psi_n.is_zero()) continue;
        logsum = logsum + Rat(euler_totient(n), n) * log_one_minus(psi_n);
      }
      SymSeries psi2 = adams_operation(2, a0pp);
      SymSeries numerator = a0dot + multiply(a0dot, a0dot) + Rat(1, 4) * psi2;
      SymSeries tail = multiply(numerator, geometric_inverse(psi2));
      return A1 - Rat(1, 2) * logsum + tail;
    }
    case SeriesTag::b1: {
      SymSeries core = sub.get(SeriesTag::b1_nr, N);
      SymSeries trees = sub.get(SeriesTag::b0_prime, N);
      return plethysm(core, SymSeries::p(1, N) + trees);
    }
    case SeriesTag::jbar: {
      SymSeries core = p_derivative(1, sub.get(SeriesTag::b1_nr, N + 1)).truncated(N);
      SymSeries marked = core + multiply(SymSeries::p(1, N), core);
      SymSeries trees = sub.get(SeriesTag::b0_prime, N);
      SymSeries r = plethysm(marked, SymSeries::p(1, N) + trees);
      r.set_coeff({}, Motive());  // the constant term carries no moduli
      return r;
    }
  }
  throw std::logic_error("unreachable series tag");
}

struct PlainProvider : SeriesProvider {
  SymSeries get(SeriesTag tag, int N) override {
    return compute_series(tag, N, *this);
  }
};

inline SymSeries a0(int N) { PlainProvider p; return compute_series(SeriesTag::a0, N, p); }
inline SymSeries a1(int N) { PlainProvider p; return compute_series(SeriesTag::a1, N, p); }
inline SymSeries b0_prime(int N) { PlainProvider p; return compute_series(SeriesTag::b0_prime, N, p); }
inline SymSeries b1_nr(int N) { PlainProvider p; return compute_series(SeriesTag::b1_nr, N, p); }
inline SymSeries b1(int N) { PlainProvider p; return compute_series(SeriesTag::b1, N, p); }
inline SymSeries jbar(int N) { PlainProvider p; return compute_series(SeriesTag::jbar, N, p); }

inline constexpr const char* kEngineVersion = "1";

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("JACGEN_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::path(".jacgen-cache");
}

// Disk-backed provider.  Cache entries are keyed by (tag, N, engine version);
// a hit is byte-identical to recomputation because serialisation is
// deterministic and all arithmetic exact.
class SeriesEngine : public SeriesProvider {
 public:
  explicit SeriesEngine(std::filesystem::path dir = default_cache_dir())
      : dir_(std::move(dir)) {}

  const std::filesystem::path& cache_dir() const { return dir_; }

  std::filesystem::path cache_path(SeriesTag tag, int N) const {
    return dir_ / (series_tag_name(tag) + "-N" + std::to_string(N) + "-v" +
                   kEngineVersion + ".series");
  }

  SymSeries get(SeriesTag tag, int N) override {
    check_guard(tag, N);
    auto path = cache_path(tag, N);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
      SymSeries s = parse_series(read_file(path));
      if (s.max_degree() == N) return s;
    }
    SymSeries s = compute_series(tag, N, *this);
    write_file_atomic(path, serialize_series(s, Basis::powersum));
    return s;
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace jacgen
