#include <jacgen/genfun.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

#include <cstdlib>
#include <filesystem>
#include <random>

using namespace jacgen;
using testsupport::palindromic;
using testsupport::schur_coeff;
using testsupport::tate_from_ints;

namespace {

Motive tate(std::initializer_list<long> ascending) {
  return Motive(tate_from_ints(std::vector<long>(ascending)));
}

// Falling factorial e (e-1) ... (e-n+1).
Motive falling(const Motive& e, int n) {
  Motive acc(1);
  for (int j = 0; j < n; ++j) acc = acc * (e - Motive(j));
  return acc;
}

}  // namespace

TEST_CASE("configuration series of the projective line") {
  Motive line = Motive(1) + Motive::L();
  SymSeries conf = conf_series(line, 5);
  CHECK(conf.coeff({}) == Motive(1));

  auto deg1 = change_basis(conf.degree_part(1), Basis::schur);
  REQUIRE(deg1.size() == 1);
  CHECK(deg1[0] == std::pair<Partition, Motive>({1}, line));

  // two distinct points: inclusion-exclusion on the square minus diagonal
  CHECK(schur_coeff(conf, {2}) == TatePoly::L(2));
  CHECK(schur_coeff(conf, {1, 1}) == TatePoly::L());
}

TEST_CASE("configuration series dimension counts are falling factorials") {
  std::mt19937 rng(551);
  std::uniform_int_distribution<int> cf(-3, 3);
  for (int iter = 0; iter < 6; ++iter) {
    Motive e;
    for (int d = 0; d <= 2; ++d) e.add_term(d, 0, Rat(cf(rng)));
    SymSeries conf = conf_series(e, 5);
    for (int n = 0; n <= 5; ++n)
      CHECK(dimension_specialization(conf, n) == falling(e, n));
  }
}

TEST_CASE("genus-0 open moduli series") {
  SymSeries A0 = a0(6);
  CHECK(A0.degree_part(0).is_zero());
  CHECK(A0.degree_part(1).is_zero());
  CHECK(A0.degree_part(2).is_zero());

  // three points on a line modulo automorphisms is a point
  CHECK(A0.degree_part(3) == SymSeries::schur({3}, 6).truncated(6));
  // four points: L s_4 - s_22 (the three boundary points carry s_4 + s_22)
  CHECK(schur_coeff(A0, {4}) == TatePoly::L());
  CHECK(schur_coeff(A0, {2, 2}) == TatePoly(-1));
  CHECK(schur_coeff(A0, {3, 1}) == TatePoly());

  // dimension specialization is the product (L-2)(L-3)...(L-(n-2))
  SymSeries A0big = a0(9);
  for (int n = 3; n <= 9; ++n) {
    Motive expect(1);
    for (int j = 2; j <= n - 2; ++j) expect = expect * (Motive::L() - Motive(j));
    CHECK(dimension_specialization(A0big, n) == expect);
  }

  CHECK_THROWS_AS(a0(2), std::invalid_argument);
}

TEST_CASE("genus-1 open moduli series") {
  SymSeries A1 = a1(4);
  CHECK(A1.degree_part(1) == (Motive::L() * SymSeries::schur({1}, 4)).truncated(4));
  CHECK(A1.degree_part(2) == (Motive::L(2) * SymSeries::schur({2}, 4)).truncated(4));
  CHECK(dimension_specialization(A1, 3) == Motive::L(3) - Motive(1));

  // every coefficient is a polynomial in L with integer coefficients
  for (auto& [lam, v] : change_basis(A1, Basis::schur, true))
    CHECK(v.is_tate());

  CHECK_THROWS_AS(a1(10), NonTateRegime);
}

TEST_CASE("genus-1 open moduli dimensions match the fibre product formula") {
  // Non-equivariantly the configuration of n points on a genus-1 fibre,
  // divided by translation, is the product of the punctured-fibre classes
  // (L - c)(L - c - 1)...(L - c - n + 2); its modular evaluation must equal
  // the dimension specialization of the equivariant series.
  SymSeries A1 = a1(9);
  Motive fibre_minus_point = Motive::L() - Motive::c();
  for (int n = 1; n <= 9; ++n) {
    Motive prod(1);
    for (int j = 0; j <= n - 2; ++j)
      prod = prod * (fibre_minus_point - Motive(j));
    TatePoly expect = eichler_shimura(prod);
    CHECK(dimension_specialization(A1, n) == Motive(expect));
  }
}

TEST_CASE("stable genus-0 derivative series") {
  SymSeries B = b0_prime(6);
  CHECK(B.degree_part(0).is_zero());
  CHECK(B.degree_part(1).is_zero());
  CHECK(B.degree_part(2) == SymSeries::schur({2}, 6).truncated(6));
  CHECK(schur_coeff(B, {3}) == tate_from_ints({1, 1}));

  // the defining fixed point has zero residual
  SymSeries a0p = p_derivative(1, a0(7)).truncated(6);
  SymSeries residual = plethysm(a0p, SymSeries::p(1, 6) + B) - B;
  CHECK(residual.is_zero());
}

TEST_CASE("necklace-locus series") {
  SymSeries B = b1_nr(4);
  CHECK(schur_coeff(B, {1}) == tate_from_ints({1, 1}));
  CHECK(schur_coeff(B, {2}) == tate_from_ints({0, 1, 1}));
  for (auto& [lam, v] : change_basis(B, Basis::schur, true))
    CHECK(v.is_tate());
  CHECK_THROWS_AS(b1_nr(10), NonTateRegime);
}

TEST_CASE("stable genus-1 series matches the published values") {
  SymSeries B = b1(5);
  CHECK(schur_coeff(B, {2}) == tate_from_ints({1, 2, 1}));
  CHECK(schur_coeff(B, {3, 2}) == tate_from_ints({0, 2, 7, 7, 2}));
  CHECK(schur_coeff(B, {2, 1}) == tate_from_ints({0, 1, 1}));
  CHECK(schur_coeff(B, {1, 1}) == TatePoly());
  CHECK_THROWS_AS(b1(10), NonTateRegime);
}

TEST_CASE("universal Jacobian series matches the published values") {
  SymSeries J = jbar(3);
  CHECK(J.degree_part(0).is_zero());
  CHECK(schur_coeff(J, {1}) == tate_from_ints({1, 2, 1}));
  CHECK(schur_coeff(J, {2}) == tate_from_ints({1, 3, 3, 1}));
  CHECK(schur_coeff(J, {1, 1}) == tate_from_ints({0, 1, 1}));
  CHECK(schur_coeff(J, {3}) == tate_from_ints({1, 4, 7, 4, 1}));
  CHECK(schur_coeff(J, {2, 1}) == tate_from_ints({0, 2, 4, 2}));
  CHECK_THROWS_AS(jbar(9), NonTateRegime);
}

TEST_CASE("all series are Schur-integral over their full range") {
  CHECK_NOTHROW(change_basis(a0(9), Basis::schur, true));
  CHECK_NOTHROW(change_basis(b0_prime(9), Basis::schur, true));
  CHECK_NOTHROW(change_basis(b1_nr(9), Basis::schur, true));
}

TEST_CASE("palindromicity at low degree") {
  SymSeries J = jbar(4);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(palindromic(schur_coeff(J, lam), n + 1));
  SymSeries B = b1(4);
  for (int n = 1; n <= 4; ++n)
    for (const auto& lam : partitions_of(n))
      CHECK(palindromic(schur_coeff(B, lam), n));
}

TEST_CASE("truncation stability") {
  SymSeries small = b1(4);
  SymSeries large = b1(6);
  CHECK(large.truncated(4) == small);
  CHECK(jbar(5).truncated(3) == jbar(3));
}

TEST_CASE("series cache round-trips and is byte-stable") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("jacgen-test-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  SeriesEngine engine(dir);

  SymSeries first = engine.get(SeriesTag::b1, 4);
  CHECK(fs::exists(engine.cache_path(SeriesTag::b1, 4)));
  // dependencies are cached as well
  CHECK(fs::exists(engine.cache_path(SeriesTag::b1_nr, 4)));
  CHECK(fs::exists(engine.cache_path(SeriesTag::a0, 6)));

  std::string bytes_cached = read_file(engine.cache_path(SeriesTag::b1, 4));
  SymSeries second = engine.get(SeriesTag::b1, 4);  // cache hit
  CHECK(second == first);

  fs::remove_all(dir);
  SymSeries third = engine.get(SeriesTag::b1, 4);  // recomputation
  CHECK(third == first);
  CHECK(read_file(engine.cache_path(SeriesTag::b1, 4)) == bytes_cached);

  // a parse of the cached document reproduces the series exactly
  CHECK(parse_series(bytes_cached) == first);
  fs::remove_all(dir);
}

TEST_CASE("series document serialisation is deterministic") {
  SymSeries J = jbar(3);
  std::string a = serialize_series(J, Basis::schur);
  std::string b = serialize_series(jbar(3), Basis::schur);
  CHECK(a == b);
  CHECK(parse_series(a) == J);
}
