#include <jacgen/motive.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

#include <random>

using namespace jacgen;
using testsupport::random_motive;

namespace {
const Motive L = Motive::L();
const Motive c = Motive::c();
}  // namespace

TEST_CASE("adams on the generators") {
  CHECK(adams(2, c) == c * c - Rat(2) * L);
  CHECK(adams(3, L) == Motive::L(3));
  CHECK(adams(2, Motive(1) - c + L) ==
        Motive(1) - (c * c - Rat(2) * L) + Motive::L(2));
  CHECK(adams(1, c * c * L - c) == c * c * L - c);
}

TEST_CASE("adams is a ring homomorphism and multiplicative in k") {
  std::mt19937 rng(881);
  for (int iter = 0; iter < 60; ++iter) {
    Motive x = random_motive(rng);
    Motive y = random_motive(rng);
    for (int k = 1; k <= 5; ++k) {
      CHECK(adams(k, x * y) == adams(k, x) * adams(k, y));
      CHECK(adams(k, x + y) == adams(k, x) + adams(k, y));
    }
    CHECK(adams(2, adams(3, x)) == adams(6, x));
    CHECK(adams(4, x) == adams(2, adams(2, x)));
  }
}

TEST_CASE("symmetric power basis decomposition") {
  auto dec = to_vk_basis(c);
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == 1);
  CHECK(dec[0].second == TatePoly(1));

  // h_2 = c^2 - L, h_3 = c^3 - 2Lc
  auto dec2 = to_vk_basis(c * c);
  REQUIRE(dec2.size() == 2);
  CHECK(dec2[0] == std::pair<int, TatePoly>(0, TatePoly::L()));
  CHECK(dec2[1] == std::pair<int, TatePoly>(2, TatePoly(1)));

  auto dec3 = to_vk_basis(c * c * c);
  REQUIRE(dec3.size() == 2);
  CHECK(dec3[0] == std::pair<int, TatePoly>(1, Rat(2) * TatePoly::L()));
  CHECK(dec3[1] == std::pair<int, TatePoly>(3, TatePoly(1)));
}

TEST_CASE("symmetric power decomposition round-trips") {
  std::mt19937 rng(882);
  for (int iter = 0; iter < 100; ++iter) {
    Motive x = random_motive(rng, 8, 6, 9);
    CHECK(from_vk_basis(to_vk_basis(x)) == x);
  }
}

TEST_CASE("eichler-shimura evaluation") {
  CHECK(eichler_shimura(Motive(1)) == TatePoly::L());
  CHECK(eichler_shimura(c) == TatePoly());
  CHECK(eichler_shimura(c * c - L) == TatePoly(-1));
}

TEST_CASE("eichler-shimura is linear over L-polynomials") {
  std::mt19937 rng(883);
  for (int iter = 0; iter < 60; ++iter) {
    Motive x = random_motive(rng, 4, 4, 5);
    // keep the c-degree in the supported range
    Motive trimmed;
    for (const auto& [k, v] : x.terms())
      if (k.second <= 7) trimmed.add_term(k.first, k.second, v);
    Motive a = random_motive(rng, 3, 3, 5);
    Motive a_tate;
    for (const auto& [k, v] : a.terms()) a_tate.add_term(k.first, 0, v);
    TatePoly left = eichler_shimura(a_tate * trimmed);
    TatePoly right = a_tate.tate() * eichler_shimura(trimmed);
    CHECK(left == right);
  }
}

TEST_CASE("eichler-shimura rejects weights outside the guard") {
  // c^10 involves the tenth symmetric power, weight 12.
  Motive big(1);
  for (int i = 0; i < 10; ++i) big = big * c;
  CHECK_THROWS_AS(eichler_shimura(big), NonTateRegime);
  try {
    eichler_shimura(big);
  } catch (const NonTateRegime& e) {
    CHECK(e.weight == 12);
  }
  // odd powers beyond the guard vanish and are fine
  Motive odd(1);
  for (int i = 0; i < 11; ++i) odd = odd * c;
  CHECK(eichler_shimura(odd) == TatePoly());
}

TEST_CASE("exact division") {
  Motive one(1);
  CHECK(*div_exact((one - c + L) * c, one - c + L) == c);
  CHECK(*div_exact(Motive::L(3) - L, L - one) == Motive::L(2) + L);
  CHECK(!div_exact(c, L).has_value());
  CHECK_THROWS_AS(div_exact(c, Motive()), std::invalid_argument);
}

TEST_CASE("division round-trips on random elements") {
  std::mt19937 rng(884);
  for (int iter = 0; iter < 120; ++iter) {
    Motive x = random_motive(rng);
    Motive y = random_motive(rng);
    if (y.is_zero()) continue;
    auto q = div_exact(x * y, y);
    REQUIRE(q.has_value());
    CHECK(*q == x);
  }
}

TEST_CASE("tate polynomial pretty printing") {
  TatePoly t = testsupport::tate_from_ints({1, 3, 3, 1});
  CHECK(t.pretty() == "L^3 + 3L^2 + 3L + 1");
  CHECK(testsupport::tate_from_ints({0, 1, 1}).pretty() == "L^2 + L");
  CHECK(testsupport::tate_from_ints({0, -2, 0, 1}).pretty() == "L^3 - 2L");
  CHECK(TatePoly().pretty() == "0");
  CHECK(TatePoly(7).pretty() == "7");
}
