#include <doctest.h>

#include <random>
#include <set>

#include "vbrick/symplectic.hpp"

using namespace vbrick;

namespace {

Mod4Class m4(std::vector<std::uint8_t> c) { return Mod4Class(std::move(c)); }
Mod2Class m2(std::vector<std::uint8_t> c) { return Mod2Class(std::move(c)); }

Mod4Class random_mod4(int g, std::mt19937_64& rng) {
  std::vector<std::uint8_t> c(2 * static_cast<std::size_t>(g));
  for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 3u);
  return Mod4Class(std::move(c));
}

}  // namespace

TEST_CASE("mod 4 intersection numbers") {
  CHECK(intersect4(m4({1, 0}), m4({0, 1})) == 1);
  CHECK(intersect4(m4({1, 0}), m4({1, 0})) == 0);
  CHECK(intersect4(m4({1, 0, 2, 0}), m4({0, 1, 0, 3})) == 3);  // 1 + 6 mod 4
  CHECK_THROWS_AS(intersect4(m4({1, 0}), m4({1, 0, 0, 0})), dimension_error);
}

TEST_CASE("order 4 Weil pairing values") {
  const SignConvention plus(1), minus(-1);
  CHECK(weil4(m4({1, 0}), m4({0, 1}), plus) == Mu4::from_exponent(1));   // i
  CHECK(weil4(m4({1, 0}), m4({0, 1}), minus) == Mu4::from_exponent(3));  // -i
  CHECK(weil4(m4({3, 2}), Mod4Class::zero(1), plus).is_one());
  CHECK_THROWS_AS(weil4(m4({1, 0}), m4({1, 0, 0, 0}), plus), dimension_error);
  CHECK_THROWS_AS(SignConvention(0), std::invalid_argument);
}

TEST_CASE("order 2 Weil pairing values") {
  CHECK(weil2(m2({1, 0}), m2({0, 1})) == -1);
  CHECK(weil2(m2({1, 1}), m2({1, 1})) == 1);
  CHECK(weil2(m2({1, 1, 0, 0}), m2({0, 1, 1, 0})) == -1);
}

TEST_CASE("lift fibers") {
  const auto zero_fiber = lifts_of(Mod2Class::zero(1));
  REQUIRE(zero_fiber.size() == 4);
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& a : zero_fiber) seen.insert(a.coords());
  CHECK(seen == std::set<std::vector<std::uint8_t>>{{0, 0}, {2, 0}, {0, 2}, {2, 2}});

  const auto fiber = lifts_of(m2({1, 0}));
  REQUIRE(fiber.size() == 4);
  for (const auto& a : fiber) CHECK(a.mod2() == m2({1, 0}));

  CHECK(lifts_of(Mod2Class::zero(2)).size() == 16);
}

TEST_CASE("pairing laws, exhaustive genus 1") {
  const SignConvention plus(1);
  const int n = 16;
  for (int i = 0; i < n; ++i) {
    const Mod4Class a = Mod4Class::from_index(1, i);
    CHECK(weil4(a, a, plus).is_one());
    bool witness = a.is_zero();
    for (int j = 0; j < n; ++j) {
      const Mod4Class b = Mod4Class::from_index(1, j);
      CHECK((weil4(a, b, plus) * weil4(b, a, plus)).is_one());
      const Mu4 sq = weil4(a, b, plus) * weil4(a, b, plus);
      CHECK(sq.real_sign() == weil2(a.mod2(), b.mod2()));
      if (!a.is_zero() && !weil4(a, b, plus).is_one()) witness = true;
      for (int l = 0; l < n; ++l) {
        const Mod4Class c = Mod4Class::from_index(1, l);
        CHECK(weil4(a + b, c, plus) == weil4(a, c, plus) * weil4(b, c, plus));
      }
    }
    CHECK(witness);  // non-degeneracy
  }
}

TEST_CASE("pairing laws, randomized genus <= 4") {
  const SignConvention plus(1), minus(-1);
  std::mt19937_64 rng(7001);
  for (int g = 2; g <= 4; ++g)
    for (int t = 0; t < 3000; ++t) {
      const Mod4Class a = random_mod4(g, rng), b = random_mod4(g, rng), c = random_mod4(g, rng);
      CHECK(weil4(a + b, c, plus) == weil4(a, c, plus) * weil4(b, c, plus));
      CHECK((weil4(a, b, plus) * weil4(b, a, plus)).is_one());
      CHECK(weil4(a, b, minus) == weil4(a, b, plus).conj());
      CHECK((weil4(a, b, plus) * weil4(a, b, plus)).real_sign() == weil2(a.mod2(), b.mod2()));
    }
}

TEST_CASE("mu4 arithmetic stays in exponent form") {
  CHECK(Mu4::from_exponent(1).pow(2) == Mu4::from_exponent(2));
  CHECK(Mu4::from_exponent(3).pow(-1) == Mu4::from_exponent(1));
  CHECK(Mu4::from_exponent(2).to_gauss() == GaussInt(-1));
  CHECK(Mu4::from_exponent(1).to_gauss() == GaussInt(Integer(0), Integer(1)));
  CHECK_THROWS_AS(Mu4::from_exponent(1).real_sign(), std::domain_error);
}
