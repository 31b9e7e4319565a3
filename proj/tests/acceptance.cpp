// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits non-zero if any criterion fails.

#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "vbrick/characters.hpp"
#include "vbrick/heisenberg.hpp"
#include "vbrick/quadforms.hpp"
#include "vbrick/symplectic.hpp"
#include "vbrick/verlinde.hpp"

using namespace vbrick;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<std::optional<std::string>()>& body) {
  std::optional<std::string> detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (detail) {
    ++g_failures;
    std::cout << "FAIL  criterion " << number << ": " << title << " -- " << *detail << "\n";
  } else {
    std::cout << "PASS  criterion " << number << ": " << title << "\n";
  }
}

std::optional<std::string> ok() { return std::nullopt; }

template <class... Ts>
std::optional<std::string> fail(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Mod4Class random_mod4(int g, std::mt19937_64& rng) {
  std::vector<std::uint8_t> c(2 * static_cast<std::size_t>(g));
  for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 3u);
  return Mod4Class(std::move(c));
}

Mod2Class random_mod2(int g, std::mt19937_64& rng) {
  std::vector<std::uint8_t> c(2 * static_cast<std::size_t>(g));
  for (auto& x : c) x = static_cast<std::uint8_t>(rng() & 1u);
  return Mod2Class(std::move(c));
}

}  // namespace

int main() {
  const SignConvention plus(1), minus(-1);

  criterion(1, "level-2 dimensions match the closed forms (g = 1..8)", [&] {
    for (int g = 1; g <= 8; ++g) {
      const Integer half = pow2(static_cast<unsigned long>(g - 1));
      const Integer full = pow2(static_cast<unsigned long>(g));
      if (verlinde_dim(g, 2) != half * (full + 1))
        return fail("untwisted mismatch at g=", g);
      if (verlinde_dim_twisted(g, 2) != half * (full - 1))
        return fail("twisted mismatch at g=", g);
    }
    return ok();
  });

  criterion(2, "level-4 brick dimensions and reassembly (g = 2..6)", [&] {
    for (int g = 2; g <= 6; ++g) {
      const Integer three = ipow(3ul, static_cast<unsigned long>(g - 1));
      const auto bricks = brick_dims_mod4zero(g, 4);
      const auto twisted = brick_dims_mod4zero_twisted(g, 4);
      if (2 * bricks.second != three + 1) return fail("d^(1) wrong at g=", g);
      if (2 * twisted.second != three - 1) return fail("twisted d^(1) wrong at g=", g);
      if (bricks.first != bricks.second + three) return fail("d^(0) offset wrong at g=", g);
      if (twisted.first != twisted.second + three)
        return fail("twisted d^(0) offset wrong at g=", g);
      const Integer nontrivial = pow2(2 * static_cast<unsigned long>(g)) - 1;
      if (verlinde_dim(g, 4) != bricks.first + nontrivial * bricks.second)
        return fail("reassembly fails at g=", g);
      if (verlinde_dim_twisted(g, 4) != twisted.first + nontrivial * twisted.second)
        return fail("twisted reassembly fails at g=", g);
    }
    return ok();
  });

  criterion(3, "fusion traces equal the trigonometric oracle (g <= 5, k <= 20)", [&] {
    for (int k = 1; k <= 20; ++k) {
      const FusionData fd = make_fusion_data(k);
      for (int g = 1; g <= 5; ++g) {
        const OracleResult u = verlinde_oracle(g, k, false);
        const OracleResult t = verlinde_oracle(g, k, true);
        if (u.value != verlinde_dim(fd, g))
          return fail("untwisted mismatch at g=", g, " k=", k);
        if (t.value != verlinde_dim_twisted(fd, g))
          return fail("twisted mismatch at g=", g, " k=", k);
        if (!(u.residual < 1e-6) || !(t.residual < 1e-6))
          return fail("residual above 1e-6 at g=", g, " k=", k);
      }
    }
    return ok();
  });

  criterion(4, "character decompositions match the closed-form bricks (g <= 4, k <= 12)", [&] {
    for (int g = 1; g <= 4; ++g) {
      const auto table = irreducible_table(g, plus);
      const auto etable = eprime_character_table(g);
      for (int k = 1; k <= 12; ++k) {
        const auto mult = decompose(verlinde_character(g, k, plus));  // throws if not integral
        if (k % 2 == 1) {
          const OddLevelFactor f = odd_level_factor(g, k);
          for (std::size_t i = 0; i < mult.size(); ++i) {
            const auto& irr = table->irreps[i];
            const bool carrier = irr.kind == Irreducible::Kind::stone_von_neumann &&
                                 irr.index == (f.conjugate ? 1u : 0u);
            if (mult[i] != (carrier ? f.multiplicity : Integer(0)))
              return fail("odd-level support wrong at g=", g, " k=", k);
          }
          continue;
        }
        const auto tmult = decompose(twisted_verlinde_character(g, k));
        const bool zero_mode = k % 4 == 0;
        const auto pair = zero_mode ? brick_dims_mod4zero(g, k) : brick_dims_mod4two(g, k);
        const auto tpair =
            zero_mode ? brick_dims_mod4zero_twisted(g, k) : brick_dims_mod4two_twisted(g, k);
        const auto expected = [&](const Irreducible& irr,
                                  const std::pair<Integer, Integer>& p) -> Integer {
          if (zero_mode) {
            if (irr.kind != Irreducible::Kind::two_torsion_character) return 0;
            return irr.index == 0 ? p.first : p.second;
          }
          if (irr.kind != Irreducible::Kind::theta_character) return 0;
          return QuadraticForm(g, irr.index).arf() == 0 ? p.first : p.second;
        };
        for (std::size_t i = 0; i < mult.size(); ++i)
          if (mult[i] != expected(table->irreps[i], pair))
            return fail("brick mismatch on ", table->irreps[i].name(), " at g=", g, " k=", k);
        for (std::size_t i = 0; i < tmult.size(); ++i)
          if (tmult[i] != expected(etable->irreps[i], tpair))
            return fail("twisted brick mismatch on ", etable->irreps[i].name(), " at g=", g,
                        " k=", k);
      }
    }
    return ok();
  });

  criterion(5, "group presentation: order, commutators, center, associativity", [&] {
    for (int g = 1; g <= 3; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      std::set<std::uint64_t> distinct;
      for (const auto& x : el) distinct.insert(G.index_of(x));
      if (Integer(static_cast<long>(distinct.size())) != G.order())
        return fail("order wrong at g=", g);
    }
    // commutator subgroup {1,-1} and center mu4, brute force at g <= 2
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      std::set<std::uint64_t> commutators;
      for (const auto& x : el)
        for (const auto& y : el)
          commutators.insert(
              G.index_of(G.mul(G.mul(x, y), G.mul(G.inverse(x), G.inverse(y)))));
      if (commutators !=
          std::set<std::uint64_t>{G.index_of(G.central(0)), G.index_of(G.central(2))})
        return fail("commutator subgroup is not {1,-1} at g=", g);
      for (const auto& x : el) {
        bool central = true;
        for (const auto& y : el)
          if (!(G.mul(x, y) == G.mul(y, x))) {
            central = false;
            break;
          }
        if (central != x.is_central()) return fail("center is not mu4 at g=", g);
      }
      // (rho_a rho_b)^2 = lambda2(alpha, beta) over all 4-torsion pairs
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << (4 * g)); ++i)
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (4 * g)); ++j) {
          const Mod4Class a = Mod4Class::from_index(g, i), b = Mod4Class::from_index(g, j);
          const EElement p = G.mul(G.rho(a), G.rho(b));
          if (!(G.mul(p, p) == G.central(weil2(a.mod2(), b.mod2()) == 1 ? 0 : 2)))
            return fail("square of a product is not lambda2 at g=", g);
        }
    }
    // associativity: exhaustive at g=1, randomized 1e5 triples at g=2,3
    {
      const HeisenbergGroup G(1);
      const auto el = G.elements();
      for (const auto& x : el)
        for (const auto& y : el)
          for (const auto& z : el)
            if (!(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))))
              return fail("associativity fails at g=1");
    }
    std::mt19937_64 rng(0xacce550001ull);
    for (int g = 2; g <= 3; ++g) {
      const HeisenbergGroup G(g);
      for (int t = 0; t < 100000; ++t) {
        const EElement x =
            G.mul(G.central(static_cast<int>(rng() & 3u)), G.rho(random_mod4(g, rng)));
        const EElement y =
            G.mul(G.central(static_cast<int>(rng() & 3u)), G.rho(random_mod4(g, rng)));
        const EElement z =
            G.mul(G.central(static_cast<int>(rng() & 3u)), G.rho(random_mod4(g, rng)));
        if (!(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))))
          return fail("associativity fails at g=", g);
      }
    }
    return ok();
  });

  criterion(6, "component calculus: partition, swaps, triple rule, cardinalities (g = 2..5)", [&] {
    // even split of the lifts of every non-zero class
    for (int g = 2; g <= 5; ++g)
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << (2 * g)); ++m) {
        const Mod2Class alpha = Mod2Class::from_bits(g, m);
        std::size_t plus_count = 0, minus_count = 0;
        for (const auto& a : lifts_of(alpha))
          (canonical_component(a).sign == 1 ? plus_count : minus_count) += 1;
        if (plus_count != minus_count || plus_count != (std::size_t{1} << (2 * g - 1)))
          return fail("uneven component split at g=", g);
      }
    // swap rule: exhaustive for g=2,3; randomized for g=4,5
    std::mt19937_64 rng(0xacce550002ull);
    for (int g = 2; g <= 5; ++g) {
      const auto check_swap = [&](const Mod2Class& alpha,
                                  const Mod2Class& beta) -> std::optional<std::string> {
        const Mod4Class a = alpha.lift();
        const bool swapped = !same_component(translate_lift(a, beta), a);
        if (swapped != beta_swaps_components(alpha, beta))
          return fail("swap rule fails at g=", g);
        return ok();
      };
      if (g <= 3) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << (2 * g)); ++m)
          for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * g)); ++b)
            if (auto f = check_swap(Mod2Class::from_bits(g, m), Mod2Class::from_bits(g, b)))
              return f;
      } else {
        for (int t = 0; t < 4000; ++t) {
          Mod2Class alpha = random_mod2(g, rng);
          if (alpha.is_zero()) alpha = Mod2Class::from_bits(g, 1);
          if (auto f = check_swap(alpha, random_mod2(g, rng))) return f;
        }
      }
    }
    // triple rule: exhaustive at g=2 over all 4-torsion pairs, randomized above
    const auto check_triple = [&](const Mod4Class& a,
                                  const Mod4Class& b) -> std::optional<std::string> {
      const Mod2Class alpha = a.mod2(), beta = b.mod2();
      if (alpha.is_zero() || beta.is_zero() || (alpha + beta).is_zero()) return ok();
      if (weil2(alpha, beta) != 1) return ok();
      const TripleIntersectionRule rule = triple_intersection_sign(a, b, plus);
      if (rule.pairing_sign != weil4(a, b, plus).real_sign())
        return fail("pairing sign mismatch");
      int nonempty = 0;
      for (int e : {1, -1})
        for (int m : {1, -1})
          for (int n : {1, -1}) {
            if (rule.nonempty(e, m, n)) ++nonempty;
            if (rule.nonempty(e, m, n) != rule.nonempty(-e, -m, n) ||
                rule.nonempty(e, m, n) != rule.nonempty(e, -m, -n))
              return fail("double-flip closure fails");
          }
      if (nonempty != 4) return fail("wrong number of non-empty triples");
      return ok();
    };
    for (std::uint64_t i = 0; i < 256; ++i)
      for (std::uint64_t j = 0; j < 256; ++j)
        if (auto f = check_triple(Mod4Class::from_index(2, i), Mod4Class::from_index(2, j)))
          return f;
    for (int g = 3; g <= 5; ++g)
      for (int t = 0; t < 4000; ++t)
        if (auto f = check_triple(random_mod4(g, rng), random_mod4(g, rng))) return f;
    // cardinalities from the coset model
    for (int g = 2; g <= 5; ++g) {
      int tested = 0;
      for (int t = 0; t < 2000 && tested < 40; ++t) {
        const Mod2Class alpha = random_mod2(g, rng), beta = random_mod2(g, rng);
        if (alpha.is_zero() || beta.is_zero() || alpha == beta || weil2(alpha, beta) != 1)
          continue;
        ++tested;
        const auto cards = intersection_cardinalities(alpha, beta);
        if (cards.pairwise != pow2(2 * static_cast<unsigned long>(g) - 2))
          return fail("pairwise cardinality wrong at g=", g);
        if (cards.per_component_pair != pow2(2 * static_cast<unsigned long>(g) - 4))
          return fail("component-pair cardinality wrong at g=", g);
      }
      if (tested < 10) return fail("not enough valid pairs sampled at g=", g);
    }
    return ok();
  });

  criterion(7, "quadratic form counts by Arf and by value constraint (g = 1..6)", [&] {
    std::mt19937_64 rng(0xacce550003ull);
    for (int g = 1; g <= 6; ++g) {
      if (count_by_arf(g) != count_by_arf_closed(g)) return fail("Arf count wrong at g=", g);
      const Integer expect = pow2(2 * static_cast<unsigned long>(g) - 2);
      std::vector<Mod2Class> alphas;
      if (g <= 3) {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << (2 * g)); ++m)
          alphas.push_back(Mod2Class::from_bits(g, m));
      } else {
        alphas.push_back(Mod2Class::from_bits(g, 1));
        for (int t = 0; t < 8; ++t) {
          Mod2Class alpha = random_mod2(g, rng);
          if (!alpha.is_zero()) alphas.push_back(alpha);
        }
      }
      for (const auto& alpha : alphas) {
        const auto counts = count_value_constrained(alpha);
        if (counts.first != expect || counts.second != expect)
          return fail("constrained count wrong at g=", g);
      }
    }
    return ok();
  });

  criterion(8, "odd levels factor through the level-one space (g <= 4, k <= 11)", [&] {
    for (int g = 1; g <= 4; ++g) {
      const auto table = irreducible_table(g, plus);
      for (int k = 1; k <= 11; k += 2) {
        const OddLevelFactor f = odd_level_factor(g, k);
        if (f.multiplicity * pow2(static_cast<unsigned long>(g)) != verlinde_dim(g, k))
          return fail("multiplicity wrong at g=", g, " k=", k);
        if (f.conjugate != (k % 4 == 3)) return fail("conjugate flag wrong at k=", k);
        const auto mult = decompose(verlinde_character(g, k, plus));
        for (std::size_t i = 0; i < mult.size(); ++i) {
          const auto& irr = table->irreps[i];
          const bool carrier = irr.kind == Irreducible::Kind::stone_von_neumann &&
                               irr.index == (f.conjugate ? 1u : 0u);
          if (mult[i] != (carrier ? f.multiplicity : Integer(0)))
            return fail("support wrong at g=", g, " k=", k);
        }
      }
    }
    return ok();
  });

  criterion(9, "root-of-unity normalization identity (k = 1..200, both signs)", [&] {
    for (int k = 1; k <= 200; ++k)
      for (int e : {1, -1})
        if (!root_of_unity_identity(k, SignConvention(e)))
          return fail("identity fails at k=", k, " epsilon=", e);
    return ok();
  });

  criterion(10, "integer outputs are sign-convention independent", [&] {
    std::mt19937_64 rng(0xacce5500aull);
    // mu4 outputs conjugate, mu2 outputs agree
    for (int g = 1; g <= 4; ++g)
      for (int t = 0; t < 2000; ++t) {
        const Mod4Class a = random_mod4(g, rng), b = random_mod4(g, rng);
        if (!(weil4(a, b, minus) == weil4(a, b, plus).conj()))
          return fail("weil4 not conjugated at g=", g);
      }
    for (int g = 1; g <= 3; ++g) {
      // the two 2^g-dim irreducibles are exchanged between the two tables
      const auto tp = irreducible_table(g, plus);
      const auto tm = irreducible_table(g, minus);
      const std::size_t svn = tp->irreps.size() - 2;
      for (std::size_t c = 0; c < tp->irreps[svn].values.size(); ++c)
        if (!(tp->irreps[svn].values[c] == tm->irreps[svn + 1].values[c]) ||
            !(tp->irreps[svn + 1].values[c] == tm->irreps[svn].values[c]))
          return fail("2^g-dim irreducibles not exchanged at g=", g);
      for (int k = 1; k <= 8; ++k) {
        // characters conjugate entrywise
        const ClassFunction ca = verlinde_character(g, k, plus);
        const ClassFunction cb = verlinde_character(g, k, minus);
        for (std::size_t c = 0; c < ca.values.size(); ++c)
          if (!(ca.values[c] == cb.values[c].conj())) return fail("character not conjugated");
        // multiplicities, indexed relative to the configured sign, are identical
        if (decompose(ca) != decompose(cb))
          return fail("multiplicities changed with the sign at g=", g, " k=", k);
        // the dimension entry itself carries no sign dependence
        if (!(ca.values[0] == cb.values[0]))
          return fail("dimension value changed with the sign");
      }
    }
    return ok();
  });

  if (g_failures == 0) {
    std::cout << "acceptance: all criteria hold\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion failure(s)\n";
  return 1;
}
