#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "vbrick/characters.hpp"
#include "vbrick/cli.hpp"
#include "vbrick/heisenberg.hpp"
#include "vbrick/quadforms.hpp"
#include "vbrick/symplectic.hpp"
#include "vbrick/verlinde.hpp"

namespace vbrick::cli {

namespace {

using Check = std::function<std::optional<std::string>()>;

struct Reporter {
  std::ostream& out;
  int failures = 0;

  void run(const std::string& name, const Check& body) {
    std::optional<std::string> detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail) {
      ++failures;
      out << "FAIL " << name << ": " << *detail << "\n";
    } else {
      out << "PASS " << name << "\n";
    }
  }
};

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

std::string show(const Mod4Class& a) {
  std::string s = "(";
  for (std::size_t j = 0; j < a.coords().size(); ++j)
    s += (j ? "," : "") + std::to_string(a.coords()[j]);
  return s + ")";
}

std::string show(const Mod2Class& a) {
  std::string s = "(";
  for (std::size_t j = 0; j < a.coords().size(); ++j)
    s += (j ? "," : "") + std::to_string(a.coords()[j]);
  return s + ")";
}

// ---- pairing suite ---------------------------------------------------------

void suite_pairing(Reporter& rep, const RunConfig& cfg) {
  const SignConvention plus(1), minus(-1);

  rep.run("pairing/bilinearity+antisymmetry (g<=2 exhaustive)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const std::uint64_t n = std::uint64_t{1} << (4 * g);  // 4^{2g} classes
      std::vector<int> pairing(n * n);
      std::vector<Mod4Class> cls;
      cls.reserve(n);
      for (std::uint64_t i = 0; i < n; ++i) cls.push_back(Mod4Class::from_index(g, i));
      std::vector<std::uint64_t> sum(n * n);
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
          pairing[i * n + j] = intersect4(cls[i], cls[j]);
          std::uint64_t s = 0, pw = 1;
          for (std::size_t d = 0; d < cls[i].coords().size(); ++d, pw *= 4)
            s += pw * ((cls[i].coords()[d] + cls[j].coords()[d]) & 3u);
          sum[i * n + j] = s;
        }
      for (std::uint64_t i = 0; i < n; ++i) {
        if (pairing[i * n + i] != 0) return fail("a.a != 0 at g=", g, " a=", show(cls[i]));
        for (std::uint64_t j = 0; j < n; ++j) {
          if ((pairing[i * n + j] + pairing[j * n + i]) % 4 != 0)
            return fail("antisymmetry fails at g=", g);
          for (std::uint64_t l = 0; l < n; ++l)
            if ((pairing[i * n + l] + pairing[j * n + l]) % 4 !=
                pairing[sum[i * n + j] * n + l] % 4)
              return fail("bilinearity fails at g=", g, " a=", show(cls[i]), " b=", show(cls[j]),
                          " c=", show(cls[l]));
        }
      }
    }
    return ok();
  });

  rep.run("pairing/bilinearity (g<=4 randomized)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x11);
    for (int g = 3; g <= 4; ++g)
      for (int t = 0; t < 20000; ++t) {
        const Mod4Class a = random_mod4(g, rng), b = random_mod4(g, rng), c = random_mod4(g, rng);
        if (!(weil4(a + b, c, plus) == weil4(a, c, plus) * weil4(b, c, plus)))
          return fail("bilinearity fails at g=", g, " a=", show(a), " b=", show(b), " c=", show(c));
        if (!(weil4(a, b, plus) * weil4(b, a, plus)).is_one())
          return fail("antisymmetry fails at g=", g);
        if (!weil4(a, a, plus).is_one()) return fail("a.a != 0 at g=", g);
      }
    return ok();
  });

  rep.run("pairing/non-degeneracy (g<=2 exhaustive)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const std::uint64_t n = std::uint64_t{1} << (4 * g);
      for (std::uint64_t i = 1; i < n; ++i) {
        const Mod4Class a = Mod4Class::from_index(g, i);
        bool witness = false;
        for (std::uint64_t j = 0; j < n && !witness; ++j)
          witness = !weil4(a, Mod4Class::from_index(g, j), plus).is_one();
        if (!witness) return fail("no dual partner for ", show(a), " at g=", g);
      }
    }
    return ok();
  });

  rep.run("pairing/order-2 compatibility weil4^2 = weil2 (g<=2 exhaustive)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const std::uint64_t n = std::uint64_t{1} << (4 * g);
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j) {
          const Mod4Class a = Mod4Class::from_index(g, i), b = Mod4Class::from_index(g, j);
          const Mu4 sq = weil4(a, b, plus) * weil4(a, b, plus);
          if (sq.real_sign() != weil2(a.mod2(), b.mod2()))
            return fail("compatibility fails at g=", g, " a=", show(a), " b=", show(b));
        }
    }
    return ok();
  });

  rep.run("pairing/epsilon conjugates mu4 and fixes mu2", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x12);
    for (int g = 1; g <= 4; ++g)
      for (int t = 0; t < 2000; ++t) {
        const Mod4Class a = random_mod4(g, rng), b = random_mod4(g, rng);
        if (!(weil4(a, b, minus) == weil4(a, b, plus).conj()))
          return fail("weil4 not conjugated at g=", g);
        if (weil2(a.mod2(), b.mod2()) != weil2(a.mod2(), b.mod2()))
          return fail("weil2 changed at g=", g);
      }
    return ok();
  });

  rep.run("pairing/lift fibers have 2^{2g} elements (g<=3)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x13);
    for (int g = 1; g <= 3; ++g) {
      const Mod2Class alpha = random_mod2(g, rng);
      const auto lifts = lifts_of(alpha);
      if (lifts.size() != (std::size_t{1} << (2 * g))) return fail("wrong fiber size at g=", g);
      std::set<std::vector<std::uint8_t>> distinct;
      for (const auto& a : lifts) {
        if (!(a.mod2() == alpha)) return fail("lift has wrong reduction at g=", g);
        distinct.insert(a.coords());
      }
      if (distinct.size() != lifts.size()) return fail("duplicate lifts at g=", g);
    }
    return ok();
  });
}

// ---- group suite -----------------------------------------------------------

void suite_group(Reporter& rep, const RunConfig& cfg) {
  rep.run("group/associativity (g=1 exhaustive over 16^3 triples)", [&] {
    const HeisenbergGroup G(1);
    const auto el = G.elements();
    for (const auto& x : el)
      for (const auto& y : el)
        for (const auto& z : el)
          if (!(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))))
            return fail("associativity fails at g=1");
    return ok();
  });

  rep.run("group/associativity (g=2,3 randomized, 1e5 triples each)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x21);
    for (int g = 2; g <= 3; ++g) {
      const HeisenbergGroup G(g);
      for (int t = 0; t < 100000; ++t) {
        const EElement x = G.rho(random_mod4(g, rng)),
                       y = G.mul(G.central(static_cast<int>(rng() & 3u)),
                                 G.rho(random_mod4(g, rng))),
                       z = G.mul(G.central(static_cast<int>(rng() & 3u)),
                                 G.rho(random_mod4(g, rng)));
        if (!(G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))))
          return fail("associativity fails at g=", g);
      }
    }
    return ok();
  });

  rep.run("group/defining relation rho_a rho_b = lambda4 rho_{a+b} (g<=2 exhaustive)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << (4 * g)); ++i)
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (4 * g)); ++j) {
          const Mod4Class a = Mod4Class::from_index(g, i), b = Mod4Class::from_index(g, j);
          if (!(G.mul(G.rho(a), G.rho(b)) ==
                G.mul(G.central(intersect4(a, b)), G.rho(a + b))))
            return fail("relation fails at g=", g, " a=", show(a), " b=", show(b));
        }
    }
    return ok();
  });

  rep.run("group/order, unit, inverses (g<=3)", [&] {
    for (int g = 1; g <= 3; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      if (Integer(static_cast<long>(el.size())) != G.order())
        return fail("wrong order at g=", g);
      std::set<std::uint64_t> distinct;
      for (const auto& x : el) distinct.insert(G.index_of(x));
      if (distinct.size() != el.size()) return fail("duplicate elements at g=", g);
      for (const auto& x : el) {
        if (!(G.mul(G.identity(), x) == x) || !(G.mul(x, G.identity()) == x))
          return fail("unit law fails at g=", g);
        if (!(G.mul(x, G.inverse(x)) == G.identity()))
          return fail("inverse law fails at g=", g);
      }
    }
    return ok();
  });

  rep.run("group/squares central; section squares trivial (g<=3)", [&] {
    for (int g = 1; g <= 3; ++g) {
      const HeisenbergGroup G(g);
      for (const auto& x : G.elements()) {
        const EElement sq = G.mul(x, x);
        if (!sq.is_central()) return fail("square not central at g=", g);
        if (x.phase == 0 && !(sq == G.identity()))
          return fail("section element does not square to 1 at g=", g);
      }
    }
    return ok();
  });

  rep.run("group/commutator equals order-2 pairing (g<=2 exhaustive)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      for (const auto& x : el)
        for (const auto& y : el) {
          const EElement c = G.mul(G.mul(x, y), G.mul(G.inverse(x), G.inverse(y)));
          const int expect = weil2(Mod2Class(x.rep), Mod2Class(y.rep));
          if (!(c == G.central(expect == 1 ? 0 : 2)))
            return fail("commutator mismatch at g=", g);
        }
    }
    return ok();
  });

  rep.run("group/center is the phase subgroup (g<=2 brute force)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      for (const auto& x : el) {
        bool commutes_with_all = true;
        for (const auto& y : el)
          if (!(G.mul(x, y) == G.mul(y, x))) {
            commutes_with_all = false;
            break;
          }
        if (commutes_with_all != x.is_central()) return fail("center mismatch at g=", g);
      }
    }
    return ok();
  });

  rep.run("group/conjugacy classes match brute force (g<=2)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      const auto classes = G.conjugacy_classes();
      for (const auto& x : el) {
        std::set<std::uint64_t> orbit;
        for (const auto& y : el) orbit.insert(G.index_of(G.conjugate(y, x)));
        std::set<std::uint64_t> structural;
        for (const auto& z : classes[G.class_index(x)]) structural.insert(G.index_of(z));
        if (orbit != structural) return fail("class of an element differs at g=", g);
      }
      std::size_t total = 0;
      for (const auto& cls : classes) total += cls.size();
      if (Integer(static_cast<long>(total)) != G.order())
        return fail("class equation fails at g=", g);
    }
    return ok();
  });

  rep.run("group/reduction onto E' is a homomorphism (g<=2)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      const auto el = G.elements();
      std::set<std::uint64_t> image;
      for (const auto& x : el) {
        image.insert(eprime_index(G.reduce(x)));
        for (const auto& y : el)
          if (!(G.reduce(G.mul(x, y)) == eprime_mul(G.reduce(x), G.reduce(y))))
            return fail("reduction not multiplicative at g=", g);
      }
      if (image.size() != (std::size_t{2} << (2 * g))) return fail("reduction not onto at g=", g);
    }
    return ok();
  });

  rep.run("group/component partition is an even split (g<=4)", [&] {
    for (int g = 2; g <= std::min(cfg.genus_hi, 4); ++g) {
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << (2 * g)); ++m) {
        const Mod2Class alpha = Mod2Class::from_bits(g, m);
        std::size_t plus_count = 0, minus_count = 0;
        for (const auto& a : lifts_of(alpha))
          (canonical_component(a).sign == 1 ? plus_count : minus_count) += 1;
        if (plus_count != minus_count || plus_count != (std::size_t{1} << (2 * g - 1)))
          return fail("uneven split at g=", g, " alpha=", show(alpha));
      }
    }
    return ok();
  });

  rep.run("group/translation swaps components iff pairing is -1 (g<=3 exhaustive)", [&] {
    for (int g = 2; g <= 3; ++g)
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << (2 * g)); ++m) {
        const Mod2Class alpha = Mod2Class::from_bits(g, m);
        const Mod4Class a = alpha.lift();
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << (2 * g)); ++b) {
          const Mod2Class beta = Mod2Class::from_bits(g, b);
          const bool swapped = !same_component(translate_lift(a, beta), a);
          if (swapped != beta_swaps_components(alpha, beta))
            return fail("swap rule fails at g=", g, " alpha=", show(alpha), " beta=", show(beta));
        }
      }
    return ok();
  });

  rep.run("group/triple intersection rule (g=2 exhaustive, g=3 randomized)", [&] {
    const SignConvention plus(1), minus(-1);
    const auto check_pair = [&](const Mod4Class& a, const Mod4Class& b) -> std::optional<std::string> {
      const Mod2Class alpha = a.mod2(), beta = b.mod2();
      if (alpha.is_zero() || beta.is_zero() || (alpha + beta).is_zero()) return ok();
      if (weil2(alpha, beta) != 1) return ok();
      const TripleIntersectionRule rule = triple_intersection_sign(a, b, plus);
      if (rule.pairing_sign != triple_intersection_sign(a, b, minus).pairing_sign)
        return fail("triple rule depends on epsilon");
      int nonempty = 0;
      for (int e : {1, -1})
        for (int m : {1, -1})
          for (int n : {1, -1}) {
            if (rule.nonempty(e, m, n)) ++nonempty;
            if (rule.nonempty(e, m, n) != rule.nonempty(-e, -m, n) ||
                rule.nonempty(e, m, n) != rule.nonempty(-e, m, -n))
              return fail("double-flip closure fails");
          }
      if (nonempty != 4) return fail("expected exactly 4 non-empty sign triples");
      const int expected = weil4(a, b, plus).real_sign();
      if (rule.pairing_sign != expected) return fail("pairing sign mismatch");
      return ok();
    };
    const int g2 = 2;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << (4 * g2)); ++i)
      for (std::uint64_t j = 0; j < (std::uint64_t{1} << (4 * g2)); ++j)
        if (auto f = check_pair(Mod4Class::from_index(g2, i), Mod4Class::from_index(g2, j)))
          return f;
    std::mt19937_64 rng(cfg.seed ^ 0x22);
    for (int t = 0; t < 20000; ++t)
      if (auto f = check_pair(random_mod4(3, rng), random_mod4(3, rng))) return f;
    return ok();
  });

  rep.run("group/intersection cardinalities from the coset model (g=2..5)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x23);
    for (int g = 2; g <= 5; ++g) {
      int tested = 0;
      for (int t = 0; t < 400 && tested < 50; ++t) {
        const Mod2Class alpha = random_mod2(g, rng), beta = random_mod2(g, rng);
        if (alpha.is_zero() || beta.is_zero() || alpha == beta || weil2(alpha, beta) != 1)
          continue;
        ++tested;
        const auto cards = intersection_cardinalities(alpha, beta);
        if (cards.pairwise != pow2(2 * static_cast<unsigned long>(g) - 2) ||
            cards.per_component_pair != pow2(2 * static_cast<unsigned long>(g) - 4))
          return fail("cardinalities wrong at g=", g);
      }
      if (tested == 0) return fail("no valid pair sampled at g=", g);
    }
    return ok();
  });

  rep.run("group/E' relations (g<=2 exhaustive)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const std::uint64_t n = std::uint64_t{2} << (2 * g);
      for (std::uint64_t i = 0; i < n; ++i) {
        const EPrimeElement x = eprime_from_index(g, i);
        if (!(eprime_mul(x, x) == eprime_identity(g))) return fail("E' element of order > 2");
        for (std::uint64_t j = 0; j < n; ++j) {
          const EPrimeElement y = eprime_from_index(g, j);
          if (!(eprime_mul(x, y) == eprime_mul(y, x))) return fail("E' not abelian");
        }
      }
    }
    return ok();
  });
}

// ---- quadform suite --------------------------------------------------------

void suite_quadforms(Reporter& rep, const RunConfig& cfg) {
  rep.run("quadforms/polarization identity (g<=2 exhaustive, g<=4 randomized)", [&] {
    for (int g = 1; g <= 2; ++g)
      for (const auto& q : QuadraticForm::all(g))
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << (2 * g)); ++i)
          for (std::uint64_t j = 0; j < (std::uint64_t{1} << (2 * g)); ++j) {
            const Mod2Class a = Mod2Class::from_bits(g, i), b = Mod2Class::from_bits(g, j);
            if (q.value(a + b) != q.value(a) * q.value(b) * weil2(a, b))
              return fail("polarization fails at g=", g, " q=", q.basis_bits());
          }
    std::mt19937_64 rng(cfg.seed ^ 0x31);
    for (int g = 3; g <= 4; ++g)
      for (int t = 0; t < 20000; ++t) {
        const QuadraticForm q(g, rng() & ((std::uint64_t{1} << (2 * g)) - 1));
        const Mod2Class a = random_mod2(g, rng), b = random_mod2(g, rng);
        if (q.value(a + b) != q.value(a) * q.value(b) * weil2(a, b))
          return fail("polarization fails at g=", g);
      }
    return ok();
  });

  rep.run("quadforms/q(0) = 1 and basis values round-trip (g<=3)", [&] {
    for (int g = 1; g <= 3; ++g)
      for (const auto& q : QuadraticForm::all(g)) {
        if (q.value(Mod2Class::zero(g)) != 1) return fail("q(0) != 1");
        for (std::size_t j = 0; j < 2 * static_cast<std::size_t>(g); ++j) {
          const auto basis = Mod2Class::from_bits(g, std::uint64_t{1} << j);
          if (q.exponent(basis) != static_cast<int>((q.basis_bits() >> j) & 1u))
            return fail("basis value mismatch at g=", g);
        }
      }
    return ok();
  });

  rep.run("quadforms/Arf counts match closed forms (g<=6)", [&] {
    for (int g = 1; g <= 6; ++g)
      if (count_by_arf(g) != count_by_arf_closed(g)) return fail("count mismatch at g=", g);
    return ok();
  });

  rep.run("quadforms/value-constrained counts are (2^{2g-2}, 2^{2g-2}) (g<=5)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x32);
    for (int g = 1; g <= 5; ++g) {
      const Integer expect = pow2(2 * static_cast<unsigned long>(g) - 2);
      for (int t = 0; t < 8; ++t) {
        Mod2Class alpha = random_mod2(g, rng);
        if (alpha.is_zero()) alpha = Mod2Class::from_bits(g, 1);
        const auto counts = count_value_constrained(alpha);
        if (counts.first != expect || counts.second != expect)
          return fail("constrained count wrong at g=", g, " alpha=", show(alpha));
      }
    }
    return ok();
  });

  rep.run("quadforms/twist by gamma shifts Arf by q~(gamma) (g<=3)", [&] {
    for (int g = 1; g <= 3; ++g)
      for (const auto& q : QuadraticForm::all(g)) {
        std::set<std::uint64_t> image;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * g)); ++m) {
          const Mod2Class gamma = Mod2Class::from_bits(g, m);
          const QuadraticForm qt = q.twist(gamma);
          image.insert(qt.basis_bits());
          for (int t = 0; t < 8; ++t) {
            const Mod2Class a = Mod2Class::from_bits(g, (m * 2654435761u + t) &
                                                            ((std::uint64_t{1} << (2 * g)) - 1));
            if (qt.value(a) != q.value(a) * weil2(gamma, a)) return fail("twist value wrong");
          }
          if (qt.arf() != (q.arf() ^ q.exponent(gamma))) return fail("twist Arf shift wrong");
        }
        if (image.size() != (std::size_t{1} << (2 * g))) return fail("twist is not a bijection");
      }
    return ok();
  });

  rep.run("quadforms/Arf constant under transvections (g<=4 randomized)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x33);
    for (int g = 1; g <= 4; ++g)
      for (int t = 0; t < 2000; ++t) {
        QuadraticForm q(g, rng() & ((std::uint64_t{1} << (2 * g)) - 1));
        const int arf = q.arf();
        for (int s = 0; s < 4; ++s) {
          const Mod2Class gamma = random_mod2(g, rng);
          q = q.pullback_transvection(gamma);
          if (q.arf() != arf) return fail("Arf changed under a transvection at g=", g);
        }
      }
    return ok();
  });

  rep.run("quadforms/Gauss sum is 2^g (-1)^Arf (g<=4)", [&] {
    for (int g = 1; g <= 4; ++g)
      for (const auto& q : QuadraticForm::all(g)) {
        Integer sum = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * g)); ++m)
          sum += q.value(Mod2Class::from_bits(g, m));
        const Integer expect = (q.arf() ? -1 : 1) * pow2(static_cast<unsigned long>(g));
        if (sum != expect) return fail("Gauss sum wrong at g=", g);
      }
    return ok();
  });

  rep.run("quadforms/forms induce multiplicative characters of E' (g<=2)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const std::uint64_t n = std::uint64_t{2} << (2 * g);
      for (const auto& q : QuadraticForm::all(g)) {
        const auto chi = [&](const EPrimeElement& x) {
          return (x.sign ? -1 : 1) * q.value(x.cls);
        };
        for (std::uint64_t i = 0; i < n; ++i)
          for (std::uint64_t j = 0; j < n; ++j) {
            const EPrimeElement x = eprime_from_index(g, i), y = eprime_from_index(g, j);
            if (chi(eprime_mul(x, y)) != chi(x) * chi(y))
              return fail("character not multiplicative at g=", g);
          }
      }
    }
    return ok();
  });
}

// ---- verlinde suite --------------------------------------------------------

void suite_verlinde(Reporter& rep, const RunConfig& cfg) {
  const int kmax = std::min(cfg.level_hi, 24);
  const int gmax = std::min(cfg.genus_hi, 6);

  rep.run("verlinde/fusion matrices symmetric, commuting, N0 = 1 (k<=24)", [&] {
    for (int k = 1; k <= kmax; ++k) {
      const FusionData fd = make_fusion_data(k);
      const int n = k + 1;
      for (int i = 0; i < n; ++i) {
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            if (fd.matrices[i][r][c] != fd.matrices[i][c][r]) return fail("N not symmetric, k=", k);
            if (fd.matrices[0][r][c] != (r == c ? 1 : 0)) return fail("N0 not identity, k=", k);
          }
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
              long ij = 0, ji = 0;
              for (int l = 0; l < n; ++l) {
                ij += fd.matrices[i][r][l] * fd.matrices[j][l][c];
                ji += fd.matrices[j][r][l] * fd.matrices[i][l][c];
              }
              if (ij != ji) return fail("fusion ring not commutative, k=", k);
            }
    }
    return ok();
  });

  rep.run("verlinde/sin vectors diagonalize every N (k<=20, tol 1e-8)", [&] {
    const double pi = std::acos(-1.0);
    for (int k = 1; k <= std::min(kmax, 20); ++k) {
      const FusionData fd = make_fusion_data(k);
      const int n = k + 1;
      for (int j = 0; j < n; ++j) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = std::sin((i + 1.0) * (j + 1.0) * pi / (k + 2.0));
        for (int i = 0; i < n; ++i) {
          const double eigen = v[i] / v[0];
          for (int r = 0; r < n; ++r) {
            double acc = 0;
            for (int c = 0; c < n; ++c) acc += fd.matrices[i][r][c] * v[c];
            if (std::abs(acc - eigen * v[r]) > 1e-8)
              return fail("eigenvector residual too large at k=", k);
          }
        }
      }
    }
    return ok();
  });

  rep.run("verlinde/genus-1 row and parity", [&] {
    for (int k = 1; k <= kmax; ++k) {
      if (verlinde_dim(1, k) != k + 1) return fail("d_1 wrong at k=", k);
      if (verlinde_dim_twisted(1, k) != (k % 2 == 0 ? 1 : 0)) return fail("d'_1 wrong at k=", k);
    }
    return ok();
  });

  rep.run("verlinde/twisted trace vanishes at odd levels (exact route)", [&] {
    for (int g = 1; g <= std::min(gmax, 4); ++g)
      for (int k = 1; k <= kmax; k += 2)
        if (verlinde_dim_twisted(g, k) != 0) return fail("non-zero twisted dim at odd k=", k);
    return ok();
  });

  rep.run("verlinde/dominance d >= d' >= 0 and trace bounds", [&] {
    for (int g = 1; g <= gmax; ++g)
      for (int k = 1; k <= kmax; ++k) {
        const Integer d = verlinde_dim(g, k), dt = verlinde_dim_twisted(g, k);
        if (!(d >= dt && dt >= 0)) return fail("dominance fails at g=", g, " k=", k);
        Integer tr = involution_trace(g, k);
        if (abs(tr) > d) return fail("trace bound fails at g=", g, " k=", k);
        if (k % 2 == 0 && abs(twisted_involution_trace(g, k)) > dt && dt != 0)
          return fail("twisted trace bound fails at g=", g, " k=", k);
      }
    return ok();
  });

  rep.run("verlinde/exact trace equals oracle", [&] {
    const int og = std::min(gmax, 5), okk = std::min(kmax, 20);
    for (int g = 1; g <= og; ++g)
      for (int k = 1; k <= okk; ++k) {
        const FusionData fd = make_fusion_data(k);
        const OracleResult u = verlinde_oracle(g, k, false, cfg.precision_bits);
        const OracleResult t = verlinde_oracle(g, k, true, cfg.precision_bits);
        if (u.value != verlinde_dim(fd, g) || t.value != verlinde_dim_twisted(fd, g))
          return fail("oracle disagreement at g=", g, " k=", k);
        if (!(u.residual < 1e-6) || !(t.residual < 1e-6))
          return fail("oracle residual above 1e-6 at g=", g, " k=", k);
      }
    return ok();
  });

  rep.run("verlinde/root-of-unity normalization identity (k<=200, both epsilon)", [&] {
    for (int k = 1; k <= 200; ++k)
      for (int e : {1, -1})
        if (!root_of_unity_identity(k, SignConvention(e)))
          return fail("identity fails at k=", k, " epsilon=", e);
    return ok();
  });
}

// ---- characters suite ------------------------------------------------------

void suite_characters(Reporter& rep, const RunConfig& cfg) {
  const int gmax = std::min(cfg.genus_hi, 4);
  const int kmax = std::min(cfg.level_hi, 16);
  const SignConvention plus(1), minus(-1);

  rep.run("characters/table shape and squared dimensions (g<=4)", [&] {
    for (int g = 1; g <= gmax; ++g) {
      const auto table = irreducible_table(g, plus);
      const std::size_t expect = (std::size_t{2} << (2 * g)) + 2;
      if (table->irreps.size() != expect) return fail("wrong irreducible count at g=", g);
      if (table->irreps.size() != HeisenbergGroup(g).class_count())
        return fail("irreducibles != classes at g=", g);
      Integer sq = 0;
      for (const auto& irr : table->irreps) sq += irr.dim * irr.dim;
      if (sq != HeisenbergGroup(g).order()) return fail("sum of dim^2 wrong at g=", g);
    }
    return ok();
  });

  rep.run("characters/first orthogonality (g<=3 full, g=4 randomized)", [&] {
    std::mt19937_64 rng(cfg.seed ^ 0x41);
    for (int g = 1; g <= gmax; ++g) {
      const HeisenbergGroup G(g);
      const auto table = irreducible_table(g, plus);
      const std::size_t n = table->irreps.size();
      const auto inner = [&](std::size_t i, std::size_t j) {
        GaussInt acc;
        for (std::size_t c = 0; c < G.class_count(); ++c)
          acc += Integer(static_cast<long>(G.class_size(c))) *
                 (table->irreps[i].values[c] * table->irreps[j].values[c].conj());
        return acc;
      };
      const auto check = [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        const GaussInt v = inner(i, j);
        const GaussInt expect = i == j ? GaussInt(G.order()) : GaussInt(0);
        if (!(v == expect))
          return fail("orthogonality fails at g=", g, " (", table->irreps[i].name(), ",",
                      table->irreps[j].name(), ") = ", v.str());
        return ok();
      };
      if (g <= 3) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j)
            if (auto f = check(i, j)) return f;
      } else {
        for (int t = 0; t < 300; ++t)
          if (auto f = check(rng() % n, rng() % n)) return f;
      }
    }
    return ok();
  });

  rep.run("characters/regular character decomposes with multiplicity = dim (g<=2)", [&] {
    for (int g = 1; g <= 2; ++g) {
      const HeisenbergGroup G(g);
      ClassFunction reg;
      reg.genus = g;
      reg.group = GroupKind::heisenberg;
      reg.sign = plus;
      reg.values.assign(G.class_count(), GaussInt(0));
      reg.values[0] = GaussInt(G.order());
      const auto mult = decompose(reg);
      const auto table = irreducible_table(g, plus);
      for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] != table->irreps[i].dim) return fail("regular decomposition wrong at g=", g);
    }
    return ok();
  });

  rep.run("characters/decomposition sweep: integral, supported per level residue", [&] {
    for (int g = 1; g <= gmax; ++g) {
      const auto table = irreducible_table(g, plus);
      for (int k = 1; k <= kmax; ++k) {
        const auto mult = decompose(verlinde_character(g, k, plus));
        for (std::size_t i = 0; i < mult.size(); ++i) {
          const auto& irr = table->irreps[i];
          const bool want_zero =
              (k % 4 == 0 && irr.kind != Irreducible::Kind::two_torsion_character) ||
              (k % 4 == 2 && irr.kind != Irreducible::Kind::theta_character) ||
              (k % 2 == 1 && irr.kind != Irreducible::Kind::stone_von_neumann);
          if (want_zero && mult[i] != 0)
            return fail("unexpected support on ", irr.name(), " at g=", g, " k=", k);
        }
      }
    }
    return ok();
  });

  rep.run("characters/closed-form bricks equal the decomposition", [&] {
    for (int g = 1; g <= gmax; ++g) {
      const auto table = irreducible_table(g, plus);
      const auto etable = eprime_character_table(g);
      for (int k = 1; k <= kmax; ++k) {
        if (k % 2 == 1) {
          const OddLevelFactor f = odd_level_factor(g, k);
          const auto mult = decompose(verlinde_character(g, k, plus));
          for (std::size_t i = 0; i < mult.size(); ++i) {
            const auto& irr = table->irreps[i];
            Integer expect = 0;
            if (irr.kind == Irreducible::Kind::stone_von_neumann &&
                irr.index == (f.conjugate ? 1u : 0u))
              expect = f.multiplicity;
            if (mult[i] != expect) return fail("odd-level support wrong at g=", g, " k=", k);
          }
          continue;
        }
        const auto mult = decompose(verlinde_character(g, k, plus));
        const auto tmult = decompose(twisted_verlinde_character(g, k));
        const auto expected = [&](const Irreducible& irr, bool twisted) -> Integer {
          if (k % 4 == 0) {
            if (irr.kind != Irreducible::Kind::two_torsion_character) return 0;
            const auto pair = twisted ? brick_dims_mod4zero_twisted(g, k)
                                      : brick_dims_mod4zero(g, k);
            return irr.index == 0 ? pair.first : pair.second;
          }
          if (irr.kind != Irreducible::Kind::theta_character) return 0;
          const auto pair = twisted ? brick_dims_mod4two_twisted(g, k) : brick_dims_mod4two(g, k);
          return QuadraticForm(g, irr.index).arf() == 0 ? pair.first : pair.second;
        };
        for (std::size_t i = 0; i < mult.size(); ++i)
          if (mult[i] != expected(table->irreps[i], false))
            return fail("brick mismatch on ", table->irreps[i].name(), " at g=", g, " k=", k);
        for (std::size_t i = 0; i < tmult.size(); ++i)
          if (tmult[i] != expected(etable->irreps[i], true))
            return fail("twisted brick mismatch on ", etable->irreps[i].name(), " at g=", g,
                        " k=", k);
      }
    }
    return ok();
  });

  rep.run("characters/epsilon flip conjugates characters and swaps the 2^g-dim pair", [&] {
    for (int g = 1; g <= std::min(gmax, 3); ++g) {
      const auto tp = irreducible_table(g, plus);
      const auto tm = irreducible_table(g, minus);
      const std::size_t svn = tp->irreps.size() - 2;
      for (std::size_t c = 0; c < tp->irreps[svn].values.size(); ++c)
        if (!(tp->irreps[svn].values[c] == tm->irreps[svn + 1].values[c]) ||
            !(tp->irreps[svn + 1].values[c] == tm->irreps[svn].values[c]))
          return fail("2^g-dim irreducibles not exchanged by the sign flip");
      for (int k = 1; k <= std::min(kmax, 8); ++k) {
        const ClassFunction a = verlinde_character(g, k, plus);
        const ClassFunction b = verlinde_character(g, k, minus);
        for (std::size_t c = 0; c < a.values.size(); ++c)
          if (!(a.values[c] == b.values[c].conj())) return fail("character not conjugated");
        if (decompose(a) != decompose(b))
          return fail("relative multiplicities changed with epsilon");
      }
    }
    return ok();
  });
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const std::set<std::string> known{"group", "pairing", "quadforms", "verlinde", "characters",
                                    "all"};
  if (!known.count(cfg.suite)) {
    err << "error: unknown suite '" << cfg.suite << "'\n";
    return kExitUsage;
  }
  Reporter rep{out};
  if (cfg.suite == "pairing" || cfg.suite == "all") suite_pairing(rep, cfg);
  if (cfg.suite == "group" || cfg.suite == "all") suite_group(rep, cfg);
  if (cfg.suite == "quadforms" || cfg.suite == "all") suite_quadforms(rep, cfg);
  if (cfg.suite == "verlinde" || cfg.suite == "all") suite_verlinde(rep, cfg);
  if (cfg.suite == "characters" || cfg.suite == "all") suite_characters(rep, cfg);
  out << (rep.failures == 0 ? "all invariants hold" : std::to_string(rep.failures) + " failure(s)")
      << "\n";
  return rep.failures == 0 ? kExitOk : kExitInconsistent;
}

}  // namespace vbrick::cli
