#pragma once

#include <cstdint>
#include <vector>

#include "vbrick/numbers.hpp"
#include "vbrick/symplectic.hpp"

namespace vbrick {

// Element of the finite Heisenberg group E in normal form: the element is
// (epsilon*i)^phase * rho_rep with rep in {0,1}^{2g}. Phases are exponents of
// the central generator, so the multiplication table itself does not depend
// on the sign convention; only the complex value of the phase does.
struct EElement {
  std::uint8_t phase = 0;         // exponent of the central generator, mod 4
  std::vector<std::uint8_t> rep;  // 2g entries in {0,1}

  int genus() const { return static_cast<int>(rep.size() / 2); }
  bool is_central() const;
  Mod4Class rep_class() const { return Mod4Class(rep); }
  bool operator==(const EElement&) const = default;
};

// Element of the abelian group E' = mu2 x J(2) with multiplication twisted by
// the order 2 Weil pairing: the element is (-1)^sign * rho'_cls.
struct EPrimeElement {
  std::uint8_t sign = 0;  // exponent of -1
  Mod2Class cls;

  int genus() const { return cls.genus(); }
  bool operator==(const EPrimeElement&) const = default;
};

EPrimeElement eprime_identity(int genus);
EPrimeElement eprime_rho(const Mod2Class& alpha);
// signs multiply together with lambda2 of the classes; classes add
EPrimeElement eprime_mul(const EPrimeElement& x, const EPrimeElement& y);
// deterministic element numbering: index = 2*bits(cls) + sign
std::uint64_t eprime_index(const EPrimeElement& x);
EPrimeElement eprime_from_index(int genus, std::uint64_t index);

// The group generated by the lifted involutions rho_a, presented by
//
//     rho_a rho_b = lambda4(a, b) rho_{a+b},
//
// at a fixed sign convention. Central subgroup mu4, commutator subgroup
// {+-1}, order 2^{2g+2}. All values immutable, all member functions pure.
class HeisenbergGroup {
 public:
  explicit HeisenbergGroup(int genus, SignConvention sign = SignConvention());

  int genus() const { return genus_; }
  SignConvention sign_convention() const { return sign_; }
  Integer order() const { return pow2(2 * static_cast<unsigned long>(genus_) + 2); }

  EElement identity() const;
  EElement central(int phase_exponent) const;
  // the normalized lift of a: rho_{r+2x} = (-1)^{r.x} rho_r with r in {0,1}^{2g}
  EElement rho(const Mod4Class& a) const;

  EElement mul(const EElement& x, const EElement& y) const;
  EElement inverse(const EElement& x) const;
  EElement conjugate(const EElement& y, const EElement& x) const;  // y x y^-1

  // central phase as an actual root of unity (this is where epsilon enters)
  Mu4 phase_value(const EElement& x) const;
  // the surjection onto E' sending rho_a to rho'_{a mod 2}, kernel {+-1}
  EPrimeElement reduce(const EElement& x) const;

  std::vector<EElement> elements() const;
  std::uint64_t index_of(const EElement& x) const;
  EElement from_index(std::uint64_t index) const;

  // Conjugacy classes in a fixed order: four central singletons (by phase),
  // then for each non-zero class alpha two classes {+-z rho_alpha} of size 2.
  std::size_t class_count() const;
  std::size_t class_index(const EElement& x) const;
  EElement class_representative(std::size_t c) const;
  std::size_t class_size(std::size_t c) const;
  std::vector<std::vector<EElement>> conjugacy_classes() const;

 private:
  int genus_;
  SignConvention sign_;
};

// ---- component calculus ---------------------------------------------------
//
// Each non-zero 2-torsion class alpha fixes a two-component locus; a lift a of
// alpha singles out one component. Lifts a1, a2 of the same alpha label the
// same component exactly when lambda2((a1 - a2)/2, alpha) = +1.

struct ComponentLabel {
  Mod4Class base;  // normalized lift of the underlying 2-torsion class
  int sign;        // +1 or -1
  bool operator==(const ComponentLabel&) const = default;
};

bool same_component(const Mod4Class& a1, const Mod4Class& a2);
ComponentLabel canonical_component(const Mod4Class& a);

// translating by beta swaps the two components iff lambda2(alpha, beta) = -1
bool beta_swaps_components(const Mod2Class& alpha, const Mod2Class& beta);

// the lift labelling the translated component: a + (beta included as 4-torsion)
Mod4Class translate_lift(const Mod4Class& a, const Mod2Class& beta);

// Which sign triples (e, m, n) give a non-empty triple intersection of the
// components over alpha, beta, alpha+beta: exactly those with e*m*n equal to
// lambda4(a, b), which is real here because lambda2(alpha, beta) = +1.
struct TripleIntersectionRule {
  int pairing_sign;  // lambda4(a, b) in {+1, -1}
  bool nonempty(int e, int m, int n) const { return e * m * n == pairing_sign; }
};
TripleIntersectionRule triple_intersection_sign(const Mod4Class& a, const Mod4Class& b,
                                                SignConvention s);

// Cardinalities of the pairwise intersection and of each component-pair
// slice, realized in the coset model: the quotient of the 2-torsion group by
// <alpha, beta> carries a simply transitive action, and the four slices are
// cut out by the characters lambda2(alpha, .) and lambda2(beta, .).
// Values are (2^{2g-2}, 2^{2g-4}).
struct IntersectionCardinalities {
  Integer pairwise;
  Integer per_component_pair;
};
IntersectionCardinalities intersection_cardinalities(const Mod2Class& alpha,
                                                     const Mod2Class& beta);

}  // namespace vbrick
