#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vbrick/numbers.hpp"
#include "vbrick/symplectic.hpp"

namespace vbrick {

// mu2-valued quadratic form on the 2-torsion classes, polarizing the order 2
// Weil pairing:
//
//     q(a + b) = q(a) q(b) lambda2(a, b)
//
// A form is determined by its values on the symplectic basis; bit j of
// basis_bits is the exponent on basis vector j, q = (-1)^exponent. There are
// exactly 2^{2g} forms at genus g; they are the combinatorial avatars of
// theta-characteristics / spin structures.
class QuadraticForm {
 public:
  QuadraticForm(int genus, std::uint64_t basis_bits);
  // all 2^{2g} forms, ordered by basis_bits
  static std::vector<QuadraticForm> all(int genus);

  int genus() const { return genus_; }
  std::uint64_t basis_bits() const { return bits_; }

  // q~(alpha) in {0,1}, computed by expanding alpha in the basis and
  // polarizing one basis vector at a time
  int exponent(const Mod2Class& alpha) const;
  int value(const Mod2Class& alpha) const { return exponent(alpha) ? -1 : 1; }

  // Arf invariant sum_i q~(e_i) q~(f_i) mod 2
  int arf() const;

  // q'(a) = q(a) lambda2(gamma, a); Arf shifts by q~(gamma)
  QuadraticForm twist(const Mod2Class& gamma) const;

  // pullback along the symplectic transvection a -> a + (a.gamma) gamma
  QuadraticForm pullback_transvection(const Mod2Class& gamma) const;

  bool operator==(const QuadraticForm&) const = default;

 private:
  int genus_;
  std::uint64_t bits_;
};

// number of forms with Arf invariant 0 resp. 1, by full enumeration
std::pair<Integer, Integer> count_by_arf(int genus);

// the closed forms 2^{g-1}(2^g + 1) and 2^{g-1}(2^g - 1)
std::pair<Integer, Integer> count_by_arf_closed(int genus);

// number of forms with q(alpha) = -1, split by Arf invariant, by enumeration;
// equals (2^{2g-2}, 2^{2g-2}) for every alpha != 0
std::pair<Integer, Integer> count_value_constrained(const Mod2Class& alpha);

}  // namespace vbrick
