#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "vbrick/heisenberg.hpp"
#include "vbrick/numbers.hpp"
#include "vbrick/symplectic.hpp"

namespace vbrick {

enum class GroupKind { heisenberg, abelian };

// Gaussian-integer-valued function constant on conjugacy classes, indexed by
// the class numbering of HeisenbergGroup (GroupKind::heisenberg) or by
// eprime_index (GroupKind::abelian, where every class is a singleton).
struct ClassFunction {
  int genus = 1;
  GroupKind group = GroupKind::heisenberg;
  SignConvention sign{};
  std::vector<GaussInt> values;
};

struct Irreducible {
  enum class Kind {
    two_torsion_character,  // 1-dim, pulled back from the 2-torsion quotient
    theta_character,        // 1-dim, cut out by a quadratic form; faithful on -1
    stone_von_neumann,      // 2^g-dim, faithful central character
  };
  Kind kind;
  std::uint64_t index;  // character/form bitmask; for stone_von_neumann 0 = principal, 1 = conjugate
  Integer dim;
  std::vector<GaussInt> values;

  std::string name() const;
};

struct IrreducibleTable {
  int genus = 1;
  GroupKind group = GroupKind::heisenberg;
  SignConvention sign{};
  std::vector<Irreducible> irreps;
};

// Full character table of the Heisenberg group: 2^{2g} two-torsion
// characters, 2^{2g} theta characters, and the two 2^g-dimensional
// irreducibles, in that order. Cached per (genus, epsilon). Genus <= 4.
std::shared_ptr<const IrreducibleTable> irreducible_table(int genus, SignConvention s);

// The 2^{2g+1} one-dimensional characters of the abelian group E', ordered as
// 2^{2g} two-torsion characters then 2^{2g} theta characters. Genus <= 4.
std::shared_ptr<const IrreducibleTable> eprime_character_table(int genus);

// Character of the level-k space as a representation of the Heisenberg
// group: a central phase z acts by z^k, and every lifted involution over a
// non-zero class contributes the involution trace.
ClassFunction verlinde_character(int genus, int level, SignConvention s);

// Twisted counterpart on E'; throws std::domain_error for odd levels.
ClassFunction twisted_verlinde_character(int genus, int level);

// Exact multiplicities of chi against the irreducible table of its group.
// Throws inconsistency_error (naming the offending irreducible) if any inner
// product fails to be a non-negative rational integer.
std::vector<Integer> decompose(const ClassFunction& chi);

// Closed-form brick dimensions. For levels 0 mod 4 the pair is (brick of the
// trivial two-torsion character, brick of any non-trivial one); for levels
// 2 mod 4 it is (Arf 0 brick, Arf 1 brick). The twisted variants decompose
// the twisted space. Wrong level residues throw std::domain_error.
std::pair<Integer, Integer> brick_dims_mod4zero(int genus, int level);
std::pair<Integer, Integer> brick_dims_mod4zero_twisted(int genus, int level);
std::pair<Integer, Integer> brick_dims_mod4two(int genus, int level);
std::pair<Integer, Integer> brick_dims_mod4two_twisted(int genus, int level);

// Odd levels: the whole space is multiplicity * (level-one space or its
// conjugate); the conjugate occurs for level 3 mod 4.
struct OddLevelFactor {
  Integer multiplicity;
  bool conjugate;
};
OddLevelFactor odd_level_factor(int genus, int level);

enum class BrickMode { mod4_zero, mod4_two, odd };

struct BrickTable {
  int genus = 1;
  int level = 1;
  BrickMode mode = BrickMode::odd;
  std::pair<Integer, Integer> dims{};          // see brick_dims_* for the indexation
  std::pair<Integer, Integer> dims_twisted{};  // zero pair for odd levels
  Integer odd_multiplicity{};
  bool odd_conjugate = false;
};

// Brick table from the closed forms, with the reassembly identities against
// verlinde_dim checked (inconsistency_error on failure). The single-argument
// overload selects the mode from level mod 4; the forced-mode overload exists
// to exercise the error paths.
BrickTable make_brick_table(int genus, int level);
BrickTable make_brick_table(int genus, int level, BrickMode forced_mode);

}  // namespace vbrick
