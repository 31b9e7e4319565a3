#include "vbrick/characters.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "vbrick/quadforms.hpp"
#include "vbrick/verlinde.hpp"

namespace vbrick {

namespace {

void require_table_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (genus > 4) throw std::invalid_argument("character table enumeration supports genus <= 4");
}

int parity_dot(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

std::shared_ptr<const IrreducibleTable> build_heisenberg_table(int genus, SignConvention s) {
  const HeisenbergGroup G(genus, s);
  const std::size_t nclasses = G.class_count();
  const std::uint64_t nchars = std::uint64_t{1} << (2 * genus);

  auto table = std::make_shared<IrreducibleTable>();
  table->genus = genus;
  table->group = GroupKind::heisenberg;
  table->sign = s;
  table->irreps.reserve(2 * nchars + 2);

  std::vector<EElement> reps;
  reps.reserve(nclasses);
  for (std::size_t c = 0; c < nclasses; ++c) reps.push_back(G.class_representative(c));

  for (std::uint64_t h = 0; h < nchars; ++h) {
    Irreducible irr{Irreducible::Kind::two_torsion_character, h, Integer(1), {}};
    irr.values.reserve(nclasses);
    for (const auto& rep : reps) {
      const std::uint64_t m = Mod2Class(rep.rep).bits();
      irr.values.push_back(GaussInt(parity_dot(h, m) ? -1 : 1));
    }
    table->irreps.push_back(std::move(irr));
  }

  for (const QuadraticForm& q : QuadraticForm::all(genus)) {
    Irreducible irr{Irreducible::Kind::theta_character, q.basis_bits(), Integer(1), {}};
    irr.values.reserve(nclasses);
    for (const auto& rep : reps) {
      const int sign = (rep.phase & 1) ? -1 : 1;
      irr.values.push_back(GaussInt(sign * q.value(Mod2Class(rep.rep))));
    }
    table->irreps.push_back(std::move(irr));
  }

  // The two 2^g-dimensional irreducibles: supported on the center, where the
  // value is 2^g times the central phase (resp. its conjugate).
  const Integer dim = pow2(static_cast<unsigned long>(genus));
  for (std::uint64_t conj = 0; conj < 2; ++conj) {
    Irreducible irr{Irreducible::Kind::stone_von_neumann, conj, dim, {}};
    irr.values.assign(nclasses, GaussInt(0));
    for (std::size_t c = 0; c < 4; ++c) {
      Mu4 z = G.phase_value(reps[c]);
      if (conj) z = z.conj();
      irr.values[c] = dim * z.to_gauss();
    }
    table->irreps.push_back(std::move(irr));
  }
  return table;
}

std::shared_ptr<const IrreducibleTable> build_eprime_table(int genus) {
  const std::uint64_t nchars = std::uint64_t{1} << (2 * genus);
  const std::size_t nclasses = static_cast<std::size_t>(2 * nchars);

  auto table = std::make_shared<IrreducibleTable>();
  table->genus = genus;
  table->group = GroupKind::abelian;
  table->irreps.reserve(2 * nchars);

  for (std::uint64_t h = 0; h < nchars; ++h) {
    Irreducible irr{Irreducible::Kind::two_torsion_character, h, Integer(1), {}};
    irr.values.reserve(nclasses);
    for (std::size_t c = 0; c < nclasses; ++c) {
      const std::uint64_t m = static_cast<std::uint64_t>(c) >> 1;
      irr.values.push_back(GaussInt(parity_dot(h, m) ? -1 : 1));
    }
    table->irreps.push_back(std::move(irr));
  }
  for (const QuadraticForm& q : QuadraticForm::all(genus)) {
    Irreducible irr{Irreducible::Kind::theta_character, q.basis_bits(), Integer(1), {}};
    irr.values.reserve(nclasses);
    for (std::size_t c = 0; c < nclasses; ++c) {
      const EPrimeElement x = eprime_from_index(genus, c);
      const int sign = x.sign ? -1 : 1;
      irr.values.push_back(GaussInt(sign * q.value(x.cls)));
    }
    table->irreps.push_back(std::move(irr));
  }
  return table;
}

}  // namespace

std::string Irreducible::name() const {
  switch (kind) {
    case Kind::two_torsion_character: return "h[" + std::to_string(index) + "]";
    case Kind::theta_character: return "q[" + std::to_string(index) + "]";
    default: return index ? "svn-conjugate" : "svn";
  }
}

std::shared_ptr<const IrreducibleTable> irreducible_table(int genus, SignConvention s) {
  require_table_genus(genus);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const IrreducibleTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{genus, s.epsilon()}];
  if (!slot) slot = build_heisenberg_table(genus, s);
  return slot;
}

std::shared_ptr<const IrreducibleTable> eprime_character_table(int genus) {
  require_table_genus(genus);
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const IrreducibleTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[genus];
  if (!slot) slot = build_eprime_table(genus);
  return slot;
}

ClassFunction verlinde_character(int genus, int level, SignConvention s) {
  if (genus > 12) throw std::invalid_argument("class enumeration supports genus <= 12");
  const HeisenbergGroup G(genus, s);
  const Integer d = verlinde_dim(genus, level);
  const Integer tr = involution_trace(genus, level);

  ClassFunction chi;
  chi.genus = genus;
  chi.group = GroupKind::heisenberg;
  chi.sign = s;
  chi.values.reserve(G.class_count());
  for (std::size_t c = 0; c < G.class_count(); ++c) {
    const EElement rep = G.class_representative(c);
    const GaussInt z = G.phase_value(rep).pow(level).to_gauss();
    chi.values.push_back(c < 4 ? d * z : tr * z);
  }
  return chi;
}

ClassFunction twisted_verlinde_character(int genus, int level) {
  if (genus > 12) throw std::invalid_argument("class enumeration supports genus <= 12");
  if (level % 2 == 1) throw std::domain_error("the twisted space vanishes at odd levels");
  const Integer d = verlinde_dim_twisted(genus, level);
  const Integer tr = twisted_involution_trace(genus, level);
  const bool flips = (level / 2) % 2 == 1;  // whether the central -1 acts by -1

  ClassFunction chi;
  chi.genus = genus;
  chi.group = GroupKind::abelian;
  const std::size_t n = std::size_t{2} << (2 * genus);
  chi.values.reserve(n);
  for (std::size_t c = 0; c < n; ++c) {
    const EPrimeElement x = eprime_from_index(genus, c);
    const int sign = (flips && x.sign) ? -1 : 1;
    chi.values.push_back(GaussInt(sign * (x.cls.is_zero() ? d : tr)));
  }
  return chi;
}

std::vector<Integer> decompose(const ClassFunction& chi) {
  std::shared_ptr<const IrreducibleTable> table;
  std::vector<std::size_t> sizes;
  Integer order;
  if (chi.group == GroupKind::heisenberg) {
    table = irreducible_table(chi.genus, chi.sign);
    const HeisenbergGroup G(chi.genus, chi.sign);
    if (chi.values.size() != G.class_count())
      throw std::invalid_argument("class function has the wrong number of classes");
    sizes.reserve(G.class_count());
    for (std::size_t c = 0; c < G.class_count(); ++c) sizes.push_back(G.class_size(c));
    order = G.order();
  } else {
    table = eprime_character_table(chi.genus);
    const std::size_t n = std::size_t{2} << (2 * chi.genus);
    if (chi.values.size() != n)
      throw std::invalid_argument("class function has the wrong number of classes");
    sizes.assign(n, 1);
    order = pow2(2 * static_cast<unsigned long>(chi.genus) + 1);
  }

  std::vector<Integer> mult;
  mult.reserve(table->irreps.size());
  for (const Irreducible& irr : table->irreps) {
    GaussInt acc;
    for (std::size_t c = 0; c < chi.values.size(); ++c) {
      if (irr.values[c].is_zero() || chi.values[c].is_zero()) continue;
      acc += Integer(static_cast<long>(sizes[c])) * (chi.values[c] * irr.values[c].conj());
    }
    const Integer re = exact_div(acc.re, order, "multiplicity of " + irr.name());
    const Integer im = exact_div(acc.im, order, "multiplicity of " + irr.name());
    if (im != 0 || re < 0)
      throw inconsistency_error("multiplicity of " + irr.name() + " is " + GaussInt(re, im).str());
    mult.push_back(re);
  }
  return mult;
}

namespace {

// ((k+2)/2)^{g-1} as an exact fraction (numerator, power-of-two denominator),
// so that forced-mode evaluation at an odd level fails through the exactness
// check rather than by rounding.
struct HalfPower {
  Integer num;
  unsigned long den_log2;
};

HalfPower half_level_power(int genus, int level) {
  return {ipow(static_cast<unsigned long>(level) + 2, static_cast<unsigned long>(genus - 1)),
          static_cast<unsigned long>(genus - 1)};
}

// (d + P*scale) / 2^{2g} with P = ((k+2)/2)^{g-1}
Integer brick_formula(const Integer& d, const HalfPower& p, const Integer& scale, int genus,
                      const std::string& what) {
  const Integer num = d * pow2(p.den_log2) + p.num * scale;
  return exact_div(num, pow2(2 * static_cast<unsigned long>(genus) + p.den_log2), what);
}

std::pair<Integer, Integer> mod4zero_pair(const Integer& d, int genus, int level,
                                          const std::string& what) {
  const HalfPower p = half_level_power(genus, level);
  const Integer full = pow2(2 * static_cast<unsigned long>(genus));
  return {brick_formula(d, p, full - 1, genus, what), brick_formula(d, p, Integer(-1), genus, what)};
}

std::pair<Integer, Integer> mod4two_pair(const Integer& d, int genus, int level, int trace_sign,
                                         const std::string& what) {
  const HalfPower p = half_level_power(genus, level);
  const Integer two_g = pow2(static_cast<unsigned long>(genus));
  return {brick_formula(d, p, trace_sign * (two_g - 1), genus, what),
          brick_formula(d, p, trace_sign * (-two_g - 1), genus, what)};
}

void require_params(int genus, int level) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (level < 1) throw std::invalid_argument("level must be positive");
}

}  // namespace

std::pair<Integer, Integer> brick_dims_mod4zero(int genus, int level) {
  require_params(genus, level);
  if (level % 4 != 0) throw std::domain_error("level must be 0 mod 4");
  return mod4zero_pair(verlinde_dim(genus, level), genus, level, "brick");
}

std::pair<Integer, Integer> brick_dims_mod4zero_twisted(int genus, int level) {
  require_params(genus, level);
  if (level % 4 != 0) throw std::domain_error("level must be 0 mod 4");
  return mod4zero_pair(verlinde_dim_twisted(genus, level), genus, level, "twisted brick");
}

std::pair<Integer, Integer> brick_dims_mod4two(int genus, int level) {
  require_params(genus, level);
  if (level % 4 != 2) throw std::domain_error("level must be 2 mod 4");
  return mod4two_pair(verlinde_dim(genus, level), genus, level, +1, "brick");
}

std::pair<Integer, Integer> brick_dims_mod4two_twisted(int genus, int level) {
  require_params(genus, level);
  if (level % 4 != 2) throw std::domain_error("level must be 2 mod 4");
  return mod4two_pair(verlinde_dim_twisted(genus, level), genus, level, -1, "twisted brick");
}

OddLevelFactor odd_level_factor(int genus, int level) {
  require_params(genus, level);
  if (level % 2 == 0) throw std::domain_error("level must be odd");
  const Integer d = verlinde_dim(genus, level);
  Integer m = exact_div(d, pow2(static_cast<unsigned long>(genus)), "odd-level multiplicity");
  if (m < 0) throw inconsistency_error("odd-level multiplicity is negative");
  return {m, level % 4 == 3};
}

namespace {

BrickTable build_brick_table(int genus, int level, BrickMode mode) {
  require_params(genus, level);
  BrickTable t;
  t.genus = genus;
  t.level = level;
  t.mode = mode;

  const Integer d = verlinde_dim(genus, level);
  switch (mode) {
    case BrickMode::odd: {
      t.odd_multiplicity =
          exact_div(d, pow2(static_cast<unsigned long>(genus)), "odd-level multiplicity");
      t.odd_conjugate = level % 4 == 3;
      if (t.odd_multiplicity < 0) throw inconsistency_error("odd-level multiplicity is negative");
      return t;
    }
    case BrickMode::mod4_zero: {
      t.dims = mod4zero_pair(d, genus, level, "brick");
      t.dims_twisted =
          mod4zero_pair(verlinde_dim_twisted(genus, level), genus, level, "twisted brick");
      const Integer nontrivial = pow2(2 * static_cast<unsigned long>(genus)) - 1;
      if (t.dims.first + nontrivial * t.dims.second != d ||
          t.dims_twisted.first + nontrivial * t.dims_twisted.second !=
              verlinde_dim_twisted(genus, level))
        throw inconsistency_error("brick reassembly failed");
      return t;
    }
    case BrickMode::mod4_two: {
      t.dims = mod4two_pair(d, genus, level, +1, "brick");
      t.dims_twisted =
          mod4two_pair(verlinde_dim_twisted(genus, level), genus, level, -1, "twisted brick");
      const auto counts = count_by_arf_closed(genus);
      if (counts.first * t.dims.first + counts.second * t.dims.second != d ||
          counts.first * t.dims_twisted.first + counts.second * t.dims_twisted.second !=
              verlinde_dim_twisted(genus, level))
        throw inconsistency_error("brick reassembly failed");
      return t;
    }
  }
  throw std::invalid_argument("unknown brick mode");
}

}  // namespace

BrickTable make_brick_table(int genus, int level) {
  const BrickMode mode = level % 2 ? BrickMode::odd
                         : level % 4 == 0 ? BrickMode::mod4_zero
                                          : BrickMode::mod4_two;
  return build_brick_table(genus, level, mode);
}

BrickTable make_brick_table(int genus, int level, BrickMode forced_mode) {
  return build_brick_table(genus, level, forced_mode);
}

}  // namespace vbrick
