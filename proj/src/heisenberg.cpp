#include "vbrick/heisenberg.hpp"

#include <stdexcept>

namespace vbrick {

namespace {

void require_same_genus(int ga, int gb) {
  if (ga != gb) throw dimension_error("genus mismatch");
}

std::uint64_t pack_bits(const std::vector<std::uint8_t>& v) {
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) m |= (std::uint64_t{1} << j);
  return m;
}

std::vector<std::uint8_t> unpack_bits(std::size_t n, std::uint64_t m) {
  std::vector<std::uint8_t> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<std::uint8_t>((m >> j) & 1u);
  return v;
}

// mod 2 symplectic pairing of two 0/1 coordinate vectors
int sympl2(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s ^= (x[i] & y[i + 1]) ^ (x[i + 1] & y[i]);
  return s;
}

// mod 4 symplectic pairing of two 0/1 coordinate vectors
int sympl4(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
  int s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return ((s % 4) + 4) % 4;
}

void require_enumerable(int genus) {
  if (genus > 12) throw std::invalid_argument("group enumeration supports genus <= 12");
}

}  // namespace

bool EElement::is_central() const {
  for (auto r : rep)
    if (r) return false;
  return true;
}

EPrimeElement eprime_identity(int genus) { return {0, Mod2Class::zero(genus)}; }

EPrimeElement eprime_rho(const Mod2Class& alpha) { return {0, alpha}; }

EPrimeElement eprime_mul(const EPrimeElement& x, const EPrimeElement& y) {
  require_same_genus(x.genus(), y.genus());
  const std::uint8_t s = static_cast<std::uint8_t>((x.sign + y.sign + intersect2(x.cls, y.cls)) & 1);
  return {s, x.cls + y.cls};
}

std::uint64_t eprime_index(const EPrimeElement& x) { return 2 * x.cls.bits() + x.sign; }

EPrimeElement eprime_from_index(int genus, std::uint64_t index) {
  return {static_cast<std::uint8_t>(index & 1u), Mod2Class::from_bits(genus, index >> 1)};
}

HeisenbergGroup::HeisenbergGroup(int genus, SignConvention sign) : genus_(genus), sign_(sign) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
}

EElement HeisenbergGroup::identity() const {
  return {0, std::vector<std::uint8_t>(2 * static_cast<std::size_t>(genus_), 0)};
}

EElement HeisenbergGroup::central(int phase_exponent) const {
  EElement e = identity();
  e.phase = static_cast<std::uint8_t>(((phase_exponent % 4) + 4) % 4);
  return e;
}

EElement HeisenbergGroup::rho(const Mod4Class& a) const {
  require_same_genus(genus_, a.genus());
  // a = r + 2x with r in {0,1}^{2g}; the lift dependence rule gives
  // rho_a = (central)^{2 r.x} rho_r
  std::vector<std::uint8_t> r(a.coords().size()), x(a.coords().size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = a.coords()[j] & 1u;
    x[j] = a.coords()[j] >> 1;
  }
  const int corr = sympl2(r, x);
  return {static_cast<std::uint8_t>(2 * corr), std::move(r)};
}

EElement HeisenbergGroup::mul(const EElement& x, const EElement& y) const {
  require_same_genus(genus_, x.genus());
  require_same_genus(genus_, y.genus());
  // rho_r rho_s = (central)^{r.s} rho_{r+s}, then renormalize r+s into
  // {0,1}^{2g}: with bar = r xor s and carry = r and s, the sum is
  // bar + 2*carry and rho_{bar+2*carry} = (central)^{2 bar.carry} rho_bar.
  const std::size_t n = x.rep.size();
  std::vector<std::uint8_t> bar(n), carry(n);
  for (std::size_t j = 0; j < n; ++j) {
    bar[j] = x.rep[j] ^ y.rep[j];
    carry[j] = x.rep[j] & y.rep[j];
  }
  int t = x.phase + y.phase + sympl4(x.rep, y.rep) + 2 * sympl2(bar, carry);
  return {static_cast<std::uint8_t>(((t % 4) + 4) % 4), std::move(bar)};
}

EElement HeisenbergGroup::inverse(const EElement& x) const {
  require_same_genus(genus_, x.genus());
  return {static_cast<std::uint8_t>((4 - x.phase) & 3), x.rep};
}

EElement HeisenbergGroup::conjugate(const EElement& y, const EElement& x) const {
  return mul(mul(y, x), inverse(y));
}

Mu4 HeisenbergGroup::phase_value(const EElement& x) const {
  return Mu4::from_exponent(static_cast<long>(sign_.epsilon()) * x.phase);
}

EPrimeElement HeisenbergGroup::reduce(const EElement& x) const {
  require_same_genus(genus_, x.genus());
  return {static_cast<std::uint8_t>(x.phase & 1), Mod2Class(x.rep)};
}

std::vector<EElement> HeisenbergGroup::elements() const {
  require_enumerable(genus_);
  const std::size_t n = 2 * static_cast<std::size_t>(genus_);
  std::vector<EElement> out;
  out.reserve(std::size_t{4} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
    for (int t = 0; t < 4; ++t) out.push_back({static_cast<std::uint8_t>(t), unpack_bits(n, m)});
  return out;
}

std::uint64_t HeisenbergGroup::index_of(const EElement& x) const {
  require_same_genus(genus_, x.genus());
  return 4 * pack_bits(x.rep) + x.phase;
}

EElement HeisenbergGroup::from_index(std::uint64_t index) const {
  const std::size_t n = 2 * static_cast<std::size_t>(genus_);
  return {static_cast<std::uint8_t>(index & 3u), unpack_bits(n, index >> 2)};
}

std::size_t HeisenbergGroup::class_count() const {
  return 4 + 2 * ((std::size_t{1} << (2 * genus_)) - 1);
}

std::size_t HeisenbergGroup::class_index(const EElement& x) const {
  require_same_genus(genus_, x.genus());
  const std::uint64_t m = pack_bits(x.rep);
  if (m == 0) return x.phase;
  return 4 + 2 * (static_cast<std::size_t>(m) - 1) + (x.phase & 1);
}

EElement HeisenbergGroup::class_representative(std::size_t c) const {
  const std::size_t n = 2 * static_cast<std::size_t>(genus_);
  if (c < 4) return {static_cast<std::uint8_t>(c), std::vector<std::uint8_t>(n, 0)};
  const std::uint64_t m = static_cast<std::uint64_t>((c - 4) / 2) + 1;
  return {static_cast<std::uint8_t>((c - 4) % 2), unpack_bits(n, m)};
}

std::size_t HeisenbergGroup::class_size(std::size_t c) const { return c < 4 ? 1 : 2; }

std::vector<std::vector<EElement>> HeisenbergGroup::conjugacy_classes() const {
  require_enumerable(genus_);
  std::vector<std::vector<EElement>> out;
  out.reserve(class_count());
  for (std::size_t c = 0; c < class_count(); ++c) {
    EElement rep = class_representative(c);
    std::vector<EElement> cls{rep};
    if (c >= 4) {
      EElement other = rep;
      other.phase = static_cast<std::uint8_t>((rep.phase + 2) & 3);
      cls.push_back(std::move(other));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

bool same_component(const Mod4Class& a1, const Mod4Class& a2) {
  require_same_genus(a1.genus(), a2.genus());
  const Mod2Class alpha = a1.mod2();
  if (alpha.is_zero()) throw std::domain_error("component labels require a non-zero mod 2 class");
  if (!(a2.mod2() == alpha)) throw std::domain_error("lifts must reduce to the same mod 2 class");
  // a1 - a2 = 2x; the lifts agree exactly when lambda2(x, alpha) = +1
  const Mod4Class diff = a1 - a2;
  std::vector<std::uint8_t> x(diff.coords().size());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = diff.coords()[j] >> 1;
  return weil2(Mod2Class(std::move(x)), alpha) == 1;
}

ComponentLabel canonical_component(const Mod4Class& a) {
  const Mod2Class alpha = a.mod2();
  if (alpha.is_zero()) throw std::domain_error("component labels require a non-zero mod 2 class");
  const Mod4Class base = alpha.lift();
  return {base, same_component(a, base) ? 1 : -1};
}

bool beta_swaps_components(const Mod2Class& alpha, const Mod2Class& beta) {
  if (alpha.is_zero()) throw std::domain_error("component swap requires a non-zero class");
  return weil2(alpha, beta) == -1;
}

Mod4Class translate_lift(const Mod4Class& a, const Mod2Class& beta) {
  return a + beta.doubled();
}

TripleIntersectionRule triple_intersection_sign(const Mod4Class& a, const Mod4Class& b,
                                                SignConvention s) {
  require_same_genus(a.genus(), b.genus());
  const Mod2Class alpha = a.mod2(), beta = b.mod2();
  if (alpha.is_zero() || beta.is_zero() || (alpha + beta).is_zero())
    throw std::domain_error("classes alpha, beta, alpha+beta must all be non-zero");
  if (weil2(alpha, beta) != 1)
    throw std::domain_error("fixed loci are disjoint when lambda2(alpha, beta) = -1");
  return {weil4(a, b, s).real_sign()};
}

IntersectionCardinalities intersection_cardinalities(const Mod2Class& alpha,
                                                     const Mod2Class& beta) {
  require_same_genus(alpha.genus(), beta.genus());
  const int g = alpha.genus();
  if (g > 12) throw std::invalid_argument("coset enumeration supports genus <= 12");
  if (alpha.is_zero() || beta.is_zero() || alpha == beta)
    throw std::domain_error("classes must be non-zero and distinct");
  if (weil2(alpha, beta) != 1)
    throw std::domain_error("intersection is empty when lambda2(alpha, beta) = -1");

  const std::uint64_t A = alpha.bits(), B = beta.bits();
  const std::uint64_t total = std::uint64_t{1} << (2 * g);
  Integer cosets = 0;
  Integer slice[2][2] = {{0, 0}, {0, 0}};
  for (std::uint64_t m = 0; m < total; ++m) {
    // canonical coset representative under <alpha, beta>
    std::uint64_t r = m;
    for (std::uint64_t t : {m ^ A, m ^ B, m ^ A ^ B})
      if (t < r) r = t;
    if (r != m) continue;
    cosets += 1;
    const Mod2Class gamma = Mod2Class::from_bits(g, m);
    slice[intersect2(alpha, gamma)][intersect2(beta, gamma)] += 1;
  }
  if (slice[0][0] != slice[0][1] || slice[0][0] != slice[1][0] || slice[0][0] != slice[1][1])
    throw inconsistency_error("component-pair slices of the coset model are not equal");
  return {cosets, slice[0][0]};
}

}  // namespace vbrick
