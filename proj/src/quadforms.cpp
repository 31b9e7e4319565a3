#include "vbrick/quadforms.hpp"

#include <stdexcept>

namespace vbrick {

namespace {

void require_enumerable(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (genus > 8) throw std::invalid_argument("form enumeration supports genus <= 8");
}

}  // namespace

QuadraticForm::QuadraticForm(int genus, std::uint64_t basis_bits) : genus_(genus), bits_(basis_bits) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (genus > 32) throw std::invalid_argument("basis encoding supports genus <= 32");
  if (genus < 32 && (basis_bits >> (2 * genus)) != 0)
    throw std::invalid_argument("basis bits out of range");
}

std::vector<QuadraticForm> QuadraticForm::all(int genus) {
  require_enumerable(genus);
  std::vector<QuadraticForm> out;
  out.reserve(std::size_t{1} << (2 * genus));
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (2 * genus)); ++m) out.emplace_back(genus, m);
  return out;
}

int QuadraticForm::exponent(const Mod2Class& alpha) const {
  if (alpha.genus() != genus_) throw dimension_error("genus mismatch");
  const auto& ac = alpha.coords();
  // q~(v + b_j) = q~(v) + q~(b_j) + v.b_j; a basis vector pairs only with its
  // symplectic partner, so v.b_j is the partner coordinate of v.
  int acc = 0;
  std::vector<std::uint8_t> v(ac.size(), 0);
  for (std::size_t j = 0; j < ac.size(); ++j) {
    if (!ac[j]) continue;
    const std::size_t partner = (j % 2 == 0) ? j + 1 : j - 1;
    acc ^= static_cast<int>((bits_ >> j) & 1u) ^ v[partner];
    v[j] ^= 1u;
  }
  return acc;
}

int QuadraticForm::arf() const {
  int a = 0;
  for (int i = 0; i < genus_; ++i) a ^= static_cast<int>((bits_ >> (2 * i)) & (bits_ >> (2 * i + 1)) & 1u);
  return a;
}

QuadraticForm QuadraticForm::twist(const Mod2Class& gamma) const {
  if (gamma.genus() != genus_) throw dimension_error("genus mismatch");
  std::uint64_t bits = bits_;
  const auto& gc = gamma.coords();
  for (std::size_t j = 0; j < gc.size(); ++j) {
    const std::size_t partner = (j % 2 == 0) ? j + 1 : j - 1;
    if (gc[partner]) bits ^= (std::uint64_t{1} << j);
  }
  return QuadraticForm(genus_, bits);
}

QuadraticForm QuadraticForm::pullback_transvection(const Mod2Class& gamma) const {
  if (gamma.genus() != genus_) throw dimension_error("genus mismatch");
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < 2 * static_cast<std::size_t>(genus_); ++j) {
    Mod2Class basis = Mod2Class::from_bits(genus_, std::uint64_t{1} << j);
    Mod2Class image = intersect2(basis, gamma) ? basis + gamma : basis;
    if (exponent(image)) bits |= (std::uint64_t{1} << j);
  }
  return QuadraticForm(genus_, bits);
}

std::pair<Integer, Integer> count_by_arf(int genus) {
  require_enumerable(genus);
  Integer even = 0, odd = 0;
  for (const auto& q : QuadraticForm::all(genus)) (q.arf() ? odd : even) += 1;
  return {even, odd};
}

std::pair<Integer, Integer> count_by_arf_closed(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  const Integer half = pow2(static_cast<unsigned long>(genus - 1));
  const Integer full = pow2(static_cast<unsigned long>(genus));
  return {half * (full + 1), half * (full - 1)};
}

std::pair<Integer, Integer> count_value_constrained(const Mod2Class& alpha) {
  require_enumerable(alpha.genus());
  if (alpha.is_zero()) throw std::domain_error("constraint class must be non-zero");
  Integer even = 0, odd = 0;
  for (const auto& q : QuadraticForm::all(alpha.genus()))
    if (q.value(alpha) == -1) (q.arf() ? odd : even) += 1;
  return {even, odd};
}

}  // namespace vbrick
