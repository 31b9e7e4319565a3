#include "vbrick/symplectic.hpp"

#include <stdexcept>

namespace vbrick {

namespace {

void require_same_genus(int ga, int gb) {
  if (ga != gb) throw dimension_error("genus mismatch");
}

void require_valid_genus(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
}

}  // namespace

Mod4Class::Mod4Class(std::vector<std::uint8_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty() || coords_.size() % 2 != 0)
    throw std::invalid_argument("coordinate vector must have positive even length");
  for (auto c : coords_)
    if (c > 3) throw std::invalid_argument("mod 4 coordinate out of range");
}

Mod4Class Mod4Class::zero(int genus) {
  require_valid_genus(genus);
  return Mod4Class(std::vector<std::uint8_t>(2 * static_cast<std::size_t>(genus), 0));
}

Mod4Class Mod4Class::from_index(int genus, std::uint64_t index) {
  require_valid_genus(genus);
  if (genus > 16) throw std::invalid_argument("index encoding supports genus <= 16");
  std::vector<std::uint8_t> c(2 * static_cast<std::size_t>(genus));
  for (auto& x : c) {
    x = static_cast<std::uint8_t>(index & 3u);
    index >>= 2;
  }
  return Mod4Class(std::move(c));
}

bool Mod4Class::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

Mod2Class Mod4Class::mod2() const {
  std::vector<std::uint8_t> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = coords_[j] & 1u;
  return Mod2Class(std::move(c));
}

Mod4Class Mod4Class::operator+(const Mod4Class& o) const {
  require_same_genus(genus(), o.genus());
  std::vector<std::uint8_t> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j)
    c[j] = static_cast<std::uint8_t>((coords_[j] + o.coords_[j]) & 3u);
  return Mod4Class(std::move(c));
}

Mod4Class Mod4Class::operator-(const Mod4Class& o) const {
  require_same_genus(genus(), o.genus());
  std::vector<std::uint8_t> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j)
    c[j] = static_cast<std::uint8_t>((coords_[j] + 4 - o.coords_[j]) & 3u);
  return Mod4Class(std::move(c));
}

Mod2Class::Mod2Class(std::vector<std::uint8_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty() || coords_.size() % 2 != 0)
    throw std::invalid_argument("coordinate vector must have positive even length");
  for (auto c : coords_)
    if (c > 1) throw std::invalid_argument("mod 2 coordinate out of range");
}

Mod2Class Mod2Class::zero(int genus) {
  require_valid_genus(genus);
  return Mod2Class(std::vector<std::uint8_t>(2 * static_cast<std::size_t>(genus), 0));
}

Mod2Class Mod2Class::from_bits(int genus, std::uint64_t bits) {
  require_valid_genus(genus);
  if (genus > 32) throw std::invalid_argument("bit encoding supports genus <= 32");
  std::vector<std::uint8_t> c(2 * static_cast<std::size_t>(genus));
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<std::uint8_t>((bits >> j) & 1u);
  return Mod2Class(std::move(c));
}

bool Mod2Class::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

std::uint64_t Mod2Class::bits() const {
  if (coords_.size() > 64) throw std::invalid_argument("bit encoding supports genus <= 32");
  std::uint64_t m = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j)
    if (coords_[j]) m |= (std::uint64_t{1} << j);
  return m;
}

Mod4Class Mod2Class::lift() const { return Mod4Class(coords_); }

Mod4Class Mod2Class::doubled() const {
  std::vector<std::uint8_t> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = static_cast<std::uint8_t>(2 * coords_[j]);
  return Mod4Class(std::move(c));
}

Mod2Class Mod2Class::operator+(const Mod2Class& o) const {
  require_same_genus(genus(), o.genus());
  std::vector<std::uint8_t> c(coords_.size());
  for (std::size_t j = 0; j < coords_.size(); ++j) c[j] = coords_[j] ^ o.coords_[j];
  return Mod2Class(std::move(c));
}

int intersect4(const Mod4Class& a, const Mod4Class& b) {
  require_same_genus(a.genus(), b.genus());
  const auto& x = a.coords();
  const auto& y = b.coords();
  int s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return ((s % 4) + 4) % 4;
}

int intersect2(const Mod2Class& a, const Mod2Class& b) {
  require_same_genus(a.genus(), b.genus());
  const auto& x = a.coords();
  const auto& y = b.coords();
  int s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s ^= (x[i] & y[i + 1]) ^ (x[i + 1] & y[i]);
  return s;
}

Mu4 weil4(const Mod4Class& a, const Mod4Class& b, SignConvention s) {
  return Mu4::from_exponent(static_cast<long>(s.epsilon()) * intersect4(a, b));
}

int weil2(const Mod2Class& alpha, const Mod2Class& beta) {
  return intersect2(alpha, beta) ? -1 : 1;
}

std::vector<Mod4Class> lifts_of(const Mod2Class& alpha) {
  const int g = alpha.genus();
  if (g > 12) throw std::invalid_argument("fiber enumeration supports genus <= 12");
  const std::size_t n = 2 * static_cast<std::size_t>(g);
  std::vector<Mod4Class> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<std::uint8_t> c(n);
    for (std::size_t j = 0; j < n; ++j)
      c[j] = static_cast<std::uint8_t>(alpha.coords()[j] + 2 * ((m >> j) & 1u));
    out.push_back(Mod4Class(std::move(c)));
  }
  return out;
}

}  // namespace vbrick
