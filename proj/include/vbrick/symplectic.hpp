#pragma once

#include <cstdint>
#include <vector>

#include "vbrick/errors.hpp"
#include "vbrick/numbers.hpp"

namespace vbrick {

// Global sign convention: the order 4 pairing is (epsilon*i)^(a.b). Every
// integer-valued result is independent of epsilon; mu4-valued results are
// conjugated when it flips. The value is configuration, fixed per session.
class SignConvention {
 public:
  SignConvention() = default;
  explicit SignConvention(int epsilon) : epsilon_(epsilon) {
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
  }
  int epsilon() const { return epsilon_; }
  bool operator==(const SignConvention&) const = default;

 private:
  int epsilon_ = 1;
};

// Fourth root of unity, stored as an exponent of i (never as a float).
struct Mu4 {
  int ipow = 0;  // in {0,1,2,3}

  static Mu4 one() { return {}; }
  static Mu4 from_exponent(long e) { return Mu4{static_cast<int>(((e % 4) + 4) % 4)}; }

  Mu4 operator*(Mu4 o) const { return from_exponent(ipow + o.ipow); }
  Mu4 conj() const { return from_exponent(-ipow); }
  Mu4 pow(long e) const { return from_exponent(static_cast<long>(ipow) * (((e % 4) + 4) % 4)); }
  bool operator==(const Mu4&) const = default;

  bool is_one() const { return ipow == 0; }
  bool is_real() const { return ipow % 2 == 0; }
  int real_sign() const {
    if (!is_real()) throw std::domain_error("mu4 value is imaginary");
    return ipow == 0 ? 1 : -1;
  }
  GaussInt to_gauss() const {
    switch (ipow) {
      case 0: return GaussInt(1);
      case 1: return GaussInt(Integer(0), Integer(1));
      case 2: return GaussInt(-1);
      default: return GaussInt(Integer(0), Integer(-1));
    }
  }
};

class Mod2Class;

// 4-torsion class on a genus-g surface. Coordinates are written in a
// symplectic basis (e1,f1,...,eg,fg) with ei.fi = +1, so coords[2i] pairs
// positively with coords[2i+1]. The group law is coordinatewise mod 4.
class Mod4Class {
 public:
  explicit Mod4Class(std::vector<std::uint8_t> coords);
  static Mod4Class zero(int genus);
  // base-4 digits of index, least significant digit = coordinate 0
  static Mod4Class from_index(int genus, std::uint64_t index);

  int genus() const { return static_cast<int>(coords_.size() / 2); }
  const std::vector<std::uint8_t>& coords() const { return coords_; }
  bool is_zero() const;
  Mod2Class mod2() const;

  Mod4Class operator+(const Mod4Class& o) const;
  Mod4Class operator-(const Mod4Class& o) const;
  bool operator==(const Mod4Class&) const = default;

 private:
  std::vector<std::uint8_t> coords_;
};

// 2-torsion class; same basis conventions, coordinatewise group law mod 2.
class Mod2Class {
 public:
  explicit Mod2Class(std::vector<std::uint8_t> coords);
  static Mod2Class zero(int genus);
  static Mod2Class from_bits(int genus, std::uint64_t bits);

  int genus() const { return static_cast<int>(coords_.size() / 2); }
  const std::vector<std::uint8_t>& coords() const { return coords_; }
  bool is_zero() const;
  std::uint64_t bits() const;  // bit j = coords[j]

  // canonical lift: the 4-torsion class with the same 0/1 coordinates
  Mod4Class lift() const;
  // image under the inclusion of 2-torsion into 4-torsion (coords doubled)
  Mod4Class doubled() const;

  Mod2Class operator+(const Mod2Class& o) const;
  bool operator==(const Mod2Class&) const = default;

 private:
  std::vector<std::uint8_t> coords_;
};

// mod 4 intersection number a.b = sum_i (a_{e_i} b_{f_i} - a_{f_i} b_{e_i}),
// returned in {0,1,2,3}
int intersect4(const Mod4Class& a, const Mod4Class& b);

// mod 2 intersection number, returned in {0,1}
int intersect2(const Mod2Class& a, const Mod2Class& b);

// order 4 Weil pairing (epsilon*i)^(a.b)
Mu4 weil4(const Mod4Class& a, const Mod4Class& b, SignConvention s);

// order 2 Weil pairing (-1)^(alpha.beta), returned as +1 or -1
int weil2(const Mod2Class& alpha, const Mod2Class& beta);

// the 2^{2g} classes reducing to alpha, in a fixed deterministic order
std::vector<Mod4Class> lifts_of(const Mod2Class& alpha);

}  // namespace vbrick
