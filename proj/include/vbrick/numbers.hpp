#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "vbrick/errors.hpp"

namespace vbrick {

// Every dimension and multiplicity in this library is an exact integer; they
// outgrow 64 bits quickly, so all arithmetic runs over GMP integers.
using Integer = mpz_class;

inline Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline Integer ipow(unsigned long base, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Quotient n/d; throws when d does not divide n exactly.
inline Integer exact_div(const Integer& n, const Integer& d, const std::string& what) {
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw inconsistency_error(what + ": non-integral division " + n.get_str() + "/" + d.get_str());
  return q;
}

// Gaussian integer a + b*i. All character values of the groups handled here
// live in Z[i], which keeps inner products exact.
struct GaussInt {
  Integer re{0};
  Integer im{0};

  GaussInt() = default;
  GaussInt(Integer r) : re(std::move(r)) {}
  GaussInt(long r) : re(r) {}
  GaussInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  bool operator==(const GaussInt&) const = default;
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussInt operator*(const Integer& n, const GaussInt& z) { return {n * z.re, n * z.im}; }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string s;
    if (re != 0) s = re.get_str();
    if (im == 1)
      s += s.empty() ? "i" : "+i";
    else if (im == -1)
      s += "-i";
    else {
      if (!s.empty() && im > 0) s += "+";
      s += im.get_str() + "i";
    }
    return s;
  }
};

}  // namespace vbrick
