#include "vbrick/verlinde.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace vbrick {

namespace {

void require_params(int genus, int level) {
  if (genus < 1) throw std::invalid_argument("genus must be positive");
  if (level < 1) throw std::invalid_argument("level must be positive");
}

// ---- dense integer matrices ------------------------------------------------

struct Mat {
  int n = 0;
  std::vector<Integer> a;  // row-major

  static Mat ident(int n) {
    Mat m{n, std::vector<Integer>(static_cast<std::size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  Integer& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Integer& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

Mat mat_mul(const Mat& A, const Mat& B) {
  Mat C{A.n, std::vector<Integer>(static_cast<std::size_t>(A.n) * A.n, 0)};
  for (int i = 0; i < A.n; ++i)
    for (int l = 0; l < A.n; ++l) {
      const Integer& v = A.at(i, l);
      if (v == 0) continue;
      for (int j = 0; j < A.n; ++j) C.at(i, j) += v * B.at(l, j);
    }
  return C;
}

Mat mat_pow(Mat base, unsigned long e) {
  Mat r = Mat::ident(base.n);
  while (e) {
    if (e & 1) r = mat_mul(r, base);
    e >>= 1;
    if (e) base = mat_mul(base, base);
  }
  return r;
}

Mat handle_power(const FusionData& fd, int genus) {
  const int n = fd.level + 1;
  Mat K{n, std::vector<Integer>(static_cast<std::size_t>(n) * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) K.at(i, j) = fd.handle[i][j];
  return mat_pow(std::move(K), static_cast<unsigned long>(genus - 1));
}

// ---- binary fixed point over Integer ---------------------------------------
//
// A value x is stored as the integer round(x * 2^prec). Multiplication
// truncates toward -inf; the guard bits added below absorb the drift.

Integer fx_mul(const Integer& a, const Integer& b, unsigned prec) {
  Integer t = a * b;
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), prec);
  return t;
}

Integer fx_shift_down(const Integer& a, unsigned bits) {
  Integer t;
  mpz_fdiv_q_2exp(t.get_mpz_t(), a.get_mpz_t(), bits);
  return t;
}

// arctan(1/x) for a small integer x >= 2
Integer fx_arctan_inv(unsigned long x, unsigned prec) {
  Integer power = pow2(prec) / x;
  Integer sum = power;
  const unsigned long x2 = x * x;
  for (unsigned long n = 1; power != 0; ++n) {
    power /= x2;
    Integer term = power / (2 * n + 1);
    if (n % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

Integer fx_pi(unsigned prec) {
  static std::mutex mu;
  static std::map<unsigned, Integer> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  const unsigned wp = prec + 32;
  Integer pi = 16 * fx_arctan_inv(5, wp) - 4 * fx_arctan_inv(239, wp);
  pi = fx_shift_down(pi, 32);
  cache.emplace(prec, pi);
  return pi;
}

// sin(pi * num / den) for 0 < num < den
Integer fx_sin_pi_frac(unsigned long num, unsigned long den, unsigned prec) {
  const unsigned wp = prec + 64;
  // sin(pi(1 - t)) = sin(pi t) reduces the argument to [0, pi/2]
  if (2 * num > den) num = den - num;
  Integer x = fx_pi(wp) * num / den;
  const Integer x2 = fx_mul(x, x, wp);
  Integer term = x, sum = x;
  for (unsigned long n = 1; term != 0; ++n) {
    term = fx_mul(term, x2, wp);
    term /= (2 * n) * (2 * n + 1);
    if (n % 2)
      sum -= term;
    else
      sum += term;
  }
  return fx_shift_down(sum, 64);
}

double fx_to_double(const Integer& a, unsigned prec) {
  signed long e = 0;
  const double m = mpz_get_d_2exp(&e, a.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e - static_cast<signed long>(prec)));
}

}  // namespace

FusionData make_fusion_data(int level) {
  require_params(1, level);
  const int k = level;
  const int n = k + 1;
  FusionData fd;
  fd.level = k;
  fd.matrices.assign(n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        if ((i + j + l) % 2 == 0 && std::abs(i - j) <= l && l <= std::min(i + j, 2 * k - i - j))
          fd.matrices[i][j][l] = 1;
  fd.handle.assign(n, std::vector<Integer>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int s = 0;
        for (int l = 0; l < n; ++l) s += fd.matrices[i][r][l] * fd.matrices[i][c][l];
        fd.handle[r][c] += s;
      }
  return fd;
}

Integer verlinde_dim(const FusionData& fd, int genus) {
  require_params(genus, fd.level);
  const Mat P = handle_power(fd, genus);
  Integer t = 0;
  for (int i = 0; i < P.n; ++i) t += P.at(i, i);
  return t;
}

Integer verlinde_dim(int genus, int level) { return verlinde_dim(make_fusion_data(level), genus); }

Integer verlinde_dim_twisted(const FusionData& fd, int genus) {
  require_params(genus, fd.level);
  const Mat P = handle_power(fd, genus);
  const auto& nk = fd.matrices[fd.level];
  Integer t = 0;
  for (int i = 0; i < P.n; ++i)
    for (int j = 0; j < P.n; ++j)
      if (nk[j][i]) t += P.at(i, j);
  return t;
}

Integer verlinde_dim_twisted(int genus, int level) {
  return verlinde_dim_twisted(make_fusion_data(level), genus);
}

Integer involution_trace(int genus, int level) {
  require_params(genus, level);
  if (level % 2 == 1) return 0;
  return ipow(static_cast<unsigned long>(level + 2) / 2, static_cast<unsigned long>(genus - 1));
}

Integer twisted_involution_trace(int genus, int level) {
  require_params(genus, level);
  if (level % 2 == 1) throw std::domain_error("twisted trace requires an even level");
  Integer t = ipow(static_cast<unsigned long>(level + 2) / 2, static_cast<unsigned long>(genus - 1));
  return (level / 2) % 2 ? -t : t;
}

unsigned oracle_auto_precision(int genus, int level) {
  // The largest summand is about ((k+2)/2)^{3(g-1)}; size the working width
  // so the rounding residual stays far below the acceptance gate.
  const unsigned kb = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(level) + 2));
  const unsigned need = static_cast<unsigned>(3 * (genus - 1) + 2) * kb + 96;
  return std::max(need, 64u);
}

OracleResult verlinde_oracle(int genus, int level, bool twisted, unsigned precision_bits) {
  require_params(genus, level);
  if (twisted && level % 2 == 1) return {Integer(0), 0.0};  // zero by convention
  unsigned prec = precision_bits;
  if (prec == 0)
    prec = oracle_auto_precision(genus, level);
  else if (prec < 64)
    throw std::invalid_argument("oracle precision must be at least 64 bits");

  const unsigned long den = static_cast<unsigned long>(level) + 2;
  const Integer one = pow2(prec);
  Integer total = 0;
  for (unsigned long j = 1; j <= den - 1; ++j) {
    Integer v;
    if (genus == 1) {
      v = one;
    } else {
      const Integer s = fx_sin_pi_frac(j, den, prec);
      Integer p = s;
      for (int e = 1; e < 2 * genus - 2; ++e) p = fx_mul(p, s, prec);
      if (p == 0) throw precision_error("sin power underflows the working precision");
      v = pow2(2 * prec) / p;  // sin^(2-2g), still at scale 2^prec
    }
    if (twisted && j % 2 == 0)
      total -= v;
    else
      total += v;
  }
  // multiply by ((k+2)/2)^{g-1} = (k+2)^{g-1} / 2^{g-1}
  total *= ipow(den, static_cast<unsigned long>(genus - 1));
  total = fx_shift_down(total, static_cast<unsigned>(genus - 1));

  Integer rounded = fx_shift_down(total + pow2(prec - 1), prec);
  Integer rem = total - (rounded << prec);
  double residual = std::abs(fx_to_double(rem, prec));
  if (!(residual < 0.25))
    throw precision_error("rounding residual " + std::to_string(residual) +
                          " exceeds the certification gate; raise the precision");
  return {rounded, residual};
}

bool root_of_unity_identity(int level, SignConvention s) {
  require_params(1, level);
  const long k = level;
  const long mod = 4 * k + 8;
  const long half = 2 * k + 4;  // exponent of -1 on the primitive root
  // A = -epsilon * zeta with zeta = exp(2 pi i/(4k+8))
  const long a_exp = 1 + (s.epsilon() == 1 ? half : 0);
  const long lhs = (half * (k + 1) + (k + 2) * (k + 2) % mod * (a_exp % mod)) % mod;
  // (epsilon i)^k with i = zeta^{k+2}
  const long rhs = (k % mod * ((k + 2) % mod) + (s.epsilon() == -1 ? k * half : 0)) % mod;
  return ((lhs - rhs) % mod + mod) % mod == 0;
}

}  // namespace vbrick
