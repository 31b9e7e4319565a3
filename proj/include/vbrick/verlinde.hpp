#pragma once

#include <cstdint>
#include <vector>

#include "vbrick/numbers.hpp"
#include "vbrick/symplectic.hpp"

namespace vbrick {

// The SU(2) level-k fusion ring data: labels 0..k, fusion matrices N_0..N_k
// with (N_i)_j^l = 1 iff |i-j| <= l <= min(i+j, 2k-i-j) and i+j+l is even,
// and the handle matrix K = sum_i N_i N_i^T. The Verlinde dimension at genus
// g is the exact integer trace of K^{g-1}; its degree-one (twisted)
// counterpart is the trace of K^{g-1} N_k.
struct FusionData {
  int level = 1;
  std::vector<std::vector<std::vector<int>>> matrices;  // entries in {0,1}
  std::vector<std::vector<Integer>> handle;
};

FusionData make_fusion_data(int level);

// dim of the level-k space at genus g, as Tr(K^{g-1}); matches the
// trigonometric sum ((k+2)/2)^{g-1} sum_j sin(pi j/(k+2))^{2-2g} exactly
Integer verlinde_dim(int genus, int level);
Integer verlinde_dim(const FusionData& fd, int genus);

// twisted counterpart Tr(K^{g-1} N_k); the alternating sum vanishes for odd
// k, and the twisted space is defined to be zero there
Integer verlinde_dim_twisted(int genus, int level);
Integer verlinde_dim_twisted(const FusionData& fd, int genus);

// trace of a lifted involution on the level-k space over a non-zero class:
// ((1+(-1)^k)/2) ((k+2)/2)^{g-1}, i.e. 0 for odd k
Integer involution_trace(int genus, int level);

// twisted trace (-1)^{k/2} ((k+2)/2)^{g-1}; throws std::domain_error for odd k
Integer twisted_involution_trace(int genus, int level);

// High-precision floating evaluation of the trigonometric sums, rounded to
// the nearest integer. The residual is the distance to that integer in units
// of 1; a residual >= 0.25 aborts with precision_error instead of returning a
// possibly wrong integer. precision_bits = 0 picks a width sufficient for the
// given (g, k); explicit values must be >= 64.
struct OracleResult {
  Integer value;
  double residual;
};
OracleResult verlinde_oracle(int genus, int level, bool twisted, unsigned precision_bits = 0);
unsigned oracle_auto_precision(int genus, int level);

// The normalization identity (-1)^{k+1} A^{(k+2)^2} = (epsilon*i)^k for
// A = -epsilon * exp(2*pi*i/(4k+8)), checked symbolically as exponent
// arithmetic modulo 4k+8.
bool root_of_unity_identity(int level, SignConvention s);

}  // namespace vbrick
