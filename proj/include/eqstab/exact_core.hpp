#ifndef EQSTAB_EXACT_CORE_HPP
#define EQSTAB_EXACT_CORE_HPP

#include <utility>
#include <vector>

#include "eqstab/arith.hpp"

namespace eqstab {

// Energy order k >= 1 and ambient dimension n >= 1.
//
// The equator map x -> (x/|x|, 0) lies in W^{k,2}(B^n, S^n) iff n >= 2k+1;
// the polynomial formulas below are total in (k, n), so inadmissible pairs
// are still evaluable and only flagged.
struct OrderDim {
  int k;
  int n;
  OrderDim(int k_, int n_);
  bool sobolev_admissible() const { return n >= 2 * k + 1; }
  int s() const { return k / 2; }  // parity split order
};

// A_k(n) = (-1)^k * prod_{i=1..k} (n-2i+1)(2i-1), evaluated exactly via a
// balanced product tree.
Int a_const(const OrderDim& od);

// Same value through the recurrence A_{j+1}(n) = -(2j+1)(n-2j-1) A_j(n),
// A_0 = 1, extracted from iterating the radial Laplacian on the equator
// profile. Cross-check path for a_const.
Int a_const_recurrence(const OrderDim& od);

// alpha_k(n): the optimal higher-order Hardy constant.
//   k = 2s   (s>=1): 2^{-4s}   * prod_{i=1..s} (n-4i)^2 (n+4i-4)^2
//   k = 2s+1 (s>=1): 2^{-4s-2} * (n-2)^2 prod_{i=1..s} (n-4i-2)^2 (n+4i-2)^2
//   k = 1           : (n-2)^2 / 4
// Always >= 0; 4^k * alpha_k(n) is an integer.
Rat alpha_const(const OrderDim& od);

// P_k(n) = alpha_k(n) - A_k(n) for even k, alpha_k(n) + A_k(n) for odd k.
// scaled_p_k = 4^k * P_k(n) is an integer with the same sign; sign queries
// go through it to avoid rational normalization.
struct StabilityConstants {
  OrderDim od;
  Int a_k;
  Rat alpha_k;
  Rat p_k;
  Int scaled_p_k;
  int sign() const { return sgn(scaled_p_k); }
};

StabilityConstants stability_constants(const OrderDim& od);

// 4^k * P_k(n) without assembling the rationals: Pi^2 - 4^k W with
// Pi = prod_{i=0..k-1} (n-2k+4i) and W = prod_{i=1..k} (n-2i+1)(2i-1).
Int scaled_p(const OrderDim& od);

// sign of P_k(n); the threshold search workhorse.
int p_sign(const OrderDim& od);

// The two displayed closed forms
//   P_1(n) = (n^2 - 8n + 8)/4
//   P_2(n) = (n-4)^2 n^2 / 16 - 3 (n-3)(n-1)
// used only as an independent check against stability_constants.
std::pair<Rat, Rat> p1_p2_closed_forms(long long n);

// One-step ratio factors from the threshold-existence induction:
//   gamma_i = (N+1-2k+4i)^2 / (N-2k+4i)^2     i = 0..k-1
//   beta_i  = (N-2k+2+2i)  / (N-2k+1+2i)      i = 0..k-1
// so that alpha_k(N+1) = alpha_k(N) * prod gamma_i and
// |A_k(N+1)| = |A_k(N)| * prod beta_i. Requires N > 2k+1; every factor is
// then positive and gamma_i > beta_i. For odd k the factors are derived by
// analogy from the uniform product form of alpha_k (the even case is the
// one worked out in full).
struct RatioFactors {
  std::vector<Rat> gamma;
  std::vector<Rat> beta;
};

RatioFactors ratio_factors(int k, long long big_n);

}  // namespace eqstab

#endif
