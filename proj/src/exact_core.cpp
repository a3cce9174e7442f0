#include "eqstab/exact_core.hpp"

#include <stdexcept>
#include <string>

namespace eqstab {

OrderDim::OrderDim(int k_, int n_) : k(k_), n(n_) {
  if (k < 1) throw std::invalid_argument("OrderDim: k must be >= 1");
  if (n < 1) throw std::invalid_argument("OrderDim: n must be >= 1");
}

namespace {

// prod_{i=1..k} (n-2i+1)(2i-1), the magnitude part of A_k(n).
Int a_magnitude_product(const OrderDim& od) {
  std::vector<std::int64_t> f;
  f.reserve(od.k);
  const std::int64_t n = od.n;
  for (std::int64_t i = 1; i <= od.k; ++i) f.push_back((n - 2 * i + 1) * (2 * i - 1));
  return product_of(f);
}

// prod_{i=0..k-1} (n-2k+4i); its square is 4^k alpha_k(n).
Int alpha_root_product(const OrderDim& od) {
  std::vector<std::int64_t> f;
  f.reserve(od.k);
  const std::int64_t n = od.n, k = od.k;
  for (std::int64_t i = 0; i < k; ++i) f.push_back(n - 2 * k + 4 * i);
  return product_of(f);
}

}  // namespace

Int a_const(const OrderDim& od) {
  Int w = a_magnitude_product(od);
  return (od.k % 2 == 1) ? Int(-w) : w;
}

Int a_const_recurrence(const OrderDim& od) {
  Int a(1);
  const std::int64_t n = od.n;
  for (std::int64_t j = 0; j < od.k; ++j) {
    a *= -(2 * j + 1) * (n - 2 * j - 1);
  }
  return a;
}

Rat alpha_const(const OrderDim& od) {
  const std::int64_t n = od.n;
  const int s = od.s();
  if (od.k == 1) {
    return make_rat(Int((n - 2) * (n - 2)), Int(4));
  }
  std::vector<std::int64_t> f;
  unsigned long denom_bits;
  if (od.k % 2 == 0) {
    f.reserve(s);
    for (std::int64_t i = 1; i <= s; ++i) f.push_back((n - 4 * i) * (n + 4 * i - 4));
    denom_bits = 4ul * s;
  } else {
    f.reserve(s + 1);
    f.push_back(n - 2);
    for (std::int64_t i = 1; i <= s; ++i) f.push_back((n - 4 * i - 2) * (n + 4 * i - 2));
    denom_bits = 4ul * s + 2;
  }
  Int g = product_of(f);
  return make_rat(g * g, pow2(denom_bits));
}

Int scaled_p(const OrderDim& od) {
  Int pi = alpha_root_product(od);
  Int w = a_magnitude_product(od);
  return pi * pi - (w << (2 * od.k));
}

int p_sign(const OrderDim& od) {
  Int pi = alpha_root_product(od);
  Int w = a_magnitude_product(od);
  Int lhs = pi * pi;
  Int rhs = w << (2 * od.k);
  return cmp(lhs, rhs);
}

StabilityConstants stability_constants(const OrderDim& od) {
  StabilityConstants c{od, a_const(od), alpha_const(od), Rat(), Int()};
  c.p_k = (od.k % 2 == 0) ? Rat(c.alpha_k - Rat(c.a_k)) : Rat(c.alpha_k + Rat(c.a_k));
  c.scaled_p_k = scaled_p(od);
  return c;
}

std::pair<Rat, Rat> p1_p2_closed_forms(long long n) {
  if (n < 1) throw std::invalid_argument("p1_p2_closed_forms: n must be >= 1");
  Int nn(static_cast<long>(n));
  Rat p1 = make_rat(nn * nn - 8 * nn + 8, Int(4));
  Rat p2 = make_rat((nn - 4) * (nn - 4) * nn * nn, Int(16)) - Rat(3 * (nn - 3) * (nn - 1));
  return {p1, p2};
}

RatioFactors ratio_factors(int k, long long big_n) {
  if (k < 1) throw std::invalid_argument("ratio_factors: k must be >= 1");
  if (big_n <= 2 * static_cast<long long>(k) + 1) {
    throw std::domain_error("ratio_factors: requires N > 2k+1, got N = " + std::to_string(big_n));
  }
  RatioFactors rf;
  rf.gamma.reserve(k);
  rf.beta.reserve(k);
  const long long base = big_n - 2 * static_cast<long long>(k);
  for (long long i = 0; i < k; ++i) {
    Int gn(static_cast<long>(base + 1 + 4 * i));
    Int gd(static_cast<long>(base + 4 * i));
    rf.gamma.push_back(make_rat(gn * gn, gd * gd));
    rf.beta.push_back(make_rat(Int(static_cast<long>(base + 2 + 2 * i)),
                               Int(static_cast<long>(base + 1 + 2 * i))));
  }
  return rf;
}

}  // namespace eqstab
