#include <doctest.h>

#include <vector>

#include "eqstab/exact_core.hpp"

using namespace eqstab;

namespace {

// Independent oracle: left-fold the defining product factor by factor.
Int oracle_a(int k, long long n) {
  Int acc(1);
  for (long long i = 1; i <= k; ++i) {
    acc *= static_cast<long>(n - 2 * i + 1);
    acc *= static_cast<long>(2 * i - 1);
  }
  return (k % 2 == 1) ? Int(-acc) : acc;
}

// Independent oracle for alpha via the parity-split closed form, folded
// term by term in rational arithmetic.
Rat oracle_alpha(int k, long long n) {
  if (k == 1) return make_rat(Int(static_cast<long>((n - 2) * (n - 2))), Int(4));
  Rat acc(1);
  if (k % 2 == 0) {
    int s = k / 2;
    for (long long i = 1; i <= s; ++i) {
      Rat f = make_rat(Int(static_cast<long>((n - 4 * i) * (n + 4 * i - 4))), Int(4));
      acc *= f * f;
    }
  } else {
    int s = k / 2;
    acc = make_rat(Int(static_cast<long>((n - 2) * (n - 2))), Int(4));
    for (long long i = 1; i <= s; ++i) {
      Rat f = make_rat(Int(static_cast<long>((n - 4 * i - 2) * (n + 4 * i - 2))), Int(4));
      acc *= f * f;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("OrderDim validates and reports admissibility") {
  CHECK_THROWS_AS(OrderDim(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(OrderDim(1, 0), std::invalid_argument);
  CHECK(OrderDim(2, 5).sobolev_admissible());
  CHECK_FALSE(OrderDim(3, 6).sobolev_admissible());
  CHECK(OrderDim(3, 7).sobolev_admissible());
  CHECK(OrderDim(5, 9).s() == 2);
}

TEST_CASE("a_const frozen values") {
  CHECK(a_const(OrderDim(1, 7)) == -6);
  CHECK(a_const(OrderDim(2, 10)) == 189);
  CHECK(a_const(OrderDim(2, 3)) == 0);
  CHECK(a_const(OrderDim(3, 12)) == -10395);
}

TEST_CASE("a_const_recurrence frozen values") {
  CHECK(a_const_recurrence(OrderDim(1, 7)) == -6);
  CHECK(a_const_recurrence(OrderDim(2, 10)) == 189);
  CHECK(a_const_recurrence(OrderDim(1, 1)) == 0);
}

TEST_CASE("a_const == recurrence == fold oracle across the grid") {
  for (int k = 1; k <= 200; ++k) {
    for (int n = 1; n <= 200; ++n) {
      OrderDim od(k, n);
      Int direct = a_const(od);
      CHECK(direct == a_const_recurrence(od));
      if (k <= 40) CHECK(direct == oracle_a(k, n));
    }
  }
  CHECK(a_const(OrderDim(150, 301)) == oracle_a(150, 301));
  CHECK(a_const(OrderDim(200, 123)) == oracle_a(200, 123));
}

TEST_CASE("alpha_const frozen values") {
  CHECK(alpha_const(OrderDim(2, 10)) == Rat(225));
  CHECK(alpha_const(OrderDim(1, 2)) == Rat(0));
  CHECK(alpha_const(OrderDim(3, 12)) == Rat(11025));
  CHECK(alpha_const(OrderDim(2, 4)) == Rat(0));
  CHECK(alpha_const(OrderDim(1, 7)) == Rat(25, 4));
}

TEST_CASE("alpha_const: nonnegative, dyadic, equals fold oracle") {
  for (int k = 1; k <= 24; ++k) {
    for (int n = 1; n <= 4 * k + 8; ++n) {
      Rat a = alpha_const(OrderDim(k, n));
      CHECK(sgn(a) >= 0);
      // 4^k * alpha is an integer
      Rat scaled = a * Rat(pow2(2ul * k));
      CHECK(scaled.get_den() == 1);
      CHECK(a == oracle_alpha(k, n));
    }
  }
}

TEST_CASE("stability_constants bundles the parity rule") {
  StabilityConstants c1 = stability_constants(OrderDim(1, 7));
  CHECK(c1.p_k == Rat(1, 4));
  CHECK(c1.scaled_p_k == 1);
  CHECK(c1.sign() == 1);

  StabilityConstants c2 = stability_constants(OrderDim(2, 10));
  CHECK(c2.a_k == 189);
  CHECK(c2.alpha_k == Rat(225));
  CHECK(c2.p_k == Rat(36));
  CHECK(c2.scaled_p_k == 576);

  StabilityConstants c3 = stability_constants(OrderDim(3, 12));
  CHECK(c3.p_k == Rat(630));

  StabilityConstants c29 = stability_constants(OrderDim(2, 9));
  CHECK(c29.p_k == Rat(-279, 16));
  CHECK(c29.sign() == -1);
}

TEST_CASE("scaled_p_k equals 4^k p_k and carries its sign") {
  for (int k = 1; k <= 40; ++k) {
    for (int n : {1, 2, k, 2 * k, 2 * k + 1, 2 * k + 2, 3 * k + 1, 4 * k + 3, 4 * k + 9}) {
      if (n < 1) continue;
      StabilityConstants c = stability_constants(OrderDim(k, n));
      CHECK(Rat(c.scaled_p_k) == c.p_k * Rat(pow2(2ul * k)));
      CHECK(sgn(c.scaled_p_k) == sgn(c.p_k));
      CHECK(scaled_p(c.od) == c.scaled_p_k);
      CHECK(p_sign(c.od) == c.sign());
      Rat expected = (k % 2 == 0) ? Rat(c.alpha_k - Rat(c.a_k)) : Rat(c.alpha_k + Rat(c.a_k));
      CHECK(c.p_k == expected);
    }
  }
}

TEST_CASE("p1_p2_closed_forms frozen values and defining identities") {
  auto [p1_7, p2_7] = p1_p2_closed_forms(7);
  CHECK(p1_7 == Rat(1, 4));
  auto [p1_8, p2_8] = p1_p2_closed_forms(8);
  CHECK(p1_8 == Rat(2));
  CHECK(p2_8 == Rat(-41));
  auto [p1_4, p2_4] = p1_p2_closed_forms(4);
  CHECK(p1_4 == Rat(-2));
  CHECK(p2_4 == Rat(-9));
  CHECK_THROWS_AS(p1_p2_closed_forms(0), std::invalid_argument);

  for (int n = 1; n <= 100; ++n) {
    auto [p1, p2] = p1_p2_closed_forms(n);
    CHECK(p1 == stability_constants(OrderDim(1, n)).p_k);
    CHECK(p2 == stability_constants(OrderDim(2, n)).p_k);
  }
}

TEST_CASE("ratio_factors: frozen values and one-step identities") {
  RatioFactors rf = ratio_factors(2, 10);
  REQUIRE(rf.gamma.size() == 2);
  REQUIRE(rf.beta.size() == 2);
  CHECK(rf.gamma[0] == Rat(49, 36));
  CHECK(rf.gamma[1] == Rat(121, 100));
  CHECK(rf.beta[0] == Rat(8, 7));
  CHECK(rf.beta[1] == Rat(10, 9));

  // alpha_2(11) = alpha_2(10) * gamma_0 * gamma_1
  Rat prod_g = rf.gamma[0] * rf.gamma[1];
  CHECK(alpha_const(OrderDim(2, 11)) == alpha_const(OrderDim(2, 10)) * prod_g);
  CHECK(alpha_const(OrderDim(2, 11)) == Rat(5929, 16));

  // |A_2(11)| = |A_2(10)| * beta_0 * beta_1
  Rat prod_b = rf.beta[0] * rf.beta[1];
  CHECK(Rat(a_const(OrderDim(2, 11))) == Rat(a_const(OrderDim(2, 10))) * prod_b);

  CHECK_THROWS_AS(ratio_factors(2, 5), std::domain_error);
  CHECK_THROWS_AS(ratio_factors(0, 10), std::invalid_argument);
}

TEST_CASE("ratio_factors: odd order derived by analogy cross-checks") {
  for (int k : {1, 3, 5, 7}) {
    for (long long big_n : {2LL * k + 2, 2LL * k + 5, 4LL * k + 1}) {
      RatioFactors rf = ratio_factors(k, big_n);
      REQUIRE(static_cast<int>(rf.gamma.size()) == k);
      Rat prod_g(1), prod_b(1);
      for (int i = 0; i < k; ++i) {
        CHECK(sgn(rf.gamma[i]) > 0);
        CHECK(sgn(rf.beta[i]) > 0);
        CHECK(rf.gamma[i] > rf.beta[i]);
        prod_g *= rf.gamma[i];
        prod_b *= rf.beta[i];
      }
      OrderDim lo(k, static_cast<int>(big_n)), hi(k, static_cast<int>(big_n) + 1);
      CHECK(alpha_const(hi) == alpha_const(lo) * prod_g);
      CHECK(Rat(abs(a_const(hi))) == Rat(abs(a_const(lo))) * prod_b);
    }
  }
}

TEST_CASE("threshold-existence induction, instance-wise") {
  // once P_k is nonnegative it stays strictly positive along n
  for (int k = 1; k <= 200; ++k) {
    bool seen_nonneg = false;
    for (int n = 2 * k + 1; n <= 4 * (k + 1); ++n) {
      int sign = p_sign(OrderDim(k, n));
      if (seen_nonneg) CHECK(sign > 0);
      if (sign >= 0) seen_nonneg = true;
    }
  }
  // the mechanism behind it: prod gamma > prod beta
  for (int k = 2; k <= 200; k += 2) {
    int stride = (k <= 120) ? 1 : 3;
    for (int n = 2 * k + 2; n <= 4 * (k + 1); n += stride) {
      RatioFactors rf = ratio_factors(k, n);
      Rat prod_g(1), prod_b(1);
      for (std::size_t i = 0; i < rf.gamma.size(); ++i) {
        prod_g *= rf.gamma[i];
        prod_b *= rf.beta[i];
      }
      CHECK(prod_g > prod_b);
    }
  }
}

TEST_CASE("negative sign at the smallest admissible dimension") {
  for (int k = 1; k <= 300; ++k) CHECK(p_sign(OrderDim(k, 2 * k + 1)) < 0);
}
