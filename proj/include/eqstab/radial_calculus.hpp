#ifndef EQSTAB_RADIAL_CALCULUS_HPP
#define EQSTAB_RADIAL_CALCULUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "eqstab/exact_core.hpp"

namespace eqstab {

// The map x -> (c r^a x, 0) from the punctured ball B^n \ {0} into R^{n+1}.
// The equator map is (c = 1, a = -1).
struct RadialMonomialMap {
  int n;
  Rat coeff;
  int exponent;
};

RadialMonomialMap equator_profile(int n);

// Componentwise Laplacian: the profile p = c r^a maps to
// p'' + (n+1) p'/r = c a (a+n) r^{a-2}.
RadialMonomialMap map_laplacian(const RadialMonomialMap& m);

// k-fold map_laplacian of the equator profile. The coefficient equals
// A_k(n) and the exponent is -(2k+1).
RadialMonomialMap map_laplacian_power(int n, int k);

// (coefficient, exponent) of |grad u|^2 = r^2 p'^2 + n p^2 + 2 r p p'
// for u = (c r^a x, 0): coefficient c^2 (a(a+2) + n), exponent 2a.
std::pair<Rat, int> grad_norm_sq(const RadialMonomialMap& m);

// Pointwise density of the extrinsic k-energy of the equator map:
//   k = 2s:   |Delta^s u*|^2      = A_s(n)^2            r^{-4s}
//   k = 2s+1: |grad Delta^s u*|^2 = A_s(n)^2 (n+4s^2-1) r^{-(4s+2)}
// finite_energy iff the radial integral converges at the origin, i.e.
// density_exponent + n - 1 > -1, which is exactly n >= 2k+1.
struct EnergyDensitySummary {
  OrderDim od;
  Rat density_coeff;
  int density_exponent;
  bool finite_energy;
};

EnergyDensitySummary energy_density(const OrderDim& od);

bool sobolev_member(const OrderDim& od);

// (A_k(n), -2k): the radial factor with Delta^k u* = (A_k(n)/r^{2k}) u*,
// i.e. the equator map's Lagrange multiplier is -A_k(n)/r^{2k}.
std::pair<Int, int> equator_multiplier(const OrderDim& od);

// Finite sum of Laurent terms c r^a with exact rational coefficients and
// exponents (half-integer exponents appear as Hardy extremizers when n is
// odd). Canonical form: terms sorted by exponent, exponents distinct,
// no zero coefficients.
class RadialScalarField {
 public:
  struct Term {
    Rat coeff;
    Rat exponent;
  };

  explicit RadialScalarField(int n) : n_(n) {}
  RadialScalarField(int n, std::vector<Term> terms);

  static RadialScalarField monomial(int n, Rat coeff, Rat exponent);

  int dim() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  RadialScalarField operator+(const RadialScalarField& other) const;
  RadialScalarField scaled(const Rat& c) const;

  // Radial scalar Laplacian: c r^a -> c a (a+n-2) r^{a-2} termwise.
  RadialScalarField laplacian() const;

  double evaluate(double r) const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

RadialScalarField scalar_laplacian_power(const RadialScalarField& f, int s);

// beta* = (2k-n)/2, the exponent at which the pure-power Hardy quotient
// attains the optimal constant.
Rat hardy_extremal_exponent(const OrderDim& od);

// Pointwise ratio of |Delta^s (r^beta)|^2 (gradient variant for odd k) to
// r^{2 beta - 2k}: with c(beta, s) = prod_{j=0..s-1} (beta-2j)(beta-2j+n-2),
// returns c^2 for k = 2s and c^2 (beta-2s)^2 for k = 2s+1. At beta* this
// equals alpha_k(n) exactly. Note this is a pointwise identity, not the
// Rayleigh quotient of an admissible test function; cutoff corrections are
// the business of the numeric layer.
Rat hardy_quotient_power(const Rat& beta, const OrderDim& od);

// Integrand coefficient of the second-variation quadratic form on the pure
// power r^beta: hardy_quotient_power - A_k(n) for even k, + A_k(n) for odd.
// At beta* this equals P_k(n) exactly.
Rat stability_form_power(const Rat& beta, const OrderDim& od);

}  // namespace eqstab

#endif
