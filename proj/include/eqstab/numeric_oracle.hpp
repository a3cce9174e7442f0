#ifndef EQSTAB_NUMERIC_ORACLE_HPP
#define EQSTAB_NUMERIC_ORACLE_HPP

#include <functional>
#include <vector>

#include "eqstab/exact_core.hpp"

namespace eqstab {

// Geometrically spaced radii on (0, 1]: uniform spacing in t = log r. The
// Hardy extremizers concentrate at the origin, so resolution is spent
// where it matters.
class LogGrid {
 public:
  LogGrid(double r_min, double r_max, int points);
  static LogGrid standard() { return LogGrid(1e-8, 1.0, 4096); }

  int size() const { return count_; }
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  double node(int i) const;
  double log_node(int i) const { return log_min_ + h_ * i; }
  double log_step() const { return h_; }

 private:
  double r_min_, r_max_, log_min_, h_;
  int count_;
};

struct GridFunction {
  LogGrid grid;
  int n;  // ambient dimension tag
  std::vector<double> values;
};

GridFunction make_grid_function(const LogGrid& grid, int n,
                                const std::function<double(double)>& f);

// Polynomial blend rising from 0 to 1 on [0,1] with `order` vanishing
// derivatives at both ends.
double smoothstep(int order, double x);

// Radial cutoff: identically 0 on [0, eps], a smoothstep blend over one
// band of width transition_width in log r, identically 1 on the plateau
// [eps e^W, r_max e^{-W}], and a mirrored blend down to 0 at r_max.
struct CutoffSpec {
  double inner_radius;      // eps
  double transition_width;  // band width in log r
  int smoothness_order;     // >= k of the intended energy
};

double cutoff_value(const CutoffSpec& cut, double r_max, double r);

// phi'' + (n-1) phi'/r by centered differences in log r, where the
// operator becomes e^{-2t} (d^2/dt^2 + (n-2) d/dt). Fourth order on
// interior nodes, second-order one-sided at the four boundary nodes.
GridFunction fd_scalar_laplacian(const GridFunction& f);

// d phi/dr = e^{-t} d phi/dt, same stencil layout.
GridFunction fd_radial_derivative(const GridFunction& f);

// integral of f(r) r^{weight_exponent + n - 1} dr over [r_min, r_max],
// composite 4-node Gauss-Legendre per log cell; values between nodes come
// from local 6-point Lagrange interpolation in t.
double radial_integral(const GridFunction& f, int weight_exponent);

// Samples r^beta times the cutoff. Exact zero for r <= eps, exactly
// r^beta on the plateau.
GridFunction build_test_function(double beta, const CutoffSpec& cut, const LogGrid& grid,
                                 int n);

// [ integral |Delta^s phi|^2 dx ] / [ integral phi^2 / r^{2k} dx ] with
// the gradient variant on top for odd k. Throws std::domain_error when the
// denominator underflows.
double hardy_quotient_numeric(const GridFunction& phi, int k);

// Second-variation quadratic form of the extrinsic k-energy at the equator
// map, evaluated on phi (one fixed component):
//   k = 2s:   integral |Delta^s phi|^2 - A_k(n) phi^2 / r^{2k} dx
//   k = 2s+1: integral |grad Delta^s phi|^2 + A_k(n) phi^2 / r^{2k} dx
double stability_form_numeric(const GridFunction& phi, const OrderDim& od);

struct CertificateWitness {
  double beta = 0.0;
  double inner_radius = 0.0;
  double transition_width = 0.0;
  int smoothness_order = 0;
  int grid_points = 0;
};

struct CertificateResult {
  bool found = false;
  CertificateWitness witness;
  double form_value = 0.0;        // value of the quadratic form
  double normalized_value = 0.0;  // form value / weighted L2 norm of phi
  int evaluations = 0;
};

// Searches cutoff test functions (beta near beta*, shrinking eps, band
// widths, grid resolutions) for one that makes the stability form strictly
// negative. Caller guarantees P_k(n) < 0 and n >= 2k+1; enforced here.
// found = false after the budget is spent is a soft failure: it reports
// numeric difficulty, not a theory violation. Limited to k <= 8, where the
// form is safely evaluable in doubles.
CertificateResult instability_certificate(const OrderDim& od, int search_budget);

}  // namespace eqstab

#endif
