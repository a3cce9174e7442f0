#include "eqstab/numeric_oracle.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace eqstab {

LogGrid::LogGrid(double r_min, double r_max, int points)
    : r_min_(r_min), r_max_(r_max), count_(points) {
  if (!(r_min > 0.0) || !(r_min < r_max) || !(r_max <= 1.0)) {
    throw std::invalid_argument("LogGrid: need 0 < r_min < r_max <= 1");
  }
  if (points < 16) throw std::invalid_argument("LogGrid: need at least 16 points");
  log_min_ = std::log(r_min);
  h_ = (std::log(r_max) - log_min_) / (points - 1);
}

double LogGrid::node(int i) const {
  if (i == 0) return r_min_;
  if (i == count_ - 1) return r_max_;
  return std::exp(log_node(i));
}

GridFunction make_grid_function(const LogGrid& grid, int n,
                                const std::function<double(double)>& f) {
  GridFunction g{grid, n, std::vector<double>(grid.size())};
  for (int i = 0; i < grid.size(); ++i) {
    g.values[i] = f(grid.node(i));
    if (!std::isfinite(g.values[i])) {
      throw std::invalid_argument("make_grid_function: non-finite value at node " +
                                  std::to_string(i));
    }
  }
  return g;
}

double smoothstep(int order, double x) {
  if (order < 0 || order > 24) throw std::invalid_argument("smoothstep: order out of range");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  // Binomial tail form: S(x) = sum_{j=m+1..2m+1} C(2m+1, j) x^j (1-x)^{2m+1-j}.
  // Every term is nonnegative, so there is no cancellation near the ends.
  const int m = order;
  const int deg = 2 * m + 1;
  double binom = 1.0;  // C(deg, j), built incrementally from j = m+1
  for (int i = 1; i <= m; ++i) binom = binom * (deg - i + 1) / i;
  binom = binom * (deg - m) / (m + 1);
  double sum = 0.0;
  double term = binom * std::pow(x, m + 1) * std::pow(1.0 - x, m);
  for (int j = m + 1; j <= deg; ++j) {
    sum += term;
    if (j < deg) {
      term *= static_cast<double>(deg - j) / (j + 1) * x / (1.0 - x);
    }
  }
  return std::min(1.0, sum);
}

namespace {

struct CutoffGeometry {
  double t_eps, width, t_hi;
  int order;
};

double cutoff_at_log(const CutoffGeometry& g, double t) {
  if (t <= g.t_eps) return 0.0;
  if (t < g.t_eps + g.width) return smoothstep(g.order, (t - g.t_eps) / g.width);
  if (t <= g.t_hi - g.width) return 1.0;
  if (t < g.t_hi) return smoothstep(g.order, (g.t_hi - t) / g.width);
  return 0.0;
}

CutoffGeometry check_cutoff(const CutoffSpec& cut, double r_max) {
  if (!(cut.inner_radius > 0.0) || !(cut.inner_radius < r_max)) {
    throw std::invalid_argument("cutoff: inner radius must lie in (0, r_max)");
  }
  if (!(cut.transition_width > 0.0)) {
    throw std::invalid_argument("cutoff: transition width must be positive");
  }
  if (cut.smoothness_order < 1) {
    throw std::invalid_argument("cutoff: smoothness order must be >= 1");
  }
  CutoffGeometry g{std::log(cut.inner_radius), cut.transition_width, std::log(r_max),
                   cut.smoothness_order};
  if (g.t_eps + g.width > g.t_hi - g.width) {
    throw std::invalid_argument("cutoff: transition bands overlap");
  }
  return g;
}

void require_points(const GridFunction& f, int needed, const char* who) {
  if (f.grid.size() < needed) {
    throw std::invalid_argument(std::string(who) + ": grid smaller than the stencil");
  }
}

// d/dt and d^2/dt^2 on the uniform log grid.
struct LogDerivatives {
  double dt, dtt;
};

LogDerivatives log_derivatives(const std::vector<double>& v, int i, int count, double h) {
  double dt, dtt;
  if (i >= 2 && i <= count - 3) {
    dt = (v[i - 2] - 8 * v[i - 1] + 8 * v[i + 1] - v[i + 2]) / (12 * h);
    dtt = (-v[i - 2] + 16 * v[i - 1] - 30 * v[i] + 16 * v[i + 1] - v[i + 2]) / (12 * h * h);
  } else if (i == 0) {
    dt = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h);
    dtt = (2 * v[0] - 5 * v[1] + 4 * v[2] - v[3]) / (h * h);
  } else if (i == count - 1) {
    dt = (3 * v[i] - 4 * v[i - 1] + v[i - 2]) / (2 * h);
    dtt = (2 * v[i] - 5 * v[i - 1] + 4 * v[i - 2] - v[i - 3]) / (h * h);
  } else {  // i == 1 or i == count-2
    dt = (v[i + 1] - v[i - 1]) / (2 * h);
    dtt = (v[i - 1] - 2 * v[i] + v[i + 1]) / (h * h);
  }
  return {dt, dtt};
}

}  // namespace

double cutoff_value(const CutoffSpec& cut, double r_max, double r) {
  CutoffGeometry g = check_cutoff(cut, r_max);
  if (r <= 0.0) return 0.0;
  return cutoff_at_log(g, std::log(r));
}

GridFunction fd_scalar_laplacian(const GridFunction& f) {
  require_points(f, 5, "fd_scalar_laplacian");
  const int count = f.grid.size();
  const double h = f.grid.log_step();
  GridFunction out{f.grid, f.n, std::vector<double>(count)};
  for (int i = 0; i < count; ++i) {
    auto d = log_derivatives(f.values, i, count, h);
    out.values[i] = std::exp(-2.0 * f.grid.log_node(i)) * (d.dtt + (f.n - 2) * d.dt);
  }
  return out;
}

GridFunction fd_radial_derivative(const GridFunction& f) {
  require_points(f, 5, "fd_radial_derivative");
  const int count = f.grid.size();
  const double h = f.grid.log_step();
  GridFunction out{f.grid, f.n, std::vector<double>(count)};
  for (int i = 0; i < count; ++i) {
    auto d = log_derivatives(f.values, i, count, h);
    out.values[i] = std::exp(-f.grid.log_node(i)) * d.dt;
  }
  return out;
}

namespace {

// 4-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 4> kGlNodes = {-0.8611363115940526, -0.3399810435848563,
                                            0.3399810435848563, 0.8611363115940526};
constexpr std::array<double, 4> kGlWeights = {0.3478548451374538, 0.6521451548625461,
                                              0.6521451548625461, 0.3478548451374538};

// 6-point Lagrange interpolation at offset u from node `base` (in units of
// the grid step).
double lagrange6(const std::vector<double>& v, int base, double u) {
  double acc = 0.0;
  for (int j = 0; j < 6; ++j) {
    double w = 1.0;
    for (int m = 0; m < 6; ++m) {
      if (m == j) continue;
      w *= (u - m) / (j - m);
    }
    acc += w * v[base + j];
  }
  return acc;
}

}  // namespace

double radial_integral(const GridFunction& f, int weight_exponent) {
  require_points(f, 6, "radial_integral");
  const int count = f.grid.size();
  const double h = f.grid.log_step();
  const double e = weight_exponent + f.n;  // integrand in t: f e^{e t}
  double total = 0.0;
  for (int cell = 0; cell + 1 < count; ++cell) {
    int base = cell - 2;
    if (base < 0) base = 0;
    if (base > count - 6) base = count - 6;
    const double t0 = f.grid.log_node(cell);
    double acc = 0.0;
    for (int q = 0; q < 4; ++q) {
      double frac = (kGlNodes[q] + 1.0) / 2.0;
      double u = (cell - base) + frac;
      double fval = lagrange6(f.values, base, u);
      acc += kGlWeights[q] * fval * std::exp(e * (t0 + frac * h));
    }
    total += acc;
  }
  return total * h / 2.0;
}

GridFunction build_test_function(double beta, const CutoffSpec& cut, const LogGrid& grid,
                                 int n) {
  CutoffGeometry g = check_cutoff(cut, grid.r_max());
  if (cut.inner_radius < grid.r_min()) {
    throw std::invalid_argument("build_test_function: inner radius below the grid start");
  }
  GridFunction out{grid, n, std::vector<double>(grid.size())};
  for (int i = 0; i < grid.size(); ++i) {
    double t = grid.log_node(i);
    double chi = cutoff_at_log(g, t);
    out.values[i] = (chi == 0.0) ? 0.0 : chi * std::exp(beta * t);
  }
  return out;
}

namespace {

GridFunction squared(const GridFunction& f) {
  GridFunction out = f;
  for (double& v : out.values) v *= v;
  return out;
}

struct FormParts {
  double numerator;   // leading integral of the quadratic form
  double weighted_l2; // integral of phi^2 / r^{2k}
};

FormParts form_parts(const GridFunction& phi, int k) {
  if (k < 1) throw std::invalid_argument("form_parts: k must be >= 1");
  const int s = k / 2;
  GridFunction g = phi;
  for (int j = 0; j < s; ++j) g = fd_scalar_laplacian(g);
  if (k % 2 == 1) g = fd_radial_derivative(g);
  FormParts parts{};
  parts.numerator = radial_integral(squared(g), 0);
  parts.weighted_l2 = radial_integral(squared(phi), -2 * k);
  return parts;
}

}  // namespace

double hardy_quotient_numeric(const GridFunction& phi, int k) {
  FormParts parts = form_parts(phi, k);
  if (!(parts.weighted_l2 > 1e-280)) {
    throw std::domain_error("hardy_quotient_numeric: test function is numerically zero");
  }
  return parts.numerator / parts.weighted_l2;
}

double stability_form_numeric(const GridFunction& phi, const OrderDim& od) {
  if (phi.n != od.n) throw std::invalid_argument("stability_form_numeric: dimension mismatch");
  FormParts parts = form_parts(phi, od.k);
  const double a = to_double(a_const(od));
  const double sign = (od.k % 2 == 0) ? -1.0 : 1.0;
  return parts.numerator + sign * a * parts.weighted_l2;
}

CertificateResult instability_certificate(const OrderDim& od, int search_budget) {
  if (od.k > 8) {
    throw std::invalid_argument("instability_certificate: limited to k <= 8");
  }
  if (!od.sobolev_admissible() || p_sign(od) >= 0) {
    throw std::invalid_argument(
        "instability_certificate: requires n >= 2k+1 and P_k(n) < 0");
  }
  const double beta_star = (2.0 * od.k - od.n) / 2.0;
  const double a = to_double(a_const(od));
  const double form_sign = (od.k % 2 == 0) ? -1.0 : 1.0;

  CertificateResult result;
  double best = std::numeric_limits<double>::infinity();

  const int grid_sizes[] = {2048, 4096};
  const double widths[] = {1.5, 2.5};
  const double epsilons[] = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
  const double beta_offsets[] = {0.0, 0.25, -0.25};

  for (int points : grid_sizes) {
    LogGrid grid(1e-8, 1.0, points);
    for (double width : widths) {
      for (double eps : epsilons) {
        for (double offset : beta_offsets) {
          if (result.evaluations >= search_budget) return result;
          ++result.evaluations;
          CutoffSpec cut{eps, width, 2 * od.k + 1};
          GridFunction phi = build_test_function(beta_star + offset, cut, grid, od.n);
          FormParts parts = form_parts(phi, od.k);
          if (!(parts.weighted_l2 > 1e-280)) continue;
          double q = parts.numerator + form_sign * a * parts.weighted_l2;
          double normalized = q / parts.weighted_l2;
          if (normalized < best) {
            best = normalized;
            result.witness = CertificateWitness{beta_star + offset, eps, width, 2 * od.k + 1,
                                                points};
            result.form_value = q;
            result.normalized_value = normalized;
          }
          if (q < 0.0) {
            result.found = true;
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace eqstab
