#include "eqstab/radial_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eqstab {

RadialMonomialMap equator_profile(int n) { return RadialMonomialMap{n, Rat(1), -1}; }

RadialMonomialMap map_laplacian(const RadialMonomialMap& m) {
  const long a = m.exponent;
  Rat c = m.coeff * Rat(Int(a) * Int(a + m.n));
  if (sgn(c) == 0) return RadialMonomialMap{m.n, Rat(0), m.exponent - 2};
  return RadialMonomialMap{m.n, c, m.exponent - 2};
}

RadialMonomialMap map_laplacian_power(int n, int k) {
  if (k < 0) throw std::invalid_argument("map_laplacian_power: k must be >= 0");
  RadialMonomialMap m = equator_profile(n);
  for (int j = 0; j < k; ++j) m = map_laplacian(m);
  return m;
}

std::pair<Rat, int> grad_norm_sq(const RadialMonomialMap& m) {
  const long a = m.exponent;
  Rat c = m.coeff * m.coeff * Rat(Int(a) * Int(a + 2) + Int(m.n));
  return {c, 2 * m.exponent};
}

EnergyDensitySummary energy_density(const OrderDim& od) {
  const int s = od.s();
  Int a_s = (s == 0) ? Int(1) : a_const(OrderDim(s, od.n));
  EnergyDensitySummary summary{od, Rat(), 0, od.sobolev_admissible()};
  if (od.k % 2 == 0) {
    summary.density_coeff = Rat(a_s * a_s);
    summary.density_exponent = -4 * s;
  } else {
    summary.density_coeff = Rat(a_s * a_s * Int(static_cast<long>(od.n) + 4L * s * s - 1));
    summary.density_exponent = -(4 * s + 2);
  }
  return summary;
}

bool sobolev_member(const OrderDim& od) { return od.sobolev_admissible(); }

std::pair<Int, int> equator_multiplier(const OrderDim& od) {
  return {a_const(od), -2 * od.k};
}

RadialScalarField::RadialScalarField(int n, std::vector<Term> terms) : n_(n) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (auto& t : terms) {
    if (sgn(t.coeff) == 0) continue;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
      if (sgn(terms_.back().coeff) == 0) terms_.pop_back();
    } else {
      terms_.push_back(std::move(t));
    }
  }
}

RadialScalarField RadialScalarField::monomial(int n, Rat coeff, Rat exponent) {
  return RadialScalarField(n, {Term{std::move(coeff), std::move(exponent)}});
}

RadialScalarField RadialScalarField::operator+(const RadialScalarField& other) const {
  if (n_ != other.n_) throw std::invalid_argument("RadialScalarField: dimension mismatch");
  std::vector<Term> merged = terms_;
  merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
  return RadialScalarField(n_, std::move(merged));
}

RadialScalarField RadialScalarField::scaled(const Rat& c) const {
  std::vector<Term> out;
  if (sgn(c) != 0) {
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{Rat(t.coeff * c), t.exponent});
  }
  return RadialScalarField(n_, std::move(out));
}

RadialScalarField RadialScalarField::laplacian() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const Rat shift(static_cast<long>(n_) - 2);
  for (const auto& t : terms_) {
    Rat factor = t.exponent * (t.exponent + shift);
    if (sgn(factor) == 0) continue;
    out.push_back(Term{Rat(t.coeff * factor), Rat(t.exponent - 2)});
  }
  return RadialScalarField(n_, std::move(out));
}

double RadialScalarField::evaluate(double r) const {
  double acc = 0.0;
  for (const auto& t : terms_) acc += to_double(t.coeff) * std::pow(r, to_double(t.exponent));
  return acc;
}

std::string RadialScalarField::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    out += to_decimal(terms_[i].coeff);
    out += " * r^";
    out += to_decimal(terms_[i].exponent);
  }
  return out;
}

RadialScalarField scalar_laplacian_power(const RadialScalarField& f, int s) {
  if (s < 0) throw std::invalid_argument("scalar_laplacian_power: s must be >= 0");
  RadialScalarField g = f;
  for (int j = 0; j < s; ++j) g = g.laplacian();
  return g;
}

Rat hardy_extremal_exponent(const OrderDim& od) {
  return make_rat(Int(2L * od.k - od.n), Int(2));
}

Rat hardy_quotient_power(const Rat& beta, const OrderDim& od) {
  const int s = od.s();
  Rat c(1);
  const Rat shift(static_cast<long>(od.n) - 2);
  for (int j = 0; j < s; ++j) {
    Rat b = beta - Rat(2L * j);
    c *= b * (b + shift);
  }
  Rat q = c * c;
  if (od.k % 2 == 1) {
    Rat d = beta - Rat(2L * s);
    q *= d * d;
  }
  return q;
}

Rat stability_form_power(const Rat& beta, const OrderDim& od) {
  Rat q = hardy_quotient_power(beta, od);
  Rat a(a_const(od));
  return (od.k % 2 == 0) ? Rat(q - a) : Rat(q + a);
}

}  // namespace eqstab
