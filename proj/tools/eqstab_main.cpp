// Command-line surface for the equator-map stability toolkit.
//
// Exit codes: 0 success, 2 usage or precondition, 3 bound-violated,
// 4 invariant violation, 5 certificate not found within budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eqstab/numeric_oracle.hpp"
#include "eqstab/radial_calculus.hpp"
#include "eqstab/threshold.hpp"

using nlohmann::ordered_json;
using namespace eqstab;

namespace {

constexpr const char* kSchema = "1";

ordered_json exact(const std::string& v) {
  return ordered_json{{"value", v}, {"type", "exact"}};
}

ordered_json exact(long long v) { return ordered_json{{"value", v}, {"type", "exact"}}; }

ordered_json exact(bool v) { return ordered_json{{"value", v}, {"type", "exact"}}; }

ordered_json numeric(double v) { return ordered_json{{"value", v}, {"type", "numeric"}}; }

ordered_json make_output(const std::string& command, ordered_json parameters,
                         ordered_json results) {
  return ordered_json{{"schema", kSchema},
                      {"command", command},
                      {"parameters", std::move(parameters)},
                      {"results", std::move(results)}};
}

void emit(const ordered_json& out) { std::cout << out.dump(2) << "\n"; }

ordered_json record_json(const ThresholdRecord& rec) {
  ordered_json j{{"k", rec.k}, {"n_star", rec.n_star}, {"bound_ok", rec.bound_ok}};
  if (rec.gap_prev) {
    j["gap_prev"] = *rec.gap_prev;
  } else {
    j["gap_prev"] = nullptr;
  }
  j["type"] = "exact";
  return j;
}

void emit_records_csv(const std::vector<ThresholdRecord>& records) {
  std::cout << "k,n_star,bound_ok,gap_prev\n";
  for (const auto& rec : records) {
    std::cout << rec.k << ',' << rec.n_star << ',' << (rec.bound_ok ? "true" : "false")
              << ',';
    if (rec.gap_prev) std::cout << *rec.gap_prev;
    std::cout << '\n';
  }
}

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int run_poly(int k, int n) {
  OrderDim od(k, n);
  StabilityConstants c = stability_constants(od);
  ordered_json results{
      {"a_k", exact(to_decimal(c.a_k))},
      {"alpha_k", exact(to_decimal(c.alpha_k))},
      {"p_k", exact(to_decimal(c.p_k))},
      {"scaled_p_k", exact(to_decimal(c.scaled_p_k))},
      {"sign", exact(static_cast<long long>(c.sign()))},
      {"sobolev_admissible", exact(od.sobolev_admissible())},
      {"classification", exact(std::string(to_string(classify(od))))},
  };
  emit(make_output("poly", ordered_json{{"k", k}, {"n", n}}, std::move(results)));
  return 0;
}

int run_threshold(std::optional<int> k, std::vector<int> k_range, const std::string& method,
                  const std::string& format, int jobs) {
  bool binary = method != "linear";
  std::vector<ThresholdRecord> records;
  ordered_json parameters;
  if (k) {
    parameters = ordered_json{{"k", *k}, {"method", method}};
    records.push_back(binary ? threshold_binary(*k) : threshold_linear(*k));
  } else {
    parameters = ordered_json{
        {"k_lo", k_range[0]}, {"k_hi", k_range[1]}, {"method", method}, {"jobs", jobs}};
    records = threshold_range(k_range[0], k_range[1], binary, jobs);
  }
  if (format == "csv") {
    emit_records_csv(records);
  } else {
    ordered_json results = ordered_json::array();
    for (const auto& rec : records) results.push_back(record_json(rec));
    emit(make_output("threshold", std::move(parameters), std::move(results)));
  }
  return 0;
}

int run_gaps(std::vector<int> k_range, int jobs) {
  GapReport report = gap_analysis(k_range[0], k_range[1], jobs);
  ordered_json gap_counts = ordered_json::object();
  for (const auto& [gap, count] : report.gap_counts) gap_counts[std::to_string(gap)] = count;
  ordered_json results{{"records_checked", static_cast<long long>(report.records.size())},
                       {"gap_counts", std::move(gap_counts)},
                       {"positions_ge3", report.positions_ge3},
                       {"positions_eq1", report.positions_eq1},
                       {"type", "exact"}};
  emit(make_output("gaps",
                   ordered_json{{"k_lo", k_range[0]}, {"k_hi", k_range[1]}, {"jobs", jobs}},
                   std::move(results)));
  return 0;
}

struct SuiteOutcome {
  long long checked = 0;
  long long violations = 0;
  ordered_json first_counterexample = nullptr;

  void violation(ordered_json detail) {
    ++violations;
    if (first_counterexample.is_null()) first_counterexample = std::move(detail);
  }
};

SuiteOutcome suite_lemma(int k_max) {
  SuiteOutcome out;
  for (int k = 1; k <= k_max; ++k) {
    ++out.checked;
    if (p_sign(OrderDim(k, 2 * k + 1)) >= 0) {
      out.violation(ordered_json{{"k", k}, {"n", 2 * k + 1}, {"detail", "P_k(2k+1) >= 0"}});
    }
  }
  return out;
}

SuiteOutcome suite_bound(int k_max, int jobs) {
  SuiteOutcome out;
  std::vector<ThresholdRecord> records = threshold_range(1, k_max, true, jobs);
  for (const auto& rec : records) {
    ++out.checked;
    if (!(2 * rec.k + 1 < rec.n_star && rec.n_star < 4 * (rec.k + 1)) || !rec.bound_ok) {
      out.violation(ordered_json{
          {"k", rec.k}, {"n_star", rec.n_star}, {"detail", "threshold outside (2k+1, 4(k+1))"}});
    }
  }
  return out;
}

SuiteOutcome suite_radial(int k_max) {
  SuiteOutcome out;
  for (int k = 1; k <= k_max; ++k) {
    for (int n = 2 * k + 1; n <= 4 * (k + 1); ++n) {
      OrderDim od(k, n);
      ++out.checked;
      RadialMonomialMap m = map_laplacian_power(n, k);
      if (m.coeff != Rat(a_const(od)) || m.exponent != -(2 * k + 1)) {
        out.violation(ordered_json{{"k", k}, {"n", n}, {"detail", "iterated Laplacian mismatch"}});
        continue;
      }
      EnergyDensitySummary density = energy_density(od);
      RadialMonomialMap half = map_laplacian_power(n, od.s());
      bool ok;
      if (k % 2 == 0) {
        ok = density.density_coeff == half.coeff * half.coeff &&
             density.density_exponent == 2 * half.exponent + 2;
      } else {
        auto [coeff, exponent] = grad_norm_sq(half);
        ok = density.density_coeff == coeff && density.density_exponent == exponent;
      }
      if (!ok || density.finite_energy != od.sobolev_admissible()) {
        out.violation(ordered_json{{"k", k}, {"n", n}, {"detail", "energy density mismatch"}});
      }
    }
  }
  return out;
}

SuiteOutcome suite_hardy(int k_max) {
  SuiteOutcome out;
  // exact extremal identities
  for (int k = 1; k <= std::min(k_max, 10); ++k) {
    for (int n = 2 * k + 1; n <= 4 * (k + 1); ++n) {
      OrderDim od(k, n);
      ++out.checked;
      Rat beta_star = hardy_extremal_exponent(od);
      if (hardy_quotient_power(beta_star, od) != alpha_const(od) ||
          stability_form_power(beta_star, od) != stability_constants(od).p_k) {
        out.violation(ordered_json{{"k", k}, {"n", n}, {"detail", "extremal identity failed"}});
      }
    }
  }
  // numeric lower bound on sampled admissible functions
  LogGrid grid = LogGrid::standard();
  for (int k = 1; k <= std::min(k_max, 4); ++k) {
    for (int n : {2 * k + 1, 2 * k + 3, 4 * (k + 1)}) {
      OrderDim od(k, n);
      double alpha = to_double(alpha_const(od));
      double beta_star = (2.0 * k - n) / 2.0;
      for (double eps : {1e-4, 1e-6}) {
        for (double db : {0.0, 0.5}) {
          ++out.checked;
          CutoffSpec cut{eps, 2.0, k + 1};
          GridFunction phi = build_test_function(beta_star + db, cut, grid, n);
          double q = hardy_quotient_numeric(phi, k);
          if (!(q >= alpha * (1.0 - 1e-6))) {
            out.violation(ordered_json{{"k", k},
                                       {"n", n},
                                       {"eps", eps},
                                       {"beta", beta_star + db},
                                       {"detail", "numeric quotient below the constant"}});
          }
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> load_threshold_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file: " + path);
  std::vector<std::pair<int, int>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream ss(line);
    std::string ks, ns;
    std::getline(ss, ks, ',');
    std::getline(ss, ns, ',');
    rows.emplace_back(std::stoi(ks), std::stoi(ns));
  }
  return rows;
}

SuiteOutcome suite_tables(const std::string& data_dir) {
  SuiteOutcome out;
  for (const char* name : {"thresholds_k_1_40.csv", "thresholds_large_k.csv"}) {
    auto rows = load_threshold_csv(data_dir + "/" + name);
    if (rows.empty()) throw std::runtime_error(std::string("golden file is empty: ") + name);
    for (auto [k, expected] : rows) {
      ++out.checked;
      int got = threshold_binary(k).n_star;
      if (got != expected) {
        out.violation(ordered_json{
            {"k", k}, {"expected", expected}, {"computed", got}, {"file", name}});
      }
    }
  }
  return out;
}

int run_verify(const std::string& suite, std::optional<int> k_max, int jobs,
               const std::string& data_dir) {
  SuiteOutcome out;
  int effective_k_max = 0;
  if (suite == "lemma") {
    effective_k_max = k_max.value_or(2000);
    out = suite_lemma(effective_k_max);
  } else if (suite == "bound") {
    effective_k_max = k_max.value_or(2000);
    out = suite_bound(effective_k_max, jobs);
  } else if (suite == "radial") {
    effective_k_max = k_max.value_or(50);
    out = suite_radial(effective_k_max);
  } else if (suite == "hardy") {
    effective_k_max = k_max.value_or(10);
    out = suite_hardy(effective_k_max);
  } else {  // tables
    out = suite_tables(data_dir);
  }
  ordered_json parameters{{"suite", suite}};
  if (suite != "tables") parameters["k_max"] = effective_k_max;
  ordered_json results{{"checked", out.checked},
                       {"violations", out.violations},
                       {"first_counterexample", out.first_counterexample},
                       {"type", "exact"}};
  emit(make_output("verify", std::move(parameters), std::move(results)));
  return out.violations == 0 ? 0 : 4;
}

int run_hardy_demo(int k, int n, std::optional<double> beta, double eps, double width,
                   std::optional<int> order, int points) {
  OrderDim od(k, n);
  double beta_star = (2.0 * k - n) / 2.0;
  double b = beta.value_or(beta_star);
  int ord = order.value_or(2 * k + 1);
  LogGrid grid(std::min(1e-8, eps / 10.0), 1.0, points);
  CutoffSpec cut{eps, width, ord};
  GridFunction phi = build_test_function(b, cut, grid, n);
  double quotient = hardy_quotient_numeric(phi, k);
  double alpha = to_double(alpha_const(od));
  ordered_json results{
      {"quotient", numeric(quotient)},
      {"alpha_k", exact(to_decimal(alpha_const(od)))},
      {"alpha_k_numeric", numeric(alpha)},
      {"excess_ratio", numeric(quotient / alpha - 1.0)},
  };
  emit(make_output("hardy-demo",
                   ordered_json{{"k", k},
                                {"n", n},
                                {"beta", b},
                                {"eps", eps},
                                {"width", width},
                                {"order", ord},
                                {"points", points}},
                   std::move(results)));
  return 0;
}

int run_instability(int k, int n, int budget) {
  OrderDim od(k, n);
  if (!od.sobolev_admissible()) {
    std::cerr << "instability: n < 2k+1, the equator map is outside W^{k,2}\n";
    return 2;
  }
  StabilityConstants c = stability_constants(od);
  if (c.sign() >= 0) {
    std::cerr << "instability: P_" << k << "(" << n << ") = " << to_decimal(c.p_k)
              << " >= 0, the equator map is minimizing; nothing to certify\n";
    return 2;
  }
  CertificateResult res = instability_certificate(od, budget);
  ordered_json witness{{"beta", res.witness.beta},
                       {"inner_radius", res.witness.inner_radius},
                       {"transition_width", res.witness.transition_width},
                       {"smoothness_order", res.witness.smoothness_order},
                       {"grid_points", res.witness.grid_points}};
  ordered_json results{{"found", {{"value", res.found}, {"type", "numeric"}}},
                       {"p_k", exact(to_decimal(c.p_k))},
                       {"witness", std::move(witness)},
                       {"form_value", numeric(res.form_value)},
                       {"normalized_value", numeric(res.normalized_value)},
                       {"evaluations", numeric(res.evaluations)}};
  emit(make_output("instability", ordered_json{{"k", k}, {"n", n}, {"budget", budget}},
                   std::move(results)));
  if (!res.found) {
    std::cerr << "instability: no negative direction found within budget "
              << "(numeric difficulty, not a theory violation)\n";
    return 5;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equator map stability toolkit: exact constants, critical dimensions, "
               "Hardy quotients, instability certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = default_jobs();
  app.add_option("--jobs", jobs, "worker threads for range commands")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  // poly
  auto* poly = app.add_subcommand("poly", "A_k(n), alpha_k(n), P_k(n) and classification");
  int poly_k = 0, poly_n = 0;
  poly->add_option("--k", poly_k, "energy order")->required()->check(CLI::PositiveNumber);
  poly->add_option("--n", poly_n, "ambient dimension")->required()->check(CLI::PositiveNumber);

  // threshold
  auto* threshold =
      app.add_subcommand("threshold", "critical dimension n_k* (single k or a range)");
  std::optional<int> th_k;
  std::vector<int> th_range;
  std::string th_method = "binary", th_format = "json";
  threshold->add_option("--k", th_k, "single energy order")->check(CLI::PositiveNumber);
  threshold->add_option("--k-range", th_range, "inclusive range k_lo k_hi")
      ->expected(2)
      ->check(CLI::PositiveNumber);
  threshold->add_option("--method", th_method, "search method")
      ->check(CLI::IsMember({"binary", "linear"}))
      ->capture_default_str();
  threshold->add_option("--format", th_format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  // gaps
  auto* gaps = app.add_subcommand("gaps", "gap analysis of the n_k* sequence");
  std::vector<int> gaps_range;
  gaps->add_option("--k-range", gaps_range, "inclusive range k_lo k_hi")
      ->expected(2)
      ->required()
      ->check(CLI::PositiveNumber);

  // verify
  auto* verify = app.add_subcommand("verify", "run an invariant suite");
  std::string verify_suite;
  std::optional<int> verify_k_max;
  std::string verify_data = "data";
  verify->add_option("--suite", verify_suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"lemma", "bound", "radial", "hardy", "tables"}));
  verify->add_option("--k-max", verify_k_max, "largest order checked")
      ->check(CLI::PositiveNumber);
  verify->add_option("--data", verify_data, "directory with golden threshold tables")
      ->capture_default_str();

  // hardy-demo
  auto* hardy = app.add_subcommand("hardy-demo", "numeric Hardy quotient of a cutoff power");
  int hd_k = 0, hd_n = 0, hd_points = 4096;
  std::optional<double> hd_beta;
  std::optional<int> hd_order;
  double hd_eps = 1e-6, hd_width = 2.0;
  hardy->add_option("--k", hd_k, "energy order")->required()->check(CLI::PositiveNumber);
  hardy->add_option("--n", hd_n, "ambient dimension")->required()->check(CLI::PositiveNumber);
  hardy->add_option("--beta", hd_beta, "power exponent (default beta*)");
  hardy->add_option("--eps", hd_eps, "inner support radius")->capture_default_str();
  hardy->add_option("--width", hd_width, "transition width in log r")->capture_default_str();
  hardy->add_option("--order", hd_order, "cutoff smoothness order (default 2k+1)");
  hardy->add_option("--points", hd_points, "grid points")->capture_default_str();

  // instability
  auto* instability =
      app.add_subcommand("instability", "search for a negative second-variation direction");
  int in_k = 0, in_n = 0, in_budget = 200;
  instability->add_option("--k", in_k, "energy order")->required()->check(CLI::PositiveNumber);
  instability->add_option("--n", in_n, "ambient dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  instability->add_option("--budget", in_budget, "max form evaluations")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poly) return run_poly(poly_k, poly_n);
    if (*threshold) {
      if (!th_k && th_range.size() != 2) {
        std::cerr << "threshold: provide --k or --k-range\n";
        return 2;
      }
      if (th_k && th_range.size() == 2) {
        std::cerr << "threshold: --k and --k-range are mutually exclusive\n";
        return 2;
      }
      return run_threshold(th_k, th_range, th_method, th_format, jobs);
    }
    if (*gaps) return run_gaps(gaps_range, jobs);
    if (*verify) return run_verify(verify_suite, verify_k_max, jobs, verify_data);
    if (*hardy) return run_hardy_demo(hd_k, hd_n, hd_beta, hd_eps, hd_width, hd_order,
                                      hd_points);
    if (*instability) return run_instability(in_k, in_n, in_budget);
  } catch (const BoundViolation& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
