// fent: entanglement criteria for identical fermions.
//
// Subcommands: table, figure, analyze, nfermion, selftest.

#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fent/concurrence.hpp"
#include "fent/criteria.hpp"
#include "fent/errors.hpp"
#include "fent/scanner.hpp"
#include "fent/states.hpp"

namespace {

using namespace fent;

// 9 significant digits, '.' decimal separator, trailing zeros kept.
std::string sig9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.9g", v);
  std::string s(buf);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string pmin_str(const std::optional<double>& p) { return p ? sig9(*p) : "none"; }

struct QGridSpec {
  double start = 1.0;
  double stop = 50.0;
  int count = 99;
  bool include_inf = true;

  std::vector<EntropicOrder> orders() const {
    std::vector<EntropicOrder> out;
    if (count == 1) {
      out.emplace_back(start);
    } else {
      for (int i = 0; i < count; ++i)
        out.emplace_back(start + (stop - start) * i / (count - 1));
    }
    if (include_inf) out.push_back(EntropicOrder::infinity());
    return out;
  }
};

std::string order_str(const EntropicOrder& q) {
  return q.is_infinity() ? std::string("inf") : sig9(q.value());
}

struct Sink {
  std::ofstream file;
  std::ostream& stream() { return file.is_open() ? file : std::cout; }

  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
    }
  }
};

StateFamily family_by_name(const std::string& name) {
  if (name == "werner") return [](double p) { return werner_state(p); };
  if (name == "gisin") return [](double p) { return gisin_state(p); };
  if (name == "dim6-1") return [](double p) { return dim6_state(1, p); };
  if (name == "dim6-2") return [](double p) { return dim6_state(2, p); };
  if (name == "dim6-3") return [](double p) { return dim6_state(3, p); };
  throw UnknownFamily("unknown family: " + name);
}

int cmd_table(const std::string& family_name, double grid_step, const std::string& out_path) {
  Sink sink(out_path);
  std::ostream& os = sink.stream();

  if (family_name == "theta") {
    // Pure-state family: report whether D_L detects every entangled member.
    const int points = 181;
    int entangled = 0, detected = 0, boundary = 0;
    for (int i = 0; i < points; ++i) {
      const double theta = M_PI * i / (points - 1);
      const DensityMatrix rho = theta_state(theta);
      const double c = esbl_concurrence(rho);
      const double dl = d_linear(rho);
      if (c > 1e-9) {
        ++entangled;
        if (dl > 1e-9) ++detected;
      } else {
        ++boundary;
      }
    }
    os << "theta sweep: " << points << " grid points on [0, pi]\n";
    os << "entangled points: " << entangled << ", detected by d_l: " << detected << "\n";
    os << "separable points: " << boundary << "\n";
    os << "all entangled theta detected: " << (entangled == detected ? "yes" : "NO") << "\n";
    return entangled == detected ? 0 : 3;
  }

  const StateFamily family = family_by_name(family_name);
  struct Row {
    std::string label;
    Indicator indicator;
  };
  std::vector<Row> rows = {
      {"d_vn", Indicator::d_vn()},
      {"d_l", Indicator::d_l()},
      {"r_inf", Indicator::r_inf()},
      {"r_2", Indicator::r_of(EntropicOrder(2.0))},
  };
  if (family_name == "werner" || family_name == "gisin")
    rows.push_back({"concurrence", Indicator::concurrence()});

  os << "family,indicator,p_min\n";
  for (const Row& row : rows) {
    const ThresholdResult r = find_threshold(family_name, family, row.indicator, grid_step);
    os << family_name << ',' << row.label << ',' << pmin_str(r.p_min);
    if (r.non_monotone_warning) os << ",non-monotone";
    os << '\n';
  }
  return 0;
}

int cmd_figure(int which, const QGridSpec& spec, double grid_step, const std::string& out_path) {
  Sink sink(out_path);
  std::ostream& os = sink.stream();

  const std::vector<std::string> names =
      which == 1 ? std::vector<std::string>{"werner", "gisin"}
                 : std::vector<std::string>{"dim6-1", "dim6-2", "dim6-3"};
  const std::vector<EntropicOrder> orders = spec.orders();

  std::vector<std::vector<std::optional<double>>> columns;
  for (const std::string& name : names) {
    std::vector<std::optional<double>> col;
    for (const auto& [q, result] : q_sweep(name, family_by_name(name), orders, grid_step))
      col.push_back(result.p_min);
    columns.push_back(std::move(col));
  }

  os << "q";
  for (const std::string& name : names) os << ',' << name;
  os << '\n';
  for (std::size_t i = 0; i < orders.size(); ++i) {
    os << order_str(orders[i]);
    for (const auto& col : columns) os << ',' << pmin_str(col[i]);
    os << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& path, const QGridSpec& spec, const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    nlohmann::json err{{"error", "ParseError"}, {"detail", "cannot open file: " + path}};
    std::cout << err.dump(2) << '\n';
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const DensityMatrix rho = density_matrix_from_json(buf.str());
    const IndicatorReport report = full_report(rho, spec.orders());
    Sink sink(out_path);
    sink.stream() << report_to_json(report) << '\n';
    return 0;
  } catch (const Error& e) {
    nlohmann::json err{{"error", e.code()}, {"detail", e.what()}};
    std::cout << err.dump(2) << '\n';
    return 2;
  }
}

int cmd_nfermion(int N, int k, double grid_step) {
  const int n = N * k;
  const double closed = nfermion_threshold_closed_form(N, n);
  std::cout << "N=" << N << " k=" << k << " n=" << n << '\n';
  std::cout << "closed-form threshold: " << sig9(closed) << '\n';
  double dim = 1.0;
  for (int i = 0; i < N; ++i) dim *= n;
  if (dim <= 1e6) {
    const double numeric = nfermion_threshold_numeric(N, k, grid_step);
    std::cout << "numeric threshold:     " << sig9(numeric) << '\n';
    std::cout << "difference:            " << sig9(std::abs(numeric - closed)) << '\n';
  } else {
    std::cout << "numeric cross-check skipped: product dimension n^N exceeds 10^6\n";
  }
  return 0;
}

int cmd_selftest(std::uint64_t seed, int count, int n) {
  if (count == 0) {
    std::cout << "selftest: count is 0, vacuous pass (warning: nothing checked)\n";
    return 0;
  }
  const std::vector<EntropicOrder> orders = {
      EntropicOrder(1.0), EntropicOrder(1.5), EntropicOrder(2.0),
      EntropicOrder(5.0), EntropicOrder(20.0), EntropicOrder::infinity()};
  double worst = -1e300;
  std::string worst_label;
  std::mt19937_64 term_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < count; ++i) {
    const int terms = 1 + static_cast<int>(term_rng() % 10);
    const DensityMatrix rho = random_separable(n, terms, seed + static_cast<std::uint64_t>(i));
    for (const EntropicOrder& q : orders) {
      const double v = r_q(rho, q);
      if (v > worst) {
        worst = v;
        worst_label = "r_q(" + order_str(q) + ")";
      }
    }
    const double dl = d_linear(rho);
    if (dl > worst) {
      worst = dl;
      worst_label = "d_l";
    }
  }
  std::cout << "selftest: " << count << " separable states, n=" << n << ", seed=" << seed << '\n';
  std::cout << "max indicator observed: " << sig9(worst) << " (" << worst_label << ")\n";
  if (worst > 1e-9) {
    std::cout << "PROPERTY VIOLATION: a separable state scored positive\n";
    return 3;
  }
  std::cout << "ok: all indicators <= 1e-9\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  CLI::App app{"Entanglement criteria for systems of identical fermions"};
  app.require_subcommand(1);

  double grid_step = 1e-3;
  std::string out_path;
  QGridSpec qspec;

  auto add_common = [&](CLI::App* sub, bool with_q) {
    sub->add_option("--grid-step", grid_step, "Coarse scan step in p")->capture_default_str();
    sub->add_option("--out", out_path, "Write output to file instead of stdout");
    if (with_q) {
      sub->add_option("--q-start", qspec.start, "First Renyi order")->capture_default_str();
      sub->add_option("--q-stop", qspec.stop, "Last finite Renyi order")->capture_default_str();
      sub->add_option("--q-count", qspec.count, "Number of finite orders")->capture_default_str();
      sub->add_flag("--include-inf,!--no-include-inf", qspec.include_inf,
                    "Append the q -> infinity point")->capture_default_str();
    }
  };

  std::string family;
  CLI::App* table = app.add_subcommand("table", "Detection thresholds for one state family");
  table->add_option("family", family, "werner|gisin|theta|dim6-1|dim6-2|dim6-3")->required();
  add_common(table, false);

  int figure_id = 1;
  CLI::App* figure = app.add_subcommand("figure", "p_min versus Renyi order q (CSV)");
  figure->add_option("which", figure_id, "1: dim-4 families, 2: dim-6 families")
      ->check(CLI::Range(1, 2))->required();
  add_common(figure, true);

  std::string input_path;
  CLI::App* analyze = app.add_subcommand("analyze", "Evaluate all indicators on a JSON state");
  analyze->add_option("input", input_path, "Density-matrix JSON file")->required();
  add_common(analyze, true);

  int nf_N = 2, nf_k = 2;
  CLI::App* nfermion = app.add_subcommand("nfermion", "Generalized Werner detection threshold");
  nfermion->add_option("--N", nf_N, "Particle count")->required();
  nfermion->add_option("--k", nf_k, "Single-particle dimension multiplier (n = k*N)")->required();
  nfermion->add_option("--grid-step", grid_step, "Coarse scan step in p")->capture_default_str();

  std::uint64_t seed = 42;
  int count = 1000;
  int sp_dim = 4;
  CLI::App* selftest = app.add_subcommand("selftest", "Separability property suite");
  selftest->add_option("--seed", seed, "RNG seed")->capture_default_str();
  selftest->add_option("--count", count, "Number of random separable states")
      ->check(CLI::NonNegativeNumber)->capture_default_str();
  selftest->add_option("--n", sp_dim, "Single-particle dimension (even)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (table->parsed()) return cmd_table(family, grid_step, out_path);
    if (figure->parsed()) return cmd_figure(figure_id, qspec, grid_step, out_path);
    if (analyze->parsed()) return cmd_analyze(input_path, qspec, out_path);
    if (nfermion->parsed()) return cmd_nfermion(nf_N, nf_k, grid_step);
    if (selftest->parsed()) return cmd_selftest(seed, count, sp_dim);
  } catch (const fent::Error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << '\n';
    return e.code() == "PropertyViolation" ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
