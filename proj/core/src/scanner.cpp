#include "fent/scanner.hpp"

#include <cmath>
#include <sstream>

#include "fent/concurrence.hpp"
#include "fent/errors.hpp"

namespace fent {

std::string Indicator::name() const {
  switch (kind) {
    case Kind::DvN: return "d_vn";
    case Kind::DL: return "d_l";
    case Kind::RInf: return "r_inf";
    case Kind::Concurrence: return "concurrence";
    case Kind::Rq: {
      std::ostringstream out;
      if (order->is_infinity())
        out << "r_q(inf)";
      else
        out << "r_q(" << order->value() << ")";
      return out.str();
    }
  }
  return "?";
}

double Indicator::evaluate(const DensityMatrix& rho) const {
  switch (kind) {
    case Kind::DvN: return d_von_neumann(rho);
    case Kind::DL: return d_linear(rho);
    case Kind::RInf: return r_infinity(rho);
    case Kind::Rq: return r_q(rho, *order);
    case Kind::Concurrence: return esbl_concurrence(rho);
  }
  return 0.0;
}

namespace {

constexpr double kBisectTarget = 1e-9;

struct ScanOutcome {
  std::optional<double> p_min;
  double bracket_width = 0.0;
  bool non_monotone = false;
};

// Locate the last sign change on the precomputed grid, then refine with
// the supplied point evaluator.
ScanOutcome refine(const std::vector<double>& ps, const std::vector<double>& values,
                   const std::function<double(double)>& eval) {
  ScanOutcome out;
  bool seen_positive = false;
  std::optional<std::size_t> last_change;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > 0.0) {
      seen_positive = true;
      if (i > 0 && values[i - 1] <= 0.0) last_change = i - 1;
    } else if (seen_positive) {
      out.non_monotone = true;
    }
  }
  if (!seen_positive) return out;
  if (!last_change) {
    // positive already at the first grid point
    out.p_min = ps.front();
    return out;
  }
  double lo = ps[*last_change];
  double hi = ps[*last_change + 1];
  while (hi - lo > kBisectTarget) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  out.p_min = 0.5 * (lo + hi);
  out.bracket_width = hi - lo;
  return out;
}

std::vector<double> parameter_grid(double grid_step) {
  std::vector<double> ps;
  const auto count = static_cast<std::size_t>(std::llround(1.0 / grid_step));
  ps.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i) ps.push_back(std::min(1.0, i * grid_step));
  ps.back() = 1.0;
  return ps;
}

} // namespace

ThresholdResult find_threshold(const std::string& family_name, const StateFamily& family,
                               const Indicator& indicator, double grid_step) {
  const std::vector<double> ps = parameter_grid(grid_step);
  std::vector<double> values;
  values.reserve(ps.size());
  for (double p : ps) values.push_back(indicator.evaluate(family(p)));
  const ScanOutcome outcome =
      refine(ps, values, [&](double p) { return indicator.evaluate(family(p)); });
  return ThresholdResult{family_name, indicator.name(), outcome.p_min, outcome.bracket_width,
                         outcome.non_monotone};
}

std::vector<std::pair<EntropicOrder, ThresholdResult>> q_sweep(
    const std::string& family_name, const StateFamily& family,
    const std::vector<EntropicOrder>& q_grid, double grid_step) {
  const std::vector<double> ps = parameter_grid(grid_step);
  // Spectra do not depend on q; evaluate the expensive part once per p.
  std::vector<std::pair<Spectrum, Spectrum>> spectra;
  spectra.reserve(ps.size());
  double ln_n = 0.0;
  for (double p : ps) {
    const DensityMatrix rho = family(p);
    ln_n = std::log(static_cast<double>(rho.particle_count()));
    spectra.emplace_back(rho.global_spectrum(), rho.reduced_spectrum());
  }

  std::vector<std::pair<EntropicOrder, ThresholdResult>> out;
  out.reserve(q_grid.size());
  for (const EntropicOrder& q : q_grid) {
    std::vector<double> values;
    values.reserve(ps.size());
    for (const auto& [global, reduced] : spectra)
      values.push_back(renyi(reduced, q) - renyi(global, q) - ln_n);
    const Indicator ind = Indicator::r_of(q);
    const ScanOutcome outcome =
        refine(ps, values, [&](double p) { return ind.evaluate(family(p)); });
    out.emplace_back(q, ThresholdResult{family_name, ind.name(), outcome.p_min,
                                        outcome.bracket_width, outcome.non_monotone});
  }
  return out;
}

double nfermion_threshold_closed_form(int N, int n) {
  if (N < 2 || n <= N || n % N != 0)
    throw InvalidDimensions("nfermion threshold requires n = k*N with integer k >= 2");
  if (n > 20) throw InvalidDimensions("exact integer factorials limited to n <= 20");
  auto factorial = [](int x) {
    unsigned long long f = 1;
    for (int i = 2; i <= x; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  const unsigned long long num =
      static_cast<unsigned long long>(N) * factorial(n - 1) - factorial(n - N) * factorial(N);
  const unsigned long long den = factorial(n) - factorial(n - N) * factorial(N);
  return static_cast<double>(num) / static_cast<double>(den);
}

double nfermion_threshold_numeric(int N, int k, double grid_step) {
  const ThresholdResult result = find_threshold(
      "general_werner", [N, k](double p) { return general_werner(N, k, p); },
      Indicator::r_inf(), grid_step);
  if (!result.p_min)
    throw PropertyViolation("nfermion numeric scan found no detection threshold");
  return *result.p_min;
}

} // namespace fent
