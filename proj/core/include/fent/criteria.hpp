#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fent/entropy.hpp"
#include "fent/states.hpp"

namespace fent {

/// Indicator verdicts. Values within the round-off band [-1e-9, 1e-9]
/// are reported as inconclusive rather than claimed either way.
enum class Verdict { NotDetected, Inconclusive, Detected };

Verdict verdict_of(double indicator);
std::string verdict_name(Verdict v);

/// S_vN[rho_r] - S_vN[rho] - ln N. Positive => entangled.
double d_von_neumann(const DensityMatrix& rho);

/// S_L[rho_r] - S_L[rho] - 1/2, two fermions only. Positive => entangled.
double d_linear(const DensityMatrix& rho);

/// S_q[rho_r] - S_q[rho] - ln N for Renyi order q >= 1 (or infinity).
double r_q(const DensityMatrix& rho, EntropicOrder q);

/// ln(lambda_max(rho)) - ln(lambda_max(rho_r)) - ln N.
double r_infinity(const DensityMatrix& rho);

/// Pure-state Slater-rank-1 test: Tr(rho_r^2) == 1/N within 1e-9.
bool slater_rank_one_test(const DensityMatrix& rho);

struct IndicatorReport {
  int n_particles = 2;
  double d_vn = 0.0;
  std::optional<double> d_l;          // two fermions only
  double r_inf = 0.0;
  std::vector<std::pair<EntropicOrder, double>> r_values;
  std::optional<double> concurrence;  // n = 4, N = 2 only

  Verdict d_vn_verdict = Verdict::NotDetected;
  Verdict d_l_verdict = Verdict::NotDetected;
  Verdict r_inf_verdict = Verdict::NotDetected;
  std::vector<Verdict> r_verdicts;
  Verdict concurrence_verdict = Verdict::NotDetected;

  /// True when any indicator certifies entanglement.
  bool any_detected() const;
};

IndicatorReport full_report(const DensityMatrix& rho, const std::vector<EntropicOrder>& q_grid);

/// JSON serialization; finite q values as numbers, infinity as "inf".
std::string report_to_json(const IndicatorReport& report);

} // namespace fent
