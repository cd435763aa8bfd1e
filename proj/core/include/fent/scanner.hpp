#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fent/criteria.hpp"

namespace fent {

/// An entanglement indicator selected for threshold scanning.
struct Indicator {
  enum class Kind { DvN, DL, RInf, Rq, Concurrence };

  Kind kind;
  std::optional<EntropicOrder> order;  // set for Kind::Rq

  static Indicator d_vn() { return {Kind::DvN, std::nullopt}; }
  static Indicator d_l() { return {Kind::DL, std::nullopt}; }
  static Indicator r_inf() { return {Kind::RInf, std::nullopt}; }
  static Indicator r_of(EntropicOrder q) { return {Kind::Rq, q}; }
  static Indicator concurrence() { return {Kind::Concurrence, std::nullopt}; }

  std::string name() const;
  double evaluate(const DensityMatrix& rho) const;
};

/// Continuous map p in [0,1] -> DensityMatrix.
using StateFamily = std::function<DensityMatrix(double)>;

struct ThresholdResult {
  std::string family;
  std::string indicator;
  std::optional<double> p_min;     // empty: indicator never positive on [0, 1]
  double bracket_width = 0.0;
  bool non_monotone_warning = false;
};

/// Coarse scan (default step 1e-3) locating the last sign change, refined
/// by bisection to |delta p| <= 1e-9.
ThresholdResult find_threshold(const std::string& family_name, const StateFamily& family,
                               const Indicator& indicator, double grid_step = 1e-3);

/// Detection threshold per Renyi order; spectra on the coarse grid are
/// computed once and shared across orders.
std::vector<std::pair<EntropicOrder, ThresholdResult>> q_sweep(
    const std::string& family_name, const StateFamily& family,
    const std::vector<EntropicOrder>& q_grid, double grid_step = 1e-3);

/// Exact rational detection threshold of the generalized Werner family
/// under the q -> infinity criterion. Integer factorials, n <= 20.
double nfermion_threshold_closed_form(int N, int n);

/// Numeric cross-check: bisection threshold of general_werner under the
/// q -> infinity indicator.
double nfermion_threshold_numeric(int N, int k, double grid_step = 1e-3);

} // namespace fent
