#pragma once

#include "fent/linalg.hpp"

namespace fent {

/// Renyi order: a real q >= 1 or the distinguished infinite order.
class EntropicOrder {
public:
  explicit EntropicOrder(double q);
  static EntropicOrder infinity();

  bool is_infinity() const noexcept { return infinite_; }
  double value() const noexcept { return q_; }  // meaningful only when finite

private:
  EntropicOrder() : q_(0.0), infinite_(true) {}
  double q_;
  bool infinite_;
};

/// Renyi entropy of a spectrum, in nats. q = 1 dispatches to the von
/// Neumann branch; q = infinity gives -ln(lambda_max).
double renyi(const Spectrum& spec, EntropicOrder q);

double von_neumann(const Spectrum& spec);

/// 1 - sum(lambda^2)
double linear_entropy(const Spectrum& spec);

/// Finite-q Renyi formula evaluated near q = 1 without the q ~ 1 snap;
/// used to exercise the q -> 1 limit.
double renyi_continuity_check(const Spectrum& spec, double q);

} // namespace fent
