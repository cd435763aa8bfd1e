#include "fent/entropy.hpp"

#include <cmath>

#include "fent/errors.hpp"

namespace fent {

namespace {

double renyi_finite(const Spectrum& spec, double q) {
  double s = 0.0;
  for (double v : spec.values())
    if (v > 0.0) s += std::pow(v, q);
  return std::log(s) / (1.0 - q);
}

} // namespace

EntropicOrder::EntropicOrder(double q) : q_(q), infinite_(false) {
  if (!(q >= 1.0)) throw InvalidOrder("Renyi order must satisfy q >= 1");
}

EntropicOrder EntropicOrder::infinity() { return EntropicOrder(); }

double von_neumann(const Spectrum& spec) {
  double s = 0.0;
  for (double v : spec.values())
    if (v > 1e-15) s -= v * std::log(v);  // 0 ln 0 = 0
  return s;
}

double renyi(const Spectrum& spec, EntropicOrder q) {
  if (q.is_infinity()) return -std::log(spec.max());
  if (q.value() < 1.0 + 1e-9) return von_neumann(spec);
  return renyi_finite(spec, q.value());
}

double linear_entropy(const Spectrum& spec) {
  double s = 0.0;
  for (double v : spec.values()) s += v * v;
  return 1.0 - s;
}

double renyi_continuity_check(const Spectrum& spec, double q) {
  if (q == 1.0 || std::abs(q - 1.0) > 0.01)
    throw InvalidOrder("renyi_continuity_check: need q near 1, q != 1");
  return renyi_finite(spec, q);
}

} // namespace fent
