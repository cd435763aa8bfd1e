#include "fent/angular.hpp"

#include <cmath>
#include <cstdlib>

#include "fent/errors.hpp"

namespace fent {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// x must be an even doubled quantum number; returns x/2.
int half(int x) { return x / 2; }

} // namespace

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_j, int two_m) {
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 || (two_j + two_m) % 2 != 0)
    throw InvalidQuantumNumbers("clebsch_gordan: j and m parity mismatch");
  if (two_j1 < 0 || two_j2 < 0 || two_j < 0 ||
      std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_m) > two_j)
    throw InvalidQuantumNumbers("clebsch_gordan: |m| exceeds j or negative j");

  if (two_m1 + two_m2 != two_m) return 0.0;
  if (two_j < std::abs(two_j1 - two_j2) || two_j > two_j1 + two_j2) return 0.0;
  if ((two_j1 + two_j2 + two_j) % 2 != 0) return 0.0;

  // Racah's closed form, accumulated with log-factorials.
  const double pref =
      0.5 * (std::log(static_cast<double>(two_j) + 1.0) +
             log_factorial(half(two_j1 + two_j2 - two_j)) +
             log_factorial(half(two_j1 - two_j2 + two_j)) +
             log_factorial(half(-two_j1 + two_j2 + two_j)) -
             log_factorial(half(two_j1 + two_j2 + two_j) + 1) +
             log_factorial(half(two_j1 + two_m1)) + log_factorial(half(two_j1 - two_m1)) +
             log_factorial(half(two_j2 + two_m2)) + log_factorial(half(two_j2 - two_m2)) +
             log_factorial(half(two_j + two_m)) + log_factorial(half(two_j - two_m)));

  const int k_min = std::max({0, half(two_j2 - two_j - two_m1), half(two_j1 - two_j + two_m2)});
  const int k_max = std::min({half(two_j1 + two_j2 - two_j), half(two_j1 - two_m1),
                              half(two_j2 + two_m2)});

  double sum = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double denom =
        log_factorial(k) + log_factorial(half(two_j1 + two_j2 - two_j) - k) +
        log_factorial(half(two_j1 - two_m1) - k) + log_factorial(half(two_j2 + two_m2) - k) +
        log_factorial(half(two_j - two_j2 + two_m1) + k) +
        log_factorial(half(two_j - two_j1 - two_m2) + k);
    const double term = std::exp(pref - denom);
    sum += (k % 2 == 0) ? term : -term;
  }
  if (std::abs(sum) < 1e-14) return 0.0;
  return sum;
}

ComplexMatrix coupled_state(SpinLabel s, int j, int m) {
  if (j < 0 || 2 * j > 2 * s.two_s || std::abs(m) > j)
    throw InvalidQuantumNumbers("coupled_state: j outside [0, 2s] or |m| > j");
  const int n = s.dimension();
  ComplexMatrix v(static_cast<std::size_t>(n) * n, 1);
  for (int i1 = 0; i1 < n; ++i1) {
    const int two_m1 = s.two_s - 2 * i1;
    const int two_m2 = 2 * m - two_m1;
    if (std::abs(two_m2) > s.two_s) continue;
    const int i2 = (s.two_s - two_m2) / 2;
    const double c = clebsch_gordan(s.two_s, two_m1, s.two_s, two_m2, 2 * j, 2 * m);
    if (c != 0.0) v(static_cast<std::size_t>(i1) * n + i2, 0) = c;
  }
  return v;
}

CoupledBasis antisymmetric_basis(SpinLabel s) {
  if (s.two_s % 2 == 0)
    throw OddDimension("antisymmetric_basis: single-particle dimension must be even");
  CoupledBasis basis{s, {}};
  // Two spin-s particles couple to j in [0, 2s]; the even-j multiplets are
  // the antisymmetric ones. Descending j, then descending m.
  const int j_max_even = 2 * (s.two_s / 2);
  for (int j = j_max_even; j >= 0; j -= 2)
    for (int m = j; m >= -j; --m)
      basis.states.push_back({j, m, coupled_state(s, j, m)});
  return basis;
}

} // namespace fent
