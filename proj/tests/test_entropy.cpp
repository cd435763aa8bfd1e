#include <doctest.h>

#include <cmath>
#include <random>

#include "fent/entropy.hpp"
#include "fent/errors.hpp"
#include "support.hpp"

using namespace fent;
using namespace fent::testing;

namespace {

Spectrum spec(std::vector<double> v) { return Spectrum::from_eigenvalues(std::move(v)); }

} // namespace

TEST_CASE("von_neumann: pure, uniform, and a two-outcome spectrum") {
  CHECK(von_neumann(spec({1.0, 0.0, 0.0})) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(von_neumann(spec({0.25, 0.25, 0.25, 0.25})) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-14));
  const double h = -0.7 * std::log(0.7) - 0.3 * std::log(0.3);
  CHECK(von_neumann(spec({0.7, 0.3})) == doctest::Approx(h).epsilon(1e-14));
}

TEST_CASE("linear_entropy: pure and uniform spectra") {
  CHECK(linear_entropy(spec({1.0, 0.0})) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(linear_entropy(spec({0.25, 0.25, 0.25, 0.25})) ==
        doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("renyi: closed forms at q = 2 and q = infinity") {
  const Spectrum s = spec({0.5, 0.3, 0.2});
  CHECK(renyi(s, EntropicOrder(2.0)) ==
        doctest::Approx(-std::log(0.25 + 0.09 + 0.04)).epsilon(1e-14));
  CHECK(renyi(s, EntropicOrder::infinity()) == doctest::Approx(-std::log(0.5)).epsilon(1e-14));
}

TEST_CASE("renyi: q = 1 dispatches to von Neumann, limit is continuous") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Spectrum s = Spectrum::from_eigenvalues(random_simplex(6, rng));
    const double svn = von_neumann(s);
    CHECK(renyi(s, EntropicOrder(1.0)) == doctest::Approx(svn).epsilon(1e-14));
    // finite-q formula evaluated just off q = 1 must approach S_vN
    CHECK(std::abs(renyi_continuity_check(s, 1.0 + 1e-6) - svn) < 1e-4);
    CHECK(std::abs(renyi_continuity_check(s, 1.0 - 1e-6) - svn) < 1e-4);
  }
}

TEST_CASE("renyi: non-increasing in q, bounded by ln d") {
  std::mt19937_64 rng(9);
  const std::vector<double> qs = {1.0, 1.3, 2.0, 3.5, 7.0, 20.0, 80.0};
  for (int trial = 0; trial < 30; ++trial) {
    const Spectrum s = Spectrum::from_eigenvalues(random_simplex(8, rng));
    double prev = renyi(s, EntropicOrder(qs.front()));
    CHECK(prev <= std::log(8.0) + 1e-12);
    for (std::size_t i = 1; i < qs.size(); ++i) {
      const double cur = renyi(s, EntropicOrder(qs[i]));
      CHECK(cur <= prev + 1e-12);
      prev = cur;
    }
    // the infinite order is the infimum
    const double rinf = renyi(s, EntropicOrder::infinity());
    CHECK(rinf <= prev + 1e-12);
    CHECK(rinf >= 0.0);
  }
}

TEST_CASE("EntropicOrder: rejects q < 1") {
  CHECK_THROWS_AS(EntropicOrder(0.5), InvalidOrder);
  CHECK_THROWS_AS(EntropicOrder(-2.0), InvalidOrder);
  CHECK_NOTHROW(EntropicOrder(1.0));
}
