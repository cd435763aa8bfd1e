#include <doctest.h>

#include <cmath>
#include <optional>

#include "fent/errors.hpp"
#include "fent/scanner.hpp"
#include "fent/states.hpp"

using namespace fent;

namespace {

const StateFamily kWerner = [](double p) { return werner_state(p); };
const StateFamily kGisin = [](double p) { return gisin_state(p); };

double threshold(const StateFamily& f, const Indicator& ind) {
  const ThresholdResult r = find_threshold("f", f, ind, 1e-3);
  REQUIRE(r.p_min.has_value());
  return *r.p_min;
}

} // namespace

TEST_CASE("Indicator: names and evaluation dispatch") {
  CHECK(Indicator::d_vn().name() == "d_vn");
  CHECK(Indicator::d_l().name() == "d_l");
  CHECK(Indicator::r_inf().name() == "r_inf");
  CHECK(Indicator::concurrence().name() == "concurrence");
  CHECK(Indicator::r_of(EntropicOrder(2.0)).name() == "r_q(2)");
  CHECK(Indicator::r_of(EntropicOrder::infinity()).name() == "r_q(inf)");

  const DensityMatrix rho = werner_state(1.0);
  CHECK(Indicator::d_vn().evaluate(rho) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(Indicator::concurrence().evaluate(rho) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(Indicator::r_of(EntropicOrder::infinity()).evaluate(rho) ==
        doctest::Approx(Indicator::r_inf().evaluate(rho)).epsilon(1e-12));
}

TEST_CASE("find_threshold: Werner family reference thresholds") {
  CHECK(threshold(kWerner, Indicator::r_inf()) == doctest::Approx(0.4).epsilon(1e-7));
  CHECK(threshold(kWerner, Indicator::d_l()) ==
        doctest::Approx(std::sqrt(0.7)).epsilon(1e-7));
  CHECK(threshold(kWerner, Indicator::r_of(EntropicOrder(2.0))) ==
        doctest::Approx(std::sqrt(0.4)).epsilon(1e-7));
  CHECK(threshold(kWerner, Indicator::d_vn()) ==
        doctest::Approx(0.8094788914).epsilon(1e-7));
  CHECK(threshold(kWerner, Indicator::concurrence()) == doctest::Approx(0.4).epsilon(1e-7));
}

TEST_CASE("find_threshold: Gisin family reference thresholds") {
  CHECK(threshold(kGisin, Indicator::r_inf()) == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(threshold(kGisin, Indicator::d_l()) ==
        doctest::Approx((2.0 + std::sqrt(10.0)) / 6.0).epsilon(1e-7));
  CHECK(threshold(kGisin, Indicator::r_of(EntropicOrder(2.0))) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-7));
  CHECK(threshold(kGisin, Indicator::concurrence()) == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("find_threshold: bracket invariant and edge cases") {
  const ThresholdResult r = find_threshold("werner", kWerner, Indicator::r_inf(), 1e-3);
  CHECK(r.bracket_width <= 1e-9);
  CHECK_FALSE(r.non_monotone_warning);
  // the indicator really changes sign across the reported bracket
  CHECK(Indicator::r_inf().evaluate(werner_state(*r.p_min - 1e-7)) < 0.0);
  CHECK(Indicator::r_inf().evaluate(werner_state(*r.p_min + 1e-7)) > 0.0);

  // never detected: constant separable family
  const ThresholdResult none =
      find_threshold("flat", [](double) { return werner_state(0.0); },
                     Indicator::r_inf(), 1e-2);
  CHECK_FALSE(none.p_min.has_value());

  // detected everywhere: threshold collapses to the left endpoint
  const ThresholdResult all =
      find_threshold("flat", [](double) { return werner_state(1.0); },
                     Indicator::r_inf(), 1e-2);
  REQUIRE(all.p_min.has_value());
  CHECK(*all.p_min == 0.0);
}

TEST_CASE("find_threshold: non-monotone family raises the warning") {
  // positive near both endpoints, negative in the middle
  const StateFamily vee = [](double p) { return werner_state(std::abs(2.0 * p - 1.0)); };
  const ThresholdResult r = find_threshold("vee", vee, Indicator::r_inf(), 1e-2);
  CHECK(r.non_monotone_warning);
  REQUIRE(r.p_min.has_value());
  // last sign change: |2p - 1| = 0.4 on the rising branch, p = 0.7
  CHECK(*r.p_min == doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("q_sweep: thresholds decrease with q and match single scans") {
  const std::vector<EntropicOrder> orders = {EntropicOrder(1.0), EntropicOrder(2.0),
                                             EntropicOrder(5.0), EntropicOrder::infinity()};
  const auto sweep = q_sweep("werner", kWerner, orders, 1e-3);
  REQUIRE(sweep.size() == 4);
  std::optional<double> prev;
  for (const auto& [q, result] : sweep) {
    REQUIRE(result.p_min.has_value());
    if (prev) CHECK(*result.p_min <= *prev + 1e-6);
    prev = result.p_min;
  }
  CHECK(*sweep[0].second.p_min == doctest::Approx(0.8094788914).epsilon(1e-7));
  CHECK(*sweep[1].second.p_min == doctest::Approx(std::sqrt(0.4)).epsilon(1e-7));
  CHECK(*sweep[3].second.p_min == doctest::Approx(0.4).epsilon(1e-7));
}

TEST_CASE("indicator ordering: D_L >= D_vN >= R_2 >= R_inf thresholds") {
  for (const StateFamily* family : {&kWerner, &kGisin}) {
    const double dl = threshold(*family, Indicator::d_l());
    const double dvn = threshold(*family, Indicator::d_vn());
    const double r2 = threshold(*family, Indicator::r_of(EntropicOrder(2.0)));
    const double rinf = threshold(*family, Indicator::r_inf());
    CHECK(dl >= dvn - 1e-8);
    CHECK(dvn >= r2 - 1e-8);
    CHECK(r2 >= rinf - 1e-8);
  }
}

TEST_CASE("nfermion_threshold_closed_form: exact rationals") {
  CHECK(nfermion_threshold_closed_form(2, 4) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(nfermion_threshold_closed_form(2, 6) == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  CHECK(nfermion_threshold_closed_form(3, 6) == doctest::Approx(9.0 / 19.0).epsilon(1e-15));

  CHECK_THROWS_AS(nfermion_threshold_closed_form(1, 4), InvalidDimensions);
  CHECK_THROWS_AS(nfermion_threshold_closed_form(2, 2), InvalidDimensions);
  CHECK_THROWS_AS(nfermion_threshold_closed_form(2, 5), InvalidDimensions);
  CHECK_THROWS_AS(nfermion_threshold_closed_form(2, 22), InvalidDimensions);

  // two fermions: threshold decreases as the single-particle space grows
  double prev = 1.0;
  for (int n = 4; n <= 10; n += 2) {
    const double t = nfermion_threshold_closed_form(2, n);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("nfermion_threshold_numeric: agrees with the closed form") {
  CHECK(nfermion_threshold_numeric(2, 2, 1e-2) ==
        doctest::Approx(nfermion_threshold_closed_form(2, 4)).epsilon(1e-6));
  CHECK(nfermion_threshold_numeric(2, 3, 1e-2) ==
        doctest::Approx(nfermion_threshold_closed_form(2, 6)).epsilon(1e-6));
}
