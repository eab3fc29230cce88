#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>

#include "vacrad/errors.hpp"
#include "vacrad/gas_model.hpp"
#include "vacrad/randomization.hpp"

using namespace vacrad;

namespace {
const GasSpecies kN2 = builtin_species("N2");
GasState n2_stp() { return derive_state(kN2, 273.15, 101325.0); }
}  // namespace

TEST_CASE("amplified angle") {
  CHECK(amplified_angle(0.37, 12.0, 0) == 0.37);  // n = 0 exact
  CHECK(amplified_angle(1e-10, 10.0, 3) == doctest::Approx(1e-7).epsilon(1e-12));
  // 34 collisions at gain 35 fall just short of one radian:
  // 34 ln 35 = 120.882 < -ln(3e-53) = 120.938.
  CHECK(amplified_angle(3e-53, 35.0, 34) ==
        doctest::Approx(0.945006428).epsilon(1e-9));
  CHECK(amplified_angle(3e-53, 35.0, 35) > 1.0);
  // log-space evaluation survives counts that would overflow gain^n
  CHECK(std::isfinite(amplified_angle(1e-60, 35.0, 100)));
  CHECK_THROWS_AS(amplified_angle(0.0, 10.0, 1), domain_error);
  CHECK_THROWS_AS(amplified_angle(1e-3, -1.0, 1), domain_error);
  CHECK_THROWS_AS(amplified_angle(1e-3, 10.0, -1), domain_error);
}

TEST_CASE("collisions to randomize") {
  CHECK(collisions_to_randomize(1.0, 35.0) == 0);
  CHECK(collisions_to_randomize(2.5, 35.0) == 0);
  for (double g : {2.0, 35.0, 700.0}) {
    CHECK(collisions_to_randomize(1.0 / g, g) == 1);
  }
  // Exact ceiling arithmetic: -ln(3e-53)/ln(35) = 34.016, one collision
  // past the widely quoted 34.
  CHECK(collisions_to_randomize(3e-53, 35.0) == 35);
  // The calibrated-pipeline kick (4.89e-53) lands at 34 exactly.
  CHECK(collisions_to_randomize(4.89271750095e-53, 35.0) == 34);
  CHECK_THROWS_AS(collisions_to_randomize(1e-10, 1.0), domain_error);
  CHECK_THROWS_AS(collisions_to_randomize(1e-10, 0.5), domain_error);
  CHECK_THROWS_AS(collisions_to_randomize(0.0, 35.0), domain_error);
  CHECK_THROWS_AS(collisions_to_randomize(-1e-3, 35.0), domain_error);
}

TEST_CASE("ceiling round trip and tightness") {
  for (double g : {2.0, 10.0, 35.0, 700.0}) {
    for (double exponent = -60.0; exponent <= -1.0; exponent += 3.7) {
      const double theta0 = std::pow(10.0, exponent) * 1.37;
      const auto n = collisions_to_randomize(theta0, g);
      CHECK(amplified_angle(theta0, g, n) >= 1.0 - 1e-9);
      if (n > 0) {
        CHECK(amplified_angle(theta0, g, n - 1) < 1.0 + 1e-9);
      }
      // n ln g + ln theta0 in [0, ln g] up to round-off
      const double slack =
          static_cast<double>(n) * std::log(g) + std::log(theta0);
      CHECK(slack >= -1e-9);
      CHECK(slack <= std::log(g) + 1e-9);
    }
  }
}

TEST_CASE("monotonicity in theta0 and gain") {
  std::int64_t prev = collisions_to_randomize(1e-60, 35.0);
  for (double exponent = -55.0; exponent <= -5.0; exponent += 5.0) {
    const auto n = collisions_to_randomize(std::pow(10.0, exponent), 35.0);
    CHECK(n <= prev);
    prev = n;
  }
  prev = collisions_to_randomize(1e-50, 1.5);
  for (double g : {2.0, 5.0, 20.0, 100.0, 1000.0}) {
    const auto n = collisions_to_randomize(1e-50, g);
    CHECK(n <= prev);
    prev = n;
  }
}

TEST_CASE("kinetic-theory report for N2 at STP") {
  const auto st = n2_stp();
  const auto report = build_report(st, Channel::unruh, 3e-53);
  CHECK(report.gain == doctest::Approx(661.542612068).epsilon(1e-9));
  CHECK(report.n_collisions == 19);
  CHECK(report.randomization_time ==
        doctest::Approx(report.n_collisions / st.collision_rate)
            .epsilon(1e-12));
}

TEST_CASE("explicit gain of 35 reproduces the nanosecond scale") {
  const auto st = n2_stp();
  const auto report = build_report(st, Channel::unruh, 4.89271750095e-53, 35.0);
  CHECK(report.n_collisions == 34);
  CHECK(report.randomization_time > 0.5e-9);
  CHECK(report.randomization_time < 10e-9);
}

TEST_CASE("mdw needs about half the collisions of unruh") {
  const auto st = n2_stp();
  // kinetic-gain counts with each channel's own kick
  const auto unruh = build_report(st, Channel::unruh, 6.39851825636e-53);
  const auto mdw = build_report(st, Channel::mdw, 1.80968043902e-24);
  CHECK(unruh.n_collisions == 19);
  CHECK(mdw.n_collisions == 9);
  CHECK(std::fabs(static_cast<double>(mdw.n_collisions) -
                  unruh.n_collisions / 2.0) <= 4.0);
  // at the explicit gain of 35 the mdw channel needs exactly 16 collisions
  const auto mdw35 = build_report(st, Channel::mdw, 1.80968043902e-24, 35.0);
  CHECK(mdw35.n_collisions == 16);
}

TEST_CASE("gain of one is a domain error") {
  const auto st = n2_stp();
  CHECK_THROWS_AS(build_report(st, Channel::unruh, 1e-53, 1.0), domain_error);
}
