#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "vacrad/errors.hpp"
#include "vacrad/quadrature.hpp"

using namespace vacrad;

namespace {

// Brute-force series oracle, independent of the Euler-Maclaurin
// implementation path.
double zeta_brute_force(int s, long terms) {
  double sum = 0.0;
  for (long n = terms; n >= 1; --n) sum += std::pow(double(n), -s);
  return sum;
}

}  // namespace

TEST_CASE("riemann zeta against brute-force series") {
  // s = 2 converges slowly: 2e6 terms give ~5e-7 absolute.
  CHECK(riemann_zeta(2) ==
        doctest::Approx(zeta_brute_force(2, 2'000'000)).epsilon(1e-6));
  CHECK(riemann_zeta(3) ==
        doctest::Approx(zeta_brute_force(3, 200'000)).epsilon(1e-9));
  CHECK(riemann_zeta(9) ==
        doctest::Approx(zeta_brute_force(9, 10'000)).epsilon(1e-12));
}

TEST_CASE("riemann zeta frozen values") {
  CHECK(riemann_zeta(2) == doctest::Approx(1.6449340668482264).epsilon(1e-12));
  CHECK(riemann_zeta(9) == doctest::Approx(1.0020083928260822).epsilon(1e-12));
  CHECK(riemann_zeta(17) == doctest::Approx(1.0000076371976379).epsilon(1e-12));
  CHECK_THROWS_AS(riemann_zeta(1), domain_error);
}

TEST_CASE("closed forms at alpha = 1, p = 8") {
  const auto fact =
      bose_power_integral(1.0, 8, IntegralMethod::closed_form_factorial);
  CHECK(fact.value == 40320.0);

  const auto zeta =
      bose_power_integral(1.0, 8, IntegralMethod::closed_form_zeta);
  CHECK(zeta.value == doctest::Approx(40400.978398747635).epsilon(1e-12));
}

TEST_CASE("factorial-to-zeta gap is the zeta(9) excess") {
  const auto fact =
      bose_power_integral(1.0, 8, IntegralMethod::closed_form_factorial);
  const auto zeta =
      bose_power_integral(1.0, 8, IntegralMethod::closed_form_zeta);
  const double gap = zeta.value / fact.value - 1.0;
  CHECK(gap == doctest::Approx(0.0020083928260822).epsilon(1e-9));
  // 0.2008% within 0.0001% absolute
  CHECK(gap * 100.0 > 0.2007);
  CHECK(gap * 100.0 < 0.2009);
  // the factorial form's reported error is exactly that known gap
  CHECK(fact.estimated_abs_error ==
        doctest::Approx(zeta.value - fact.value).epsilon(1e-12));
}

TEST_CASE("adaptive agrees with the exact closed form") {
  for (double alpha : {1.0, 1e3, 1e6, 2e12, 1e15}) {
    const auto adaptive =
        bose_power_integral(alpha, 8, IntegralMethod::adaptive);
    const auto zeta =
        bose_power_integral(alpha, 8, IntegralMethod::closed_form_zeta);
    CHECK(adaptive.value ==
          doctest::Approx(zeta.value).epsilon(1e-9));  // contract: < 1e-9 rel
    // the reported error bound must actually cover the true error
    CHECK(std::fabs(adaptive.value - zeta.value) <=
          adaptive.estimated_abs_error + 1e-14 * zeta.value);
  }
}

TEST_CASE("scaling law: value * alpha^(p+1) independent of alpha") {
  for (int p : {1, 8, 16}) {
    const auto ref = bose_power_integral(1.0, p, IntegralMethod::adaptive);
    for (double alpha : {1e3, 1e6, 1e12}) {
      const auto r = bose_power_integral(alpha, p, IntegralMethod::adaptive);
      const double scaled = r.value * std::exp((p + 1.0) * std::log(alpha));
      CHECK(scaled == doctest::Approx(ref.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("finite and non-NaN across the extreme range") {
  for (double alpha : {1e-2, 1.0, 1e7, 1e15}) {
    for (int p : {1, 8, 16}) {
      const auto r = bose_power_integral(alpha, p, IntegralMethod::adaptive);
      CHECK(std::isfinite(r.value));
      CHECK(r.value >= 0.0);
      CHECK(std::isfinite(r.estimated_abs_error));
    }
  }
}

TEST_CASE("integrand peak") {
  CHECK(integrand_peak(2e12, 8) == doctest::Approx(4e-12).epsilon(1e-12));
  CHECK(integrand_peak(8.0, 8) == doctest::Approx(1.0).epsilon(1e-12));
  // stationarity of p ln x - alpha x at x* (derivative p/x* - alpha)
  const double alpha = 3.7e5;
  const int p = 8;
  const double xstar = integrand_peak(alpha, p);
  CHECK(std::fabs(p / xstar - alpha) / alpha < 1e-10);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(bose_power_integral(0.0, 8, IntegralMethod::adaptive),
                  domain_error);
  CHECK_THROWS_AS(bose_power_integral(-1.0, 8, IntegralMethod::adaptive),
                  domain_error);
  CHECK_THROWS_AS(bose_power_integral(1.0, 0, IntegralMethod::adaptive),
                  domain_error);
  CHECK_THROWS_AS(bose_power_integral(1.0, 17, IntegralMethod::adaptive),
                  domain_error);
  CHECK_THROWS_AS(integrand_peak(-1.0, 8), domain_error);
}

TEST_CASE("method names round-trip") {
  CHECK(integral_method_from_string("adaptive") == IntegralMethod::adaptive);
  CHECK(integral_method_from_string("factorial") ==
        IntegralMethod::closed_form_factorial);
  CHECK(integral_method_from_string("zeta") ==
        IntegralMethod::closed_form_zeta);
  CHECK_THROWS_AS(integral_method_from_string("simpson"), domain_error);
}
