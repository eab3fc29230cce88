#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numbers>

#include "vacrad/constants.hpp"

using vacrad::constants;

TEST_CASE("CODATA 2018 values") {
  const auto c = constants();
  CHECK(c.hbar == 1.054571817e-34);
  CHECK(c.k_B == 1.380649e-23);
  CHECK(c.c == 2.99792458e8);
}

TEST_CASE("referential transparency") {
  const auto a = constants();
  const auto b = constants();
  CHECK(a.hbar == b.hbar);
  CHECK(a.k_B == b.k_B);
  CHECK(a.c == b.c);
}

TEST_CASE("all strictly positive") {
  const auto c = constants();
  CHECK(c.hbar > 0.0);
  CHECK(c.k_B > 0.0);
  CHECK(c.c > 0.0);
}

TEST_CASE("cross-constant consistency: hbar c / k_B") {
  const auto c = constants();
  const double value = c.hbar * c.c / c.k_B;

  // Independent route through the exact SI Planck constant: the stored
  // (truncated) hbar must agree with h/(2 pi) far better than 1e-7.
  const double h_exact = 6.62607015e-34;
  const double reference = h_exact * c.c / (2.0 * std::numbers::pi * c.k_B);
  CHECK(value == doctest::Approx(reference).epsilon(1e-7));
  CHECK(value == doctest::Approx(2.2898845e-3).epsilon(1e-6));
}
