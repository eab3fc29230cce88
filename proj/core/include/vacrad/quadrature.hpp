#pragma once

namespace vacrad {

enum class IntegralMethod {
  adaptive,
  closed_form_factorial,
  closed_form_zeta,
};

struct IntegralResult {
  double value;
  double estimated_abs_error;
  IntegralMethod method;
};

/// Bose-weighted power integral  I(alpha, p) = int_0^inf x^p / (e^{alpha x} - 1) dx.
///
/// adaptive:              Gauss-Kronrod on the substituted variable u = alpha x,
///                        value = alpha^-(p+1) * int_0^U u^p/(e^u - 1) du, so no
///                        intermediate over/underflows for alpha up to 1e15.
///                        Relative error < 1e-9 (reported, not assumed).
/// closed_form_zeta:      Gamma(p+1) zeta(p+1) / alpha^(p+1), exact value of I.
/// closed_form_factorial: p! / alpha^(p+1), i.e. the Bose -1 neglected.
///
/// Requires alpha > 0 and p in [1, 16]; throws domain_error otherwise.
IntegralResult bose_power_integral(double alpha, int p, IntegralMethod method);

/// Maximizer x* = p/alpha of the -1-neglected integrand x^p e^{-alpha x}.
double integrand_peak(double alpha, int p);

/// Riemann zeta at integer s >= 2: direct series plus Euler-Maclaurin tail.
double riemann_zeta(int s);

const char* to_string(IntegralMethod method);
IntegralMethod integral_method_from_string(const char* name);

}  // namespace vacrad
