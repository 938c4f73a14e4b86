#pragma once

namespace kgt {

/// Accuracy contract for the Bessel evaluators.
///
/// abs_tol is the guaranteed absolute error bound on |x| <= domain_max.
/// For the exponentially growing I functions the contract is relative:
/// |error| <= abs_tol * e^|x|.
struct BesselAccuracy {
    double abs_tol;
    double domain_max;
};

/// Contract of bessel_j0 / bessel_j1: 1e-12 absolute out to |x| = 2000
/// (the underlying Chebyshev fits are good to ~1e-15; the bound past
/// |x| ~ 50 is dominated by phase rounding, which stays below 1e-12 there).
BesselAccuracy bessel_j_accuracy();

/// Contract of bessel_i0 / bessel_i1: 1e-12 * e^|x| out to |x| = 700
/// (e^700 is the last decade before double overflow).
BesselAccuracy bessel_i_accuracy();

// Ordinary Bessel functions of the first kind, orders 0 and 1.
// Even/odd parity is exact in floating point (evaluated on |x|).
// Throw kgt::accuracy_error for |x| > bessel_j_accuracy().domain_max.
double bessel_j0(double x);
double bessel_j1(double x);

// Modified Bessel functions of the first kind, orders 0 and 1.
// Throw kgt::accuracy_error for |x| > bessel_i_accuracy().domain_max.
double bessel_i0(double x);
double bessel_i1(double x);

// Exponentially scaled variants, e^-|x| I_n(x); same domain contract.
double bessel_i0_scaled(double x);
double bessel_i1_scaled(double x);

// Cancellation-safe ratios used by the Green-function closed forms near
// the wave cone, where the raw quotients are 0/0:
//   J1(x)/x -> 1/2,  I1(x)/x -> 1/2,  J2(x)/x^2 -> 1/8,  I2(x)/x^2 -> 1/8.
// Small arguments switch to the power series; J2/I2 come from the
// three-term recurrences otherwise.
double bessel_j1_over_x(double x);
double bessel_i1_over_x(double x);
double bessel_j2_over_x2(double x);
double bessel_i2_over_x2(double x);

} // namespace kgt
