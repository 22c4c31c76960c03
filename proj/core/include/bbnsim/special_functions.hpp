#pragma once

namespace bbnsim {

/// Modified Bessel function of the first kind, order zero.
double bessel_i0(double x);

/// log(I0(x)), switching to the asymptotic expansion before exp(x)
/// overflows a double.
double log_bessel_i0(double x);

/// I1(x) / I0(x), overflow-safe for large arguments.
double bessel_i1_over_i0(double x);

}  // namespace bbnsim
