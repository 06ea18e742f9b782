#pragma once

// Bessel kernels needed by the moment-generating-function and density code:
// I0 (modified, first kind), J0 (first kind), and I_n at integer order for
// the discretization-gap series.

namespace dualtube::num {

//! Modified Bessel function I0. Relative error <= 1e-12 for |x| <= 30,
//! <= 1e-9 beyond (asymptotic branch).
double bessel_i0(double x);

//! Bessel function J0. Relative error <= 1e-12 for |x| <= 30 (series up to 9,
//! normalized backward recurrence to 50), <= 1e-9 beyond (Hankel asymptotics).
double bessel_j0(double x);

//! Modified Bessel I_n at integer order n >= 0 by the ascending power series.
//! Intended for small-to-moderate |x| (converges for all x, but unscaled terms
//! limit practical use to |x| <~ 30); accurate for large n with tiny values,
//! down to the underflow floor.
double bessel_in(int n, double x);

} // namespace dualtube::num
