#pragma once

// Moment generating function of the rolled-lattice random eigenvalue: an
// angular quadrature against a discrete exponential kernel, its large-
// circumference limit, and a cross-check integral identity for I0^3.

#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "dualtube/lattice.hpp"
#include "dualtube/moments.hpp"
#include "dualtube/numerics.hpp"

namespace dualtube {

/*! Discrete angular kernel
 *    i0hat(a, b, p, q) = (1/(p+q)) sum_{j=0}^{p+q-1}
 *                        exp(a cos(2 pi j/(p+q)) + b sin(2 pi j/(p+q))),
 *  a Riemann sum over p+q points of the circular integral that defines I0.
 */
double i0hat(double alpha, double beta, int p, int q);

/*! Angular coefficients (alpha, beta) at angle theta in [0, pi]:
 *    alpha = cos(theta/2) cos(theta (p-q)/(2(p+q)))
 *    beta  = cos(theta/2) sin(theta (p-q)/(2(p+q)))
 *  so that alpha^2 + beta^2 = cos^2(theta/2).
 */
std::pair<double, double> alpha_beta(const ChiralVector& cv, double theta);

/*! m(t) = (e^{3t}/pi) * integral_0^pi e^{2t cos theta}
 *                        i0hat(4t alpha(theta), 4t beta(theta), p, q) dtheta.
 *
 *  The zigzag (q=0) and armchair (p=q) generating functions are this same
 *  form specialised; note the kernel arguments must carry the 4t scaling — a
 *  variant that drops that factor fails the moment-series cross-check.
 */
num::QuadratureResult mgf(const ChiralVector& cv, double t, double abs_tol = 1e-10);

//! large-circumference limit: the discrete kernel replaced by I0(4t cos(theta/2))
num::QuadratureResult mgf_limit(double t, double abs_tol = 1e-10);

struct IntegralIdentity {
    double lhs; // integral_0^1 B0^3(2 sqrt(|t| * -log x)) dx, B0 = I0 (t>=0) or J0 (t<0)
    double rhs; // mgf_limit(t)
    double gap; // |lhs - rhs|
};

/*! Two independent quadratures of the same quantity: the substitution
 *  x = e^{-s} turns the lhs into a smoothly decaying integral on (0, inf),
 *  with the modified kernel for t >= 0 and the oscillatory one for t < 0.
 */
IntegralIdentity verify_integral_identity(double t);

/*! Cancellation-free |mgf((p,p), t) - mgf_limit(t)|.
 *
 *  On the 2p-point angular grid the discrete kernel exceeds I0 by exactly
 *  twice the sum of the modified Bessel terms whose order is a multiple of
 *  2p, so the gap is itself a positive integral — evaluable far below the
 *  cancellation floor of subtracting the two quadratures directly.
 */
num::QuadratureResult mgf_armchair_limit_gap(int p, double t);

//! Truncated series sum_k mu_k t^k / k! over all moments present in seq.
double mgf_moment_series(const MomentSequence& seq, double t);

//! Smallest K with the support-based tail bound 9^{K+1}|t|^{K+1}/(K+1)! < tail_tol.
int moment_series_order(double t, double tail_tol = 1e-10);

//! CSV export: header "t,m,err", one row per grid point.
void export_mgf_csv(const std::function<num::QuadratureResult(double)>& m,
                    const std::vector<double>& ts, std::ostream& out);

} // namespace dualtube
