#pragma once

// Shared numerical kernels: adaptive Gauss-Kronrod quadrature with optional
// square-root substitution at singular endpoints, extremum refinement,
// a cyclic-Jacobi symmetric eigensolver, and Chebyshev evaluation.

#include <functional>
#include <stdexcept>
#include <vector>

namespace dualtube::num {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct NoConvergence : std::runtime_error {
    QuadratureResult best;
    NoConvergence(const QuadratureResult& r, const std::string& what)
        : std::runtime_error(what), best(r) {}
};

struct ExtremumDetectionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EndpointFlags {
    bool singular_lo = false; // inverse-square-root-type singularity at lo
    bool singular_hi = false;
};

/*! Adaptive nested-rule (Gauss 7 / Kronrod 15) integration of f on [lo, hi].
 *
 *  Flagged singular endpoints are first transformed with x = lo + s^2
 *  (resp. x = hi - s^2), which turns an integrable 1/sqrt singularity into a
 *  bounded integrand. Throws NoConvergence (carrying the best estimate) if
 *  the tolerance cannot be met within the depth budget.
 */
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol = 1e-10, EndpointFlags flags = {},
                           int max_depth = 40);

enum class ExtremumKind { minimum, maximum };

struct Extremum {
    double x;
    double value;
    ExtremumKind kind;
};

/*! Locate interior extrema of f on [lo, hi].
 *
 *  Scans a uniform grid of scan_points centered finite-difference derivative
 *  values, brackets each sign change, and refines the bracket by derivative
 *  bisection until its width is below x_tol. Monotone f yields an empty list.
 */
std::vector<Extremum> refine_extrema(const std::function<double(double)>& f, double lo,
                                     double hi, int scan_points = 4096,
                                     double x_tol = 1e-12);

struct SymmetricSpectrum {
    std::vector<double> eigenvalues; // ascending
    double residual = 0.0;           // max |M v - lambda v| over probe vectors
};

/*! All eigenvalues of a dense symmetric matrix via cyclic Jacobi rotations.
 *  Rows of m are the matrix rows; m must be symmetric to ~1e-12.
 *  Sweeps run until the off-diagonal Frobenius norm falls below
 *  1e-12 * ||M||_F (or machine stagnation).
 */
SymmetricSpectrum symmetric_eigenvalues(std::vector<std::vector<double>> m);

//! Chebyshev polynomial of the first kind: T_n(cos t) = cos(n t).
double chebyshev_T(int n, double x);

//! Chebyshev polynomial of the second kind: P_n(cos t) * sin t = sin((n+1) t).
double chebyshev_P(int n, double x);

} // namespace dualtube::num
