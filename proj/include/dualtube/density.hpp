#pragma once

// Probability densities of the rolled-lattice random eigenvalue: closed forms
// for the zigzag (q=0) and armchair (p=q) families, a numerical
// change-of-variables construction for general chiral vectors, and the
// oscillatory Bessel integral for the unrolled-lattice limit density.

#include <functional>
#include <iosfwd>
#include <vector>

#include "dualtube/exact.hpp"
#include "dualtube/lattice.hpp"
#include "dualtube/numerics.hpp"

namespace dualtube {

struct DensityPiece {
    double lo = 0.0, hi = 0.0;
    std::function<double(double)> pdf; // contribution on (lo, hi), weight included
    bool singular_lo = false;          // inverse-sqrt endpoint behaviour
    bool singular_hi = false;
};

struct Atom {
    double x;
    BigRat mass;
};

/*! A density on [0,9] assembled from absolutely continuous pieces plus point
 *  masses. Piece evaluators already carry their mixture weights, so the
 *  density at x is simply the sum over pieces whose interval contains x.
 */
class PiecewiseDensity {
public:
    std::vector<DensityPiece> pieces;
    std::vector<Atom> atoms;

    //! density value at x (atoms excluded)
    double pdf(double x) const;

    //! atom mass at or below x plus piece integrals up to x; in [0,1]
    double cdf(double x) const;

    //! total mass: atoms plus all piece integrals (should be 1 within 1e-6)
    double total_mass() const;

    //! k-th moment of the distribution (quadrature over pieces + atom terms)
    double moment(int k) const;
};

//! free-function form of the CDF operation
inline double cdf(const PiecewiseDensity& d, double x) { return d.cdf(x); }

/*! The branch functions the chiral construction inverts: for each
 *  j in {0..p+q-1},
 *    phi_j(v) = 3 + 2[ T_{p+q}(v) + c_j (T_p(v) + T_q(v))
 *                      + d_j sqrt(1-v^2) (P_{q-1}(v) - P_{p-1}(v)) ]
 *  on v in [cos(pi/(p+q)), 1), with c_j = cos(2 pi j/(p+q)),
 *  d_j = sin(2 pi j/(p+q)). phi_j(cos(u/(p+q))) reproduces the general
 *  sampler's map at (U=u, J=j); values lie in [0,9].
 */
class PhiFamily {
public:
    explicit PhiFamily(ChiralVector cv);

    const ChiralVector& chiral() const { return cv_; }
    int branch_count() const { return cv_.p + cv_.q; }
    double c(int j) const;
    double d(int j) const;
    double v_lo() const; // cos(pi/(p+q))

    //! Chebyshev-recurrence evaluation in v
    double phi(int j, double v) const;

    //! same function through v = cos(theta), theta in [0, pi/(p+q)]
    double phi_angle(int j, double theta) const;

    //! d/dtheta of phi_angle (all terms analytic; no endpoint blowup)
    double dphi_angle(int j, double theta) const;

private:
    ChiralVector cv_;
};

/*! Zigzag closed form, p >= 3. Piece j lives on
 *  ((2|cos(pi j/p)| - 1)^2, (2|cos(pi j/p)| + 1)^2) with an arcsine-type
 *  kernel; for even p the j = p/2 term degenerates (radius 0) and is emitted
 *  as an atom of mass 1/p at x = 1 instead of a zero-width piece.
 */
PiecewiseDensity pdf_zigzag(int p);
double pdf_zigzag(int p, double x);

/*! Armchair closed form, p >= 2. The j in {0,p} conditionals combine into two
 *  weight-1/(2p) pieces on (0,9) and (0,1); each j in {1..p-1}, j != p/2,
 *  contributes a weight-1/p piece on (1 - a_j^2, 5 + 4 a_j), a_j = cos(pi j/p),
 *  merging the one-branch and two-branch inversions of the quadratic map
 *  (partner indices j and p-j share one analytic kernel). Even p adds the
 *  arcsine piece on (1,5) for j = p/2.
 */
PiecewiseDensity pdf_armchair(int p);
double pdf_armchair(int p, double x);

/*! Numerical density for chiral vectors with 0 < q < p: locates the extrema
 *  of every branch function, splits each branch into monotone pieces, and
 *  inverts them by safeguarded bisection; each piece evaluates to
 *  1/(pi |dphi_angle|) at the matching angle. grid_size (>= 256) controls the
 *  extremum scan resolution.
 */
PiecewiseDensity pdf_chiral_numeric(const ChiralVector& cv, int grid_size = 4096);

/*! Unrolled-lattice limit density
 *    f(x) = 1/2 * integral_0^inf t J0(t sqrt(x)) J0(t)^3 dt
 *  by partial integrals between consecutive zeros of J0 (one Gauss-Kronrod
 *  panel per n_points subdivision), accelerated by iterated averaging of the
 *  partial-sum sequence; `oscillations` caps the number of zero intervals.
 *  Throws num::NoConvergence if the averaged tail still moves by more than
 *  abs_tol.
 */
num::QuadratureResult pdf_triangular(double x, int oscillations = 200, int n_points = 1,
                                     double abs_tol = 1e-6);

//! Density grid export: CSV "x,pdf,cdf"; atom export: CSV "x,mass".
void export_density_csv(const PiecewiseDensity& d, int grid_points, std::ostream& out);
void export_atoms_csv(const PiecewiseDensity& d, std::ostream& out);

} // namespace dualtube
