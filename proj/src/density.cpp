#include "dualtube/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "dualtube/bessel.hpp"

namespace dualtube {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Second-kind Chebyshev value with the empty-index convention P_{-1} = 0,
// needed when one circumference component is zero.
double second_kind_or_zero(int n, double v) {
    return n < 0 ? 0.0 : num::chebyshev_P(n, v);
}

} // namespace

// ---------------------------------------------------------------------------
// PiecewiseDensity

double PiecewiseDensity::pdf(double x) const {
    double r = 0.0;
    for (const auto& pc : pieces)
        if (x > pc.lo && x < pc.hi) r += pc.pdf(x);
    return r;
}

double PiecewiseDensity::cdf(double x) const {
    double r = 0.0;
    for (const auto& a : atoms)
        if (a.x <= x) r += to_double(a.mass);
    for (const auto& pc : pieces) {
        if (x <= pc.lo) continue;
        // snap x to the endpoint when it sits within rounding distance of
        // pc.hi: an inverse-sqrt edge a few ulps past the cut is integrable
        // only through the endpoint substitution
        const double edge = 32.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, std::abs(pc.hi));
        const bool full = x >= pc.hi - edge;
        const double upper = full ? pc.hi : x;
        const num::EndpointFlags flags{pc.singular_lo, full && pc.singular_hi};
        r += num::integrate(pc.pdf, pc.lo, upper, 1e-10, flags).value;
    }
    return r;
}

double PiecewiseDensity::moment(int k) const {
    if (k < 0) throw std::invalid_argument("PiecewiseDensity::moment: k >= 0");
    // tolerance scaled to the x^k magnification so the target stays a
    // relative accuracy rather than an unreachable absolute one
    const double tol = 1e-10 * std::max(1.0, std::pow(9.0, k));
    double r = 0.0;
    for (const auto& a : atoms) r += to_double(a.mass) * std::pow(a.x, k);
    for (const auto& pc : pieces) {
        const auto f = [&pc, k](double x) { return pc.pdf(x) * std::pow(x, k); };
        const num::EndpointFlags flags{pc.singular_lo, pc.singular_hi};
        r += num::integrate(f, pc.lo, pc.hi, tol, flags).value;
    }
    return r;
}

double PiecewiseDensity::total_mass() const { return moment(0); }

// ---------------------------------------------------------------------------
// PhiFamily

PhiFamily::PhiFamily(ChiralVector cv) : cv_(cv) {}

double PhiFamily::c(int j) const {
    return std::cos(2.0 * kPi * j / branch_count());
}

double PhiFamily::d(int j) const {
    return std::sin(2.0 * kPi * j / branch_count());
}

double PhiFamily::v_lo() const { return std::cos(kPi / branch_count()); }

double PhiFamily::phi(int j, double v) const {
    const int n = branch_count();
    const double poly = num::chebyshev_T(n, v) +
                        c(j) * (num::chebyshev_T(cv_.p, v) + num::chebyshev_T(cv_.q, v));
    double wave = 0.0;
    const double dj = d(j);
    if (dj != 0.0) {
        const double root = std::sqrt(std::max(0.0, 1.0 - v * v));
        wave = dj * root *
               (second_kind_or_zero(cv_.q - 1, v) - second_kind_or_zero(cv_.p - 1, v));
    }
    return 3.0 + 2.0 * (poly + wave);
}

double PhiFamily::phi_angle(int j, double theta) const {
    const int n = branch_count();
    return 3.0 + 2.0 * (std::cos(n * theta) +
                        c(j) * (std::cos(cv_.p * theta) + std::cos(cv_.q * theta)) +
                        d(j) * (std::sin(cv_.q * theta) - std::sin(cv_.p * theta)));
}

double PhiFamily::dphi_angle(int j, double theta) const {
    const int n = branch_count();
    return 2.0 * (-n * std::sin(n * theta) -
                  c(j) * (cv_.p * std::sin(cv_.p * theta) + cv_.q * std::sin(cv_.q * theta)) +
                  d(j) * (cv_.q * std::cos(cv_.q * theta) - cv_.p * std::cos(cv_.p * theta)));
}

// ---------------------------------------------------------------------------
// Zigzag closed form

PiecewiseDensity pdf_zigzag(int p) {
    if (p < 3) throw std::invalid_argument("pdf_zigzag: p >= 3 required");
    PiecewiseDensity d;
    const double w = 1.0 / p;
    for (int j = 0; j < p; ++j) {
        const double r = 2.0 * std::abs(std::cos(kPi * j / p));
        if (r < 1e-12) {
            // degenerate radius: the whole conditional mass sits at x = 1
            d.atoms.push_back({1.0, BigRat(1, p)});
            continue;
        }
        const double lo = (r - 1.0) * (r - 1.0);
        const double hi = (r + 1.0) * (r + 1.0);
        // 4r^2 - (r^2+1-x)^2 factorises as (x-lo)(hi-x), which is the
        // cancellation-free form near the endpoints
        d.pieces.push_back({lo, hi,
                            [w, lo, hi](double x) {
                                const double t = (x - lo) * (hi - x);
                                if (t <= 0.0) return 0.0;
                                return w / (kPi * std::sqrt(t));
                            },
                            true, true});
    }
    return d;
}

double pdf_zigzag(int p, double x) { return pdf_zigzag(p).pdf(x); }

// ---------------------------------------------------------------------------
// Armchair closed form

PiecewiseDensity pdf_armchair(int p) {
    if (p < 2) throw std::invalid_argument("pdf_armchair: p >= 2 required");
    PiecewiseDensity d;
    const double w_half = 0.5 / p;
    // the two halves of the j in {0, p} conditionals: u = sqrt(x) turns the
    // radicand into x(3 -/+ u)(1 +/- u), positive on (0,9) resp. (0,1)
    d.pieces.push_back({0.0, 9.0,
                        [w_half](double x) {
                            const double t = x * (3.0 + 2.0 * std::sqrt(x) - x);
                            if (t <= 0.0) return 0.0;
                            return w_half / (kPi * std::sqrt(t));
                        },
                        true, true});
    d.pieces.push_back({0.0, 1.0,
                        [w_half](double x) {
                            const double t = x * (3.0 - 2.0 * std::sqrt(x) - x);
                            if (t <= 0.0) return 0.0;
                            return w_half / (kPi * std::sqrt(t));
                        },
                        true, true});
    // remaining conditionals, one piece per j; the two inversion branches of
    // the quadratic v-map merge into a single kernel on (1 - a^2, 5 + 4a).
    // For even p the j = p/2 kernel degenerates smoothly to the arcsine
    // density on (1,5), so no special case is needed.
    const double w = 1.0 / p;
    for (int j = 1; j < p; ++j) {
        const double a = std::cos(kPi * j / p);
        const double lo = 1.0 - a * a;
        const double hi = 5.0 + 4.0 * a;
        d.pieces.push_back({lo, hi,
                            [w, a](double x) {
                                const double s2 = a * a + x - 1.0;
                                if (s2 <= 0.0) return 0.0;
                                const double s = std::sqrt(s2);
                                const double t = (2.0 - s + a) * (2.0 + s - a);
                                if (t <= 0.0) return 0.0;
                                return w / (kPi * s * std::sqrt(t));
                            },
                            true, true});
    }
    return d;
}

double pdf_armchair(int p, double x) { return pdf_armchair(p).pdf(x); }

// ---------------------------------------------------------------------------
// General chiral vectors, numerically

PiecewiseDensity pdf_chiral_numeric(const ChiralVector& cv, int grid_size) {
    if (cv.q < 1 || cv.p <= cv.q)
        throw std::invalid_argument(
            "pdf_chiral_numeric: requires 0 < q < p; use the zigzag/armchair closed forms "
            "for the boundary families");
    if (grid_size < 256)
        throw std::invalid_argument("pdf_chiral_numeric: grid_size >= 256 required");

    const auto fam = std::make_shared<PhiFamily>(cv);
    const int n = fam->branch_count();
    const double theta_hi = kPi / n;

    PiecewiseDensity d;
    for (int j = 0; j < n; ++j) {
        const auto psi = [fam, j](double t) { return fam->phi_angle(j, t); };
        const auto extrema = num::refine_extrema(psi, 0.0, theta_hi, grid_size);

        std::vector<double> cuts{0.0};
        for (const auto& e : extrema) cuts.push_back(e.x);
        cuts.push_back(theta_hi);

        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double ta = cuts[i], tb = cuts[i + 1];
            const double xa = fam->phi_angle(j, ta), xb = fam->phi_angle(j, tb);
            if (std::abs(xb - xa) < 1e-12) continue;
            const double sgn = (xb > xa) ? 1.0 : -1.0;

            // invert the monotone branch with Newton steps safeguarded by the
            // bracketing interval, then apply the change-of-variables factor
            const auto eval = [fam, j, ta, tb, sgn](double x) {
                double a = ta, b = tb, t = 0.5 * (ta + tb);
                for (int it = 0; it < 80; ++it) {
                    const double g = sgn * (fam->phi_angle(j, t) - x);
                    if (g < 0.0)
                        a = t;
                    else
                        b = t;
                    const double gp = sgn * fam->dphi_angle(j, t);
                    double tn = (gp != 0.0) ? t - g / gp : 0.5 * (a + b);
                    if (!(tn > a && tn < b)) tn = 0.5 * (a + b);
                    if (std::abs(tn - t) < 1e-14 * (1.0 + std::abs(t))) {
                        t = tn;
                        break;
                    }
                    t = tn;
                }
                const double slope = std::abs(fam->dphi_angle(j, t));
                if (slope == 0.0) return 0.0; // exact extremum: measure-zero point
                return 1.0 / (kPi * slope);
            };

            // an endpoint is an inverse-sqrt singularity iff the branch
            // derivative vanishes there (interior extrema always; the theta
            // endpoints only when the sine weight of the branch is zero)
            const bool flat_a = std::abs(fam->dphi_angle(j, ta)) < 1e-6;
            const bool flat_b = std::abs(fam->dphi_angle(j, tb)) < 1e-6;
            DensityPiece pc;
            pc.lo = std::min(xa, xb);
            pc.hi = std::max(xa, xb);
            pc.pdf = eval;
            pc.singular_lo = (xa < xb) ? flat_a : flat_b;
            pc.singular_hi = (xa < xb) ? flat_b : flat_a;
            d.pieces.push_back(std::move(pc));
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Unrolled-lattice limit density

namespace {

// first `count` positive zeros of J0: tabulated values, then McMahon's
// expansion polished by bisection (zero spacing ~ pi, so +/-0.5 brackets)
std::vector<double> j0_zeros(int count) {
    static const double first[5] = {2.404825557695773, 5.520078110286311, 8.653727912911012,
                                    11.791534439014281, 14.930917708487785};
    std::vector<double> z;
    z.reserve(count);
    for (int k = 1; k <= count; ++k) {
        double t;
        if (k <= 5) {
            t = first[k - 1];
        } else {
            const double beta = (k - 0.25) * kPi;
            t = beta + 1.0 / (8.0 * beta) - 124.0 / (3.0 * std::pow(8.0 * beta, 3));
        }
        double a = t - 0.5, b = t + 0.5;
        double fa = num::bessel_j0(a);
        for (int it = 0; it < 60; ++it) {
            const double m = 0.5 * (a + b);
            const double fm = num::bessel_j0(m);
            if ((fa < 0.0) == (fm < 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        z.push_back(0.5 * (a + b));
    }
    return z;
}

} // namespace

num::QuadratureResult pdf_triangular(double x, int oscillations, int n_points,
                                     double abs_tol) {
    if (x < 0.0) throw std::invalid_argument("pdf_triangular: x >= 0 required");
    if (oscillations < 8)
        throw std::invalid_argument("pdf_triangular: at least 8 oscillations required");
    if (n_points < 1) throw std::invalid_argument("pdf_triangular: n_points >= 1 required");

    const double rx = std::sqrt(x);
    const auto g = [rx](double t) {
        const double j = num::bessel_j0(t);
        return 0.5 * t * num::bessel_j0(t * rx) * j * j * j;
    };

    const auto zeros = j0_zeros(oscillations);
    long evals = 0;
    double acc = 0.0;
    std::vector<double> partial;
    partial.reserve(oscillations);
    for (int m = 0; m < oscillations; ++m) {
        const double a = (m == 0) ? 0.0 : zeros[m - 1];
        const double b = zeros[m];
        for (int s = 0; s < n_points; ++s) {
            const double sa = a + (b - a) * s / n_points;
            const double sb = a + (b - a) * (s + 1) / n_points;
            const auto r = num::integrate(g, sa, sb, 1e-12);
            acc += r.value;
            evals += r.evaluations;
        }
        partial.push_back(acc);
    }

    // iterated averaging of the partial-sum sequence (adjacent means, six
    // rounds) damps the alternating tail of the oscillatory integral
    std::vector<double> avg = partial;
    double last = avg.back(), prev_last = last;
    for (int round = 0; round < 6; ++round) {
        for (std::size_t i = 0; i + 1 < avg.size(); ++i) avg[i] = 0.5 * (avg[i] + avg[i + 1]);
        avg.pop_back();
        prev_last = last;
        last = avg.back();
    }

    const num::QuadratureResult out{last, std::abs(last - prev_last), evals};
    if (out.error_estimate > abs_tol)
        throw num::NoConvergence(out,
                                 "pdf_triangular: averaged oscillatory tail exceeds tolerance");
    return out;
}

// ---------------------------------------------------------------------------
// Exports

void export_density_csv(const PiecewiseDensity& d, int grid_points, std::ostream& out) {
    if (grid_points < 2)
        throw std::invalid_argument("export_density_csv: grid_points >= 2 required");
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& pc : d.pieces) {
        lo = std::min(lo, pc.lo);
        hi = std::max(hi, pc.hi);
    }
    for (const auto& a : d.atoms) {
        lo = std::min(lo, a.x);
        hi = std::max(hi, a.x);
    }
    if (!(lo < hi)) throw std::invalid_argument("export_density_csv: empty density");

    const auto prev = out.precision(17);
    out << "x,pdf,cdf\n";
    // cell midpoints: keeps the sample points away from singular endpoints
    const double h = (hi - lo) / grid_points;
    for (int i = 0; i < grid_points; ++i) {
        const double x = lo + (i + 0.5) * h;
        out << x << ',' << d.pdf(x) << ',' << d.cdf(x) << '\n';
    }
    out.precision(prev);
}

void export_atoms_csv(const PiecewiseDensity& d, std::ostream& out) {
    const auto prev = out.precision(17);
    out << "x,mass\n";
    for (const auto& a : d.atoms) out << a.x << ',' << to_decimal(a.mass) << '\n';
    out.precision(prev);
}

} // namespace dualtube
