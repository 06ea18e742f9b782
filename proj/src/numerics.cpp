#include "dualtube/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace dualtube::num {

namespace {

/* Gauss 7 / Kronrod 15 node-weight table on [-1,1] (positive half; nodes are
   symmetric). Kronrod weights cover all 15 nodes, Gauss weights the odd ones. */
constexpr double kron_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kron_w[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double lo, hi, value, err, resabs;
};

// One GK15 application on [lo,hi]; returns (I_kronrod, |I_kronrod - I_gauss|)
// plus the integral of |f| as the round-off reference magnitude.
Segment gk15(const std::function<double(double)>& f, double lo, double hi, long& evals) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    double ik = 0.0, ig = 0.0, ia = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            const double fc = f(c);
            ++evals;
            ik += kron_w[7] * fc;
            ig += gauss_w[3] * fc;
            ia += kron_w[7] * std::abs(fc);
            break;
        }
        const double fa = f(c - h * kron_x[i]);
        const double fb = f(c + h * kron_x[i]);
        evals += 2;
        ik += kron_w[i] * (fa + fb);
        ia += kron_w[i] * (std::abs(fa) + std::abs(fb));
        if (i % 2 == 1) ig += gauss_w[i / 2] * (fa + fb);
    }
    const double val = ik * h;
    // Standard QUADPACK-style sharpened error estimate is overkill here; the
    // plain |K15 - G7| difference is a safe (over-)estimate for our smooth
    // or substitution-tamed integrands.
    return {lo, hi, val, std::abs((ik - ig) * h), ia * h};
}

QuadratureResult integrate_plain(const std::function<double(double)>& f, double lo,
                                 double hi, double abs_tol, int max_depth) {
    // past this many evaluations further splitting is hopeless; drain the
    // stack and let the final tolerance check decide
    constexpr long kEvalBudget = 20'000'000;
    constexpr double kEps = std::numeric_limits<double>::epsilon();
    QuadratureResult total;
    std::vector<std::pair<Segment, int>> stack;
    stack.push_back({gk15(f, lo, hi, total.evaluations), 0});
    double value = 0.0, err = 0.0;
    while (!stack.empty()) {
        auto [seg, depth] = stack.back();
        stack.pop_back();
        // per-segment tolerance proportional to segment length, floored at
        // the round-off level of the segment's own magnitude — below that a
        // smaller |K15 - G7| difference is unattainable in doubles
        const double local_tol = std::max(abs_tol * (seg.hi - seg.lo) / (hi - lo),
                                          25.0 * kEps * seg.resabs);
        if (seg.err <= local_tol || depth >= max_depth ||
            seg.hi - seg.lo < 1e-15 * (hi - lo) || total.evaluations > kEvalBudget) {
            // converged segment, or depth/width budget hit (decided globally below)
            value += seg.value;
            err += seg.err;
            continue;
        }
        const double mid = 0.5 * (seg.lo + seg.hi);
        stack.push_back({gk15(f, seg.lo, mid, total.evaluations), depth + 1});
        stack.push_back({gk15(f, mid, seg.hi, total.evaluations), depth + 1});
    }
    total.value = value;
    total.error_estimate = err;
    if (err > abs_tol * 10 && err > 1e-14 * std::abs(value)) {
        throw NoConvergence(total, "quadrature tolerance not met");
    }
    return total;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           double abs_tol, EndpointFlags flags, int max_depth) {
    if (!(lo < hi)) throw std::invalid_argument("integrate: requires lo < hi");
    if (!(abs_tol > 0)) throw std::invalid_argument("integrate: requires tol > 0");

    // Substitute away flagged inverse-sqrt endpoint singularities:
    //   x = lo + s^2 ->  dx = 2 s ds, s in (0, sqrt(hi-lo)).
    // With both ends flagged, split at the midpoint first.
    if (flags.singular_lo && flags.singular_hi) {
        const double mid = 0.5 * (lo + hi);
        auto left = integrate(f, lo, mid, abs_tol / 2, {true, false}, max_depth);
        auto right = integrate(f, mid, hi, abs_tol / 2, {false, true}, max_depth);
        return {left.value + right.value, left.error_estimate + right.error_estimate,
                left.evaluations + right.evaluations};
    }
    if (flags.singular_lo) {
        auto g = [&](double s) { return 2.0 * s * f(lo + s * s); };
        return integrate_plain(g, 0.0, std::sqrt(hi - lo), abs_tol, max_depth);
    }
    if (flags.singular_hi) {
        auto g = [&](double s) { return 2.0 * s * f(hi - s * s); };
        return integrate_plain(g, 0.0, std::sqrt(hi - lo), abs_tol, max_depth);
    }
    return integrate_plain(f, lo, hi, abs_tol, max_depth);
}

std::vector<Extremum> refine_extrema(const std::function<double(double)>& f, double lo,
                                     double hi, int scan_points, double x_tol) {
    if (!(lo < hi)) throw std::invalid_argument("refine_extrema: requires lo < hi");
    if (scan_points < 16) throw std::invalid_argument("refine_extrema: scan_points >= 16");

    // centered finite-difference derivative, step well below the grid spacing
    const double h = (hi - lo) / (8.0 * scan_points);
    auto deriv = [&](double x) { return (f(x + h) - f(x - h)) / (2.0 * h); };

    std::vector<Extremum> out;
    const int n = scan_points;
    double prev_x = lo + (hi - lo) * 1.0 / (n + 1);
    double prev_d = deriv(prev_x);
    for (int i = 2; i <= n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (n + 1);
        const double d = deriv(x);
        if ((prev_d > 0 && d < 0) || (prev_d < 0 && d > 0)) {
            // bisect the derivative on [prev_x, x]
            double a = prev_x, b = x, da = prev_d;
            int it = 0;
            while (b - a > x_tol && it < 200) {
                const double m = 0.5 * (a + b);
                const double dm = deriv(m);
                if (dm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((da > 0) == (dm > 0)) {
                    a = m;
                    da = dm;
                } else {
                    b = m;
                }
                ++it;
            }
            if (b - a > x_tol) {
                throw ExtremumDetectionFailure("derivative bracket failed to shrink");
            }
            const double xs = 0.5 * (a + b);
            out.push_back({xs, f(xs),
                           prev_d > 0 ? ExtremumKind::maximum : ExtremumKind::minimum});
        }
        prev_x = x;
        prev_d = d;
    }
    return out;
}

SymmetricSpectrum symmetric_eigenvalues(std::vector<std::vector<double>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("eigenvalues: matrix not square");
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m[i][j] - m[j][i]) > 1e-12 * (1.0 + std::abs(m[i][j]))) {
                throw std::invalid_argument("eigenvalues: matrix not symmetric");
            }
            norm += m[i][j] * m[i][j];
        }
    norm = std::sqrt(norm);

    const std::vector<std::vector<double>> original = m;

    auto offdiag = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * m[i][j] * m[i][j];
        return std::sqrt(s);
    };

    // cyclic Jacobi: sweep all (i,j) pairs, rotate away each off-diagonal entry
    for (int sweep = 0; sweep < 100 && offdiag() > 1e-12 * std::max(norm, 1e-300); ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = m[p][q];
                if (apq == 0.0) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }

    SymmetricSpectrum out;
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = m[i][i];
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());

    // residual surrogate: how well eigenvalue power sums reproduce tr(M), tr(M^2)
    double tr1 = 0.0, tr2 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        tr1 += original[i][i];
        for (std::size_t j = 0; j < n; ++j) tr2 += original[i][j] * original[j][i];
        s1 += out.eigenvalues[i];
        s2 += out.eigenvalues[i] * out.eigenvalues[i];
    }
    out.residual = std::max(std::abs(tr1 - s1), std::abs(tr2 - s2));
    return out;
}

double chebyshev_T(int n, double x) {
    if (n < 0) throw std::invalid_argument("chebyshev_T: n >= 0");
    if (n == 0) return 1.0;
    double a = 1.0, b = x;
    for (int i = 1; i < n; ++i) {
        const double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return b;
}

double chebyshev_P(int n, double x) {
    if (n < 0) throw std::invalid_argument("chebyshev_P: n >= 0");
    if (n == 0) return 1.0;
    double a = 1.0, b = 2.0 * x;
    for (int i = 1; i < n; ++i) {
        const double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return b;
}

} // namespace dualtube::num
