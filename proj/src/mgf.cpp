#include "dualtube/mgf.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dualtube/bessel.hpp"

namespace dualtube {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

double i0hat(double alpha, double beta, int p, int q) {
    const int n = p + q;
    if (n < 1) throw std::invalid_argument("i0hat: p + q >= 1 required");
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double ang = 2.0 * kPi * j / n;
        sum += std::exp(alpha * std::cos(ang) + beta * std::sin(ang));
    }
    return sum / n;
}

std::pair<double, double> alpha_beta(const ChiralVector& cv, double theta) {
    const double half = std::cos(0.5 * theta);
    const double skew = theta * (cv.p - cv.q) / (2.0 * (cv.p + cv.q));
    return {half * std::cos(skew), half * std::sin(skew)};
}

num::QuadratureResult mgf(const ChiralVector& cv, double t, double abs_tol) {
    const auto integrand = [&cv, t](double theta) {
        const auto [a, b] = alpha_beta(cv, theta);
        return std::exp(2.0 * t * std::cos(theta)) * i0hat(4.0 * t * a, 4.0 * t * b, cv.p, cv.q);
    };
    auto r = num::integrate(integrand, 0.0, kPi, abs_tol);
    const double scale = std::exp(3.0 * t) / kPi;
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

num::QuadratureResult mgf_limit(double t, double abs_tol) {
    const auto integrand = [t](double theta) {
        return std::exp(2.0 * t * std::cos(theta)) * num::bessel_i0(4.0 * t * std::cos(0.5 * theta));
    };
    auto r = num::integrate(integrand, 0.0, kPi, abs_tol);
    const double scale = std::exp(3.0 * t) / kPi;
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

IntegralIdentity verify_integral_identity(double t) {
    const double at = std::abs(t);
    // substitution x = e^{-s}; the kernel cubed decays (t < 0) or is dominated
    // by e^{6 sqrt(t s) - s} (t >= 0), so cut where that exponent is < -40
    const double w = 0.5 * (6.0 * std::sqrt(std::max(t, 0.0)) +
                            std::sqrt(36.0 * std::max(t, 0.0) + 160.0)) +
                     1.0;
    const double s_hi = w * w;
    const auto integrand = [t, at](double s) {
        const double z = 2.0 * std::sqrt(at * s);
        const double b = (t >= 0.0) ? num::bessel_i0(z) : num::bessel_j0(z);
        return b * b * b * std::exp(-s);
    };
    const double lhs = num::integrate(integrand, 0.0, s_hi, 1e-12).value;
    const double rhs = mgf_limit(t).value;
    return {lhs, rhs, std::abs(lhs - rhs)};
}

num::QuadratureResult mgf_armchair_limit_gap(int p, double t) {
    if (p < 1) throw std::invalid_argument("mgf_armchair_limit_gap: p >= 1 required");
    const auto integrand = [p, t](double theta) {
        const double z = 4.0 * t * std::cos(0.5 * theta);
        // kernel excess on the 2p-point grid: 2 * sum_l I_{2pl}(z); orders are
        // even, so each term is positive regardless of the sign of z
        double excess = 0.0;
        for (int l = 1; l <= 40; ++l) {
            const double term = num::bessel_in(2 * p * l, z);
            excess += term;
            if (term == 0.0 || term < 1e-17 * excess) break;
        }
        return std::exp(2.0 * t * std::cos(theta)) * 2.0 * excess;
    };
    // two passes: a cheap scan fixes the magnitude, the second integrates to
    // ~1e-12 relative accuracy (absolute tolerances would be meaningless for
    // values this far below 1)
    const auto rough = num::integrate(integrand, 0.0, kPi, 1.0);
    const double mag = std::abs(rough.value);
    auto r = (mag == 0.0)
                 ? rough
                 : num::integrate(integrand, 0.0, kPi, std::max(1e-12 * mag, 1e-320));
    const double scale = std::exp(3.0 * t) / kPi;
    r.value *= scale;
    r.error_estimate *= scale;
    return r;
}

double mgf_moment_series(const MomentSequence& seq, double t) {
    double sum = 0.0, coeff = 1.0; // coeff = t^k / k!
    for (std::size_t k = 0; k < seq.values.size(); ++k) {
        if (k > 0) coeff *= t / static_cast<double>(k);
        sum += seq.values[k].convert_to<double>() * coeff;
    }
    return sum;
}

int moment_series_order(double t, double tail_tol) {
    const double a = 9.0 * std::abs(t);
    double tail = a; // bound for K = 0: 9^1 |t|^1 / 1!
    int k = 0;
    while (tail >= tail_tol && k < 400) {
        ++k;
        tail *= a / (k + 1);
    }
    return k;
}

void export_mgf_csv(const std::function<num::QuadratureResult(double)>& m,
                    const std::vector<double>& ts, std::ostream& out) {
    const auto prev = out.precision(17);
    out << "t,m,err\n";
    for (const double t : ts) {
        const auto r = m(t);
        out << t << ',' << r.value << ',' << r.error_estimate << '\n';
    }
    out.precision(prev);
}

} // namespace dualtube
