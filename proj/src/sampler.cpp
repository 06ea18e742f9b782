#include "dualtube/sampler.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace dualtube {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<double> sample_general(const ChiralVector& cv, SeededStream& stream,
                                   std::size_t n) {
    const int m = cv.circumference();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = kPi * stream.next_double_open0(); // U in (0, pi]
        const double j = static_cast<double>(stream.next_below(m));
        out[i] = 3.0 + 2.0 * (std::cos(u) + std::cos((cv.p * u + 2.0 * kPi * j) / m) +
                              std::cos((cv.q * u - 2.0 * kPi * j) / m));
    }
    return out;
}

std::vector<double> sample_zigzag(int p, SeededStream& stream, std::size_t n) {
    if (p < 3) throw std::invalid_argument("sample_zigzag: p >= 3");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = kPi * stream.next_double_open0();
        const double v = std::cos(0.5 * u); // arcsine-type on [0,1)
        const double ang = 2.0 * kPi * static_cast<double>(stream.next_below(p)) / p;
        out[i] = 4.0 * (1.0 + std::cos(ang)) * v * v -
                 4.0 * std::sin(ang) * v * std::sqrt(1.0 - v * v) + 1.0;
    }
    return out;
}

std::vector<double> sample_armchair(int p, SeededStream& stream, std::size_t n) {
    if (p < 2) throw std::invalid_argument("sample_armchair: p >= 2");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = kPi * stream.next_double_open0();
        const double v = std::cos(0.5 * u);
        const double a = std::cos(kPi * static_cast<double>(stream.next_below(2 * p)) / p);
        out[i] = 4.0 * v * v + 4.0 * a * v + 1.0;
    }
    return out;
}

std::vector<double> sample_triangular_limit(double c, SeededStream& stream, std::size_t n) {
    if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("sample_triangular_limit: c in [0,1]");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = 2.0 * kPi * stream.next_double_open0();
        const double v = 2.0 * kPi * stream.next_double_open0();
        out[i] = 3.0 + 2.0 * (std::cos(u) + std::cos((1.0 - c) * u + v) + std::cos(c * u - v));
    }
    return out;
}

void export_samples_csv(const std::vector<double>& samples, std::ostream& out) {
    out << "lambda\n";
    out.precision(17);
    for (double s : samples) out << s << '\n';
}

void export_histogram_csv(const std::vector<double>& samples, int bins, std::ostream& out) {
    if (bins <= 0) throw std::invalid_argument("export_histogram_csv: bins > 0");
    std::vector<long long> count(bins, 0);
    for (double s : samples) {
        int b = static_cast<int>(s / 9.0 * bins);
        if (b < 0) b = 0;
        if (b >= bins) b = bins - 1;
        ++count[b];
    }
    out << "bin_left,bin_right,count\n";
    out.precision(17);
    for (int b = 0; b < bins; ++b) {
        out << (9.0 * b / bins) << ',' << (9.0 * (b + 1) / bins) << ',' << count[b] << '\n';
    }
}

} // namespace dualtube
