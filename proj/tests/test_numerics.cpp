#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "dualtube/density.hpp"
#include "dualtube/numerics.hpp"
#include "dualtube/rng.hpp"

using dualtube::num::EndpointFlags;
using dualtube::num::ExtremumKind;
using dualtube::num::integrate;
using dualtube::num::refine_extrema;
using dualtube::num::symmetric_eigenvalues;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("quadrature reproduces analytic integrals within requested tolerance") {
    struct Case {
        std::function<double(double)> f;
        double lo, hi, truth, tol;
        EndpointFlags flags;
    };
    const std::vector<Case> cases = {
        {[](double x) { return x * x; }, 0.0, 1.0, 1.0 / 3.0, 1e-12, {}},
        {[](double x) { return std::pow(x, 5) - 3 * std::pow(x, 3) + 1; }, -1.0, 2.0, 9.0 / 4.0,
         1e-12, {}},
        {[](double x) { return std::cos(x); }, 0.0, kPi, 0.0, 1e-12, {}},
        {[](double x) { return std::sin(x); }, 0.0, kPi, 2.0, 1e-12, {}},
        {[](double x) { return std::pow(std::sin(10 * x), 2); }, 0.0, 2 * kPi, kPi, 1e-12, {}},
        {[](double x) { return std::cos(40 * x); }, 0.0, 1.0, std::sin(40.0) / 40.0, 1e-12, {}},
        {[](double x) { return std::exp(x); }, 0.0, 1.0, std::exp(1.0) - 1.0, 1e-12, {}},
        {[](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 2.0, 1e-8, {true, false}},
        {[](double x) { return 1.0 / std::sqrt(1.0 - x); }, 0.0, 1.0, 2.0, 1e-8, {false, true}},
        {[](double x) { return 1.0 / (kPi * std::sqrt(x * (1.0 - x))); }, 0.0, 1.0, 1.0, 1e-8,
         {true, true}},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CAPTURE(i);
        const auto& c = cases[i];
        const auto r = integrate(c.f, c.lo, c.hi, c.tol, c.flags);
        CHECK(std::abs(r.value - c.truth) <= c.tol);
        CHECK(r.evaluations > 0);
        CHECK(r.error_estimate >= 0.0);
    }
}

TEST_CASE("quadrature rejects empty and reversed intervals") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate(f, 2.0, 2.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 3.0, 2.0, 1e-12), std::invalid_argument);
}

TEST_CASE("extremum refinement locates interior stationary points") {
    SUBCASE("single parabola minimum") {
        const auto ex =
            refine_extrema([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0);
        REQUIRE(ex.size() == 1);
        CHECK(ex[0].kind == ExtremumKind::minimum);
        CHECK(std::abs(ex[0].x - 0.3) < 1e-10);
        CHECK(std::abs(ex[0].value) < 1e-12);
    }
    SUBCASE("monotone function has none") {
        CHECK(refine_extrema([](double x) { return std::exp(x); }, -1.0, 1.0).empty());
    }
    SUBCASE("sine on a full period") {
        const auto ex = refine_extrema([](double x) { return std::sin(x); }, 0.0, 2 * kPi);
        REQUIRE(ex.size() == 2);
        CHECK(ex[0].kind == ExtremumKind::maximum);
        CHECK(std::abs(ex[0].x - kPi / 2) < 1e-10);
        CHECK(std::abs(ex[0].value - 1.0) < 1e-12);
        CHECK(ex[1].kind == ExtremumKind::minimum);
        CHECK(std::abs(ex[1].x - 1.5 * kPi) < 1e-10);
    }
    SUBCASE("oscillatory count") {
        const auto ex = refine_extrema([](double x) { return std::cos(5 * x); }, 0.0, kPi);
        CHECK(ex.size() == 4);
    }
}

TEST_CASE("extremum refinement resolves the (5,1) second-branch dip") {
    // shallow interior extremum of the j=2 branch map; the dip is a minimum
    // (its value 0.0946 lies below both endpoint values of the branch)
    const dualtube::PhiFamily fam(dualtube::ChiralVector(5, 1));
    const auto f = [&fam](double v) { return fam.phi(2, v); };
    const auto ex = refine_extrema(f, fam.v_lo(), 1.0 - 1e-9);
    REQUIRE(ex.size() == 1);
    CHECK(std::abs(ex[0].x - 0.930533) < 1e-4);
    CHECK(std::abs(ex[0].value - 0.094556) < 1e-4);
    CHECK(ex[0].kind == ExtremumKind::minimum);

    // the j=0 branch is monotone on the same domain
    const auto none =
        refine_extrema([&fam](double v) { return fam.phi(0, v); }, fam.v_lo(), 1.0 - 1e-9);
    CHECK(none.empty());
}

TEST_CASE("eigensolver on closed-form spectra") {
    SUBCASE("2x2 swap matrix") {
        const auto s = symmetric_eigenvalues({{0.0, 1.0}, {1.0, 0.0}});
        REQUIRE(s.eigenvalues.size() == 2);
        CHECK(std::abs(s.eigenvalues[0] + 1.0) < 1e-12);
        CHECK(std::abs(s.eigenvalues[1] - 1.0) < 1e-12);
    }
    SUBCASE("triangle adjacency") {
        const auto s =
            symmetric_eigenvalues({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        REQUIRE(s.eigenvalues.size() == 3);
        CHECK(std::abs(s.eigenvalues[0] + 1.0) < 1e-10);
        CHECK(std::abs(s.eigenvalues[1] + 1.0) < 1e-10);
        CHECK(std::abs(s.eigenvalues[2] - 2.0) < 1e-10);
    }
    SUBCASE("diagonal matrix is returned sorted") {
        const auto s = symmetric_eigenvalues({{3, 0, 0}, {0, -5, 0}, {0, 0, 1}});
        CHECK(s.eigenvalues == std::vector<double>{-5.0, 1.0, 3.0});
    }
}

TEST_CASE("eigensolver reproduces traces on random symmetric matrices") {
    dualtube::SeededStream rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(63)); // 2..64
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) {
                m[i][j] = m[j][i] = 2.0 * rng.next_double() - 1.0;
            }
        }
        double tr1 = 0.0, tr2 = 0.0;
        for (int i = 0; i < n; ++i) {
            tr1 += m[i][i];
            for (int j = 0; j < n; ++j) tr2 += m[i][j] * m[j][i];
        }
        const auto s = symmetric_eigenvalues(m);
        REQUIRE(static_cast<int>(s.eigenvalues.size()) == n);
        double s1 = 0.0, s2 = 0.0;
        for (double ev : s.eigenvalues) {
            s1 += ev;
            s2 += ev * ev;
        }
        CAPTURE(trial);
        CAPTURE(n);
        CHECK(std::abs(s1 - tr1) <= 1e-8 * n);
        CHECK(std::abs(s2 - tr2) <= 1e-8 * n * std::max(1.0, tr2));
        CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
    }
}

TEST_CASE("Chebyshev evaluators match their trigonometric definitions") {
    using dualtube::num::chebyshev_P;
    using dualtube::num::chebyshev_T;

    CHECK(chebyshev_T(0, 0.77) == 1.0);
    CHECK(chebyshev_T(1, 0.77) == 0.77);
    CHECK(chebyshev_T(3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(chebyshev_P(0, 0.3) == 1.0);
    CHECK(chebyshev_P(1, 0.25) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(chebyshev_T(20, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(chebyshev_P(20, 1.0) == doctest::Approx(21.0).epsilon(1e-12));

    dualtube::SeededStream rng(555);
    double worst_t = 0.0, worst_p = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = rng.next_double_open0() * kPi;
        const double x = std::cos(theta), s = std::sin(theta);
        for (int n = 0; n <= 64; ++n) {
            worst_t = std::max(worst_t, std::abs(chebyshev_T(n, x) - std::cos(n * theta)));
            worst_p =
                std::max(worst_p, std::abs(chebyshev_P(n, x) * s - std::sin((n + 1) * theta)));
        }
    }
    CHECK(worst_t <= 1e-12);
    CHECK(worst_p <= 1e-12);

    CHECK_THROWS_AS(chebyshev_T(-1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(chebyshev_P(-2, 0.5), std::invalid_argument);
}
