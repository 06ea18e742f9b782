#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dualtube/bessel.hpp"
#include "dualtube/numerics.hpp"
#include "dualtube/rng.hpp"

using dualtube::num::bessel_i0;
using dualtube::num::bessel_in;
using dualtube::num::bessel_j0;
using dualtube::num::integrate;

namespace {
constexpr double kPi = 3.14159265358979323846;

struct Ref {
    double x;
    double value;
};
} // namespace

TEST_CASE("J0 against high-precision reference values") {
    // reference values computed with 25-digit arithmetic; tolerance is
    // relative to max(|value|, oscillation envelope sqrt(2/(pi x)))
    const Ref table[] = {
        {0.1, 0.99750156206604003228},
        {0.5, 0.93846980724081290423},
        {1, 0.76519768655796655145},
        {2, 0.22389077914123566805},
        {5, -0.17759677131433830435},
        {9, -0.090333611182876134336},
        {9.3, -0.1576551899434029754},
        {12.5, 0.14688405470042110231},
        {15, -0.014224472826780773234},
        {29.5, -0.133147858298398214},
        {30.5, -0.019389754517762152066},
        {35, -0.12684568275631256981},
        {50, 0.055812327669251815005},
        {75, 0.034643913805097056137},
        {120.25, 0.07250976421327611732},
        {314.159, 0.031809863179129274009},
        {628.318, 0.022491484697059341101},
    };
    for (const auto& r : table) {
        CAPTURE(r.x);
        const double rel = (r.x <= 30.5) ? 1e-12 : 1e-9;
        const double scale = std::max(std::abs(r.value), std::sqrt(2.0 / (kPi * r.x)));
        CHECK(std::abs(bessel_j0(r.x) - r.value) <= rel * scale);
    }
    CHECK(bessel_j0(0.0) == 1.0);
    // first positive root
    CHECK(std::abs(bessel_j0(8.653727912911013)) < 1e-13);
    // even function
    CHECK(bessel_j0(-5.0) == bessel_j0(5.0));
}

TEST_CASE("I0 against high-precision reference values") {
    const Ref table[] = {
        {0.1, 1.0025015629340956014},
        {0.5, 1.0634833707413235193},
        {1, 1.2660658777520083356},
        {2, 2.2795853023360672674},
        {5, 27.239871823604446895},
        {8, 427.56411572180478518},
        {10, 2815.7166284662544715},
        {15, 339649.37329791387952},
        {29.5, 478144163888.03980422},
        {30.5, 1278062138712.5664747},
        {35, 107338818494514.06357},
        {60, 5.8940770556098011683e+24},
        {100, 1.0737517071310738235e+42},
        {250, 9.4575385598495502016e+106},
        {700, 1.5295933476718737363e+302},
    };
    for (const auto& r : table) {
        CAPTURE(r.x);
        const double rel = (r.x <= 30.5) ? 1e-12 : 1e-9;
        CHECK(std::abs(bessel_i0(r.x) - r.value) <= rel * r.value);
    }
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(-5.0) == bessel_i0(5.0));
}

TEST_CASE("I0 matches its integral representation") {
    for (double x : {0.5, 2.0, 5.0}) {
        CAPTURE(x);
        const auto r = integrate(
            [x](double phi) { return std::exp(x * std::cos(phi)) / kPi; }, 0.0, kPi, 1e-12);
        CHECK(std::abs(r.value - bessel_i0(x)) <= 1e-9 * bessel_i0(x));
    }
}

TEST_CASE("J0 matches its integral representation") {
    for (double x : {1.0, 5.0, 12.5}) {
        CAPTURE(x);
        const auto r = integrate(
            [x](double phi) { return std::cos(x * std::sin(phi)) / kPi; }, 0.0, kPi, 1e-12);
        CHECK(std::abs(r.value - bessel_j0(x)) <= 1e-9);
    }
}

TEST_CASE("higher-order modified Bessel values") {
    struct RefN {
        int n;
        double x;
        double value;
    };
    const RefN table[] = {
        {0, 2, 2.2795853023360672674},
        {1, 1, 0.56515910399248502721},
        {1, 2, 1.5906368546373290634},
        {2, 2, 0.68894844769873820405},
        {3, 2, 0.21273995923985265527},
        {5, 2, 0.0098256793231317023208},
        {2, 0.5, 0.031906149177738253813},
        {10, 4, 0.00040378896132693060265},
        {20, 1.04, 8.7002689689428906921e-25},
        {50, 2, 3.3530428298606416379e-65},
        {100, 2, 1.0821714745498605307e-158},
        {7, 12.5, 4197.2076921236359727},
    };
    for (const auto& r : table) {
        CAPTURE(r.n);
        CAPTURE(r.x);
        CHECK(std::abs(bessel_in(r.n, r.x) - r.value) <= 1e-9 * r.value);
    }

    SUBCASE("order parity under sign flip") {
        CHECK(bessel_in(2, -2.0) == bessel_in(2, 2.0));
        CHECK(bessel_in(3, -2.0) == -bessel_in(3, 2.0));
    }
    SUBCASE("generating-function identity exp(x) = I0 + 2 sum In") {
        const double x = 2.0;
        double sum = bessel_in(0, x);
        for (int n = 1; n <= 40; ++n) sum += 2.0 * bessel_in(n, x);
        CHECK(std::abs(sum - std::exp(x)) <= 1e-12 * std::exp(x));
    }
    SUBCASE("deep underflow flushes to zero") {
        CHECK(bessel_in(200, 1.0) == 0.0);
    }
    SUBCASE("zero argument") {
        CHECK(bessel_in(0, 0.0) == 1.0);
        CHECK(bessel_in(3, 0.0) == 0.0);
    }
}
