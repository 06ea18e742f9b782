#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "dualtube/moments.hpp"
#include "dualtube/sampler.hpp"
#include "test_util.hpp"

using dualtube::ChiralVector;
using dualtube::sample_armchair;
using dualtube::sample_general;
using dualtube::sample_triangular_limit;
using dualtube::sample_zigzag;
using dualtube::SeededStream;

TEST_CASE("seed determinism and stream independence") {
    SeededStream a(99), b(99), c(100);
    const auto xa = sample_general(ChiralVector(5, 1), a, 1000);
    const auto xb = sample_general(ChiralVector(5, 1), b, 1000);
    const auto xc = sample_general(ChiralVector(5, 1), c, 1000);
    CHECK(xa == xb);
    CHECK(xa != xc);

    SeededStream d(7), e(7);
    CHECK(sample_zigzag(5, d, 100) == sample_zigzag(5, e, 100));
}

TEST_CASE("every sampler stays inside the spectral band") {
    SeededStream rng(321);
    for (const auto& s : {sample_general(ChiralVector(5, 1), rng, 100000),
                          sample_general(ChiralVector(5, 0), rng, 100000),
                          sample_zigzag(5, rng, 100000), sample_zigzag(6, rng, 100000),
                          sample_armchair(2, rng, 100000), sample_armchair(5, rng, 100000),
                          sample_triangular_limit(0.5, rng, 100000),
                          sample_triangular_limit(0.0, rng, 100000)}) {
        const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
        CHECK(*lo >= 0.0);
        CHECK(*hi <= 9.0);
    }
    // the top of the band is approached (j=0 pieces reach 9 as u -> 0)
    SeededStream rng2(13);
    const auto s = sample_general(ChiralVector(5, 1), rng2, 1000000);
    CHECK(*std::max_element(s.begin(), s.end()) > 8.99);
}

TEST_CASE("empirical moments match the exact integers within four standard errors") {
    for (ChiralVector cv : {ChiralVector(5, 0), ChiralVector(5, 1), ChiralVector(5, 5),
                            ChiralVector(4, 2)}) {
        CAPTURE(cv.p);
        CAPTURE(cv.q);
        SeededStream rng(1000 + 10 * cv.p + cv.q);
        const auto s = sample_general(cv, rng, 1000000);
        const auto exact = dualtube::moment_table(cv, 6, {dualtube::MomentMethod::indicator});
        for (int k = 1; k <= 6; ++k) {
            CAPTURE(k);
            const auto st = testutil::empirical_power(s, k);
            const double mu = exact[0].values[k].convert_to<double>();
            CHECK(std::abs(st.mean - mu) <= 4.0 * st.se);
        }
    }
}

TEST_CASE("special-geometry samplers agree in law with the general one") {
    SeededStream r1(2024), r2(2025), r3(2026), r4(2027);
    const std::size_t n = 1000000;
    CHECK(testutil::ks_two_sample(sample_zigzag(5, r1, n),
                                  sample_general(ChiralVector(5, 0), r2, n)) < 0.004);
    CHECK(testutil::ks_two_sample(sample_armchair(5, r3, n),
                                  sample_general(ChiralVector(5, 5), r4, n)) < 0.004);
}

TEST_CASE("limit variable is symmetric in its winding fraction") {
    SeededStream r1(5150), r2(5151);
    const auto a = sample_triangular_limit(0.0, r1, 1000000);
    const auto b = sample_triangular_limit(1.0, r2, 1000000);
    CHECK(testutil::ks_two_sample(a, b) < 0.004);

    const auto st1 = testutil::empirical_power(a, 1);
    CHECK(std::abs(st1.mean - 3.0) <= 4.0 * st1.se);
    const auto st2 = testutil::empirical_power(a, 2);
    CHECK(std::abs(st2.mean - 15.0) <= 4.0 * st2.se);
}

TEST_CASE("even-circumference zigzag places an atom at unity") {
    SeededStream rng(888);
    const auto s = sample_zigzag(6, rng, 1000000);
    std::size_t at_one = 0;
    for (double v : s)
        if (std::abs(v - 1.0) < 1e-9) ++at_one;
    const double frac = static_cast<double>(at_one) / s.size();
    CHECK(std::abs(frac - 1.0 / 6.0) < 0.002);
}

TEST_CASE("armchair samples approach the half-winding limit law") {
    std::vector<double> dists;
    SeededStream limit_rng(42);
    const auto limit = sample_triangular_limit(0.5, limit_rng, 1000000);
    for (int p : {5, 10, 25, 50}) {
        SeededStream rng(9000 + p);
        dists.push_back(
            testutil::ks_two_sample(sample_general(ChiralVector(p, p), rng, 1000000), limit));
    }
    CAPTURE(dists[0]);
    CAPTURE(dists[1]);
    CAPTURE(dists[2]);
    CAPTURE(dists[3]);
    CHECK(dists[0] > dists[1]);
    CHECK(dists[1] > dists[2]);
    CHECK(dists[2] > dists[3]);
}

TEST_CASE("sampler input validation") {
    SeededStream rng(1);
    CHECK_THROWS_AS(sample_zigzag(2, rng, 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_armchair(1, rng, 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_triangular_limit(-0.1, rng, 10), std::invalid_argument);
    CHECK_THROWS_AS(sample_triangular_limit(1.1, rng, 10), std::invalid_argument);
}

TEST_CASE("sample and histogram CSV export") {
    SeededStream rng(77);
    const auto s = sample_general(ChiralVector(5, 1), rng, 500);

    std::ostringstream os;
    dualtube::export_samples_csv(s, os);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "lambda");
    int rows = 0;
    while (std::getline(is, line)) {
        const double v = std::stod(line);
        CHECK(v >= 0.0);
        CHECK(v <= 9.0);
        ++rows;
    }
    CHECK(rows == 500);

    std::ostringstream oh;
    dualtube::export_histogram_csv(s, 16, oh);
    std::istringstream ih(oh.str());
    REQUIRE(std::getline(ih, line));
    CHECK(line == "bin_left,bin_right,count");
    long total = 0;
    int bins = 0;
    double first_left = -1.0, last_right = -1.0;
    while (std::getline(ih, line)) {
        std::istringstream row(line);
        std::string left, right, count;
        std::getline(row, left, ',');
        std::getline(row, right, ',');
        std::getline(row, count, ',');
        if (bins == 0) first_left = std::stod(left);
        last_right = std::stod(right);
        total += std::stol(count);
        ++bins;
    }
    CHECK(bins == 16);
    CHECK(total == 500);
    CHECK(first_left == 0.0);
    CHECK(last_right == 9.0);
}
