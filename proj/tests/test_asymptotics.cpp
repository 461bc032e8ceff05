#include <cmath>

#include "cperm/asymptotics.hpp"
#include "cperm/moments.hpp"
#include "cperm/rng.hpp"
#include "doctest.h"

using namespace cperm;

TEST_CASE("theoretical moments: pinned values") {
    const auto des83 = theoretical_moments(Statistic::des(), 8, 3);
    CHECK(des83.mu == make_rational(25, 6));
    CHECK(des83.sigma_sq == make_rational(3, 4));

    CHECK(theoretical_moments(Statistic::maj(), 2, 1).mu == make_rational(1, 2));
    CHECK(theoretical_moments(Statistic::fmaj(), 2, 2).mu == make_rational(2 * (2 * 2 + 2 - 2), 4));
    CHECK_THROWS_AS(theoretical_moments(Statistic::col(), 3, 2), invalid_argument_error);
}

TEST_CASE("theoretical moments agree with enumeration for n <= 4, r <= 3") {
    for (int n = 2; n <= 4; ++n)
        for (int r = 1; r <= 3; ++r)
            for (const auto stat : {Statistic::des(), Statistic::maj(), Statistic::fmaj()}) {
                const auto tm = theoretical_moments(stat, n, r);
                const auto domain = Domain::group(n, r);
                const Rational m1 = moment_enumerated(stat, domain, 1);
                const Rational m2 = moment_enumerated(stat, domain, 2);
                CHECK(m1 == tm.mu);
                CHECK(m2 - m1 * m1 == tm.sigma_sq);
            }
}

TEST_CASE("sigma_sq is positive for n >= 2") {
    for (int n = 2; n <= 30; ++n)
        for (int r = 1; r <= 4; ++r)
            for (const auto stat : {Statistic::des(), Statistic::maj(), Statistic::fmaj()})
                CHECK(theoretical_moments(stat, n, r).sigma_sq > 0);
}

TEST_CASE("normal cdf sanity") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-9));
    CHECK(normal_cdf(-8.0) < 1e-14);
}

TEST_CASE("ks distance: draws from the normal itself score < 0.01 at N = 1e5") {
    SplitRng rng(20260810);
    std::vector<double> samples;
    samples.reserve(100000);
    for (int i = 0; i < 100000; ++i) {
        // Box-Muller.
        const double u1 = rng.uniform01();
        const double u2 = rng.uniform01();
        const double z = std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * M_PI * u2);
        samples.push_back(z);
    }
    CHECK(ks_distance(samples) < 0.01);
}

TEST_CASE("ks distance of a point mass is at least 1/2") {
    CHECK(ks_distance({0.0}) >= 0.5);
    CHECK(ks_distance({3.0}) >= 0.5);
}

TEST_CASE("identity class samples are constant") {
    const auto lambda = RPartition::make(2, {{1, 1, 1, 1}, {}});
    const auto summary = mc_class_sample(Statistic::des(), lambda, 500, 99);
    CHECK(summary.raw_mean == 0.0);
    CHECK(summary.raw_variance == 0.0);
    CHECK(summary.ks > 0.4);
}

TEST_CASE("monte carlo matches the exact class mean on S_{6,2}") {
    // Exact-moment bridge: the sampled mean converges to the enumerated one.
    const auto lambda = RPartition::make(2, {{6}, {}});
    const Rational exact = moment_enumerated(Statistic::des(), Domain::conjugacy_class(lambda), 1);
    const std::uint64_t N = 40000;
    const auto summary = mc_class_sample(Statistic::des(), lambda, N, 4242);
    const double sigma = std::sqrt(theoretical_moments(Statistic::des(), 6, 2).sigma_sq.get_d());
    CHECK(std::abs(summary.raw_mean - exact.get_d()) <
          5.0 * sigma / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("standardized moments on a 20-cycle class (des)") {
    const auto lambda = RPartition::make(2, {{20}, {}});
    const std::uint64_t N = 20000;
    const auto summary = mc_class_sample(Statistic::des(), lambda, N, 77);
    CHECK(std::abs(summary.mean) < 4.0 / std::sqrt(static_cast<double>(N)));
    CHECK(std::abs(summary.variance - 1.0) < 10.0 / std::sqrt(static_cast<double>(N)));
    // des is integer-valued, so the sup distance to the continuous normal
    // is floored at phi(0)/(2 sigma) ~= 0.151 for n = 20 no matter how many
    // samples are drawn; only the floor plus sampling noise is asserted.
    CHECK(summary.ks < 0.151 + 1.36 / std::sqrt(static_cast<double>(N)) + 0.01);
    const auto larger = mc_class_sample(Statistic::des(), RPartition::make(2, {{60}, {}}), N, 77);
    CHECK(larger.ks < summary.ks);
}

TEST_CASE("samples are reproducible and independent of draw interleaving") {
    const auto lambda = RPartition::make(3, {{}, {12}, {}});
    const auto a = mc_class_sample(Statistic::fmaj(), lambda, 2000, 31337);
    const auto b = mc_class_sample(Statistic::fmaj(), lambda, 2000, 31337);
    CHECK(a.raw_mean == b.raw_mean);
    CHECK(a.ks == b.ks);
    const auto c = mc_class_sample(Statistic::fmaj(), lambda, 2000, 31338);
    CHECK(a.raw_mean != c.raw_mean);
}

TEST_CASE("histogram bins cover the standardized samples") {
    const auto lambda = RPartition::make(2, {{10}, {}});
    const auto summary = mc_class_sample(Statistic::des(), lambda, 5000, 5, 20);
    REQUIRE(summary.histogram.size() == 20);
    double total = 0;
    for (const auto& [center, count] : summary.histogram) total += count;
    CHECK(total == 5000.0);
}
