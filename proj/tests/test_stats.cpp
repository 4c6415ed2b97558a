#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tubal/rng.hpp"
#include "tubal/stats.hpp"

using namespace tubal;

TEST_CASE("normal quantile reference values") {
    // Reference values computed independently (SciPy norm.ppf).
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-9));
    CHECK(normal_quantile(0.95) == doctest::Approx(1.6448536269514722).epsilon(1e-9));
    CHECK(normal_quantile(0.995) == doctest::Approx(2.5758293035489004).epsilon(1e-9));
    CHECK(normal_quantile(0.75) == doctest::Approx(0.6744897501960817).epsilon(1e-9));
    CHECK(normal_quantile(1e-9) == doctest::Approx(-5.9978070150076865).epsilon(1e-9));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
    CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("quantile and cdf are inverse to each other") {
    for (double p : {0.001, 0.025, 0.2, 0.5, 0.8, 0.975, 0.999})
        CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-12));
    CHECK(normal_cdf(1.5) == doctest::Approx(0.9331927987311419).epsilon(1e-12));
}

TEST_CASE("KS distance of exact standard normal draws is small") {
    Rng rng(123);
    std::vector<double> xs(10000);
    for (auto& x : xs) x = rng.gaussian();
    // 99th percentile of the KS sampling distribution is about 1.63/sqrt(N).
    CHECK(ks_normal(xs) < 1.63 / std::sqrt(10000.0));
}

TEST_CASE("KS distance of a constant sample is at least 1/2") {
    std::vector<double> xs(100, 0.0);
    CHECK(ks_normal(xs) >= 0.5);
}

TEST_CASE("KS detects a shifted mean") {
    Rng rng(321);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = 0.5 + rng.gaussian();
    const SampleMoments m = sample_moments(xs);
    CHECK(m.mean == doctest::Approx(0.5).epsilon(0.05));
    CHECK(ks_normal(xs) > 0.1);
}

TEST_CASE("sample moments") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const SampleMoments m = sample_moments(xs);
    CHECK(m.mean == doctest::Approx(2.5));
    CHECK(m.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("median handles odd and even lengths") {
    CHECK(median({3.0, 1.0, 2.0}) == doctest::Approx(2.0));
    CHECK(median({4.0, 1.0, 2.0, 3.0}) == doctest::Approx(2.5));
}

TEST_CASE("pearson correlation") {
    const std::vector<double> xs{1, 2, 3, 4, 5};
    const std::vector<double> ys{2, 4, 6, 8, 10};
    CHECK(pearson(xs, ys) == doctest::Approx(1.0));
    const std::vector<double> zs{5, 4, 3, 2, 1};
    CHECK(pearson(xs, zs) == doctest::Approx(-1.0));
    CHECK(pearson(xs, std::vector<double>(5, 7.0)) == 0.0);
}

TEST_CASE("rng streams are deterministic and distinct") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
    bool any_diff = false;
    Rng a2(42);
    for (int i = 0; i < 16; ++i) any_diff |= (a2.next_u64() != c.next_u64());
    CHECK(any_diff);
    Rng d1 = Rng(7).derive(1), d2 = Rng(7).derive(2);
    bool stream_diff = false;
    for (int i = 0; i < 16; ++i) stream_diff |= (d1.next_u64() != d2.next_u64());
    CHECK(stream_diff);
}

TEST_CASE("rng bounded draws are in range and roughly uniform") {
    Rng rng(99);
    std::vector<int> counts(10, 0);
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const auto v = rng.below(10);
        REQUIRE(v < 10);
        ++counts[static_cast<std::size_t>(v)];
    }
    for (int c : counts) {
        CHECK(c > n / 10 - 600);
        CHECK(c < n / 10 + 600);
    }
}

TEST_CASE("rng gaussian moments") {
    Rng rng(7);
    std::vector<double> xs(200000);
    for (auto& x : xs) x = rng.gaussian();
    const SampleMoments m = sample_moments(xs);
    CHECK(std::abs(m.mean) < 0.01);
    CHECK(m.stddev == doctest::Approx(1.0).epsilon(0.01));
}
