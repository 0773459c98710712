#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "channel.hpp"
#include "errors.hpp"

using namespace uwbpc;

TEST_CASE("apdp_variance endpoints and midpoint") {
    const double s = 0.37;
    CHECK(apdp_variance(1, 200, 100.0, s) == doctest::Approx(s).epsilon(1e-15));
    CHECK(apdp_variance(200, 200, 100.0, s) == doctest::Approx(s / 100.0).epsilon(1e-14));
    // odd path count: the middle tap sits exactly at ratio^(-1/2)
    CHECK(apdp_variance(100, 199, 100.0, s) == doctest::Approx(s * 0.1).epsilon(1e-14));
    CHECK(apdp_variance(1, 1, 100.0, s) == s);  // single tap, flat
}

TEST_CASE("apdp_variance rejects bad arguments") {
    CHECK_THROWS_AS(apdp_variance(0, 10, 100.0, 1.0), DomainError);
    CHECK_THROWS_AS(apdp_variance(11, 10, 100.0, 1.0), DomainError);
    CHECK_THROWS_AS(apdp_variance(1, 10, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(apdp_variance(1, 10, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(apdp_variance(1, 10, 100.0, 0.0), DomainError);
    CHECK_THROWS_AS(apdp_variance(1, 10, 100.0, -1.0), DomainError);
}

TEST_CASE("variance profile is geometric with the exact end ratio") {
    ChannelConfig cfg;
    cfg.num_users = 3;
    cfg.num_paths = 50;
    cfg.pdp_ratio = 31.7;
    cfg.seed = 5;
    const ChannelSet set = draw_channels(cfg);
    const double step = std::pow(cfg.pdp_ratio, 1.0 / (cfg.num_paths - 1));
    for (int k = 0; k < 3; ++k) {
        for (int l = 1; l < cfg.num_paths; ++l)
            CHECK(set.variances[k][l - 1] / set.variances[k][l] ==
                  doctest::Approx(step).epsilon(1e-12));
        CHECK(set.variances[k][0] / set.variances[k][cfg.num_paths - 1] ==
              doctest::Approx(cfg.pdp_ratio).epsilon(1e-12));
        CHECK(set.variances[k][0] ==
              doctest::Approx(0.3 / (set.distances[k] * set.distances[k])).epsilon(1e-15));
        CHECK(set.distances[k] >= cfg.distance_min);
        CHECK(set.distances[k] <= cfg.distance_max);
    }
}

TEST_CASE("draws are deterministic in (seed, realization, attempt)") {
    ChannelConfig cfg;
    cfg.num_users = 4;
    cfg.num_paths = 16;
    cfg.seed = 99;
    const ChannelSet a = draw_channels(cfg, 7, 0);
    const ChannelSet b = draw_channels(cfg, 7, 0);
    CHECK(a.gains == b.gains);
    CHECK(a.distances == b.distances);

    const ChannelSet c = draw_channels(cfg, 8, 0);
    CHECK(a.gains != c.gains);
    const ChannelSet d = draw_channels(cfg, 7, 1);
    CHECK(a.gains != d.gains);
    cfg.seed = 100;
    const ChannelSet e = draw_channels(cfg, 7, 0);
    CHECK(a.gains != e.gains);
}

TEST_CASE("single-path profile collapses to one flat tap") {
    ChannelConfig cfg;
    cfg.num_users = 2;
    cfg.num_paths = 1;
    cfg.seed = 3;
    const ChannelSet set = draw_channels(cfg);
    for (int k = 0; k < 2; ++k) {
        REQUIRE(set.gains[k].size() == 1);
        const double s2 = cfg.path_gain_scale / (set.distances[k] * set.distances[k]);
        CHECK(set.variances[k][0] == doctest::Approx(s2).epsilon(1e-15));
    }
}

TEST_CASE("first-tap power matches its variance over a large ensemble") {
    ChannelConfig cfg;
    cfg.num_users = 1;
    cfg.num_paths = 4;
    cfg.distance_min = cfg.distance_max = 10.0;  // pin sigma2 for the moment check
    cfg.seed = 2024;
    const double expected = cfg.path_gain_scale / 100.0;
    double sum = 0.0;
    const int n = 100000;
    for (int r = 0; r < n; ++r) {
        const ChannelSet set = draw_channels(cfg, r);
        sum += std::norm(set.gains[0][0]);
    }
    CHECK(sum / n == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("every tap's empirical power tracks the profile") {
    ChannelConfig cfg;
    cfg.num_users = 3;
    cfg.num_paths = 5;
    cfg.pdp_ratio = 50.0;
    cfg.distance_min = cfg.distance_max = 6.0;
    cfg.seed = 11;
    const int n = 20000;
    std::vector<std::vector<double>> acc(3, std::vector<double>(5, 0.0));
    ChannelSet last;
    for (int r = 0; r < n; ++r) {
        const ChannelSet set = draw_channels(cfg, r);
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 5; ++l) acc[k][l] += std::norm(set.gains[k][l]);
        last = set;
    }
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 5; ++l)
            CHECK(acc[k][l] / n == doctest::Approx(last.variances[k][l]).epsilon(0.05));
}

TEST_CASE("config validation") {
    ChannelConfig cfg;
    cfg.num_users = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.pdp_ratio = 1.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    cfg.distance_min = 5.0;
    cfg.distance_max = 2.0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = {};
    CHECK_NOTHROW(cfg.validate());
}
