#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "scenario.hpp"
#include "table.hpp"

using namespace uwbpc;

TEST_CASE("the default scenario carries the stock parameters") {
    const ScenarioDoc doc = parse_scenario(default_scenario_text());
    CHECK(doc.channel.num_users == 10);
    CHECK(doc.channel.num_paths == 200);
    CHECK(doc.channel.pdp_ratio == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(doc.channel.distance_min == 3.0);
    CHECK(doc.channel.distance_max == 30.0);
    CHECK(doc.channel.path_gain_scale == 0.3);
    CHECK(doc.game.total_bits == 100);
    CHECK(doc.game.info_bits == 100);
    CHECK(doc.game.rate == 1.0e5);
    CHECK(doc.game.noise_power == 5.0e-16);
    CHECK(doc.game.max_power == 1.0e-6);
    CHECK(doc.rake.finger_fraction == 1.0);
    CHECK(doc.rake.chips_per_frame == 50);
    CHECK(doc.rake.processing_gain == 250);
    CHECK(doc.run.realizations == 2000);
    CHECK(doc.run.seed == 1);
}

TEST_CASE("an empty document is a complete scenario") {
    const ScenarioDoc doc = parse_scenario("{}");
    CHECK(doc.channel.num_users == 10);
    CHECK(doc.game.noise_power == 5.0e-16);
}

TEST_CASE("partial sections override only their keys") {
    const ScenarioDoc doc =
        parse_scenario(R"({"channel": {"num_users": 4, "apdp_ratio_db": 10.0}})");
    CHECK(doc.channel.num_users == 4);
    CHECK(doc.channel.pdp_ratio == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(doc.channel.num_paths == 200);
}

TEST_CASE("unknown keys are rejected everywhere") {
    CHECK_THROWS_AS(parse_scenario(R"({"channels": {}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"channel": {"users": 4}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"game": {"sigma2": 1e-16}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"run": {"seeds": [1]}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"rake": {"fingers": 3}})"), ParseError);
}

TEST_CASE("syntax errors carry line numbers") {
    try {
        parse_scenario("{\n  \"channel\": {\n    \"num_users\": ,\n  }\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("semantic errors are parse errors") {
    CHECK_THROWS_AS(parse_scenario(R"({"channel": {"num_users": 0}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"game": {"info_bits": 200}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"run": {"modes": ["fdma"]}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"run": {"realizations": 0}})"), ParseError);
    CHECK_THROWS_AS(parse_scenario(R"({"channel": {"num_users": "ten"}})"), ParseError);
}

TEST_CASE("missing files are reported") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), ParseError);
}

TEST_CASE("base_scenario applies the access mode") {
    const ScenarioDoc doc = parse_scenario("{}");
    const Scenario uwb = doc.base_scenario(AccessMode::uwb);
    CHECK(uwb.rake.chips_per_frame == 50);
    const Scenario cdma = doc.base_scenario(AccessMode::cdma);
    CHECK(cdma.rake.chips_per_frame == 1);
    CHECK(cdma.master_seed == doc.run.seed);
}

TEST_CASE("grid parsing") {
    const std::vector<std::string> axes{"lambda_db", "rho", "beta"};
    SUBCASE("comma lists") {
        const auto grid = parse_grid("beta=0,0.25,1.0", axes);
        REQUIRE(grid.count("beta"));
        CHECK(grid.at("beta") == std::vector<double>{0.0, 0.25, 1.0});
    }
    SUBCASE("inclusive ranges") {
        const auto grid = parse_grid("rho=0.05:1:0.05", axes);
        REQUIRE(grid.count("rho"));
        CHECK(grid.at("rho").size() == 20);
        CHECK(grid.at("rho").front() == doctest::Approx(0.05));
        CHECK(grid.at("rho").back() == doctest::Approx(1.0));
    }
    SUBCASE("multiple axes") {
        const auto grid = parse_grid("lambda_db=10,20;rho=1.0", axes);
        CHECK(grid.size() == 2);
    }
    SUBCASE("empty spec means no axes") { CHECK(parse_grid("", axes).empty()); }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_grid("gamma=1", axes), ParseError);
        CHECK_THROWS_AS(parse_grid("rho", axes), ParseError);
        CHECK_THROWS_AS(parse_grid("rho=a,b", axes), ParseError);
        CHECK_THROWS_AS(parse_grid("rho=1:0:0.1", axes), ParseError);
        CHECK_THROWS_AS(parse_grid("rho=0:1:0", axes), ParseError);
        CHECK_THROWS_AS(parse_grid("rho=1;rho=2", axes), ParseError);
        CHECK_THROWS_AS(parse_grid("rho=0.1:1", axes), ParseError);
    }
}

TEST_CASE("dB conversion round trip") {
    CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(db_to_linear(linear_to_db(31.7)) == doctest::Approx(31.7).epsilon(1e-12));
}

TEST_CASE("tables serialize with exact round-trip formatting") {
    Table t({"a", "b", "mode"});
    t.add_row({Table::number(1.0 / 3.0), Table::integer(42), Table::text("uwb")});
    const std::string csv = t.to_csv();
    CHECK(csv == "a,b,mode\n0.33333333333333331,42,uwb\n");
    CHECK(t.rows() == 1);
    CHECK(t.cols() == 3);
    CHECK(t.at(0, 0).numeric);
    CHECK_FALSE(t.at(0, 2).numeric);
    const double parsed = std::stod(t.at(0, 0).text);
    CHECK(parsed == 1.0 / 3.0);
    CHECK_THROWS_AS(t.add_row({Table::number(1.0)}), DomainError);
}
