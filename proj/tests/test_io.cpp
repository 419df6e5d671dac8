#include <catch2/catch_amalgamated.hpp>

#include "monopoly/runner.hpp"

using namespace monopoly;
using Catch::Approx;

TEST_CASE("rational json round trip") {
    const Rational r(4, 3);
    CHECK(rational_from_json(rational_to_json(r)) == r);
    CHECK(rational_from_json(json(7)) == Rational(7));

    // beyond 64 bits: decimal string fallback
    Rational big(Int("123456789012345678901234567890"), Int(7));
    CHECK(rational_from_json(rational_to_json(big)) == big);

    CHECK_THROWS_AS(rational_from_json(json("x")), ConfigError);
    CHECK_THROWS_AS(rational_from_json(json::object({{"num", 1}})), ConfigError);
}

TEST_CASE("matrix and set json round trips") {
    const IntMatrix b = IntMatrix::from_rows({{1, -1}, {0, 1}});
    CHECK(int_matrix_from_json(int_matrix_to_json(b)) == b);
    CHECK_THROWS_AS(int_matrix_from_json(json::parse("[[1,2],[3]]")), ConfigError);
    CHECK_THROWS_AS(int_matrix_from_json(json::parse("[[1.5]]")), ConfigError);

    auto window = ReinhardtAngularSet::blowup_window({1, 1, 0}, {1, 1, 1}, 0.0625);
    const json j = reinhardt_set_to_json(window);
    const auto back = reinhardt_set_from_json(j, 3);
    REQUIRE(back.radial().size() == window.radial().size());
    REQUIRE(back.kappa0().has_value());
    CHECK(*back.kappa0() == *window.kappa0());
    std::vector<std::complex<double>> z{{0.1, 0.0}, {0.05, 0.0}, std::polar(0.5, 0.1)};
    CHECK(back.member(z) == window.member(z));
}

TEST_CASE("analysis serialization carries the exact invariants") {
    const auto an = analyze_domain(IntMatrix::from_rows({{1, -1}, {0, 1}}));
    const json j = domain_analysis_to_json(an);
    CHECK(j["pStar"]["num"] == 4);
    CHECK(j["pStar"]["den"] == 3);
    CHECK(j["qStar"]["num"] == 4);
    CHECK(j["m"] == 1);
    CHECK(j["degree"] == 1);
    CHECK(j["trivial"] == false);

    const auto triv = analyze_domain(IntMatrix::identity(2));
    CHECK(domain_analysis_to_json(triv)["qStar"].is_null());
}

TEST_CASE("analyze runner summaries") {
    CHECK(run_analyze(json{{"preset", "hartogs"}}).summary == "p* = 4/3, q* = 4, m = 1");
    CHECK(run_analyze(json{{"preset", "example-3d"}}).summary == "p* = 4/3, q* = 4, m = 2");
    CHECK(run_analyze(json{{"B", json::parse("[[2,-1],[0,1]]")}}).summary == "p* = 3/2, q* = 3, m = 1");
    // adj([[3,-2],[0,1]]) = [[1,2],[0,3]], column sums (1,5): p* = 10/6
    CHECK(run_analyze(json{{"preset", "hartogs-generalized(3,2)"}}).summary ==
          "p* = 5/3, q* = 5/2, m = 1");

    const auto trivial = run_analyze(json{{"B", json::parse("[[1,0],[0,1]]")}});
    CHECK(trivial.summary.find("trivial polydisc") != std::string::npos);

    CHECK_THROWS_AS(run_analyze(json{{"preset", "nope"}}), ConfigError);
    CHECK_THROWS_AS(run_analyze(json::object()), ConfigError);
    // singular input surfaces with the matrix echoed
    try {
        run_analyze(json{{"B", json::parse("[[1,1],[1,1]]")}});
        FAIL("expected an error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("[[1,1],[1,1]]") != std::string::npos);
    }
}

TEST_CASE("volume runner fits the expected exponents") {
    json cfg{{"alpha", json::array({1, 1})}, {"kMin", 8}, {"kMax", 16},
             {"sPowerBand", json::array({1.96, 2.04})}, {"logPowerBand", json::array({0.9, 1.1})}};
    const auto out = run_volume(cfg);
    CHECK(out.exit_code == 0);
    REQUIRE(out.files.size() == 1);
    CHECK(out.files[0].first == "volume.csv");
    CHECK(out.files[0].second.find("FIT") != std::string::npos);

    // identical rerun: byte-for-byte
    const auto again = run_volume(cfg);
    CHECK(again.files[0].second == out.files[0].second);

    // impossible band yields the assertion exit code
    json bad = cfg;
    bad["sPowerBand"] = json::array({5.0, 6.0});
    CHECK(run_volume(bad).exit_code == 2);
}

TEST_CASE("verify runner on an empty family writes a header-only report") {
    json cfg{{"suite", "restricted"}, {"preset", "hartogs"}, {"sets", json::array()}, {"samples", 100}};
    const auto out = run_verify(cfg);
    CHECK(out.exit_code == 0);
    REQUIRE(out.files.size() == 1);
    const std::string& csv = out.files[0].second;
    for (const auto& line : {std::string("# command"), std::string("# columns")})
        CHECK(csv.find(line) != std::string::npos);
    // nothing but comments
    for (std::size_t pos = 0; pos < csv.size();) {
        const auto eol = csv.find('\n', pos);
        CHECK(csv[pos] == '#');
        pos = eol + 1;
    }
}

TEST_CASE("verify runner emits rows and a trend fit") {
    json cfg{{"suite", "polydisc"}, {"alpha", json::array({1, 1, 0})},
             {"family", json{{"kMin", 2}, {"kMax", 5}}}, {"samples", 4000},
             {"seed", 7}, {"slopeBand", json::array({-0.5, 0.5})}};
    const auto out = run_verify(cfg);
    REQUIRE(out.files.size() == 1);
    CHECK(out.files[0].second.find("FIT") != std::string::npos);
    const auto again = run_verify(cfg);
    CHECK(again.files[0].second == out.files[0].second);
}

TEST_CASE("blowup runner is reproducible and band-checked") {
    json cfg{{"preset", "example-3d"}, {"b", json::array({1, 1, 1})}, {"kMin", 4}, {"kMax", 7},
             {"truncationDegree", 12}, {"samples", 8000}, {"seed", 99},
             {"slopeBand", json::array({-2.0, 2.0})}};
    const auto out = run_blowup(cfg);
    CHECK(out.exit_code == 0);
    const auto again = run_blowup(cfg);
    CHECK(again.files[0].second == out.files[0].second);

    json bad = cfg;
    bad["slopeBand"] = json::array({10.0, 11.0});
    CHECK(run_blowup(bad).exit_code == 2);
}

TEST_CASE("project runner writes coefficient tables") {
    json cfg{{"mode", "window"}, {"preset", "example-3d"}, {"b", json::array({1, 1, 1})},
             {"s", json{{"num", 1}, {"den", 16}}}, {"truncationDegree", 8}};
    const auto out = run_project(cfg);
    REQUIRE(out.files.size() == 1);
    CHECK(out.files[0].second.find("gamma_1") != std::string::npos);

    json ind{{"mode", "indicator"}, {"alpha", json::array({2, 4})}, {"truncationDegree", 4}};
    const auto out2 = run_project(ind);
    CHECK(out2.files[0].second.find("0,0,0.1666") != std::string::npos);
}
