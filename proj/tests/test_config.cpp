#include <doctest.h>

#include "smi/config.hpp"
#include "test_util.hpp"

using namespace smi;

TEST_CASE("torus reduction and fraction points") {
    const json j{{"torus", {{"m", 15}, {"n", 12}}},
                 {"signals", {{"w", {{"type", "delta"}, {"at", "1/2"}}}}}};
    const ProblemConfig cfg = parse_config(j);
    CHECK(cfg.group.factors() == std::vector<std::int64_t>({60}));
    CHECK(cfg.F_generators == std::vector<Element>({Element({4})}));
    CHECK(cfg.Delta_generators == std::vector<Element>({Element({12})}));
    REQUIRE(cfg.find_signal("w") != nullptr);
    CHECK(std::abs((*cfg.find_signal("w"))[30] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(cfg.generator_names == std::vector<std::string>({"w"}));

    // negative numerators wrap around
    const json j2{{"torus", {{"m", 4}, {"n", 4}}},
                  {"signals", {{"w", {{"type", "delta"}, {"at", "-1/4"}}}}}};
    CHECK(std::abs((*parse_config(j2).find_signal("w"))[3] - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("explicit group form with signal variants") {
    const json j{{"group", {2, 3}},
                 {"F_generators", {json::array({1, 0})}},
                 {"Delta_generators", {json::array({0, 1})}},
                 {"signals",
                  {{"a", {{"type", "indicator"}, {"points", {json::array({0, 0}), json::array({1, 2})}}}},
                   {"b",
                    {{"type", "vector"},
                     {"values", {1, 0, json::array({0.0, 1.0}), 0, 0, 0}}}}}},
                 {"generators", {"b"}},
                 {"tolerances", {{"tau", 1e-7}, {"epsilon", 1e-6}}}};
    const ProblemConfig cfg = parse_config(j);
    CHECK(cfg.group.order() == 6);
    CHECK((*cfg.find_signal("a"))[0] == cplx(1.0, 0.0));
    CHECK((*cfg.find_signal("a"))[5] == cplx(1.0, 0.0));
    CHECK((*cfg.find_signal("b"))[2] == cplx(0.0, 1.0));
    CHECK(cfg.generator_names == std::vector<std::string>({"b"}));
    CHECK(cfg.tau == 1e-7);
    CHECK(cfg.epsilon == 1e-6);
}

TEST_CASE("config error paths") {
    CHECK_THROWS_AS(parse_config(json::array()), Error);
    CHECK_THROWS_AS(parse_config(json{{"signals", json::object()}}), Error);
    CHECK_THROWS_AS(parse_config(json{{"group", {6}}, {"F_generators", {2}}}), Error);
    CHECK_THROWS_AS(parse_config(json{{"group", {6}},
                                      {"F_generators", {2}},
                                      {"Delta_generators", {3}},
                                      {"generators", {"nope"}}}),
                    Error);
    CHECK_THROWS_AS(parse_config(json{{"torus", {{"m", 0}, {"n", 3}}}}), Error);
    // denominator must divide the reduced modulus
    CHECK_THROWS_AS(parse_config(json{{"torus", {{"m", 4}, {"n", 4}}},
                                      {"signals", {{"w", {{"type", "delta"}, {"at", "1/3"}}}}}}),
                    Error);
    // rank mismatch and bad signal shapes
    CHECK_THROWS_AS(parse_config(json{{"group", {2, 3}},
                                      {"F_generators", {1}},
                                      {"Delta_generators", {json::array({0, 1})}}}),
                    Error);
    CHECK_THROWS_AS(parse_config(json{{"group", {6}},
                                      {"F_generators", {2}},
                                      {"Delta_generators", {3}},
                                      {"signals", {{"w", {{"type", "vector"}, {"values", {1, 2}}}}}}}),
                    Error);
    CHECK_THROWS_AS(parse_config(json{{"group", {6}},
                                      {"F_generators", {2}},
                                      {"Delta_generators", {3}},
                                      {"tolerances", {{"tau", -1.0}}}}),
                    Error);
    CHECK_THROWS_AS(load_config("/nonexistent/path.json"), Error);
}

TEST_CASE("echo round-trips to an equivalent configuration") {
    for (const json& j : {e60_config_json(),
                          json{{"group", {2, 3}},
                               {"F_generators", {json::array({1, 0})}},
                               {"Delta_generators", {json::array({0, 1})}},
                               {"signals", {{"a", {{"type", "delta"}, {"at", json::array({1, 2})}}}}}}}) {
        const ProblemConfig cfg = parse_config(j);
        const ProblemConfig back = parse_config(cfg.echo);
        CHECK(back.group == cfg.group);
        CHECK(back.F_generators == cfg.F_generators);
        CHECK(back.Delta_generators == cfg.Delta_generators);
        CHECK(back.generator_names == cfg.generator_names);
        CHECK(back.tau == cfg.tau);
        CHECK(back.epsilon == cfg.epsilon);
        REQUIRE(back.signals.size() == cfg.signals.size());
        for (std::size_t i = 0; i < cfg.signals.size(); ++i) {
            CHECK(back.signals[i].first == cfg.signals[i].first);
            CHECK((back.signals[i].second - cfg.signals[i].second).cwiseAbs().maxCoeff() <
                  1e-15);
        }
        CHECK(back.sections.f_mod_e == cfg.sections.f_mod_e);
        CHECK(back.echo == cfg.echo);  // normalization is a fixed point
    }
}

TEST_CASE("worked scenario builds with the configured sections") {
    const Scenario sc = build_scenario(parse_config(e60_config_json()));
    CHECK(sc.ctx.group.order() == 60);
    CHECK(sc.ctx.sec_f_mod_e.reps() == std::vector<std::int64_t>({0, 12, 24, 36, 48}));
    CHECK(sc.ctx.sec_g_mod_dstar.reps() == std::vector<std::int64_t>({0, 48, 36, 24, 12}));
    CHECK(sc.ctx.sec_estar_mod_delta.reps() == std::vector<std::int64_t>({0, 3, 6, 9}));
    REQUIRE(sc.generators.size() == 1);
    CHECK(sc.generators[0].weight == sc.ctx.weights.w_G);
    CHECK(sc.find_signal("delta30") != nullptr);
    CHECK(sc.find_signal("missing") == nullptr);
}
