#include <gtest/gtest.h>

#include <random>

#include "tle/json_io.hpp"

using namespace tle;

TEST(Json, DiagramRoundTrip) {
    auto g = build_graph(6);
    for (const auto& w : enumerate_fc(g)) {
        auto d = rho(w.word(), 6);
        auto text = to_json(d).dump();
        EXPECT_EQ(diagram_from_json(nlohmann::json::parse(text)), d) << w.to_string();
    }
    // unsimplified compositions carry loops and larger labels
    std::mt19937_64 rng(47);
    auto all = enumerate_fc(g);
    std::size_t with_loops = 0;
    for (int k = 0; k < 300; ++k) {
        auto d = compose(rho(all[rng() % all.size()].word(), 6), rho(all[rng() % all.size()].word(), 6));
        with_loops += d.diagram.loops().empty() ? 0 : 1;
        EXPECT_EQ(diagram_from_json(nlohmann::json::parse(to_json(d).dump())), d);
    }
    EXPECT_GT(with_loops, 0u);
}

TEST(Json, DiagramSchema) {
    auto j = to_json(rho({1, 2, 4, 0, 5}, 6));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["rank"], 6);
    EXPECT_EQ(j["matching"].size(), 12u);
    EXPECT_EQ(j["gap_faces"].size(), 12u);
    EXPECT_EQ(j["faces"][0]["orientation"], "clockwise");
}

TEST(Json, DiagramRejectsBadInput) {
    auto j = to_json(rho({1, 2}, 6));
    auto bad_schema = j;
    bad_schema["schema"] = 99;
    EXPECT_THROW(diagram_from_json(bad_schema), std::invalid_argument);
    auto bad_orient = j;
    bad_orient["faces"][0]["orientation"] = "anticlockwise";
    EXPECT_THROW(diagram_from_json(bad_orient), std::invalid_argument);
    auto bad_match = j;
    bad_match["matching"][0] = 0;
    EXPECT_THROW(diagram_from_json(bad_match), std::invalid_argument);
    auto missing = j;
    missing.erase("gap_faces");
    EXPECT_THROW(diagram_from_json(missing), std::invalid_argument);
    EXPECT_THROW(diagram_from_json(nlohmann::json::array()), std::invalid_argument);
}

TEST(Json, TraceReportRoundTrip) {
    auto g = build_graph(6);
    TraceEngine eng(g);
    for (const auto& w : enumerate_fc(g, 9)) {
        auto r = trace_report(eng, w);
        EXPECT_EQ(trace_report_from_json(nlohmann::json::parse(to_json(r).dump())), r);
    }
    auto r = trace_report(eng, normalize(g, {2, 3}));
    EXPECT_EQ(r.delta_exponent, -2);
    EXPECT_EQ(r.a_value, 1u);
    EXPECT_FALSE(r.involution);
}

TEST(Json, MuReportRoundTrip) {
    MuReport full{6, {1, 2, 4, 0, 5}, {1, 2, 3}, 1, -1, 0, 5};
    EXPECT_EQ(mu_report_from_json(nlohmann::json::parse(to_json(full).dump())), full);
    MuReport partial{7, {}, {1}, 1, -1, std::nullopt, std::nullopt};
    auto j = to_json(partial);
    EXPECT_TRUE(j["content"].is_null());
    EXPECT_EQ(mu_report_from_json(j), partial);
    j.erase("mu");
    EXPECT_THROW(mu_report_from_json(j), std::invalid_argument);
}
