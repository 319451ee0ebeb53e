#include <vector>

#include "doctest.h"
#include "minstab/faultsim.hpp"
#include "minstab/fixtures.hpp"
#include "minstab/topology.hpp"

using namespace minstab;

namespace {

Network gen(Family f, int n) {
    NetworkParams p;
    p.family = f;
    p.n = n;
    return build_network(p);
}

Matching fixture_matching(const std::string& name) {
    PreferenceTable t = parse_preferences(fixture_preferences(name)->text);
    resolve_ties(t);
    return select_stable_pairs(t);
}

FaultScenario scen(std::set<int> failed, int src, int dst, bool alt = true) {
    FaultScenario s;
    s.failed = std::move(failed);
    s.src = src;
    s.dst = dst;
    s.allow_alternate = alt;
    return s;
}

}  // namespace

TEST_CASE("rerouting walks the preference order as switches fail") {
    Network net = *fixture_topology("3dcgmin_fig12");
    Matching m = fixture_matching("3dcgmin_fig13");

    RerouteResult clear = reroute_on_failure(net, m, scen({}, 0, 0));
    REQUIRE(clear.routed);
    CHECK(clear.path.hops == std::vector<int>{1, 9, 17, 25});
    REQUIRE(clear.alternatives.size() == 2);
    CHECK(clear.alternatives[0].hops == std::vector<int>{1, 10, 18, 25});
    CHECK(clear.alternatives[1].hops == std::vector<int>{1, 5, 12, 18, 25});

    RerouteResult one = reroute_on_failure(net, m, scen({9}, 0, 0));
    REQUIRE(one.routed);
    CHECK(one.path.hops == std::vector<int>{1, 10, 18, 25});
    CHECK(one.path.hop_count == 3);
    REQUIRE(one.alternatives.size() == 1);
    CHECK(one.alternatives[0].hops == std::vector<int>{1, 5, 12, 18, 25});

    RerouteResult two = reroute_on_failure(net, m, scen({9, 10}, 0, 0));
    REQUIRE(two.routed);
    CHECK(two.path.hops == std::vector<int>{1, 5, 12, 18, 25});
    CHECK(two.path.used_alternate);
    CHECK(two.path.hop_count == 3);
    CHECK(two.alternatives.empty());

    RerouteResult cut = reroute_on_failure(net, m, scen({9, 10, 5}, 0, 0));
    CHECK_FALSE(cut.routed);
    CHECK(cut.detail.find("SE") != std::string::npos);

    RerouteResult no_alt = reroute_on_failure(net, m, scen({9, 10}, 0, 0, false));
    CHECK_FALSE(no_alt.routed);
}

TEST_CASE("failed endpoints are rejected") {
    Network net = *fixture_topology("3dcgmin_fig12");
    Matching m = fixture_matching("3dcgmin_fig13");
    CHECK_THROWS_AS(reroute_on_failure(net, m, scen({1}, 0, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(reroute_on_failure(net, m, scen({25}, 0, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(reroute_on_failure(net, m, scen({}, 0, 99)),
                    std::invalid_argument);
    CHECK_THROWS_AS(reroute_on_failure(net, m, scen({}, -1, 0)),
                    std::invalid_argument);
}

TEST_CASE("unroutable pairs explain themselves") {
    Network net = *fixture_topology("gmin_fig7");
    Matching m;
    RerouteResult blocked = reroute_on_failure(net, m, scen({5, 7}, 0, 0));
    CHECK_FALSE(blocked.routed);
    CHECK(blocked.detail.find("failed") != std::string::npos);
}

TEST_CASE("survivability sweeps intermediate failures") {
    Network gmin = gen(Family::Gmin, 3);
    PreferenceTable gt = build_preference_lists(gmin);
    resolve_ties(gt);
    Matching gm = select_stable_pairs(gt);
    SurvivabilityReport g1 = survivability(gmin, gm, 1, true);
    REQUIRE(g1.cells.size() == 2);
    CHECK(g1.cells[0].failures == 0);
    CHECK(g1.cells[0].scenarios == 64);
    CHECK(g1.cells[0].routed == 64);
    CHECK(g1.cells[1].scenarios == 1024);
    CHECK(g1.cells[1].routed == 976);
    CHECK_FALSE(g1.fully_survivable);

    Network tdc = gen(Family::ThreeDCGmin, 3);
    PreferenceTable ct = build_preference_lists(tdc);
    resolve_ties(ct);
    Matching cm = select_stable_pairs(ct);
    SurvivabilityReport c1 = survivability(tdc, cm, 1, true);
    CHECK(c1.fully_survivable);
    for (const auto& cell : c1.cells) CHECK(cell.ratio == 1.0);

    // Alternate links only ever help.
    SurvivabilityReport c0 = survivability(tdc, cm, 1, false);
    REQUIRE(c0.cells.size() == c1.cells.size());
    for (size_t i = 0; i < c0.cells.size(); ++i) {
        CHECK(c0.cells[i].scenarios == c1.cells[i].scenarios);
        CHECK(c0.cells[i].routed <= c1.cells[i].routed);
    }
}

TEST_CASE("survivability budget guard") {
    Network net = gen(Family::Gmin, 3);
    Matching m;
    CHECK_THROWS_AS(survivability(net, m, -1, true), std::invalid_argument);
    CHECK_THROWS_AS(survivability(net, m, 3, true), std::invalid_argument);
    Network big = gen(Family::Gmin, 5);
    CHECK_THROWS_AS(survivability(big, m, 1, true), std::invalid_argument);
}

TEST_CASE("scenario files round-trip") {
    std::string canonical =
        "minstab-scenario 1\n"
        "fixture 3dcgmin_fig12\n"
        "failed 9 10\n"
        "src 0\n"
        "dst 0\n"
        "alternate on\n";
    ScenarioDoc doc = parse_scenario(canonical);
    CHECK(doc.fixture == "3dcgmin_fig12");
    CHECK_FALSE(doc.has_params);
    CHECK(doc.scenario.failed == std::set<int>{9, 10});
    CHECK(doc.scenario.src == 0);
    CHECK(doc.scenario.dst == 0);
    CHECK(doc.scenario.allow_alternate);
    CHECK(serialize_scenario(doc) == canonical);

    std::string generated =
        "minstab-scenario 1\n"
        "network 3dcgmin 3 0\n"
        "failed\n"
        "src 2\n"
        "dst 5\n"
        "alternate off\n";
    ScenarioDoc gdoc = parse_scenario(generated);
    CHECK(gdoc.fixture.empty());
    CHECK(gdoc.has_params);
    CHECK(gdoc.params.family == Family::ThreeDCGmin);
    CHECK(gdoc.params.n == 3);
    CHECK_FALSE(gdoc.scenario.allow_alternate);
    CHECK(serialize_scenario(gdoc) == generated);
}

TEST_CASE("scenario parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_scenario(""), ParseError);
    CHECK_THROWS_AS(parse_scenario("bogus 1\n"), ParseError);
    CHECK_THROWS_AS(
        parse_scenario("minstab-scenario 1\nfixture a\nsrc 0\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_scenario("minstab-scenario 1\nsrc 0\ndst 0\n"),
        ParseError);
    CHECK_THROWS_AS(parse_scenario("minstab-scenario 1\nfixture a\nnetwork gmin "
                                   "3\nsrc 0\ndst 0\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_scenario(
            "minstab-scenario 1\nnetwork warp 3\nsrc 0\ndst 0\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_scenario(
            "minstab-scenario 1\nfixture a\nsrc 0\ndst 0\nwhat 1\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_scenario(
            "minstab-scenario 1\nfixture a\nsrc 0\ndst 0\nalternate maybe\n"),
        ParseError);
}
