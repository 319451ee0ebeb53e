#include <algorithm>
#include <set>

#include "doctest.h"
#include "minstab/fixtures.hpp"
#include "minstab/matching.hpp"
#include "staged_random.hpp"

using namespace minstab;

namespace {

std::vector<std::pair<int, int>> pair_list(const Matching& m) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : m.pairs) out.emplace_back(p.proposer, p.acceptor);
    return out;
}

std::vector<std::pair<int, int>> pair_list(const std::vector<Pairing>& pairs) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : pairs) out.emplace_back(p.proposer, p.acceptor);
    return out;
}

std::uint64_t total_length(const PreferenceTable& t) {
    std::uint64_t sum = 0;
    for (const auto& e : t.entries) sum += e.partners.size();
    return sum;
}

}  // namespace

TEST_CASE("tie-free catalogued lists pair off directly") {
    auto pf = fixture_preferences("gmin_fig5");
    PreferenceTable t = parse_preferences(pf->text);
    Matching m = select_stable_pairs(t);
    CHECK(pair_list(m) == pair_list(pf->expected_pairs));
    CHECK(m.unmatched.empty());
    CHECK(m.proposal_count <= total_length(t));
    CHECK(m.partner_of_proposer(1) == 5);
    CHECK(m.proposer_of_acceptor(5) == 1);
    CHECK(m.partner_of_proposer(21) == 0);
    CHECK(m.proposer_of_acceptor(6) == 0);
    CHECK(verify_stability(t, m).empty());
    CHECK(neglected_pairs(t, m, NeglectPolicy::AnyRole).empty());
    CHECK(neglected_pairs(t, m, NeglectPolicy::Reported).empty());
    CHECK(to_string(m).substr(0, 14) == "(1, 5), (2, 7)");
    CHECK(m.log.size() == m.proposal_count);
}

TEST_CASE("tied lists refuse to pair until resolved") {
    auto pf = fixture_preferences("3dgmin_fig9");
    PreferenceTable t = parse_preferences(pf->text);
    CHECK_THROWS_AS(select_stable_pairs(t), std::domain_error);
    resolve_ties(t);
    Matching m = select_stable_pairs(t);
    CHECK(pair_list(m) == pair_list(pf->expected_pairs));
    CHECK(m.unmatched.empty());
    CHECK(verify_stability(t, m).empty());
    CHECK(neglected_pairs(t, m, NeglectPolicy::AnyRole).empty());
    CHECK(neglected_pairs(t, m, NeglectPolicy::Reported) ==
          std::vector<int>{16, 18});
}

TEST_CASE("cyclic fixture pairs every proposer") {
    auto pf = fixture_preferences("3dcgmin_fig13");
    PreferenceTable t = parse_preferences(pf->text);
    resolve_ties(t);
    Matching m = select_stable_pairs(t);
    REQUIRE(m.pairs.size() == 24);
    for (const auto& p : m.pairs) CHECK(p.acceptor == p.proposer + 8);

    // The catalogued 22 pairs are a strict subset; the surplus is pinned.
    auto got = pair_list(m);
    std::set<std::pair<int, int>> got_set(got.begin(), got.end());
    for (const auto& p : pf->expected_pairs)
        CHECK(got_set.count({p.proposer, p.acceptor}) == 1);
    auto expected_list = pair_list(pf->expected_pairs);
    std::set<std::pair<int, int>> expected(expected_list.begin(),
                                           expected_list.end());
    std::vector<std::pair<int, int>> surplus;
    for (const auto& p : got)
        if (!expected.count(p)) surplus.push_back(p);
    CHECK(surplus == std::vector<std::pair<int, int>>{{23, 31}, {24, 32}});

    CHECK(verify_stability(t, m).empty());
    CHECK(neglected_pairs(t, m, NeglectPolicy::Reported).empty());
}

TEST_CASE("proposers whose list runs out stay unmatched") {
    PreferenceTable t = parse_preferences("SE 1 5\nSE 2 5\n");
    resolve_ties(t);
    Matching m = select_stable_pairs(t);
    CHECK(pair_list(m) == std::vector<std::pair<int, int>>{{1, 5}});
    CHECK(m.unmatched == std::vector<int>{2});
    CHECK(verify_stability(t, m).empty());
    auto reported = neglected_pairs(t, m, NeglectPolicy::Reported);
    CHECK(std::find(reported.begin(), reported.end(), 2) != reported.end());
    REQUIRE(!m.log.empty());
    CHECK(m.log.back().event == ProposalEvent::Exhausted);
}

TEST_CASE("verify_stability flags a planted blocking pair") {
    PreferenceTable t = parse_preferences("SE 1 6 5\nSE 2 5 6\n");
    Matching good = select_stable_pairs(t);
    CHECK(pair_list(good) == std::vector<std::pair<int, int>>{{1, 6}, {2, 5}});
    CHECK(verify_stability(t, good).empty());

    Matching bad;
    bad.pairs = {{1, 5}, {2, 6}};
    auto blocking = verify_stability(t, bad);
    REQUIRE(blocking.size() == 1);
    CHECK(blocking[0].proposer == 1);
    CHECK(blocking[0].acceptor == 6);

    // An unmatched proposer facing a free listed partner also blocks.
    PreferenceTable single = parse_preferences("SE 1 5\n");
    Matching idle;
    idle.unmatched = {1};
    auto b = verify_stability(single, idle);
    REQUIRE(b.size() == 1);
    CHECK(b[0].proposer == 1);
    CHECK(b[0].acceptor == 5);
}

TEST_CASE("greedy matchings on random staged networks are stable") {
    for (unsigned seed = 1; seed <= 10; ++seed) {
        Network net = make_random_staged(seed);
        PreferenceTable t = build_preference_lists(net);
        resolve_ties(t);
        Matching m = select_stable_pairs(t);
        CHECK(verify_stability(t, m).empty());
        CHECK(m.proposal_count <= total_length(t));
        // Engaged proposers plus unmatched ones cover every entry.
        CHECK(m.pairs.size() + m.unmatched.size() == t.entries.size());
        auto any = neglected_pairs(t, m, NeglectPolicy::AnyRole);
        auto rep = neglected_pairs(t, m, NeglectPolicy::Reported);
        for (int id : any)
            CHECK(std::find(rep.begin(), rep.end(), id) != rep.end());
    }
}
