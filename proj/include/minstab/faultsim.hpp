#pragma once

#include <set>
#include <string>
#include <vector>

#include "minstab/matching.hpp"
#include "minstab/routing.hpp"
#include "minstab/types.hpp"

namespace minstab {

struct FaultScenario {
    std::set<int> failed;  // switch ids out of service
    int src = 0;           // source terminal
    int dst = 0;           // destination terminal
    bool allow_alternate = true;
};

struct RerouteResult {
    bool routed = false;
    Path path;                       // valid when routed
    std::vector<Path> alternatives;  // remaining candidates, preference order
    std::string detail;              // failure explanation when !routed
};

// Picks the surviving route the source switch prefers: candidates that avoid
// failed switches, led by the one through the source's matched partner, then
// ordered by the source's preference rank of their first forward hop, fewest
// non-straight steps, and lexicographic hops. Alternate-link routes are
// considered only when the scenario allows them. Throws std::invalid_argument
// when a failed switch is a path endpoint.
RerouteResult reroute_on_failure(const Network& net, const Matching& matching,
                                 const FaultScenario& scenario);

struct SurvivabilityCell {
    int failures = 0;         // failure-set size
    long long scenarios = 0;  // (terminal pair, failure set) combinations
    long long routed = 0;
    double ratio = 0.0;
};

struct SurvivabilityReport {
    std::vector<SurvivabilityCell> cells;  // one per failure count 0..k
    bool fully_survivable = false;         // every cell routed everything
};

// Exhaustive sweep over failure sets of intermediate-stage switches
// (stages strictly between first and last) up to size k, across all terminal
// pairs, counting scenarios reroute_on_failure can serve. Guarded to k <= 2
// and n <= 4; larger requests throw std::invalid_argument naming the bound.
SurvivabilityReport survivability(const Network& net, const Matching& matching,
                                  int k, bool allow_alternate);

// Scenario file: names the network (fixture or generated family), the failed
// switches, the terminal pair, and the alternate-link flag.
struct ScenarioDoc {
    std::string fixture;  // non-empty when a fixture topology is referenced
    NetworkParams params; // consulted when fixture is empty
    bool has_params = false;
    FaultScenario scenario;
};

ScenarioDoc parse_scenario(const std::string& text);
std::string serialize_scenario(const ScenarioDoc& doc);

}  // namespace minstab
