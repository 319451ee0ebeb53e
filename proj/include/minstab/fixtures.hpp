#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minstab/analysis.hpp"
#include "minstab/matching.hpp"
#include "minstab/preference.hpp"
#include "minstab/types.hpp"

namespace minstab {

// Built-in fixture topologies: gmin_fig4, 3dgmin_fig8, 3dcgmin_fig12 plus
// the route cut-aways gmin_fig7, 3dgmin_fig11, 3dcgmin_fig15.
std::vector<std::string> fixture_topology_names();
std::optional<Network> fixture_topology(const std::string& name);

struct PreferenceFixture {
    std::string name;          // e.g. gmin_fig5
    std::string display_name;  // e.g. GMIN
    std::string topology;      // associated fixture topology
    std::string text;          // verbatim list text
    int total_ses = 0;
    std::vector<Pairing> expected_pairs;
};

std::vector<std::string> fixture_preference_names();
std::optional<PreferenceFixture> fixture_preferences(const std::string& name);

// Externally sourced comparison rows (the non-computed networks).
std::vector<ComparisonRow> external_comparison_rows();

}  // namespace minstab
