#pragma once

#include <string>
#include <vector>

#include "minstab/matching.hpp"
#include "minstab/preference.hpp"
#include "minstab/types.hpp"

namespace minstab {

enum class StabilityClass { HighlyStable, IntermediateStable, LowStable };

std::string to_string(StabilityClass c);

// By neglected-switch count: 0 -> Highly, 1-2 -> Intermediate, >= 3 -> Low.
StabilityClass classify(int neglected);

struct StabilityReport {
    std::string name;
    int ties = 0;
    int optimal_pairs = 0;
    int total_ses = 0;
    int max_path_length = 0;
    int neglected = 0;
    StabilityClass status = StabilityClass::HighlyStable;
    int proposer_count = 0;
    std::vector<std::string> notes;
};

// Full pipeline over a preference table: count raw head ties, resolve,
// match greedily, count neglected switches (Reported policy), and take
// the longest route over all terminal pairs of the associated network.
StabilityReport stability_report(const Network& net, const PreferenceTable& table,
                                 const std::string& name);

struct ComparisonRow {
    std::string name;
    int ties = 0;
    int optimal_pairs = 0;
    int total_ses = 0;
    int max_path_length = 0;
    int neglected = 0;
    StabilityClass status = StabilityClass::HighlyStable;
    bool regular = true;
};

struct ComparisonTable {
    std::vector<ComparisonRow> rows;  // insertion order
    std::string summary;              // stability-by-regularity rollup
};

// Combines externally sourced rows with computed reports; recomputes each
// status from its neglected count and rejects duplicate names.
ComparisonTable build_comparison(const std::vector<ComparisonRow>& external,
                                 const std::vector<StabilityReport>& computed);

// CSV: name,ties,optimal_pairs,total_ses,max_pl,neglected,status
std::string comparison_to_csv(const ComparisonTable& table);
ComparisonTable comparison_from_csv(const std::string& csv);

// Fixed-width text rendering plus summary line.
std::string comparison_to_text(const ComparisonTable& table);

}  // namespace minstab
