#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "minstab/types.hpp"

namespace minstab {

enum class PreferenceSource { Generated, Fixture };

struct PreferenceList {
    int owner = 0;
    std::vector<int> partners;  // most-preferred first
    int cursor = 0;             // index of current effective head

    bool exhausted() const { return cursor >= static_cast<int>(partners.size()); }
    int head() const { return partners[cursor]; }
    std::vector<int> effective() const {
        return std::vector<int>(partners.begin() + cursor, partners.end());
    }
};

struct PreferenceTable {
    std::vector<PreferenceList> entries;  // ascending owner id
    PreferenceSource source = PreferenceSource::Generated;
    std::string network_name;
    int total_ses = 0;
    std::vector<int> disconnected;              // proposers with empty lists
    std::vector<int> excluded_proposers;        // dropped by the min-stage rule
    std::uint64_t comparison_count = 0;
    int tie_groups = 0;                          // groups settled by resolve_ties
    int resolution_steps = 0;
    std::map<int, int> advances;                 // owner -> cursor advances
    std::vector<int> resolution_failures;        // owners that ran out of options

    const PreferenceList* find(int owner) const;
    PreferenceList* find(int owner);
};

struct PreferenceOptions {
    // Keep the per-route repeats of the stage-by-stage expansion (the
    // catalogued lists print them); default collapses each repeat to its
    // first occurrence.
    bool keep_duplicates = false;
    // Drop proposers from the stage with strictly fewest switches, when
    // such a stage exists.
    bool exclude_min_stage = false;
};

// Proposer preference lists (one per non-final-stage switch), derived by
// expanding each switch's reachable set stage by stage: nearer partners
// first; within one stage, frontier members contribute their targets in
// first-appearance order, each ordered Straight, Up, Down, then by id
// (combined source switches list targets in ascending id order).
PreferenceTable build_preference_lists(const Network& net,
                                       const PreferenceOptions& opts = {});

struct Tie {
    int keeper = 0;     // lowest owner contesting the partner
    int loser = 0;
    int contested = 0;  // partner both currently want
    int position = 0;   // loser's index of the contested partner
};

// Ties among current effective heads, without mutating the table.
std::vector<Tie> detect_ties(const PreferenceTable& table);

// Iteratively resolves head ties: per round the group with the smallest
// contested partner id is settled, the lowest owner keeps it and every
// other contestant advances past it (skipping duplicates). Updates the
// table's tie/resolution counters. Idempotent once no ties remain.
void resolve_ties(PreferenceTable& table);

// Fixture text form: "SE <id> <partner...>" lines. parse throws
// ParseError on malformed lines; serialize(parse(x)) is byte-stable for
// normalized input.
PreferenceTable parse_preferences(const std::string& text);
std::string serialize_preferences(const PreferenceTable& table);

}  // namespace minstab
