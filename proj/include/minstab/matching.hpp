#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minstab/preference.hpp"

namespace minstab {

struct Pairing {
    int proposer = 0;
    int acceptor = 0;
};

enum class ProposalEvent { Accepted, Rejected, Exhausted };

struct ProposalStep {
    int proposer = 0;
    int target = 0;  // 0 when exhausted
    ProposalEvent event = ProposalEvent::Accepted;
};

struct Matching {
    std::vector<Pairing> pairs;      // proposer-ascending
    std::vector<int> unmatched;      // proposers whose list ran out
    std::uint64_t proposal_count = 0;
    std::vector<ProposalStep> log;

    int partner_of_proposer(int proposer) const;  // 0 if none
    int proposer_of_acceptor(int acceptor) const; // 0 if none
};

// Greedy serial proposals: proposers in ascending id order, each walks its
// effective list and takes the first partner not yet engaged as an
// acceptor. Throws std::domain_error when two effective heads collide
// (run resolve_ties first).
Matching select_stable_pairs(const PreferenceTable& table);

struct BlockingPair {
    int proposer = 0;
    int acceptor = 0;
};

// Blocking pairs under implicit acceptor preference for lower proposer
// ids. Empty result == stable matching.
std::vector<BlockingPair> verify_stability(const PreferenceTable& table,
                                           const Matching& m);

enum class NeglectPolicy { AnyRole, Reported };

// AnyRole: members of the preference universe appearing in no pair in
// either role. Reported additionally includes excluded proposers,
// resolution failures, and owners pushed two or more places off their
// original list by tie resolution.
std::vector<int> neglected_pairs(const PreferenceTable& table, const Matching& m,
                                 NeglectPolicy policy);

// "(a, b), (c, d), ..." rendering.
std::string to_string(const Matching& m);

}  // namespace minstab
