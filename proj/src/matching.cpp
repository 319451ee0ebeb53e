#include "minstab/matching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace minstab {

int Matching::partner_of_proposer(int proposer) const {
    for (const auto& p : pairs)
        if (p.proposer == proposer) return p.acceptor;
    return 0;
}

int Matching::proposer_of_acceptor(int acceptor) const {
    for (const auto& p : pairs)
        if (p.acceptor == acceptor) return p.proposer;
    return 0;
}

Matching select_stable_pairs(const PreferenceTable& table) {
    {
        std::set<int> heads;
        for (const auto& e : table.entries) {
            if (e.exhausted()) continue;
            if (!heads.insert(e.head()).second)
                throw std::domain_error(
                    "preference table has head-priority ties; resolve ties first");
        }
    }

    Matching m;
    std::set<int> engaged_acceptors;
    for (const auto& e : table.entries) {
        bool matched = false;
        for (int i = e.cursor; i < static_cast<int>(e.partners.size()); ++i) {
            int target = e.partners[i];
            ++m.proposal_count;
            if (engaged_acceptors.count(target)) {
                m.log.push_back({e.owner, target, ProposalEvent::Rejected});
                continue;
            }
            engaged_acceptors.insert(target);
            m.pairs.push_back({e.owner, target});
            m.log.push_back({e.owner, target, ProposalEvent::Accepted});
            matched = true;
            break;
        }
        if (!matched) {
            m.unmatched.push_back(e.owner);
            m.log.push_back({e.owner, 0, ProposalEvent::Exhausted});
        }
    }
    return m;
}

namespace {

// Rank of `partner` in the owner's full list; -1 when absent.
int rank_of(const PreferenceList& list, int partner) {
    for (size_t i = 0; i < list.partners.size(); ++i)
        if (list.partners[i] == partner) return static_cast<int>(i);
    return -1;
}

}  // namespace

std::vector<BlockingPair> verify_stability(const PreferenceTable& table,
                                           const Matching& m) {
    std::vector<BlockingPair> blocking;
    for (const auto& e : table.entries) {
        int current = m.partner_of_proposer(e.owner);
        int current_rank =
            current ? rank_of(e, current) : static_cast<int>(e.partners.size());
        for (int candidate : e.partners) {
            int cand_rank = rank_of(e, candidate);
            if (cand_rank >= current_rank) continue;
            // Acceptors implicitly prefer lower proposer ids; an unengaged
            // acceptor prefers anyone.
            int holder = m.proposer_of_acceptor(candidate);
            if (holder == 0 || holder > e.owner) {
                blocking.push_back({e.owner, candidate});
            }
        }
    }
    std::sort(blocking.begin(), blocking.end(), [](const BlockingPair& a,
                                                   const BlockingPair& b) {
        if (a.proposer != b.proposer) return a.proposer < b.proposer;
        return a.acceptor < b.acceptor;
    });
    blocking.erase(std::unique(blocking.begin(), blocking.end(),
                               [](const BlockingPair& a, const BlockingPair& b) {
                                   return a.proposer == b.proposer &&
                                          a.acceptor == b.acceptor;
                               }),
                   blocking.end());
    return blocking;
}

std::vector<int> neglected_pairs(const PreferenceTable& table, const Matching& m,
                                 NeglectPolicy policy) {
    std::set<int> universe;
    for (const auto& e : table.entries) {
        universe.insert(e.owner);
        for (int p : e.partners) universe.insert(p);
    }
    std::set<int> engaged;
    for (const auto& p : m.pairs) {
        engaged.insert(p.proposer);
        engaged.insert(p.acceptor);
    }
    std::set<int> result;
    for (int id : universe)
        if (!engaged.count(id)) result.insert(id);

    if (policy == NeglectPolicy::Reported) {
        for (int id : table.excluded_proposers) result.insert(id);
        for (int id : table.resolution_failures) result.insert(id);
        for (int id : table.disconnected) result.insert(id);
        // Switches pushed two or more places off their list while ties
        // were settled never recover a first-choice partner.
        for (const auto& [owner, count] : table.advances)
            if (count >= 2) result.insert(owner);
    }
    return std::vector<int>(result.begin(), result.end());
}

std::string to_string(const Matching& m) {
    std::ostringstream out;
    for (size_t i = 0; i < m.pairs.size(); ++i) {
        if (i) out << ", ";
        out << "(" << m.pairs[i].proposer << ", " << m.pairs[i].acceptor << ")";
    }
    return out.str();
}

}  // namespace minstab
