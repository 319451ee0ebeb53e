#include "minstab/preference.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace minstab {

const PreferenceList* PreferenceTable::find(int owner) const {
    for (const auto& e : entries)
        if (e.owner == owner) return &e;
    return nullptr;
}

PreferenceList* PreferenceTable::find(int owner) {
    for (auto& e : entries)
        if (e.owner == owner) return &e;
    return nullptr;
}

namespace {

int kind_rank(LinkKind k) {
    switch (k) {
        case LinkKind::Straight: return 0;
        case LinkKind::Up: return 1;
        case LinkKind::Down: return 2;
        case LinkKind::Alternate: return 3;
    }
    return 3;
}

// A switch's next-stage targets in list order: combined source switches
// (paired-terminal families, stage 0) ascending by id, everything else by
// link kind Straight < Up < Down, then id; parallel links collapse onto
// their best kind.
std::vector<int> ordered_targets(const Network& net, int id,
                                 std::uint64_t& comparisons) {
    std::vector<std::pair<int, int>> keyed;  // (sort key, target)
    bool combined = net.params.family == Family::ThreeDGmin && net.se(id).stage == 0;
    for (const auto& link : net.links) {
        if (link.from != id || link.kind == LinkKind::Alternate) continue;
        keyed.push_back({combined ? 0 : kind_rank(link.kind), link.to});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<int> out;
    for (const auto& [rank, target] : keyed) {
        ++comparisons;
        if (std::find(out.begin(), out.end(), target) == out.end())
            out.push_back(target);
    }
    return out;
}

std::vector<int> expand_switch(const Network& net, int owner, bool keep_duplicates,
                               std::uint64_t& comparisons) {
    int owner_stage = net.se(owner).stage;
    std::vector<int> tokens = ordered_targets(net, owner, comparisons);

    auto alt = net.alternate_peers.find(owner);
    if (owner_stage == 0 && alt != net.alternate_peers.end()) {
        for (int peer : alt->second) {
            tokens.push_back(peer);
            auto peer_targets = ordered_targets(net, peer, comparisons);
            tokens.insert(tokens.end(), peer_targets.begin(), peer_targets.end());
        }
    }

    size_t ply_begin = 0;
    for (int stage = owner_stage + 1; stage < net.last_stage(); ++stage) {
        // Frontier: this stage's members in order of first appearance.
        std::vector<int> frontier;
        for (size_t i = ply_begin; i < tokens.size(); ++i) {
            int id = tokens[i];
            ++comparisons;
            if (net.se(id).stage != stage) continue;
            if (std::find(frontier.begin(), frontier.end(), id) == frontier.end())
                frontier.push_back(id);
        }
        ply_begin = tokens.size();
        for (int member : frontier) {
            auto targets = ordered_targets(net, member, comparisons);
            tokens.insert(tokens.end(), targets.begin(), targets.end());
        }
    }

    if (keep_duplicates) return tokens;
    std::vector<int> deduped;
    for (int id : tokens) {
        ++comparisons;
        if (std::find(deduped.begin(), deduped.end(), id) == deduped.end())
            deduped.push_back(id);
    }
    return deduped;
}

}  // namespace

PreferenceTable build_preference_lists(const Network& net,
                                       const PreferenceOptions& opts) {
    PreferenceTable table;
    table.source = PreferenceSource::Generated;
    table.network_name = net.name;
    table.total_ses = static_cast<int>(net.switches.size());

    int excluded_stage = -1;
    if (opts.exclude_min_stage) {
        std::map<int, int> stage_sizes;
        for (const auto& sw : net.switches) ++stage_sizes[sw.stage];
        int best = -1;
        bool strict = false;
        for (const auto& [stage, size] : stage_sizes) {
            if (best < 0 || size < stage_sizes[best]) {
                best = stage;
                strict = true;
            } else if (size == stage_sizes[best]) {
                strict = false;
            }
        }
        if (strict) excluded_stage = best;
    }

    for (const auto& sw : net.switches) {
        if (sw.stage == net.last_stage()) continue;
        if (sw.stage == excluded_stage) {
            table.excluded_proposers.push_back(sw.id);
            continue;
        }
        PreferenceList list;
        list.owner = sw.id;
        list.partners =
            expand_switch(net, sw.id, opts.keep_duplicates, table.comparison_count);
        if (list.partners.empty()) table.disconnected.push_back(sw.id);
        table.entries.push_back(std::move(list));
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const PreferenceList& a, const PreferenceList& b) {
                  return a.owner < b.owner;
              });
    return table;
}

std::vector<Tie> detect_ties(const PreferenceTable& table) {
    std::map<int, std::vector<int>> by_head;  // contested partner -> owners
    for (const auto& e : table.entries)
        if (!e.exhausted()) by_head[e.head()].push_back(e.owner);

    std::vector<Tie> ties;
    for (auto& [contested, owners] : by_head) {
        if (owners.size() < 2) continue;
        std::sort(owners.begin(), owners.end());
        for (size_t i = 1; i < owners.size(); ++i) {
            Tie t;
            t.keeper = owners[0];
            t.loser = owners[i];
            t.contested = contested;
            t.position = table.find(owners[i])->cursor;
            ties.push_back(t);
        }
    }
    return ties;
}

void resolve_ties(PreferenceTable& table) {
    while (true) {
        auto ties = detect_ties(table);
        if (ties.empty()) break;
        // One group per round: the smallest contested partner id.
        int contested = ties.front().contested;
        for (const auto& t : ties) contested = std::min(contested, t.contested);
        ++table.tie_groups;
        for (const auto& t : ties) {
            if (t.contested != contested) continue;
            auto* loser = table.find(t.loser);
            ++table.resolution_steps;
            ++table.advances[t.loser];
            while (!loser->exhausted() && loser->head() == contested) ++loser->cursor;
            if (loser->exhausted()) table.resolution_failures.push_back(t.loser);
        }
    }
    std::sort(table.resolution_failures.begin(), table.resolution_failures.end());
}

PreferenceTable parse_preferences(const std::string& text) {
    PreferenceTable table;
    table.source = PreferenceSource::Fixture;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::set<int> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string tag;
        if (!(row >> tag)) continue;  // blank line
        if (tag != "SE") throw ParseError("expected 'SE <id> <partners...>'", line_no, 1);
        int owner = 0;
        if (!(row >> owner)) throw ParseError("expected switch id after 'SE'", line_no, 2);
        if (!seen.insert(owner).second)
            throw ParseError("duplicate entry for SE " + std::to_string(owner), line_no, 2);
        PreferenceList list;
        list.owner = owner;
        std::string tok;
        int col = 2;
        while (row >> tok) {
            ++col;
            try {
                size_t used = 0;
                int partner = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                list.partners.push_back(partner);
            } catch (const std::exception&) {
                throw ParseError("expected partner id, got '" + tok + "'", line_no, col);
            }
        }
        table.entries.push_back(std::move(list));
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const PreferenceList& a, const PreferenceList& b) {
                  return a.owner < b.owner;
              });
    return table;
}

std::string serialize_preferences(const PreferenceTable& table) {
    std::ostringstream out;
    for (const auto& e : table.entries) {
        out << "SE " << e.owner;
        for (int i = e.cursor; i < static_cast<int>(e.partners.size()); ++i)
            out << " " << e.partners[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace minstab
