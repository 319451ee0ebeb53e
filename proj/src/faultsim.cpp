#include "minstab/faultsim.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "minstab/preference.hpp"

namespace minstab {

namespace {

bool avoids(const Path& p, const std::set<int>& failed) {
    for (int hop : p.hops)
        if (failed.count(hop)) return false;
    return true;
}

}  // namespace

RerouteResult reroute_on_failure(const Network& net, const Matching& matching,
                                 const FaultScenario& scenario) {
    if (scenario.src < 0 || scenario.src >= net.terminal_count ||
        scenario.dst < 0 || scenario.dst >= net.terminal_count)
        throw std::invalid_argument("terminal out of range");
    int src_switch = net.source_switch[scenario.src];
    int dst_switch = net.sink_switch[scenario.dst];
    if (scenario.failed.count(src_switch))
        throw std::invalid_argument("failed set contains the source switch SE " +
                                    std::to_string(src_switch));
    if (scenario.failed.count(dst_switch))
        throw std::invalid_argument(
            "failed set contains the destination switch SE " +
            std::to_string(dst_switch));

    bool alt = scenario.allow_alternate && net.has_alternates();
    auto all = enumerate_paths(net, scenario.src, scenario.dst, alt);
    std::vector<Path> candidates;
    for (const auto& p : all)
        if (avoids(p, scenario.failed)) candidates.push_back(p);

    RerouteResult result;
    if (candidates.empty()) {
        std::ostringstream detail;
        if (all.empty()) {
            detail << "no route exists between terminal " << scenario.src
                   << " and terminal " << scenario.dst;
        } else {
            std::set<int> cut;
            for (const auto& p : all)
                for (int hop : p.hops)
                    if (scenario.failed.count(hop)) cut.insert(hop);
            detail << "every route from terminal " << scenario.src
                   << " to terminal " << scenario.dst
                   << " crosses a failed switch (cut:";
            for (int id : cut) detail << " SE " << id;
            detail << ")";
        }
        result.detail = detail.str();
        return result;
    }

    // Rank candidates by how the source switch would choose its next hop:
    // its matched partner first, then its preference-list order. The input
    // order already breaks ties by fewest non-straight steps.
    auto table = build_preference_lists(net);
    std::map<int, int> rank;
    if (const auto* entry = table.find(src_switch)) {
        for (size_t i = 0; i < entry->partners.size(); ++i)
            rank.emplace(entry->partners[i], static_cast<int>(i));
    }
    int matched = matching.partner_of_proposer(src_switch);
    auto key = [&](const Path& p) {
        int first_hop = p.hops.size() > 1 ? p.hops[1] : dst_switch;
        if (first_hop == matched) return -1;
        auto it = rank.find(first_hop);
        return it == rank.end() ? static_cast<int>(rank.size()) : it->second;
    };
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](const Path& a, const Path& b) { return key(a) < key(b); });

    result.routed = true;
    result.path = candidates.front();
    result.alternatives.assign(candidates.begin() + 1, candidates.end());
    return result;
}

SurvivabilityReport survivability(const Network& net, const Matching& matching,
                                  int k, bool allow_alternate) {
    if (k < 0) throw std::invalid_argument("failure budget must be >= 0");
    if (k > 2 || net.params.n > 4)
        throw std::invalid_argument(
            "survivability sweep is limited to k <= 2 and n <= 4");
    (void)matching;  // route choice never affects whether some route survives

    std::vector<int> intermediates;
    for (const auto& se : net.switches)
        if (se.stage > 0 && se.stage < net.last_stage())
            intermediates.push_back(se.id);

    bool alt = allow_alternate && net.has_alternates();
    std::vector<std::vector<Path>> per_pair;
    for (int s = 0; s < net.terminal_count; ++s)
        for (int d = 0; d < net.terminal_count; ++d)
            per_pair.push_back(enumerate_paths(net, s, d, alt));

    auto pair_survives = [&](const std::set<int>& failed) {
        long long ok = 0;
        for (const auto& paths : per_pair) {
            for (const auto& p : paths) {
                if (avoids(p, failed)) {
                    ++ok;
                    break;
                }
            }
        }
        return ok;
    };

    SurvivabilityReport report;
    report.fully_survivable = true;
    long long pairs =
        static_cast<long long>(net.terminal_count) * net.terminal_count;
    int m = static_cast<int>(intermediates.size());
    for (int size = 0; size <= k; ++size) {
        SurvivabilityCell cell;
        cell.failures = size;
        if (size == 0) {
            cell.scenarios = pairs;
            cell.routed = pair_survives({});
        } else if (size == 1) {
            for (int i = 0; i < m; ++i) {
                cell.scenarios += pairs;
                cell.routed += pair_survives({intermediates[i]});
            }
        } else {
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) {
                    cell.scenarios += pairs;
                    cell.routed += pair_survives({intermediates[i], intermediates[j]});
                }
        }
        cell.ratio = cell.scenarios
                         ? static_cast<double>(cell.routed) / cell.scenarios
                         : 1.0;
        if (cell.routed != cell.scenarios) report.fully_survivable = false;
        report.cells.push_back(cell);
    }
    return report;
}

namespace {

int parse_int_token(const std::string& tok, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line_no, 1);
    }
}

}  // namespace

ScenarioDoc parse_scenario(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_header = false, saw_network = false, saw_src = false, saw_dst = false;
    ScenarioDoc doc;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (!saw_header) {
            int version = 0;
            if (key != "minstab-scenario" || !(ls >> version) || version != 1)
                throw ParseError("expected 'minstab-scenario 1' header", line_no, 1);
            saw_header = true;
            continue;
        }
        if (key == "fixture") {
            if (saw_network) throw ParseError("network given twice", line_no, 1);
            if (!(ls >> doc.fixture))
                throw ParseError("fixture needs a name", line_no, 1);
            saw_network = true;
        } else if (key == "network") {
            if (saw_network) throw ParseError("network given twice", line_no, 1);
            std::string family, tok;
            if (!(ls >> family >> tok))
                throw ParseError("network needs family and n", line_no, 1);
            auto fam = family_from_string(family);
            if (!fam)
                throw ParseError("unknown family '" + family + "'", line_no, 1);
            doc.params.family = *fam;
            doc.params.n = parse_int_token(tok, line_no);
            if (ls >> tok) doc.params.gamma = parse_int_token(tok, line_no);
            doc.has_params = true;
            saw_network = true;
        } else if (key == "failed") {
            std::string tok;
            while (ls >> tok)
                doc.scenario.failed.insert(parse_int_token(tok, line_no));
        } else if (key == "src") {
            std::string tok;
            if (!(ls >> tok)) throw ParseError("src needs a terminal", line_no, 1);
            doc.scenario.src = parse_int_token(tok, line_no);
            saw_src = true;
        } else if (key == "dst") {
            std::string tok;
            if (!(ls >> tok)) throw ParseError("dst needs a terminal", line_no, 1);
            doc.scenario.dst = parse_int_token(tok, line_no);
            saw_dst = true;
        } else if (key == "alternate") {
            std::string tok;
            if (!(ls >> tok) || (tok != "on" && tok != "off"))
                throw ParseError("alternate must be 'on' or 'off'", line_no, 1);
            doc.scenario.allow_alternate = tok == "on";
        } else {
            throw ParseError("unknown scenario record '" + key + "'", line_no, 1);
        }
    }
    if (!saw_header) throw ParseError("empty scenario file", 1, 1);
    if (!saw_network)
        throw ParseError("scenario names no network (fixture or network record)",
                         line_no, 1);
    if (!saw_src || !saw_dst)
        throw ParseError("scenario needs src and dst records", line_no, 1);
    return doc;
}

std::string serialize_scenario(const ScenarioDoc& doc) {
    std::ostringstream out;
    out << "minstab-scenario 1\n";
    if (!doc.fixture.empty()) {
        out << "fixture " << doc.fixture << "\n";
    } else {
        out << "network " << to_string(doc.params.family) << " " << doc.params.n;
        if (doc.params.family == Family::ThreeDCGmin)
            out << " " << doc.params.gamma;
        out << "\n";
    }
    out << "failed";
    for (int id : doc.scenario.failed) out << " " << id;
    out << "\n";
    out << "src " << doc.scenario.src << "\n";
    out << "dst " << doc.scenario.dst << "\n";
    out << "alternate " << (doc.scenario.allow_alternate ? "on" : "off") << "\n";
    return out.str();
}

}  // namespace minstab
