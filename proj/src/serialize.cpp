#include "minstab/serialize.hpp"

#include <sstream>

namespace minstab {

namespace {

constexpr const char* kFormatVersion = "1";

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, int line_no, int col) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + tok + "'", line_no, col);
    }
}

}  // namespace

std::string serialize_network(const Network& net) {
    std::ostringstream out;
    out << "minstab-network " << kFormatVersion << "\n";
    out << "name " << net.name << "\n";
    out << "family " << to_string(net.params.family) << "\n";
    out << "n " << net.params.n << "\n";
    out << "gamma " << net.params.gamma << "\n";
    out << "generated " << (net.generated ? 1 : 0) << "\n";
    out << "terminals " << net.terminal_count << "\n";
    out << "switches " << net.switches.size() << "\n";
    for (const auto& sw : net.switches)
        out << sw.id << " " << sw.stage << " " << sw.index << "\n";
    out << "links " << net.links.size() << "\n";
    for (const auto& link : net.links)
        out << link.from << " " << link.to << " " << to_string(link.kind) << "\n";
    out << "sources";
    for (int id : net.source_switch) out << " " << id;
    out << "\nsinks";
    for (int id : net.sink_switch) out << " " << id;
    out << "\n";
    return out.str();
}

Network parse_network(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty()) return line;
        }
        throw ParseError("unexpected end of input", line_no, 1);
    };

    auto header = split_ws(next_line());
    if (header.size() != 2 || header[0] != "minstab-network")
        throw ParseError("expected 'minstab-network <version>' header", line_no, 1);
    if (header[1] != kFormatVersion)
        throw ParseError("unsupported format version '" + header[1] + "'", line_no, 2);

    Network net;
    auto keyed = [&](const std::string& key) -> std::vector<std::string> {
        auto toks = split_ws(next_line());
        if (toks.empty() || toks[0] != key)
            throw ParseError("expected '" + key + "' record", line_no, 1);
        toks.erase(toks.begin());
        return toks;
    };

    auto name_toks = keyed("name");
    if (name_toks.size() != 1) throw ParseError("name must be one token", line_no, 2);
    net.name = name_toks[0];

    auto family_toks = keyed("family");
    if (family_toks.size() != 1) throw ParseError("family must be one token", line_no, 2);
    auto fam = family_from_string(family_toks[0]);
    if (!fam) throw ParseError("unknown family '" + family_toks[0] + "'", line_no, 2);
    net.params.family = *fam;

    auto n_toks = keyed("n");
    if (n_toks.size() != 1) throw ParseError("n must be one token", line_no, 2);
    net.params.n = parse_int(n_toks[0], line_no, 2);

    auto gamma_toks = keyed("gamma");
    if (gamma_toks.size() != 1) throw ParseError("gamma must be one token", line_no, 2);
    net.params.gamma = parse_int(gamma_toks[0], line_no, 2);

    auto gen_toks = keyed("generated");
    if (gen_toks.size() != 1) throw ParseError("generated must be one token", line_no, 2);
    net.generated = parse_int(gen_toks[0], line_no, 2) != 0;

    auto term_toks = keyed("terminals");
    if (term_toks.size() != 1) throw ParseError("terminals must be one token", line_no, 2);
    net.terminal_count = parse_int(term_toks[0], line_no, 2);

    auto sw_toks = keyed("switches");
    if (sw_toks.size() != 1) throw ParseError("switches must be one token", line_no, 2);
    int switch_count = parse_int(sw_toks[0], line_no, 2);
    int prev_stage = -1;
    for (int i = 0; i < switch_count; ++i) {
        auto toks = split_ws(next_line());
        if (toks.size() != 3)
            throw ParseError("switch row needs 'id stage index'", line_no, 1);
        SwitchElement sw;
        sw.id = parse_int(toks[0], line_no, 1);
        sw.stage = parse_int(toks[1], line_no, 2);
        sw.index = parse_int(toks[2], line_no, 3);
        if (sw.stage > prev_stage) {
            for (int s = prev_stage + 1; s <= sw.stage; ++s)
                net.stage_offsets.push_back(sw.id);
            prev_stage = sw.stage;
        }
        net.switches.push_back(sw);
    }

    auto known = [&](int id) {
        for (const auto& sw : net.switches)
            if (sw.id == id) return true;
        return false;
    };

    auto link_toks = keyed("links");
    if (link_toks.size() != 1) throw ParseError("links must be one token", line_no, 2);
    int link_count = parse_int(link_toks[0], line_no, 2);
    for (int i = 0; i < link_count; ++i) {
        auto toks = split_ws(next_line());
        if (toks.size() != 3)
            throw ParseError("link row needs 'from to kind'", line_no, 1);
        Link link;
        link.from = parse_int(toks[0], line_no, 1);
        link.to = parse_int(toks[1], line_no, 2);
        auto kind = link_kind_from_string(toks[2]);
        if (!kind) throw ParseError("unknown link kind '" + toks[2] + "'", line_no, 3);
        link.kind = *kind;
        if (!known(link.from))
            throw ParseError("link from unknown switch " + toks[0], line_no, 1);
        if (!known(link.to))
            throw ParseError("link to unknown switch " + toks[1], line_no, 2);
        net.links.push_back(link);
    }

    for (const std::string& key : {"sources", "sinks"}) {
        auto toks = keyed(key);
        for (size_t i = 0; i < toks.size(); ++i) {
            int id = parse_int(toks[i], line_no, static_cast<int>(i) + 2);
            if (!known(id))
                throw ParseError(std::string(key) + " references unknown switch " + toks[i],
                                 line_no, static_cast<int>(i) + 2);
            (key == std::string("sources") ? net.source_switch : net.sink_switch)
                .push_back(id);
        }
    }

    net.finalize();
    return net;
}

}  // namespace minstab
