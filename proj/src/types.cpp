#include "minstab/types.hpp"

#include <algorithm>

namespace minstab {

std::string to_string(Family f) {
    switch (f) {
        case Family::Gmin: return "gmin";
        case Family::ThreeDGmin: return "3dgmin";
        case Family::ThreeDCGmin: return "3dcgmin";
    }
    return "gmin";
}

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "gmin") return Family::Gmin;
    if (s == "3dgmin") return Family::ThreeDGmin;
    if (s == "3dcgmin") return Family::ThreeDCGmin;
    return std::nullopt;
}

std::string to_string(LinkKind k) {
    switch (k) {
        case LinkKind::Straight: return "straight";
        case LinkKind::Up: return "up";
        case LinkKind::Down: return "down";
        case LinkKind::Alternate: return "alternate";
    }
    return "straight";
}

std::optional<LinkKind> link_kind_from_string(const std::string& s) {
    if (s == "straight") return LinkKind::Straight;
    if (s == "up") return LinkKind::Up;
    if (s == "down") return LinkKind::Down;
    if (s == "alternate") return LinkKind::Alternate;
    return std::nullopt;
}

void Network::finalize() {
    by_id.clear();
    forward.clear();
    alternate_peers.clear();
    straight_step.clear();

    std::map<int, int> fan_in;
    for (const auto& link : links) {
        if (link.kind == LinkKind::Alternate) {
            alternate_peers[link.from].push_back(link.to);
            alternate_peers[link.to].push_back(link.from);
            continue;
        }
        auto& outs = forward[link.from];
        if (std::find(outs.begin(), outs.end(), link.to) == outs.end())
            outs.push_back(link.to);
        if (link.kind == LinkKind::Straight) straight_step[{link.from, link.to}] = true;
        ++fan_in[link.to];
    }
    for (auto& [id, outs] : forward) std::sort(outs.begin(), outs.end());
    for (auto& [id, peers] : alternate_peers) std::sort(peers.begin(), peers.end());

    std::map<int, int> fan_out;
    for (const auto& link : links)
        if (link.kind != LinkKind::Alternate) ++fan_out[link.from];
    for (auto& sw : switches) {
        auto fo = fan_out.find(sw.id);
        sw.out_ports = fo == fan_out.end() ? 0 : fo->second;
        auto fi = fan_in.find(sw.id);
        sw.in_ports = fi == fan_in.end() ? 0 : fi->second;
        by_id[sw.id] = sw;
    }
}

const SwitchElement& Network::se(int id) const {
    auto it = by_id.find(id);
    if (it == by_id.end())
        throw std::out_of_range("unknown switch id " + std::to_string(id));
    return it->second;
}

bool Network::step_is_straight(int a, int b) const {
    auto it = straight_step.find({a, b});
    return it != straight_step.end() && it->second;
}

}  // namespace minstab
