#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minstab {

enum class Family { Gmin, ThreeDGmin, ThreeDCGmin };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

struct NetworkParams {
    Family family = Family::Gmin;
    int n = 3;       // N = 2^n terminals, n+1 stages
    int gamma = 0;   // cyclic start exponent, 3DCGMIN only

    int terminal_count() const { return 1 << n; }
};

enum class LinkKind { Straight, Up, Down, Alternate };

std::string to_string(LinkKind k);
std::optional<LinkKind> link_kind_from_string(const std::string& s);

struct SwitchElement {
    int id = 0;      // global 1-based id
    int stage = 0;
    int index = 0;   // position within its stage
    int in_ports = 0;
    int out_ports = 0;
};

struct Link {
    int from = 0;
    int to = 0;
    LinkKind kind = LinkKind::Straight;
};

// A staged switching network. Switch ids are unique and ascending but not
// necessarily dense (cut-away fixtures keep their original numbering).
struct Network {
    NetworkParams params;
    std::string name;
    bool generated = true;
    int terminal_count = 0;
    std::vector<SwitchElement> switches;  // ascending id
    std::vector<Link> links;
    std::vector<int> stage_offsets;       // first id present in each stage
    std::vector<int> source_switch;       // terminal -> stage-0 switch id
    std::vector<int> sink_switch;         // terminal -> last-stage switch id

    // Derived lookup tables, built by finalize().
    std::map<int, SwitchElement> by_id;
    std::map<int, std::vector<int>> forward;          // unique non-alternate targets
    std::map<int, std::vector<int>> alternate_peers;  // undirected alternate partners
    std::map<std::pair<int, int>, bool> straight_step;  // (from,to) -> has straight link

    void finalize();

    int stage_count() const { return static_cast<int>(stage_offsets.size()); }
    int last_stage() const { return stage_count() - 1; }
    bool has_alternates() const { return !alternate_peers.empty(); }
    const SwitchElement& se(int id) const;
    // True when a->b can be taken over a Straight link.
    bool step_is_straight(int a, int b) const;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace minstab
