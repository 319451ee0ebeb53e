#include "minstab/fixtures.hpp"

#include <algorithm>

namespace minstab {

namespace {

struct LinkSpec {
    int from;
    int to;
    char kind;  // s/u/d/a
};

LinkKind kind_of(char c) {
    switch (c) {
        case 's': return LinkKind::Straight;
        case 'u': return LinkKind::Up;
        case 'd': return LinkKind::Down;
        default: return LinkKind::Alternate;
    }
}

Network assemble(Family family, int n, int gamma, const std::string& name,
                 const std::vector<std::pair<int, int>>& stage_ranges,
                 const std::vector<LinkSpec>& links,
                 const std::vector<int>& sources, const std::vector<int>& sinks) {
    Network net;
    net.params.family = family;
    net.params.n = n;
    net.params.gamma = gamma;
    net.name = name;
    net.generated = false;
    net.terminal_count = static_cast<int>(sources.size());
    for (size_t stage = 0; stage < stage_ranges.size(); ++stage) {
        net.stage_offsets.push_back(stage_ranges[stage].first);
        int index = 0;
        for (int id = stage_ranges[stage].first; id <= stage_ranges[stage].second;
             ++id) {
            SwitchElement se;
            se.id = id;
            se.stage = static_cast<int>(stage);
            se.index = index++;
            net.switches.push_back(se);
        }
    }
    std::sort(net.switches.begin(), net.switches.end(),
              [](const SwitchElement& a, const SwitchElement& b) {
                  return a.id < b.id;
              });
    for (const auto& l : links) net.links.push_back({l.from, l.to, kind_of(l.kind)});
    net.source_switch = sources;
    net.sink_switch = sinks;
    net.finalize();
    return net;
}

// Sparse variant for cut-aways whose stages keep non-contiguous ids.
Network assemble_sparse(Family family, int n, int gamma, const std::string& name,
                        const std::vector<std::vector<int>>& stages,
                        const std::vector<LinkSpec>& links,
                        const std::vector<int>& sources,
                        const std::vector<int>& sinks) {
    Network net;
    net.params.family = family;
    net.params.n = n;
    net.params.gamma = gamma;
    net.name = name;
    net.generated = false;
    net.terminal_count = static_cast<int>(sources.size());
    for (size_t stage = 0; stage < stages.size(); ++stage) {
        net.stage_offsets.push_back(stages[stage].front());
        int index = 0;
        for (int id : stages[stage]) {
            SwitchElement se;
            se.id = id;
            se.stage = static_cast<int>(stage);
            se.index = index++;
            net.switches.push_back(se);
        }
    }
    std::sort(net.switches.begin(), net.switches.end(),
              [](const SwitchElement& a, const SwitchElement& b) {
                  return a.id < b.id;
              });
    for (const auto& l : links) net.links.push_back({l.from, l.to, kind_of(l.kind)});
    net.source_switch = sources;
    net.sink_switch = sinks;
    net.finalize();
    return net;
}

Network make_gmin_fig4() {
    std::vector<LinkSpec> links = {
        {1, 5, 's'},  {1, 6, 'd'},  {1, 7, 'd'},
        {2, 7, 's'},  {2, 6, 'u'},  {2, 8, 'd'},  {2, 9, 'd'},
        {3, 9, 's'},  {3, 8, 'u'},  {3, 10, 'd'}, {3, 11, 'd'},
        {4, 11, 's'}, {4, 10, 'u'}, {4, 12, 'd'},
        {5, 13, 's'},  {5, 15, 'd'},
        {6, 14, 's'},  {6, 16, 'd'},
        {7, 15, 's'},  {7, 13, 'u'}, {7, 17, 'd'},
        {8, 16, 's'},  {8, 14, 'u'}, {8, 18, 'd'},
        {9, 17, 's'},  {9, 15, 'u'}, {9, 19, 'd'},
        {10, 18, 's'}, {10, 16, 'u'}, {10, 20, 'd'},
        {11, 19, 's'}, {11, 17, 'u'},
        {12, 20, 's'}, {12, 18, 'u'},
        {13, 21, 's'}, {13, 25, 'd'},
        {14, 22, 's'}, {14, 26, 'd'},
        {15, 23, 's'}, {15, 27, 'd'},
        {16, 24, 's'}, {16, 28, 'd'},
        {17, 25, 's'}, {17, 21, 'u'},
        {18, 26, 's'}, {18, 22, 'u'},
        {19, 27, 's'}, {19, 23, 'u'},
        {20, 28, 's'}, {20, 24, 'u'},
    };
    return assemble(Family::Gmin, 3, 0, "gmin_fig4",
                    {{1, 4}, {5, 12}, {13, 20}, {21, 28}}, links,
                    {1, 1, 2, 2, 3, 3, 4, 4},
                    {21, 22, 23, 24, 25, 26, 27, 28});
}

Network make_3dgmin_fig8() {
    std::vector<LinkSpec> links = {
        {1, 5, 's'},  {1, 6, 's'},  {1, 7, 'd'},  {1, 8, 'd'},
        {2, 5, 'u'},  {2, 6, 'u'},  {2, 9, 'd'},  {2, 10, 'd'},
        {3, 7, 'u'},  {3, 8, 'u'},  {3, 11, 'd'}, {3, 12, 'd'},
        {4, 11, 's'}, {4, 12, 's'}, {4, 9, 'u'},  {4, 10, 'u'},
        {5, 13, 's'},  {5, 15, 'd'},
        {6, 14, 's'},  {6, 16, 'd'},
        {7, 15, 's'},  {7, 13, 'u'}, {7, 17, 'd'},
        {8, 16, 's'},  {8, 14, 'u'}, {8, 18, 'd'},
        {9, 17, 's'},  {9, 15, 'u'}, {9, 19, 'd'},
        {10, 18, 's'}, {10, 16, 'u'}, {10, 20, 'd'},
        {11, 19, 's'}, {11, 17, 'u'},
        {12, 20, 's'}, {12, 18, 'u'},
        {13, 21, 's'}, {13, 22, 'd'}, {13, 23, 'd'},
        {14, 21, 'u'}, {14, 23, 'd'}, {14, 24, 'd'},
        {15, 21, 'u'}, {15, 22, 'u'}, {15, 24, 'd'}, {15, 25, 'd'},
        {16, 22, 'u'}, {16, 23, 'u'}, {16, 25, 'd'}, {16, 26, 'd'},
        {17, 23, 'u'}, {17, 24, 'u'}, {17, 26, 'd'}, {17, 27, 'd'},
        {18, 24, 'u'}, {18, 25, 'u'}, {18, 27, 'd'}, {18, 28, 'd'},
        {19, 25, 'u'}, {19, 26, 'u'}, {19, 28, 'd'},
        {20, 28, 's'}, {20, 26, 'u'}, {20, 27, 'u'},
    };
    return assemble(Family::ThreeDGmin, 3, 0, "3dgmin_fig8",
                    {{1, 4}, {5, 12}, {13, 20}, {21, 28}}, links,
                    {1, 1, 2, 2, 3, 3, 4, 4},
                    {21, 22, 23, 24, 25, 26, 27, 28});
}

Network make_3dcgmin_fig12() {
    std::vector<LinkSpec> links;
    for (int j = 0; j < 8; ++j) {
        // stage 0 -> 1
        links.push_back({1 + j, 9 + j, 's'});
        if (j >= 1) links.push_back({1 + j, 8 + j, 'u'});
        if (j <= 6) links.push_back({1 + j, 10 + j, 'd'});
        // stage 1 -> 2
        links.push_back({9 + j, 17 + j, 's'});
        if (j >= 2) links.push_back({9 + j, 15 + j, 'u'});
        if (j <= 5) links.push_back({9 + j, 19 + j, 'd'});
        // stage 2 -> 3
        links.push_back({17 + j, 25 + j, 's'});
        if (j >= 1) links.push_back({17 + j, 24 + j, 'u'});
        if (j <= 6) links.push_back({17 + j, 26 + j, 'd'});
    }
    for (int j = 0; j < 4; ++j) links.push_back({1 + j, 5 + j, 'a'});
    std::vector<int> sources, sinks;
    for (int t = 0; t < 8; ++t) {
        sources.push_back(1 + t);
        sinks.push_back(25 + t);
    }
    return assemble(Family::ThreeDCGmin, 3, 0, "3dcgmin_fig12",
                    {{1, 8}, {9, 16}, {17, 24}, {25, 32}}, links, sources, sinks);
}

Network make_gmin_fig7() {
    std::vector<LinkSpec> links = {
        {1, 5, 's'}, {5, 13, 's'}, {13, 21, 's'},
        {1, 7, 'd'}, {7, 17, 'd'}, {17, 21, 'u'},
    };
    return assemble_sparse(Family::Gmin, 3, 0, "gmin_fig7",
                           {{1}, {5, 7}, {13, 17}, {21}}, links, {1}, {21});
}

Network make_3dgmin_fig11() {
    std::vector<LinkSpec> links = {
        {1, 5, 's'},  {1, 6, 's'},  {1, 7, 'd'},
        {5, 13, 's'}, {6, 14, 's'}, {7, 15, 's'},
        {13, 21, 's'}, {14, 21, 'u'}, {15, 21, 'u'},
    };
    return assemble_sparse(Family::ThreeDGmin, 3, 0, "3dgmin_fig11",
                           {{1}, {5, 6, 7}, {13, 14, 15}, {21}}, links, {1}, {21});
}

Network make_3dcgmin_fig15() {
    std::vector<LinkSpec> links = {
        {1, 9, 's'},  {1, 10, 'd'}, {9, 17, 's'},
        {10, 18, 's'}, {17, 25, 's'}, {18, 25, 'u'},
        {1, 5, 'a'},  {5, 12, 'u'}, {12, 18, 'u'},
    };
    return assemble_sparse(Family::ThreeDCGmin, 3, 0, "3dcgmin_fig15",
                           {{1, 5}, {9, 10, 12}, {17, 18}, {25}}, links, {1}, {25});
}

const char* kGminFig5 = R"(SE 1 5 6 7 13 15 14 16 15 13 17 21 25 23 27 22 26 24 28 25 21
SE 2 7 6 8 9 15 13 17 14 16 16 14 18 17 15 19 23 27 21 25 25 21 22 26 24 28 26 22 27 23
SE 3 9 8 10 11 17 15 19 16 14 18 18 16 20 19 17 25 21 23 27 27 23 24 28 22 26 26 22 28 24
SE 4 11 10 12 19 17 18 16 20 18 27 23 25 21 26 22 24 28 28 24
SE 5 13 15 21 25 23 27
SE 6 14 16 22 26 24 28
SE 7 15 13 17 23 27 21 25 25 21
SE 8 16 14 18 24 28 22 26 26 22
SE 9 17 15 19 25 21 23 27 27 23
SE 10 18 16 20 26 22 24 28 28 24
SE 11 19 17 27 23 25 21
SE 12 20 18 28 24 26 22
SE 13 21 25
SE 14 22 26
SE 15 23 27
SE 16 24 28
SE 17 25 21
SE 18 26 22
SE 19 27 23
SE 20 28 24
)";

const char* k3dgminFig9 = R"(SE 1 5 6 7 8 13 15 14 16 15 13 17 16 14 18 21 22 23 21 22 24 25 21 23 24 22 23 25 26 23 24 26 27 24 25 27 28
SE 2 5 6 9 10 13 15 14 16 17 15 19 18 16 20 21 22 23 21 22 24 25 21 23 24 22 23 25 26 23 24 26 27 25 26 28 24 25 27 28
SE 3 7 8 11 12 15 13 17 16 14 18 19 17 20 18 21 22 24 25 21 22 23 24 26 27 22 23 25 26 21 23 24 24 25 27 28 25 26 28 26 27 28
SE 4 9 10 11 12 17 15 19 18 16 20 19 17 20 18 23 24 26 27 21 22 24 25 25 26 28 24 25 27 28 22 23 25 26 26 27 28
SE 5 13 15 21 22 23 21 22 24 25
SE 6 14 16 21 23 24 22 23 25 26
SE 7 15 13 17 21 22 24 25 21 22 23 23 24 26 27
SE 8 16 14 18 22 23 25 26 21 23 24 24 25 27 28
SE 9 17 15 19 23 24 26 27 21 22 24 25 25 26 28
SE 10 18 16 20 24 25 27 28 22 23 25 26 26 27 28
SE 11 19 17 25 26 28 23 24 26 27
SE 12 20 18 26 27 28 24 25 27 28
SE 13 21 22 23
SE 14 21 23 24
SE 15 21 22 24 25
SE 16 22 23 25 26
SE 17 23 24 26 27
SE 18 24 25 27 28
SE 19 25 26 28
SE 20 28 26 27
)";

const char* k3dcgminFig13 = R"(SE 1 9 10 5 13 12 14 17 19 18 20 21 19 23 20 18 22 22 20 24 25 26 27 26 28 26 25 27 28 27 29 29 28 30 31 30 32 30 29 31 32 31
SE 2 10 9 11 6 14 13 15 18 20 17 19 19 17 21 22 20 24 21 19 23 23 21 26 25 27 28 27 29 25 26 27 26 28 29 28 30 29 31 32 31 31 30 32
SE 3 11 10 12 7 15 14 16 19 17 21 18 20 20 18 22 23 21 22 20 24 24 22 27 26 28 25 26 29 28 30 26 25 27 28 27 29 30 29 31 31 30 32 32 31
SE 4 12 11 13 8 6 1 5 20 18 22 19 17 21 21 19 23 24 22 23 21 28 27 29 26 25 27 30 29 31 27 26 28 25 26 29 28 30 31 30 32 32 31
SE 5 13 12 14 1 9 10 21 19 23 20 18 22 22 20 24 17 19 18 20 29 28 30 27 26 28 31 30 32 28 27 29 26 25 27 30 29 31 32 31 25 26
SE 6 14 13 15 2 10 9 11 22 20 24 21 19 23 23 21 18 20 17 19 19 17 21 30 29 31 28 27 29 32 31 29 28 30 27 26 28 31 30 32 26 25 27 25 26
SE 7 15 14 16 3 11 10 12 23 21 22 20 24 24 22 19 17 21 18 20 20 18 22 31 30 32 29 28 30 30 29 31 28 27 29 32 31 27 26 28 25 26 26 25 27
SE 8 16 15 4 12 11 13 24 23 23 21 20 18 22 19 17 21 21 19 23 32 31 30 32 29 28 30 28 27 29 26 25 27 30 29 31 27 26 28 25 26
SE 9 17 19 25 26 27 26 28
SE 10 18 20 26 25 27 28 27 29
SE 11 19 17 21 27 26 28 25 26 29 28 30
SE 12 20 18 22 28 27 29 26 25 27 30 29 31
SE 13 21 19 23 29 28 30 27 26 28 31 30 32
SE 14 22 20 24 30 29 31 28 27 29 32 31
SE 15 23 21 31 30 32 29 28 30
SE 16 24 22 32 31 30 29 21
SE 17 25 26
SE 18 26 25 27
SE 19 27 26 28
SE 20 28 27 29
SE 21 29 28 30
SE 22 30 29 31
SE 23 31 30 32
SE 24 32 31
)";

std::vector<Pairing> pair_list(std::initializer_list<std::pair<int, int>> ps) {
    std::vector<Pairing> out;
    for (const auto& p : ps) out.push_back({p.first, p.second});
    return out;
}

}  // namespace

std::vector<std::string> fixture_topology_names() {
    return {"gmin_fig4",  "3dgmin_fig8",  "3dcgmin_fig12",
            "gmin_fig7",  "3dgmin_fig11", "3dcgmin_fig15"};
}

std::optional<Network> fixture_topology(const std::string& name) {
    if (name == "gmin_fig4") return make_gmin_fig4();
    if (name == "3dgmin_fig8") return make_3dgmin_fig8();
    if (name == "3dcgmin_fig12") return make_3dcgmin_fig12();
    if (name == "gmin_fig7") return make_gmin_fig7();
    if (name == "3dgmin_fig11") return make_3dgmin_fig11();
    if (name == "3dcgmin_fig15") return make_3dcgmin_fig15();
    return std::nullopt;
}

std::vector<std::string> fixture_preference_names() {
    return {"gmin_fig5", "3dgmin_fig9", "3dcgmin_fig13"};
}

std::optional<PreferenceFixture> fixture_preferences(const std::string& name) {
    if (name == "gmin_fig5") {
        PreferenceFixture f;
        f.name = name;
        f.display_name = "GMIN";
        f.topology = "gmin_fig4";
        f.text = kGminFig5;
        f.total_ses = 28;
        f.expected_pairs = pair_list(
            {{1, 5},   {2, 7},   {3, 9},   {4, 11},  {5, 13},  {6, 14},  {7, 15},
             {8, 16},  {9, 17},  {10, 18}, {11, 19}, {12, 20}, {13, 21}, {14, 22},
             {15, 23}, {16, 24}, {17, 25}, {18, 26}, {19, 27}, {20, 28}});
        return f;
    }
    if (name == "3dgmin_fig9") {
        PreferenceFixture f;
        f.name = name;
        f.display_name = "3DGMIN";
        f.topology = "3dgmin_fig8";
        f.text = k3dgminFig9;
        f.total_ses = 28;
        f.expected_pairs = pair_list(
            {{1, 5},   {2, 6},   {3, 7},   {4, 9},   {5, 13},  {6, 14},  {7, 15},
             {8, 16},  {9, 17},  {10, 18}, {11, 19}, {12, 20}, {13, 21}, {14, 23},
             {15, 22}, {16, 25}, {17, 24}, {18, 27}, {19, 26}, {20, 28}});
        return f;
    }
    if (name == "3dcgmin_fig13") {
        PreferenceFixture f;
        f.name = name;
        f.display_name = "3DCGMIN";
        f.topology = "3dcgmin_fig12";
        f.text = k3dcgminFig13;
        f.total_ses = 32;
        f.expected_pairs = pair_list(
            {{1, 9},   {2, 10},  {3, 11},  {4, 12},  {5, 13},  {6, 14},
             {7, 15},  {8, 16},  {9, 17},  {10, 18}, {11, 19}, {12, 20},
             {13, 21}, {14, 22}, {15, 23}, {16, 24}, {17, 25}, {18, 26},
             {19, 27}, {20, 28}, {21, 29}, {22, 30}});
        return f;
    }
    return std::nullopt;
}

std::vector<ComparisonRow> external_comparison_rows() {
    auto row = [](const std::string& name, int ties, int pairs, int total,
                  int pl, int neglected, bool regular) {
        ComparisonRow r;
        r.name = name;
        r.ties = ties;
        r.optimal_pairs = pairs;
        r.total_ses = total;
        r.max_path_length = pl;
        r.neglected = neglected;
        r.status = classify(neglected);
        r.regular = regular;
        return r;
    };
    return {
        row("HZTN", 4, 16, 28, 5, 4, false),
        row("QTN", 6, 16, 26, 5, 2, false),
        row("ASEN", 4, 16, 24, 3, 0, true),
        row("ABN", 3, 8, 16, 2, 0, true),
        row("CLN", 4, 16, 24, 3, 0, true),
    };
}

}  // namespace minstab
