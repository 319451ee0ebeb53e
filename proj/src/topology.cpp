#include "minstab/topology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace minstab {

int floor_mod(int value, int modulus) {
    if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
    int r = value % modulus;
    return r < 0 ? r + modulus : r;
}

std::tuple<int, int, int> plus_minus_targets(int j, int i, int N) {
    int step = 1 << i;
    return {floor_mod(j - step, N), j, floor_mod(j + step, N)};
}

std::tuple<int, int, int> cyclic_targets(int j, int e, int N) {
    int step = 1 << e;
    return {j, floor_mod(j - step, N), floor_mod(j + step, N)};
}

int cyclic_exponent(int gamma, int i, int n) {
    if (n < 2) throw std::invalid_argument("cyclic exponent undefined for n < 2");
    return floor_mod(gamma + i, n - 1);
}

namespace {

// Terminal targets reached by the combined source pair k (terminals 2k,
// 2k+1) of a 3D network, in ascending terminal order.
std::vector<int> combined_pair_targets(int k, int N) {
    if (k == 0) return {0, 1, 2, 3};
    if (2 * k + 1 == N - 1) return {N - 4, N - 3, N - 2, N - 1};
    return {2 * k - 2, 2 * k - 1, 2 * k + 2, 2 * k + 3};
}

LinkKind combined_pair_kind(int k, int target) {
    if (target < 2 * k) return LinkKind::Up;
    if (target == 2 * k || target == 2 * k + 1) return LinkKind::Straight;
    return LinkKind::Down;
}

Network build_gmin(const NetworkParams& p) {
    const int N = p.terminal_count();
    const int n = p.n;
    Network net;
    net.params = p;
    net.name = "gmin-n" + std::to_string(n);
    net.terminal_count = N;

    int next_id = 1;
    std::vector<std::vector<int>> stage_ids(n + 1);
    for (int s = 0; s <= n; ++s) {
        net.stage_offsets.push_back(next_id);
        for (int j = 0; j < N; ++j) {
            net.switches.push_back({next_id, s, j, 0, 0});
            stage_ids[s].push_back(next_id++);
        }
    }
    for (int s = 0; s < n; ++s) {
        for (int j = 0; j < N; ++j) {
            auto [up, st, down] = plus_minus_targets(j, s, N);
            net.links.push_back({stage_ids[s][j], stage_ids[s + 1][up], LinkKind::Up});
            net.links.push_back({stage_ids[s][j], stage_ids[s + 1][st], LinkKind::Straight});
            net.links.push_back({stage_ids[s][j], stage_ids[s + 1][down], LinkKind::Down});
        }
    }
    for (int t = 0; t < N; ++t) {
        net.source_switch.push_back(stage_ids[0][t]);
        net.sink_switch.push_back(stage_ids[n][t]);
    }
    net.finalize();
    return net;
}

Network build_3dgmin(const NetworkParams& p) {
    const int N = p.terminal_count();
    const int n = p.n;
    Network net;
    net.params = p;
    net.name = "3dgmin-n" + std::to_string(n);
    net.terminal_count = N;

    int next_id = 1;
    std::vector<int> stage0, stage_last;
    std::vector<std::vector<int>> mid(n);  // mid[1..n-1] used
    net.stage_offsets.push_back(next_id);
    for (int k = 0; k < N / 2; ++k) {
        net.switches.push_back({next_id, 0, k, 0, 0});
        stage0.push_back(next_id++);
    }
    for (int s = 1; s < n; ++s) {
        net.stage_offsets.push_back(next_id);
        for (int j = 0; j < N; ++j) {
            net.switches.push_back({next_id, s, j, 0, 0});
            mid[s].push_back(next_id++);
        }
    }
    net.stage_offsets.push_back(next_id);
    for (int k = 0; k < N / 2; ++k) {
        net.switches.push_back({next_id, n, k, 0, 0});
        stage_last.push_back(next_id++);
    }

    for (int k = 0; k < N / 2; ++k)
        for (int t : combined_pair_targets(k, N))
            net.links.push_back({stage0[k], mid[1][t], combined_pair_kind(k, t)});

    for (int s = 1; s + 1 < n; ++s) {
        for (int j = 0; j < N; ++j) {
            auto [up, st, down] = plus_minus_targets(j, s, N);
            net.links.push_back({mid[s][j], mid[s + 1][up], LinkKind::Up});
            net.links.push_back({mid[s][j], mid[s + 1][st], LinkKind::Straight});
            net.links.push_back({mid[s][j], mid[s + 1][down], LinkKind::Down});
        }
    }

    // Last hop mirrors the combined-pair rule on the receive side.
    for (int k = 0; k < N / 2; ++k)
        for (int t : combined_pair_targets(k, N))
            net.links.push_back({mid[n - 1][t], stage_last[k], combined_pair_kind(k, t)});

    for (int t = 0; t < N; ++t) {
        net.source_switch.push_back(stage0[t / 2]);
        net.sink_switch.push_back(stage_last[t / 2]);
    }
    net.finalize();
    return net;
}

Network build_3dcgmin(const NetworkParams& p) {
    const int N = p.terminal_count();
    const int n = p.n;
    Network net;
    net.params = p;
    net.name = "3dcgmin-n" + std::to_string(n) + "-g" + std::to_string(p.gamma);
    net.terminal_count = N;

    int next_id = 1;
    std::vector<std::vector<int>> stage_ids(n + 1);
    for (int s = 0; s <= n; ++s) {
        net.stage_offsets.push_back(next_id);
        for (int j = 0; j < N; ++j) {
            net.switches.push_back({next_id, s, j, 0, 0});
            stage_ids[s].push_back(next_id++);
        }
    }
    for (int s = 0; s < n; ++s) {
        int e = cyclic_exponent(p.gamma, s, n);
        for (int j = 0; j < N; ++j) {
            auto [st, up, down] = cyclic_targets(j, e, N);
            net.links.push_back({stage_ids[s][j], stage_ids[s + 1][st], LinkKind::Straight});
            net.links.push_back({stage_ids[s][j], stage_ids[s + 1][up], LinkKind::Up});
            net.links.push_back({stage_ids[s][j], stage_ids[s + 1][down], LinkKind::Down});
        }
    }
    for (int k = 0; k < N / 2; ++k)
        net.links.push_back({stage_ids[0][k], stage_ids[0][k + N / 2], LinkKind::Alternate});

    for (int t = 0; t < N; ++t) {
        net.source_switch.push_back(stage_ids[0][t]);
        net.sink_switch.push_back(stage_ids[n][t]);
    }
    net.finalize();
    return net;
}

}  // namespace

Network build_network(const NetworkParams& params) {
    if (params.n < 2)
        throw std::invalid_argument("stage exponent n must be at least 2");
    if (params.gamma < 0)
        throw std::invalid_argument("gamma must be non-negative");
    if (params.gamma > 0 && params.family != Family::ThreeDCGmin)
        throw std::invalid_argument("gamma applies only to the cyclic family");
    switch (params.family) {
        case Family::Gmin: return build_gmin(params);
        case Family::ThreeDGmin: return build_3dgmin(params);
        case Family::ThreeDCGmin: return build_3dcgmin(params);
    }
    throw std::invalid_argument("unknown family");
}

std::string export_dot(const Network& net) {
    std::ostringstream out;
    out << "digraph \"" << net.name << "\" {\n";
    out << "  rankdir=LR;\n  node [shape=box];\n";
    std::map<int, std::vector<int>> per_stage;
    for (const auto& sw : net.switches) per_stage[sw.stage].push_back(sw.id);
    for (const auto& [stage, ids] : per_stage) {
        out << "  subgraph cluster_stage" << stage << " {\n";
        out << "    label=\"stage " << stage << "\";\n";
        for (int id : ids) out << "    se" << id << " [label=\"SE " << id << "\"];\n";
        out << "  }\n";
    }
    for (const auto& link : net.links) {
        out << "  se" << link.from << " -> se" << link.to;
        if (link.kind == LinkKind::Alternate)
            out << " [style=dashed, dir=none, label=\"alt\"]";
        else
            out << " [label=\"" << (link.kind == LinkKind::Straight ? "s"
                                    : link.kind == LinkKind::Up     ? "u"
                                                                    : "d")
                << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace minstab
