#include "minstab/routing.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "minstab/topology.hpp"

namespace minstab {

std::string to_string(const Path& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.hops.size(); ++i) {
        if (i) out << " – ";
        out << "SE " << p.hops[i];
    }
    return out.str();
}

namespace {

int non_straight_steps(const Network& net, const std::vector<int>& hops,
                       bool used_alternate) {
    int count = used_alternate ? 1 : 0;
    size_t first = used_alternate ? 1 : 0;
    for (size_t i = first; i + 1 < hops.size(); ++i)
        if (!net.step_is_straight(hops[i], hops[i + 1])) ++count;
    return count;
}

void walk(const Network& net, int current, int target, std::vector<int>& hops,
          bool used_alternate, std::vector<Path>& out) {
    if (current == target) {
        Path p;
        p.hops = hops;
        p.used_alternate = used_alternate;
        p.visits = static_cast<int>(hops.size());
        p.hop_count = static_cast<int>(hops.size()) - 1 - (used_alternate ? 1 : 0);
        out.push_back(p);
        return;
    }
    auto it = net.forward.find(current);
    if (it == net.forward.end()) return;
    for (int next : it->second) {
        hops.push_back(next);
        walk(net, next, target, hops, used_alternate, out);
        hops.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_paths(const Network& net, int src, int dst,
                                  bool use_alternate) {
    if (src < 0 || src >= net.terminal_count)
        throw std::invalid_argument("source terminal out of range");
    if (dst < 0 || dst >= net.terminal_count)
        throw std::invalid_argument("destination terminal out of range");

    int start = net.source_switch[src];
    int target = net.sink_switch[dst];

    std::vector<Path> out;
    std::vector<int> hops{start};
    walk(net, start, target, hops, false, out);

    if (use_alternate) {
        auto alt = net.alternate_peers.find(start);
        if (alt != net.alternate_peers.end()) {
            for (int peer : alt->second) {
                std::vector<int> alt_hops{start, peer};
                walk(net, peer, target, alt_hops, true, out);
            }
        }
    }

    std::stable_sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        int na = non_straight_steps(net, a.hops, a.used_alternate);
        int nb = non_straight_steps(net, b.hops, b.used_alternate);
        if (na != nb) return na < nb;
        return a.hops < b.hops;
    });
    return out;
}

std::string to_string(const Tag& tag) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < tag.size(); ++i) {
        if (i) out << ", ";
        out << static_cast<int>(tag[i]);
    }
    out << ")";
    return out.str();
}

namespace {

void extend_tag(int rem, int k, int n, int N, Tag& digits, std::vector<Tag>& out) {
    if (k == n) {
        if (rem == 0) out.push_back(digits);
        return;
    }
    int step = 1 << k;
    for (int8_t d : {int8_t{-1}, int8_t{0}, int8_t{1}}) {
        int next = floor_mod(rem - d * step, N);
        // Remaining digits only produce multiples of 2^(k+1).
        if (next % (step * 2) != 0) continue;
        digits.push_back(d);
        extend_tag(next, k + 1, n, N, digits, out);
        digits.pop_back();
    }
}

}  // namespace

std::vector<Tag> distance_tags(int src, int dst, int n) {
    if (n < 1) throw std::invalid_argument("digit count must be positive");
    int N = 1 << n;
    if (src < 0 || src >= N) throw std::invalid_argument("source out of range");
    if (dst < 0 || dst >= N) throw std::invalid_argument("destination out of range");
    int diff = floor_mod(dst - src, N);
    std::vector<Tag> out;
    Tag digits;
    extend_tag(diff, 0, n, N, digits, out);
    return out;
}

namespace {

// Node-split max flow: vertex v becomes v_in -> v_out with capacity 1,
// except the two endpoints which stay uncapacitated.
struct FlowNet {
    std::map<int, std::map<int, int>> cap;

    void add(int u, int v, int c) { cap[u][v] += c; (void)cap[v][u]; }

    int augment(int s, int t) {
        std::map<int, int> parent;
        std::queue<int> q;
        q.push(s);
        parent[s] = s;
        while (!q.empty() && !parent.count(t)) {
            int u = q.front();
            q.pop();
            for (auto& [v, c] : cap[u]) {
                if (c > 0 && !parent.count(v)) {
                    parent[v] = u;
                    q.push(v);
                }
            }
        }
        if (!parent.count(t)) return 0;
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= 1;
            cap[v][parent[v]] += 1;
        }
        return 1;
    }
};

}  // namespace

int count_disjoint_paths(const Network& net, int src, int dst) {
    auto paths = enumerate_paths(net, src, dst, net.has_alternates());
    if (paths.empty()) return 0;

    int start = net.source_switch[src];
    int target = net.sink_switch[dst];
    if (start == target) return static_cast<int>(!paths.empty());

    auto in_node = [](int id) { return id * 2; };
    auto out_node = [](int id) { return id * 2 + 1; };

    FlowNet flow;
    std::set<int> seen;
    std::set<std::pair<int, int>> edges;
    for (const auto& p : paths) {
        for (int id : p.hops) seen.insert(id);
        for (size_t i = 0; i + 1 < p.hops.size(); ++i)
            edges.insert({p.hops[i], p.hops[i + 1]});
    }
    for (int id : seen) {
        int c = (id == start || id == target) ? 1 << 20 : 1;
        flow.add(in_node(id), out_node(id), c);
    }
    for (auto [a, b] : edges) flow.add(out_node(a), in_node(b), 1);

    int total = 0;
    while (flow.augment(in_node(start), out_node(target))) ++total;
    return total;
}

}  // namespace minstab
