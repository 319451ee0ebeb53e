#pragma once

#include <random>
#include <string>
#include <vector>

#include "minstab/types.hpp"

// Arbitrary forward-staged networks for property tests: random stage count,
// widths, and fan-out, including the occasional dead-end switch.
inline minstab::Network make_random_staged(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> stage_count_d(3, 5);
    std::uniform_int_distribution<int> width_d(2, 6);
    std::uniform_int_distribution<int> fan_d(1, 3);
    std::uniform_int_distribution<int> kind_d(0, 2);
    std::uniform_int_distribution<int> dead_d(0, 9);

    int stages = stage_count_d(rng);
    minstab::Network net;
    net.name = "staged-" + std::to_string(seed);
    net.generated = false;
    net.terminal_count = 0;

    std::vector<std::vector<int>> ids(stages);
    int next_id = 1;
    for (int s = 0; s < stages; ++s) {
        int width = width_d(rng);
        net.stage_offsets.push_back(next_id);
        for (int j = 0; j < width; ++j) {
            net.switches.push_back({next_id, s, j, 0, 0});
            ids[s].push_back(next_id);
            ++next_id;
        }
    }
    for (int s = 0; s + 1 < stages; ++s)
        for (int from : ids[s]) {
            if (dead_d(rng) == 0) continue;
            int fan = fan_d(rng);
            std::uniform_int_distribution<int> pick(
                0, static_cast<int>(ids[s + 1].size()) - 1);
            for (int c = 0; c < fan; ++c) {
                auto kind = static_cast<minstab::LinkKind>(kind_d(rng));
                net.links.push_back({from, ids[s + 1][pick(rng)], kind});
            }
        }
    net.finalize();
    return net;
}
