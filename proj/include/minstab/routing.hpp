#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minstab/types.hpp"

namespace minstab {

struct Path {
    std::vector<int> hops;   // switch ids, source switch first
    int hop_count = 0;       // inter-stage traversals (alternate hop excluded)
    int visits = 0;          // total switches touched
    bool used_alternate = false;

    bool operator==(const Path& o) const {
        return hops == o.hops && hop_count == o.hop_count &&
               used_alternate == o.used_alternate;
    }
};

// "SE a – SE b – ..." rendering of a path.
std::string to_string(const Path& p);

// All source->destination routes in canonical order: fewest non-straight
// steps first, then lexicographic hop sequence. Terminals are validated;
// an empty result is a legal outcome. When use_alternate is set, a single
// alternate transfer is allowed as the first move.
std::vector<Path> enumerate_paths(const Network& net, int src, int dst,
                                  bool use_alternate = false);

// Routing tags: digit vectors in {-1,0,1}^n with sum(d_k * 2^k) == diff
// (mod 2^n), canonical lexicographic order with -1 < 0 < 1.
using Tag = std::vector<int8_t>;

std::string to_string(const Tag& tag);

std::vector<Tag> distance_tags(int src, int dst, int n);

// Maximum number of internally vertex-disjoint src->dst routes; the
// alternate link is included whenever the network has one.
int count_disjoint_paths(const Network& net, int src, int dst);

}  // namespace minstab
