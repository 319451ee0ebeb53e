#pragma once

#include <tuple>

#include "minstab/types.hpp"

namespace minstab {

int floor_mod(int value, int modulus);

// Stage-i fan-out of switch j in an N-terminal plus/minus-2^i stage:
// (up, straight, down) = ((j - 2^i) mod N, j, (j + 2^i) mod N).
std::tuple<int, int, int> plus_minus_targets(int j, int i, int N);

// Cyclic fan-out with exponent e: (straight, up, down) =
// (j, (j - 2^e) mod N, (j + 2^e) mod N).
std::tuple<int, int, int> cyclic_targets(int j, int e, int N);

// Effective cyclic exponent for stage i with start gamma over n-1 exponents.
int cyclic_exponent(int gamma, int i, int n);

// Build a full generated network for the given parameters. Throws
// std::invalid_argument for unsupported parameters (n < 2, gamma < 0,
// gamma on a non-cyclic family).
Network build_network(const NetworkParams& params);

// Graphviz dot rendering, one cluster per stage. Deterministic output.
std::string export_dot(const Network& net);

}  // namespace minstab
