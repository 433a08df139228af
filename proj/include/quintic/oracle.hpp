#pragma once

#include <optional>
#include <vector>

#include "quintic/graph.hpp"

namespace quintic {

/// Some perfect code of g, or nullopt. Deterministic: each search node
/// branches on the uncovered vertex with the fewest admissible candidates
/// (lowest index on ties), trying candidates in increasing order.
std::optional<VertexSet> find_perfect_code(const Graph &g);

/// All perfect codes of g, optionally only those containing a given vertex,
/// sorted. Complete by exhaustive backtracking.
std::vector<VertexSet> enumerate_perfect_codes(
    const Graph &g, std::optional<int> containing = std::nullopt);

/// Reference enumeration for small regular graphs: tests every subset of
/// size n / (k + 1) directly. Returns an empty list when (k + 1) does not
/// divide n. Throws InvalidInput on non-regular graphs or n > 64.
std::vector<VertexSet> enumerate_perfect_codes_naive(const Graph &g);

}  // namespace quintic
