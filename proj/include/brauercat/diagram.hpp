#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace brauercat {

// A Brauer diagram i -> j: a perfect matching on i + j boundary points.
// Points 0..i-1 are the bottom boundary (left to right), points i..i+j-1 the
// top boundary. Canonical form: each pair low-index-first, pair list sorted.
struct Diagram {
    int source = 0;
    int target = 0;
    std::vector<std::pair<int, int>> pairs;

    int points() const { return source + target; }
    auto operator<=>(const Diagram&) const = default;
};

// Validates the matching and brings the pair list to canonical form.
Diagram make_diagram(int source, int target, std::vector<std::pair<int, int>> pairs);

// Canonicalizes a pair list in place (no validation).
void canonicalize_pairs(std::vector<std::pair<int, int>>& pairs);

// All perfect matchings of the given (sorted) point set, in a fixed
// deterministic order: the smallest point is matched with each larger
// partner in increasing order, recursively.
std::vector<std::vector<std::pair<int, int>>> all_matchings(const std::vector<int>& points);

// Strand tracing in a glued diagram. Nodes 0..n_endpoints-1 are endpoints
// (degree 1), the rest internal (degree 2). Returns the endpoint pairs the
// strands connect, plus the number of closed loops among internal nodes.
struct Traced {
    std::vector<std::pair<int, int>> ends;
    int loops = 0;
};
Traced trace_graph(int n_nodes, const std::vector<std::pair<int, int>>& edges,
                   int n_endpoints);

}  // namespace brauercat
