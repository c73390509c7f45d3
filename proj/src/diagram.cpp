#include "brauercat/diagram.hpp"

#include <algorithm>

#include "brauercat/errors.hpp"

namespace brauercat {

void canonicalize_pairs(std::vector<std::pair<int, int>>& pairs) {
    for (auto& [a, b] : pairs)
        if (a > b) std::swap(a, b);
    std::sort(pairs.begin(), pairs.end());
}

Diagram make_diagram(int source, int target, std::vector<std::pair<int, int>> pairs) {
    const int n = source + target;
    if (n % 2 != 0) throw Error("diagram needs an even number of boundary points");
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b)
            throw Error("pair out of range");
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
    }
    for (int d : deg)
        if (d != 1) throw Error("pairs are not a perfect matching");
    canonicalize_pairs(pairs);
    return Diagram{source, target, std::move(pairs)};
}

namespace {

void matchings_rec(std::vector<int>& pts, std::vector<std::pair<int, int>>& cur,
                   std::vector<std::vector<std::pair<int, int>>>& out) {
    if (pts.empty()) {
        out.push_back(cur);
        return;
    }
    const int first = pts.front();
    for (std::size_t k = 1; k < pts.size(); ++k) {
        const int partner = pts[k];
        std::vector<int> rest;
        rest.reserve(pts.size() - 2);
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (i != k) rest.push_back(pts[i]);
        cur.emplace_back(first, partner);
        matchings_rec(rest, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> all_matchings(const std::vector<int>& points) {
    if (points.size() % 2 != 0) return {};
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> pts = points;
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<int, int>> cur;
    matchings_rec(pts, cur, out);
    return out;
}

Traced trace_graph(int n_nodes, const std::vector<std::pair<int, int>>& edges,
                   int n_endpoints) {
    // incidence lists of edge ids
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_nodes));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        inc[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
        inc[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < n_nodes; ++v) {
        const std::size_t want = v < n_endpoints ? 1 : 2;
        if (inc[static_cast<std::size_t>(v)].size() != want)
            throw Error("malformed strand graph: bad degree");
    }
    std::vector<bool> used(edges.size(), false);
    Traced res;

    auto walk = [&](int start, int first_edge) -> int {
        int v = start;
        int e = first_edge;
        for (;;) {
            used[static_cast<std::size_t>(e)] = true;
            const auto [a, b] = edges[static_cast<std::size_t>(e)];
            v = (a == v) ? b : a;
            if (v < n_endpoints) return v;
            const auto& ie = inc[static_cast<std::size_t>(v)];
            e = used[static_cast<std::size_t>(ie[0])] ? ie[1] : ie[0];
            if (used[static_cast<std::size_t>(e)]) return -1;  // closed a loop
        }
    };

    for (int v = 0; v < n_endpoints; ++v) {
        const auto& ie = inc[static_cast<std::size_t>(v)];
        if (used[static_cast<std::size_t>(ie[0])]) continue;
        const int other = walk(v, ie[0]);
        res.ends.emplace_back(v, other);
    }
    // remaining unused edges form internal cycles
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (used[e]) continue;
        ++res.loops;
        used[e] = true;
        int v = edges[e].second;
        int cur = static_cast<int>(e);
        for (;;) {
            const auto& ie = inc[static_cast<std::size_t>(v)];
            const int nxt = (ie[0] == cur || used[static_cast<std::size_t>(ie[0])])
                                ? ie[1]
                                : ie[0];
            if (used[static_cast<std::size_t>(nxt)]) break;
            used[static_cast<std::size_t>(nxt)] = true;
            const auto [a, b] = edges[static_cast<std::size_t>(nxt)];
            v = (a == v) ? b : a;
            cur = nxt;
        }
    }
    return res;
}

}  // namespace brauercat
