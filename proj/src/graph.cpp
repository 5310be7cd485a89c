#include "permpoly/graph.hpp"

#include "permpoly/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace permpoly {

BuildResult build_graph(int n, std::span<const VertexPair> edge_list) {
    if (n < 0)
        throw GraphError("vertex count must be nonnegative");
    std::vector<VertexPair> norm;
    norm.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    const auto before = norm.size();
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    BuildResult out;
    out.duplicates_collapsed = static_cast<int>(before - norm.size());
    out.graph.n_ = n;
    out.graph.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : norm) {
        out.graph.adj_[static_cast<std::size_t>(u)].push_back(v);
        out.graph.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : out.graph.adj_)
        std::sort(nb.begin(), nb.end());
    out.graph.edges_ = std::move(norm);
    return out;
}

Graph::Graph(int n, std::span<const VertexPair> edges) {
    *this = build_graph(n, edges).graph;
}

Graph::Graph(int n, std::initializer_list<VertexPair> edges)
    : Graph(n, std::span<const VertexPair>(edges.begin(), edges.size())) {}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        return false;
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

BipartiteCheck check_bipartite(const Graph& g) {
    const int n = g.n();
    std::vector<std::int8_t> side(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1)
            continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (side[static_cast<std::size_t>(u)] == -1) {
                    side[static_cast<std::size_t>(u)] =
                        static_cast<std::int8_t>(1 - side[static_cast<std::size_t>(v)]);
                    parent[static_cast<std::size_t>(u)] = v;
                    depth[static_cast<std::size_t>(u)] = depth[static_cast<std::size_t>(v)] + 1;
                    q.push(u);
                } else if (side[static_cast<std::size_t>(u)] == side[static_cast<std::size_t>(v)]) {
                    // Conflict edge (v, u): climb to the lowest common ancestor
                    // in the BFS tree to extract an odd simple cycle.
                    std::vector<int> up_v, up_u;
                    int a = v, b = u;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
                        up_v.push_back(a);
                        a = parent[static_cast<std::size_t>(a)];
                    }
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
                        up_u.push_back(b);
                        b = parent[static_cast<std::size_t>(b)];
                    }
                    while (a != b) {
                        up_v.push_back(a);
                        up_u.push_back(b);
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                    }
                    BipartiteCheck out;
                    out.odd_cycle.push_back(a);
                    for (auto it = up_v.rbegin(); it != up_v.rend(); ++it)
                        out.odd_cycle.push_back(*it);
                    for (int w : up_u)
                        out.odd_cycle.push_back(w);
                    return out;
                }
            }
        }
    }
    BipartiteCheck out;
    out.coloring = Bipartition{std::move(side)};
    return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    return check_bipartite(g).coloring;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const int> vs) {
    std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.n())
            throw GraphError("delete_vertices: vertex " + std::to_string(v) + " out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<int> new_label(static_cast<std::size_t>(g.n()), -1);
    InducedSubgraph out;
    for (int v = 0; v < g.n(); ++v) {
        if (!gone[static_cast<std::size_t>(v)]) {
            new_label[static_cast<std::size_t>(v)] = static_cast<int>(out.old_label.size());
            out.old_label.push_back(v);
        }
    }
    std::vector<VertexPair> edges;
    for (auto [u, v] : g.edges()) {
        if (!gone[static_cast<std::size_t>(u)] && !gone[static_cast<std::size_t>(v)])
            edges.emplace_back(new_label[static_cast<std::size_t>(u)],
                               new_label[static_cast<std::size_t>(v)]);
    }
    out.graph = Graph(static_cast<int>(out.old_label.size()), edges);
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<VertexPair> edges = g1.edges();
    edges.reserve(edges.size() + g2.edges().size());
    for (auto [u, v] : g2.edges())
        edges.emplace_back(u + g1.n(), v + g1.n());
    return Graph(g1.n() + g2.n(), edges);
}

} // namespace permpoly
