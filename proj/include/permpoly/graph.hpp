#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace permpoly {

using VertexPair = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// edges are stored normalized (u < v, sorted, deduplicated) and adjacency
// lists are sorted ascending.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const VertexPair> edges);
    Graph(int n, std::initializer_list<VertexPair> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& rhs) const = default;

private:
    friend struct BuildResult;
    friend BuildResult build_graph(int n, std::span<const VertexPair> edge_list);

    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> adj_;
};

struct BuildResult {
    Graph graph;
    // Input edges dropped because an identical edge appeared earlier.
    int duplicates_collapsed = 0;
};

// Validates endpoints, rejects self-loops, collapses duplicate edges.
BuildResult build_graph(int n, std::span<const VertexPair> edge_list);

// 2-coloring witness; side[v] is 0 or 1, assigned per connected component
// (the smallest vertex of each component gets side 0).
struct Bipartition {
    std::vector<std::int8_t> side;
};

struct BipartiteCheck {
    // Present iff the graph is bipartite.
    std::optional<Bipartition> coloring;
    // Nonempty iff not bipartite: an odd simple cycle, as a vertex sequence.
    std::vector<int> odd_cycle;
};

BipartiteCheck check_bipartite(const Graph& g);
std::optional<Bipartition> is_bipartite(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // old_label[new_vertex] = label in the original graph.
    std::vector<int> old_label;
};

// Induced subgraph on the complement of `vs`, relabeled contiguously
// preserving the original vertex order.
InducedSubgraph delete_vertices(const Graph& g, std::span<const int> vs);

// Vertices of g2 are shifted by g1.n().
Graph disjoint_union(const Graph& g1, const Graph& g2);

} // namespace permpoly
