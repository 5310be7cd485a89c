#pragma once

#include "permpoly/graph.hpp"

#include <cstdint>
#include <functional>
#include <span>

namespace permpoly {

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n); // n >= 3
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

// Standard Pruefer decoding; code values in [0, n) with n = code.size() + 2.
Graph tree_from_pruefer(std::span<const int> code);

// Uniformly random labeled tree on n >= 1 vertices (random Pruefer code).
Graph random_tree(std::uint64_t seed, int n);

// Random 2-colored graph: sides are sampled i.i.d. (re-sampled with a derived
// seed if the side split cannot host m edges), then m distinct cross edges
// are drawn. Deterministic for a given (seed, n, m).
Graph random_bipartite(std::uint64_t seed, int n, int m);

struct FamilySpec {
    enum class Family { path, cycle, star, complete_bipartite, tree_random, bipartite_random };
    Family family = Family::path;
    int p1 = 0;
    int p2 = 0;
    std::uint64_t seed = 0;
};

Graph generate(const FamilySpec& spec);

// Every labeled graph on n <= 8 vertices, in increasing edge-mask order.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

// Every labeled bipartite graph on n <= 8 vertices, in the same order.
void for_each_bipartite_graph(int n, const std::function<void(const Graph&)>& fn);

// The pinned 10-vertex, 12-edge fixture: bipartite, exactly three
// quadrilaterals and two octagons, no two of them vertex-disjoint. Found by
// tools/find_figure1 and frozen here and in data/figure1.edgelist.
Graph figure1_graph();

} // namespace permpoly
