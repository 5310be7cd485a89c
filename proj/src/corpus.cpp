#include "permpoly/corpus.hpp"

#include "permpoly/errors.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

namespace permpoly {

Graph empty_graph(int n) {
    return Graph(n, {});
}

Graph path_graph(int n) {
    if (n < 0)
        throw GraphError("path_graph: negative size");
    std::vector<VertexPair> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw GraphError("cycle_graph: need at least 3 vertices");
    std::vector<VertexPair> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    if (leaves < 0)
        throw GraphError("star_graph: negative leaf count");
    std::vector<VertexPair> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0)
        throw GraphError("complete_bipartite: negative part size");
    std::vector<VertexPair> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            edges.emplace_back(u, a + v);
    return Graph(a + b, edges);
}

Graph tree_from_pruefer(std::span<const int> code) {
    const int n = static_cast<int>(code.size()) + 2;
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int c : code) {
        if (c < 0 || c >= n)
            throw GraphError("tree_from_pruefer: code value out of range");
        ++deg[static_cast<std::size_t>(c)];
    }
    std::vector<VertexPair> edges;
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1)
        ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--deg[static_cast<std::size_t>(c)] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1)
                ++ptr;
            leaf = ptr;
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1) {
            (a < 0 ? a : b) = v;
            if (b >= 0)
                break;
        }
    }
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

namespace {

// Fisher-Yates with an explicit generator so results do not depend on the
// standard library's std::shuffle implementation.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

} // namespace

Graph random_tree(std::uint64_t seed, int n) {
    if (n < 1)
        throw GraphError("random_tree: need at least one vertex");
    if (n == 1)
        return empty_graph(1);
    if (n == 2)
        return Graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> code(static_cast<std::size_t>(n) - 2);
    for (int& c : code)
        c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return tree_from_pruefer(code);
}

Graph random_bipartite(std::uint64_t seed, int n, int m) {
    if (n < 0 || m < 0)
        throw GraphError("random_bipartite: negative parameter");
    const int max_cross = (n / 2) * (n - n / 2);
    if (m > max_cross)
        throw GraphError("random_bipartite: " + std::to_string(m) +
                         " edges exceed any bipartition of " + std::to_string(n) + " vertices");
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
        std::vector<std::int8_t> side(static_cast<std::size_t>(n));
        for (auto& s : side)
            s = static_cast<std::int8_t>(rng() & 1);
        std::vector<VertexPair> cross;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)])
                    cross.emplace_back(u, v);
        if (static_cast<int>(cross.size()) < m)
            continue;
        deterministic_shuffle(cross, rng);
        cross.resize(static_cast<std::size_t>(m));
        return Graph(n, cross);
    }
    throw GraphError("random_bipartite: no side assignment met the edge count");
}

Graph generate(const FamilySpec& spec) {
    using F = FamilySpec::Family;
    switch (spec.family) {
    case F::path:
        return path_graph(spec.p1);
    case F::cycle:
        return cycle_graph(spec.p1);
    case F::star:
        return star_graph(spec.p1);
    case F::complete_bipartite:
        return complete_bipartite(spec.p1, spec.p2);
    case F::tree_random:
        return random_tree(spec.seed, spec.p1);
    case F::bipartite_random:
        return random_bipartite(spec.seed, spec.p1, spec.p2);
    }
    throw GraphError("generate: unknown family");
}

namespace {

constexpr int kExhaustiveCap = 8;

std::vector<VertexPair> pair_order(int n) {
    std::vector<VertexPair> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

// 2-colorability straight on adjacency bitmasks; avoids building a Graph for
// the masks that fail.
bool mask_bipartite(const std::array<std::uint32_t, 8>& adj, int n) {
    std::array<std::int8_t, 8> color{};
    color.fill(-1);
    std::array<int, 8> stack{};
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1)
            continue;
        color[static_cast<std::size_t>(root)] = 0;
        int top = 0;
        stack[0] = root;
        ++top;
        while (top) {
            const int v = stack[--top];
            std::uint32_t nb = adj[static_cast<std::size_t>(v)];
            while (nb) {
                const int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] =
                        static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(v)]);
                    stack[top++] = u;
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

template <bool BipartiteOnly>
void for_each_graph_impl(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > kExhaustiveCap)
        throw GraphError("exhaustive generation supports 0 <= n <= " +
                         std::to_string(kExhaustiveCap));
    const auto pairs = pair_order(n);
    const std::uint64_t total = std::uint64_t(1) << pairs.size();
    std::vector<VertexPair> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if constexpr (BipartiteOnly) {
            std::array<std::uint32_t, 8> adj{};
            std::uint64_t bits = mask;
            while (bits) {
                const int b = std::countr_zero(bits);
                bits &= bits - 1;
                const auto [u, v] = pairs[static_cast<std::size_t>(b)];
                adj[static_cast<std::size_t>(u)] |= 1u << v;
                adj[static_cast<std::size_t>(v)] |= 1u << u;
            }
            if (!mask_bipartite(adj, n))
                continue;
        }
        edges.clear();
        std::uint64_t bits = mask;
        while (bits) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            edges.push_back(pairs[static_cast<std::size_t>(b)]);
        }
        fn(Graph(n, edges));
    }
}

} // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    for_each_graph_impl<false>(n, fn);
}

void for_each_bipartite_graph(int n, const std::function<void(const Graph&)>& fn) {
    for_each_graph_impl<true>(n, fn);
}

Graph figure1_graph() {
    // Frozen output of tools/find_figure1 (lexicographically smallest
    // solution); mirrored in data/figure1.edgelist.
    return Graph(10, {{0, 2}, {0, 3}, {0, 4}, {0, 8}, {1, 2}, {1, 3}, {1, 4}, {2, 9},
                      {3, 5}, {5, 6}, {6, 7}, {7, 8}});
}

} // namespace permpoly
