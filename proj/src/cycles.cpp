#include "permpoly/cycles.hpp"

#include "permpoly/errors.hpp"

#include <algorithm>
#include <string>

namespace permpoly {

std::vector<int> Cycle::sorted_vertices() const {
    std::vector<int> s(vertices);
    std::sort(s.begin(), s.end());
    return s;
}

bool Cycle::vertex_disjoint(const Cycle& other) const {
    const auto a = sorted_vertices();
    const auto b = other.sorted_vertices();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return false;
        (a[i] < b[j]) ? ++i : ++j;
    }
    return true;
}

namespace {

// Backtracking lister anchored at the cycle's smallest vertex: paths grow
// only through larger vertices, and a cycle is emitted when the path closes
// back to the anchor with path[1] < path.back(), which kills the reflected
// traversal. Each simple cycle is emitted exactly once.
struct Lister {
    const Graph& g;
    CycleOptions opts;
    std::vector<Cycle> out;
    std::vector<int> path;
    std::vector<char> in_path;

    explicit Lister(const Graph& graph, CycleOptions o)
        : g(graph), opts(o), in_path(static_cast<std::size_t>(graph.n()), 0) {}

    void emit() {
        if (out.size() >= opts.budget)
            throw CycleBudgetError("cycle enumeration exceeded budget of " +
                                   std::to_string(opts.budget) + " cycles");
        out.push_back(Cycle{path});
    }

    void dfs(int v) {
        const int anchor = path.front();
        for (int u : g.neighbors(v)) {
            if (u == anchor && path.size() >= 3 && path[1] < v)
                emit();
            if (u <= anchor || in_path[static_cast<std::size_t>(u)])
                continue;
            if (opts.max_len > 0 && static_cast<int>(path.size()) >= opts.max_len)
                continue;
            path.push_back(u);
            in_path[static_cast<std::size_t>(u)] = 1;
            dfs(u);
            in_path[static_cast<std::size_t>(u)] = 0;
            path.pop_back();
        }
    }

    void run() {
        for (int s = 0; s < g.n(); ++s) {
            path.assign(1, s);
            in_path[static_cast<std::size_t>(s)] = 1;
            dfs(s);
            in_path[static_cast<std::size_t>(s)] = 0;
        }
    }
};

} // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, CycleOptions opts) {
    Lister lister(g, opts);
    lister.run();
    std::sort(lister.out.begin(), lister.out.end(), [](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.vertices < b.vertices;
    });
    return lister.out;
}

std::vector<Cycle> four_k_cycles(const Graph& g, CycleOptions opts) {
    std::vector<Cycle> out;
    for (auto& c : enumerate_cycles(g, opts))
        if (c.is_four_k())
            out.push_back(std::move(c));
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::C4kFree:
        return "C4kFree";
    case Verdict::FourKIntercyclic:
        return "FourKIntercyclic";
    case Verdict::NotIntercyclic:
        return "NotIntercyclic";
    }
    return "?";
}

Classification classify(const Graph& g, CycleOptions opts) {
    Classification out;
    out.four_k = four_k_cycles(g, opts);
    if (out.four_k.empty()) {
        out.verdict = Verdict::C4kFree;
        return out;
    }
    // Two 4k-cycles violate intercyclicity iff their vertex sets are disjoint.
    for (std::size_t i = 0; i < out.four_k.size(); ++i) {
        for (std::size_t j = i + 1; j < out.four_k.size(); ++j) {
            if (out.four_k[i].vertex_disjoint(out.four_k[j])) {
                out.verdict = Verdict::NotIntercyclic;
                out.witness = std::make_pair(out.four_k[i], out.four_k[j]);
                return out;
            }
        }
    }
    out.verdict = Verdict::FourKIntercyclic;
    return out;
}

} // namespace permpoly
