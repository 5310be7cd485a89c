#include "permpoly/oracle.hpp"

#include "permpoly/cycles.hpp"
#include "permpoly/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace permpoly {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (cap > 62)
        cap = 62; // vertex-set bitmasks
    if (g.n() > cap)
        throw OracleCapError(std::string(what) + ": graph has " + std::to_string(g.n()) +
                             " vertices, cap is " + std::to_string(cap));
}

// The cycle list backs the packing enumeration, so each listed cycle is
// revalidated against the graph before being trusted.
void verify_cycle(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 3)
        throw std::logic_error("cycle lister returned a cycle shorter than 3");
    std::vector<int> sorted = c.sorted_vertices();
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::logic_error("cycle lister returned a repeated vertex");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        int u = vs[i];
        int v = vs[(i + 1) % vs.size()];
        if (u < 0 || u >= g.n() || !g.has_edge(u, v))
            throw std::logic_error("cycle lister returned a non-cycle");
    }
}

struct PackedCycle {
    std::uint64_t mask;
    int len;
};

// Enumerates (cycle packing, disjoint matching) pairs, i.e. all Sachs
// subgraphs. visit(covered_by_cycles, edge_components, s, t, odd_cycles) is
// called once per subgraph; matching edges contribute 2 vertices each.
template <typename Visit>
struct SachsCore {
    const Graph& g;
    std::vector<PackedCycle> cycles;
    std::vector<std::uint64_t> nbr;
    Visit& visit;

    SachsCore(const Graph& graph, Visit& v) : g(graph), visit(v) {
        for (const Cycle& c : enumerate_cycles(g)) {
            verify_cycle(g, c);
            std::uint64_t mask = 0;
            for (int w : c.vertices)
                mask |= std::uint64_t(1) << w;
            cycles.push_back({mask, c.length()});
        }
        nbr.assign(static_cast<std::size_t>(g.n()), 0);
        for (auto [u, v] : g.edges()) {
            nbr[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
            nbr[static_cast<std::size_t>(v)] |= std::uint64_t(1) << u;
        }
    }

    void matchings(std::uint64_t free, int next_min, int covered, int edges, int s, int t,
                   int odd) {
        visit(covered, edges, s, t, odd);
        std::uint64_t cand = free & ~((std::uint64_t(1) << next_min) - 1);
        while (cand) {
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            std::uint64_t partners = nbr[static_cast<std::size_t>(v)] & free;
            partners &= ~((std::uint64_t(2) << v) - 1); // only u > v
            while (partners) {
                const int u = std::countr_zero(partners);
                partners &= partners - 1;
                matchings(free & ~(std::uint64_t(1) << v) & ~(std::uint64_t(1) << u), v + 1,
                          covered + 2, edges + 1, s, t, odd);
            }
        }
    }

    void packings(std::size_t idx, std::uint64_t free, int covered, int s, int t, int odd) {
        matchings(free, 0, covered, 0, s, t, odd);
        for (std::size_t j = idx; j < cycles.size(); ++j) {
            const auto& c = cycles[j];
            if (c.mask & ~free)
                continue;
            packings(j + 1, free & ~c.mask, covered + c.len, s + (c.len % 4 == 0),
                     t + (c.len % 4 == 2), odd + (c.len % 2 == 1));
        }
    }

    void run() {
        const std::uint64_t all =
            g.n() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n()) - 1;
        packings(0, all, 0, 0, 0, 0);
    }
};

template <typename Visit>
void sachs_enumerate(const Graph& g, Visit visit) {
    SachsCore<Visit> core(g, visit);
    core.run();
}

BigInt two_pow(int e) {
    BigInt r(1);
    r <<= e;
    return r;
}

} // namespace

void for_each_sachs(const Graph& g, const std::function<void(const SachsStats&)>& visit,
                    int cap) {
    check_cap(g, cap, "for_each_sachs");
    sachs_enumerate(g, [&](int covered, int edges, int s, int t, int odd) {
        SachsStats st;
        st.covered = covered;
        st.components = edges + s + t + odd;
        st.cycles = s + t + odd;
        st.four_k_cycles = s;
        st.four_k2_cycles = t;
        visit(st);
    });
}

IntPoly oracle_char_poly(const Graph& g, int cap) {
    check_cap(g, cap, "oracle_char_poly");
    const int n = g.n();
    // count[i][p mod 2][c]: Sachs subgraphs on i vertices.
    std::vector<std::array<std::vector<std::int64_t>, 2>> count(static_cast<std::size_t>(n) + 1);
    const int cmax = n / 3 + 1;
    for (auto& row : count)
        for (auto& par : row)
            par.assign(static_cast<std::size_t>(cmax) + 1, 0);
    sachs_enumerate(g, [&](int covered, int edges, int s, int t, int odd) {
        const int p = edges + s + t + odd;
        const int c = s + t + odd;
        ++count[static_cast<std::size_t>(covered)][static_cast<std::size_t>(p % 2)]
               [static_cast<std::size_t>(c)];
    });
    std::vector<BigInt> asc(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int i = 0; i <= n; ++i) {
        BigInt a(0);
        for (int c = 0; c <= cmax; ++c) {
            const std::int64_t even = count[static_cast<std::size_t>(i)][0][static_cast<std::size_t>(c)];
            const std::int64_t oddp = count[static_cast<std::size_t>(i)][1][static_cast<std::size_t>(c)];
            if (even || oddp)
                a += BigInt(even - oddp) * two_pow(c);
        }
        asc[static_cast<std::size_t>(n - i)] = a;
    }
    return IntPoly(std::move(asc));
}

IntPoly oracle_perm_poly(const Graph& g, int cap) {
    check_cap(g, cap, "oracle_perm_poly");
    const int n = g.n();
    std::vector<std::vector<std::int64_t>> count(static_cast<std::size_t>(n) + 1);
    const int cmax = n / 3 + 1;
    for (auto& row : count)
        row.assign(static_cast<std::size_t>(cmax) + 1, 0);
    sachs_enumerate(g, [&](int covered, int, int s, int t, int odd) {
        ++count[static_cast<std::size_t>(covered)][static_cast<std::size_t>(s + t + odd)];
    });
    std::vector<BigInt> asc(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int i = 0; i <= n; ++i) {
        BigInt b(0);
        for (int c = 0; c <= cmax; ++c) {
            const std::int64_t cnt = count[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (cnt)
                b += BigInt(cnt) * two_pow(c);
        }
        if (i % 2 == 1)
            b = -b;
        asc[static_cast<std::size_t>(n - i)] = b;
    }
    return IntPoly(std::move(asc));
}

IntPoly oracle_f_poly(const Graph& g, int cap) {
    check_cap(g, cap, "oracle_f_poly");
    if (!is_bipartite(g))
        throw NotBipartiteError("oracle_f_poly requires a bipartite graph");
    const int n = g.n();
    // f_i = sum over U_i with odd s of 2^(s+1) * 2^t.
    std::vector<BigInt> asc(static_cast<std::size_t>(n) + 1, BigInt(0));
    sachs_enumerate(g, [&](int covered, int, int s, int t, int odd) {
        if (odd != 0)
            throw std::logic_error("odd cycle in a bipartite graph");
        if (s % 2 == 1)
            asc[static_cast<std::size_t>(n - covered)] += two_pow(s + 1 + t);
    });
    return IntPoly(std::move(asc));
}

namespace {

struct PermEntry {
    std::array<std::uint8_t, 18> pair_data; // (i, sigma(i)) for moved i
    std::uint8_t moved = 0;
    std::int8_t sign = 1;
};

std::vector<PermEntry> build_perm_table(int n) {
    std::vector<PermEntry> table;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(static_cast<std::size_t>(n));
    do {
        PermEntry e;
        for (int i = 0; i < n; ++i) {
            if (perm[static_cast<std::size_t>(i)] != i) {
                e.pair_data[static_cast<std::size_t>(2 * e.moved)] = static_cast<std::uint8_t>(i);
                e.pair_data[static_cast<std::size_t>(2 * e.moved + 1)] =
                    static_cast<std::uint8_t>(perm[static_cast<std::size_t>(i)]);
                ++e.moved;
            }
        }
        std::fill(seen.begin(), seen.end(), 0);
        int n_cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)])
                continue;
            ++n_cycles;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)])
                seen[static_cast<std::size_t>(j)] = 1;
        }
        e.sign = static_cast<std::int8_t>((n - n_cycles) % 2 == 0 ? 1 : -1);
        table.push_back(e);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table;
}

const std::vector<PermEntry>& perm_table(int n) {
    static std::array<std::unique_ptr<const std::vector<PermEntry>>, 10> cache;
    static std::array<std::once_flag, 10> flags;
    std::call_once(flags[static_cast<std::size_t>(n)], [n] {
        cache[static_cast<std::size_t>(n)] =
            std::make_unique<const std::vector<PermEntry>>(build_perm_table(n));
    });
    return *cache[static_cast<std::size_t>(n)];
}

IntPoly permutation_expansion(const Graph& g, int cap, bool with_sign, const char* what) {
    if (cap > 9)
        cap = 9;
    if (g.n() > cap)
        throw OracleCapError(std::string(what) + ": graph has " + std::to_string(g.n()) +
                             " vertices, cap is " + std::to_string(cap));
    const int n = g.n();
    std::array<std::uint16_t, 9> adj{};
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
        adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
    }
    std::array<std::int64_t, 10> coeff{}; // coeff[d] for x^d
    if (n == 0)
        return IntPoly::one();
    for (const PermEntry& e : perm_table(n)) {
        bool feasible = true;
        for (int k = 0; k < e.moved; ++k) {
            const int i = e.pair_data[static_cast<std::size_t>(2 * k)];
            const int j = e.pair_data[static_cast<std::size_t>(2 * k + 1)];
            if (!(adj[static_cast<std::size_t>(i)] >> j & 1)) {
                feasible = false;
                break;
            }
        }
        if (!feasible)
            continue;
        // Term: sign(sigma) * prod(-1 over moved entries) * x^(n - moved).
        std::int64_t term = (e.moved % 2 == 0) ? 1 : -1;
        if (with_sign)
            term *= e.sign;
        coeff[static_cast<std::size_t>(n - e.moved)] += term;
    }
    std::vector<BigInt> asc(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int d = 0; d <= n; ++d)
        asc[static_cast<std::size_t>(d)] = coeff[static_cast<std::size_t>(d)];
    return IntPoly(std::move(asc));
}

} // namespace

IntPoly permutation_char_poly(const Graph& g, int cap) {
    return permutation_expansion(g, cap, true, "permutation_char_poly");
}

IntPoly permutation_perm_poly(const Graph& g, int cap) {
    return permutation_expansion(g, cap, false, "permutation_perm_poly");
}

} // namespace permpoly
