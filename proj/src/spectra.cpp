#include "permpoly/spectra.hpp"

#include "permpoly/errors.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace permpoly {

namespace {

// Samuelson-Berkowitz: extend the characteristic polynomial of the leading
// r x r principal submatrix to (r+1) x (r+1) by one lower-triangular Toeplitz
// product per step. Division-free; all intermediates are integers.
//
// Coefficient vectors are kept in descending-power order: coeffs[0] = 1.
//
// The int64 instantiation reports overflow through Ops::ok so callers can
// rerun with BigInt; the BigInt instantiation never fails.

struct I64Ops {
    using Int = std::int64_t;
    bool ok = true;
    Int mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r))
            ok = false;
        return r;
    }
    Int add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r))
            ok = false;
        return r;
    }
};

struct BigOps {
    using Int = BigInt;
    static constexpr bool ok = true;
    static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
    static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
};

template <typename Ops>
std::optional<std::vector<typename Ops::Int>> berkowitz(const Graph& g) {
    using Int = typename Ops::Int;
    Ops ops;
    const int n = g.n();
    std::vector<Int> poly{Int(1)};
    if (n == 0)
        return poly;

    // Dense 0/1 adjacency, row-major.
    std::vector<std::int8_t> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + v] = 1;
        a[static_cast<std::size_t>(v) * n + u] = 1;
    }
    auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; };

    poly = {Int(1), Int(0)}; // x - a00, and adjacency diagonals are zero
    std::vector<Int> w, w_next, q, next;
    for (int r = 1; r < n; ++r) {
        // q[j]: 1, -a(r,r), then -(row_r . M^(j-2) . col_r) for the leading
        // r x r minor M.
        q.assign(static_cast<std::size_t>(r) + 2, Int(0));
        q[0] = Int(1);
        q[1] = Int(0); // diagonal entries are zero
        w.assign(static_cast<std::size_t>(r), Int(0));
        for (int i = 0; i < r; ++i)
            w[static_cast<std::size_t>(i)] = Int(at(i, r));
        for (int j = 2; j <= r + 1; ++j) {
            Int dot(0);
            for (int i = 0; i < r; ++i)
                if (at(r, i))
                    dot = ops.add(dot, w[static_cast<std::size_t>(i)]);
            q[static_cast<std::size_t>(j)] = ops.mul(Int(-1), dot);
            if (j <= r) {
                w_next.assign(static_cast<std::size_t>(r), Int(0));
                for (int i = 0; i < r; ++i) {
                    Int acc(0);
                    for (int k = 0; k < r; ++k)
                        if (at(i, k))
                            acc = ops.add(acc, w[static_cast<std::size_t>(k)]);
                    w_next[static_cast<std::size_t>(i)] = acc;
                }
                w.swap(w_next);
            }
        }
        next.assign(static_cast<std::size_t>(r) + 2, Int(0));
        for (std::size_t t = 0; t < next.size(); ++t) {
            Int acc(0);
            const std::size_t kmax = std::min(t, poly.size() - 1);
            for (std::size_t k = 0; k <= kmax; ++k)
                acc = ops.add(acc, ops.mul(q[t - k], poly[k]));
            next[t] = acc;
        }
        poly.swap(next);
        if (!ops.ok)
            return std::nullopt;
    }
    return poly;
}

} // namespace

IntPoly char_poly(const Graph& g) {
    std::vector<BigInt> desc;
    if (auto fast = berkowitz<I64Ops>(g)) {
        desc.assign(fast->begin(), fast->end());
    } else {
        auto big = berkowitz<BigOps>(g);
        desc = std::move(*big);
    }
    // Stored descending; IntPoly wants ascending.
    std::vector<BigInt> asc(desc.rbegin(), desc.rend());
    return IntPoly(std::move(asc));
}

IntPoly modified_from_char_poly(const IntPoly& phi, int n) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int d = 0; d <= n; ++d) {
        const int i = n - d;
        if (i % 2 == 0 && (i / 2) % 2 == 1)
            coeffs[static_cast<std::size_t>(d)] = -phi.coeff(d);
        else
            coeffs[static_cast<std::size_t>(d)] = phi.coeff(d);
    }
    return IntPoly(std::move(coeffs));
}

IntPoly modified_char_poly(const Graph& g) {
    if (!is_bipartite(g))
        throw NotBipartiteError("modified characteristic polynomial requires a bipartite graph");
    IntPoly phi = char_poly(g);
    for (int d = 0; d <= g.n(); ++d) {
        if ((g.n() - d) % 2 == 1 && phi.coeff(d) != 0)
            throw std::logic_error("bipartite graph produced a nonzero odd coefficient");
    }
    return modified_from_char_poly(phi, g.n());
}

} // namespace permpoly
