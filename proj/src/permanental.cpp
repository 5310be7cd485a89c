#include "permpoly/permanental.hpp"

#include "permpoly/errors.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace permpoly {

const char* to_string(ComputePath p) {
    switch (p) {
    case ComputePath::corollary_c4kfree:
        return "corollary_c4kfree";
    case ComputePath::theorem_intercyclic:
        return "theorem_intercyclic";
    case ComputePath::oracle_fallback:
        return "oracle_fallback";
    }
    return "?";
}

namespace {

void require_bipartite(const Graph& g, const char* what) {
    if (!is_bipartite(g))
        throw NotBipartiteError(std::string(what) + " requires a bipartite graph");
}

void require_intercyclic(const Classification& cls, const char* what) {
    if (cls.verdict == Verdict::NotIntercyclic)
        throw NotIntercyclicError(std::string(what) +
                                  ": graph has two vertex-disjoint 4k-cycles; "
                                  "only the brute-force oracle applies");
}

// 4 * sum of phi_p(G\R) over the listed 4k-cycles. Distinct cycles on the
// same vertex set delete the same subgraph, so results are memoized per set.
IntPoly f_from_cycles(const Graph& g, const std::vector<Cycle>& four_k) {
    std::map<std::vector<int>, IntPoly> memo;
    IntPoly sum;
    for (const Cycle& r : four_k) {
        auto key = r.sorted_vertices();
        auto it = memo.find(key);
        if (it == memo.end()) {
            auto sub = delete_vertices(g, key);
            it = memo.emplace(std::move(key), modified_char_poly(sub.graph)).first;
        }
        sum += it->second;
    }
    return sum.scaled(4);
}

void validate_report(const PolyReport& r, int n) {
    if (r.pi != r.phi_p + r.f)
        throw std::logic_error("report invariant broken: pi != phi_p + f");
    for (int d = 0; d <= r.f.degree(); ++d) {
        const BigInt& c = r.f.coeff(d);
        if (c < 0 || c % 4 != 0)
            throw std::logic_error("report invariant broken: f coefficient not a nonnegative multiple of 4");
    }
    for (int d = 0; d <= n; ++d)
        if ((n - d) % 2 == 1 && r.pi.coeff(d) != 0)
            throw std::logic_error("report invariant broken: pi has a nonzero odd coefficient");
}

} // namespace

IntPoly f_poly(const Graph& g, CycleOptions opts) {
    require_bipartite(g, "f_poly");
    Classification cls = classify(g, opts);
    require_intercyclic(cls, "f_poly");
    return f_from_cycles(g, cls.four_k);
}

PolyReport perm_poly(const Graph& g, Classification cls) {
    require_bipartite(g, "perm_poly");
    require_intercyclic(cls, "perm_poly");
    PolyReport r;
    r.phi = char_poly(g);
    for (int d = 0; d <= g.n(); ++d)
        if ((g.n() - d) % 2 == 1 && r.phi.coeff(d) != 0)
            throw std::logic_error("bipartite graph produced a nonzero odd coefficient");
    r.phi_p = modified_from_char_poly(r.phi, g.n());
    if (cls.verdict == Verdict::C4kFree) {
        r.f = IntPoly{};
        r.pi = r.phi_p;
        r.path = ComputePath::corollary_c4kfree;
    } else {
        r.f = f_from_cycles(g, cls.four_k);
        r.pi = r.phi_p + r.f;
        r.path = ComputePath::theorem_intercyclic;
    }
    r.classification = std::move(cls);
    validate_report(r, g.n());
    return r;
}

PolyReport perm_poly(const Graph& g, CycleOptions opts) {
    require_bipartite(g, "perm_poly");
    return perm_poly(g, classify(g, opts));
}

PolyReport perm_poly_via_oracle(const Graph& g, CycleOptions opts, int cap) {
    require_bipartite(g, "perm_poly_via_oracle");
    PolyReport r;
    r.classification = classify(g, opts);
    r.phi = char_poly(g);
    r.phi_p = modified_from_char_poly(r.phi, g.n());
    r.pi = oracle_perm_poly(g, cap);
    r.f = r.pi - r.phi_p;
    r.path = ComputePath::oracle_fallback;
    validate_report(r, g.n());
    return r;
}

CospectralCheck per_cospectral_check(const Graph& g1, const Graph& g2, CycleOptions opts) {
    CospectralCheck out;
    out.report1 = perm_poly(g1, opts);
    out.report2 = perm_poly(g2, opts);
    out.same_f = out.report1.f == out.report2.f;
    out.cospectral = out.report1.phi == out.report2.phi;
    out.per_cospectral = out.report1.pi == out.report2.pi;
    if (out.same_f && out.cospectral != out.per_cospectral)
        throw std::logic_error("equal f but cospectrality and per-cospectrality disagree");
    return out;
}

GpClass classify_G_p(const Graph& g, CycleOptions opts) {
    GpClass out;
    out.f = f_poly(g, opts);
    if (out.f.is_zero()) {
        out.kind = GpClass::Kind::zero;
        return out;
    }
    const int d = g.n() - 4;
    bool single_term = out.f.degree() == d;
    for (int k = 0; single_term && k < d; ++k)
        if (out.f.coeff(k) != 0)
            single_term = false;
    if (single_term && out.f.coeff(d) % 4 == 0 && out.f.coeff(d) > 0) {
        out.kind = GpClass::Kind::four_l_x_n4;
        out.l = out.f.coeff(d) / 4;
    } else {
        out.kind = GpClass::Kind::other;
    }
    return out;
}

} // namespace permpoly
