#pragma once

#include "permpoly/cycles.hpp"
#include "permpoly/graph.hpp"
#include "permpoly/oracle.hpp"
#include "permpoly/polynomial.hpp"
#include "permpoly/spectra.hpp"

namespace permpoly {

enum class ComputePath { corollary_c4kfree, theorem_intercyclic, oracle_fallback };

const char* to_string(ComputePath p);

// Everything computed for one bipartite graph. Invariants (checked on
// construction): pi = phi_p + f, every coefficient of f is nonnegative and
// divisible by 4, and pi has no odd-i coefficient.
struct PolyReport {
    IntPoly phi;
    IntPoly phi_p;
    IntPoly f;
    IntPoly pi;
    ComputePath path = ComputePath::corollary_c4kfree;
    Classification classification;

    bool operator==(const PolyReport& rhs) const = default;
};

// f(G,x) = 4 * sum over 4k-cycles R of phi_p(G\R,x). Requires a bipartite
// graph with no two vertex-disjoint 4k-cycles; zero when the graph is
// C4k-free.
IntPoly f_poly(const Graph& g, CycleOptions opts = {});

// Permanental polynomial of a bipartite graph with no two vertex-disjoint
// 4k-cycles: pi = phi_p when C4k-free, else pi = phi_p + f as above. Refuses
// other graphs (NotIntercyclicError); use perm_poly_via_oracle for those.
PolyReport perm_poly(const Graph& g, CycleOptions opts = {});
// Same, reusing a classification the caller already computed.
PolyReport perm_poly(const Graph& g, Classification cls);

// Exponential fallback for bipartite graphs outside the theorem's scope:
// pi from the Sachs-sum oracle, f recovered as pi - phi_p.
PolyReport perm_poly_via_oracle(const Graph& g, CycleOptions opts = {},
                                int cap = kDefaultOracleCap);

struct CospectralCheck {
    bool same_f = false;
    bool cospectral = false;
    bool per_cospectral = false;
    PolyReport report1;
    PolyReport report2;
};

// Computes both reports and the three comparisons. When the f-polynomials
// agree, equal phi must coincide with equal pi; a violation would mean an
// engine bug and raises logic_error.
CospectralCheck per_cospectral_check(const Graph& g1, const Graph& g2, CycleOptions opts = {});

// Coarse f-polynomial classes: f = 0 (C4k-free), f = 4l*x^(n-4) (exactly l
// quadrilaterals, each spanning all cycles' structure), or anything else.
struct GpClass {
    enum class Kind { zero, four_l_x_n4, other };
    Kind kind = Kind::zero;
    BigInt l = 0; // meaningful for four_l_x_n4
    IntPoly f;
};

GpClass classify_G_p(const Graph& g, CycleOptions opts = {});

} // namespace permpoly
