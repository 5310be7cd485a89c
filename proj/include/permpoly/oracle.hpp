#pragma once

#include "permpoly/graph.hpp"
#include "permpoly/polynomial.hpp"

#include <functional>

namespace permpoly {

// Brute-force cap: the Sachs enumeration is exponential, so anything larger
// must be requested explicitly.
inline constexpr int kDefaultOracleCap = 14;

// One Sachs subgraph: components are single edges or cycles, pairwise
// vertex-disjoint. Every cycle is classified mod 4 so bipartite identities
// can be folded directly.
struct SachsStats {
    int covered = 0;        // i: vertices covered
    int components = 0;     // p: edge components + cycle components
    int cycles = 0;         // c: cycle components
    int four_k_cycles = 0;  // s: cycles of length 0 mod 4
    int four_k2_cycles = 0; // t: cycles of length 2 mod 4
};

// Visits every Sachs subgraph of g exactly once (including the empty one).
// Cycle components come from the cycle lister but are revalidated against the
// adjacency structure before use.
void for_each_sachs(const Graph& g, const std::function<void(const SachsStats&)>& visit,
                    int cap = kDefaultOracleCap);

// Characteristic polynomial by the Sachs coefficient sum:
// a_i = sum over U_i of (-1)^p(U_i) * 2^c(U_i).
IntPoly oracle_char_poly(const Graph& g, int cap = kDefaultOracleCap);

// Permanental polynomial by the Sachs coefficient sum:
// b_i = (-1)^i * sum over U_i of 2^c(U_i).
IntPoly oracle_perm_poly(const Graph& g, int cap = kDefaultOracleCap);

// f_i = sum over Sachs subgraphs with an odd number s of 4k-cycles of
// 2^(s+1) * 2^t. Defined for every bipartite graph, intercyclic or not.
IntPoly oracle_f_poly(const Graph& g, int cap = kDefaultOracleCap);

// Third, independent route: expand det(xI - A) resp. per(xI - A) over all
// permutations with symbolic diagonal. Factorial time; hard-capped low.
IntPoly permutation_char_poly(const Graph& g, int cap = 9);
IntPoly permutation_perm_poly(const Graph& g, int cap = 9);

} // namespace permpoly
