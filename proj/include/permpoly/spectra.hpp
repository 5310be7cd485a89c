#pragma once

#include "permpoly/graph.hpp"
#include "permpoly/polynomial.hpp"

namespace permpoly {

// Characteristic polynomial det(xI - A(g)), exact integer coefficients,
// monic of degree n. Computed by the Samuelson-Berkowitz division-free
// scheme; the empty graph yields the constant 1.
IntPoly char_poly(const Graph& g);

// Sign map behind the modified characteristic polynomial: the coefficient of
// x^(n-i) is multiplied by (-1)^(i/2) for each even i. Odd-i coefficients are
// passed through untouched.
IntPoly modified_from_char_poly(const IntPoly& phi, int n);

// Modified characteristic polynomial of a bipartite graph. Throws
// NotBipartiteError for non-bipartite input and std::logic_error if any
// odd-i coefficient of the characteristic polynomial is nonzero (which a
// bipartite graph cannot produce).
IntPoly modified_char_poly(const Graph& g);

} // namespace permpoly
