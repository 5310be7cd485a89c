#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

// Invalid graph construction input: self-loop or endpoint out of range.
struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual graph input (edge list header, token soup, bad graph6 byte).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requires a bipartite graph.
struct NotBipartiteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The theorem engine refuses graphs holding two vertex-disjoint 4k-cycles;
// callers must fall back to the brute-force oracle explicitly.
struct NotIntercyclicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cycle enumeration exceeded the configured cycle-count budget.
struct CycleBudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Brute-force oracle called on a graph above its vertex-count cap.
struct OracleCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace permpoly
