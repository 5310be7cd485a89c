#pragma once

#include "permpoly/graph.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace permpoly {

inline constexpr std::uint64_t kDefaultCycleBudget = 1'000'000;

// A simple cycle in canonical form: the smallest vertex comes first and the
// second vertex is the smaller of its two cycle neighbors, so every cycle has
// exactly one representation regardless of rotation or direction.
struct Cycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool is_four_k() const { return length() % 4 == 0; }
    std::vector<int> sorted_vertices() const;
    bool vertex_disjoint(const Cycle& other) const;

    bool operator==(const Cycle& rhs) const = default;
};

struct CycleOptions {
    // 0 means unlimited.
    int max_len = 0;
    // Enumeration aborts with CycleBudgetError beyond this many cycles.
    std::uint64_t budget = kDefaultCycleBudget;
};

// Every simple cycle of length <= max_len (all lengths if 0), each exactly
// once in canonical form, sorted by (length, vertex sequence).
std::vector<Cycle> enumerate_cycles(const Graph& g, CycleOptions opts = {});

// The cycles of length divisible by 4.
std::vector<Cycle> four_k_cycles(const Graph& g, CycleOptions opts = {});

enum class Verdict { C4kFree, FourKIntercyclic, NotIntercyclic };

const char* to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::C4kFree;
    std::vector<Cycle> four_k;
    // Present iff NotIntercyclic: a vertex-disjoint pair of 4k-cycles.
    std::optional<std::pair<Cycle, Cycle>> witness;

    bool operator==(const Classification& rhs) const = default;
};

// C4kFree when no 4k-cycle exists, NotIntercyclic when two vertex-disjoint
// 4k-cycles exist (first such pair in canonical order is the witness),
// FourKIntercyclic otherwise.
Classification classify(const Graph& g, CycleOptions opts = {});

} // namespace permpoly
