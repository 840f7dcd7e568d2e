#pragma once

#include <cstdint>
#include <optional>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Which class predicates a sampled graph must satisfy.
struct ClassFilterSet {
    bool strongly_chordal = false;
    bool fan3_free = false;
    bool fan4_free = false;
    bool abar_free = false;
    bool k5e_twins_ok = false;

    bool any() const {
        return strongly_chordal || fan3_free || fan4_free || abar_free || k5e_twins_ok;
    }
};

struct GenSpec {
    int n = 8;
    std::uint64_t seed = 0;
    double fill_density = 0.0;  // probability of each extra chord, in [0, 1]
    ClassFilterSet filters;
};

/// Seeded random Hamiltonian chordal graph: start from the cycle
/// v0 v1 ... v(n-1), chordalize along a random elimination order (each
/// vertex's later neighbors become a clique), sprinkle extra edges with the
/// fill density, and chordalize again. The starting cycle keeps the result
/// Hamiltonian; the final fill-in keeps it chordal. Identical specs produce
/// identical graphs on every platform (splitmix64, see prng.hpp).
Graph random_hamiltonian_chordal(const GenSpec& spec);

/// Rejection-samples random_hamiltonian_chordal (varying the derived
/// per-attempt seed) until every requested class filter passes; nothing
/// after max_attempts.
std::optional<Graph> sample_in_class(const GenSpec& spec, int max_attempts);

/// True iff g passes every filter that is switched on.
bool passes_filters(const Graph& g, const ClassFilterSet& filters);

}  // namespace cyclex
