#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclex/constructions.hpp"
#include "cyclex/extension_spec.hpp"
#include "cyclex/graph.hpp"
#include "cyclex/hamiltonicity.hpp"

namespace cyclex {

/// Searches for Z' inside V - W with |Z'| in S such that G[W union Z'] is
/// Hamiltonian. Whether a cycle is S-extendable depends only on its vertex
/// set (an extension must contain the cycle's vertices, not its edges), so
/// whole verdicts run over vertex sets. Preconditions are reported
/// distinctly: W must induce a Hamiltonian subgraph (cycle-realizable) and
/// must not already span the graph. Uses the table when it covers g,
/// otherwise the targeted backtracking search per candidate set.
std::optional<VertexSet> is_set_extendable(const Graph& g, VertexSet W,
                                           const ExtensionSpec& spec,
                                           const HamTable* table = nullptr);

enum class ExtendabilityStatus { ExtendableAll, Violation };

struct CycleViolation {
    VertexSet vertices;
    std::string note;
};

struct ExtendabilityVerdict {
    std::uint64_t graph_fingerprint = 0;
    ExtensionSpec spec = ExtensionSpec::of({1});
    ExtendabilityStatus status = ExtendabilityStatus::ExtendableAll;
    std::vector<CycleViolation> violations;  // sorted by subset encoding
    /// A few audited (cycle set, extension set) pairs for the passing case.
    std::vector<std::pair<VertexSet, VertexSet>> sample_extensions;
    bool all_extendable() const { return status == ExtendabilityStatus::ExtendableAll; }
};

/// Whole-graph verdict: every cycle-realizable W with |W| < n must be
/// S-extendable. Requires a table over g (so n is bounded by the table cap).
ExtendabilityVerdict is_cycle_extendable_graph(const Graph& g, const ExtensionSpec& spec,
                                               const HamTable& table);

/// Every cycle on more than 3 vertices must admit a cycle on all but one of
/// its vertices. Characterizes chordal graphs.
bool is_cycle_reducible(const Graph& g, const HamTable& table);

struct HeavyEdgeReport {
    std::size_t cycles_through_degree2 = 0;        // in the full graph
    std::size_t cycles_through_degree2_minus = 0;  // in the stripped graph
    bool all_contain_heavy = false;
    bool all_contain_heavy_minus = false;
    bool cycle_sets_match = false;
    bool passed = false;
};

/// Exhaustively enumerates the cycles through all five degree-2 vertices in
/// both graphs of a construction pair and checks that (a) each such cycle
/// uses all ten heavy edges and (b) the heavy-edge cycles of the pair
/// coincide. Explicit cycle enumeration; capped at 18 vertices.
HeavyEdgeReport verify_heavy_edge_lemmas_report(const LabeledGraph& g,
                                                const LabeledGraph& g_minus);
bool verify_heavy_edge_lemmas(const LabeledGraph& g, const LabeledGraph& g_minus);

}  // namespace cyclex
