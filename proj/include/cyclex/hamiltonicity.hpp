#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Raised when a graph exceeds the subset-table capacity (or a similar
/// explicit enumeration cap). The message names the cap.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the vertex count for whole-subset tables: 2^22 subsets is
/// comfortable desk scale, and the targeted witness checks never need more.
inline constexpr int kDefaultSubsetCap = 22;

/// Hamiltonicity of every induced subgraph of one graph, as one DP sweep over
/// all vertex subsets. Within a subset, Hamiltonian paths are anchored at the
/// subset's minimum vertex: ham(W) holds iff some path from min(W) spans W and
/// ends next to min(W). Construction is sequential; a finished table is
/// immutable and safe to read from any thread.
class HamTable {
public:
    explicit HamTable(const Graph& g, int cap = kDefaultSubsetCap);

    /// True iff G[W] has a Hamiltonian cycle. |W| < 3 is false by definition.
    bool ham(VertexSet W) const;
    /// A concrete Hamiltonian cycle of G[W], reconstructed by walking the
    /// path table backwards. Vertex indices refer to the owner graph.
    std::optional<Cycle> witness_cycle(VertexSet W) const;

    int vertex_count() const { return n_; }
    int cap() const { return cap_; }
    const Graph& graph() const { return graph_; }
    std::uint64_t graph_fingerprint() const { return graph_.fingerprint(); }

private:
    Graph graph_;
    int n_;
    int cap_;
    std::vector<std::uint32_t> adj_;
    // path_ends_[S] = endpoints v (v != min S) of Hamiltonian paths of G[S]
    // that start at min S.
    std::vector<std::uint32_t> path_ends_;
};

/// Free-function spelling of the table constructor.
HamTable build_ham_table(const Graph& g, int cap = kDefaultSubsetCap);

/// Exact Hamiltonian-cycle search by backtracking from a fixed start (a
/// minimum-degree vertex), pruning on disconnection and on vertices left with
/// fewer than two usable neighbors. Works at any size the Graph type allows.
std::optional<Cycle> hamiltonian_cycle(const Graph& g);

/// Decision restricted to G[W]; uses the table when one is supplied and
/// covers g, otherwise runs the direct backtracking search on the subset.
/// Throws std::invalid_argument when |W| < 3.
bool is_induced_hamiltonian(const Graph& g, VertexSet W, const HamTable* table = nullptr);

/// True iff the graph contains a cycle of every length from 3 to n. A length
/// is realized exactly when some subset of that size induces a Hamiltonian
/// subgraph.
bool is_pancyclic(const Graph& g, const HamTable& table);

}  // namespace cyclex
