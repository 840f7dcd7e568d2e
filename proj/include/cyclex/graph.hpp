#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cyclex {

/// Subset of the vertices of a graph, packed into one 64-bit word so that
/// subsets hash, compare and iterate cheaply (they key the subset tables in
/// the Hamiltonicity code). Graphs are capped at 64 vertices to match.
class VertexSet {
public:
    static constexpr int max_size = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet single(int v);
    static VertexSet full(int n);
    static VertexSet of(std::initializer_list<int> vs);

    bool contains(int v) const { return 0 <= v && v < max_size && ((bits_ >> v) & 1u); }
    VertexSet& add(int v);
    VertexSet& remove(int v);

    int count() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    /// Lowest member index; undefined on the empty set.
    int min() const { return std::countr_zero(bits_); }
    std::uint64_t bits() const { return bits_; }

    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    bool operator==(const VertexSet&) const = default;
    // Ordered by encoding, so subsets sort deterministically in reports.
    auto operator<=>(const VertexSet&) const = default;

    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const;

private:
    std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph with named vertices. Vertex identity is
/// index-based internally (0..n-1 in declaration order) and name-based at the
/// interfaces; names are tokens over [A-Za-z0-9_]+. All mutators return new
/// graphs, so values can be shared freely across threads.
class Graph {
public:
    Graph() = default;
    /// Builds from a vertex-name list and index edges. Throws
    /// std::invalid_argument on bad names, duplicate names, self-loops,
    /// duplicate edges, out-of-range endpoints, or more than 64 vertices.
    Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges);
    static Graph from_named_edges(std::vector<std::string> names,
                                  const std::vector<std::pair<std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return edge_count_; }
    VertexSet vertex_set() const { return VertexSet::full(vertex_count()); }

    bool adjacent(int u, int v) const;
    VertexSet neighbors(int v) const;
    VertexSet closed_neighborhood(int v) const;
    int degree(int v) const;

    const std::string& name_of(int v) const;
    /// Index of a named vertex; throws std::invalid_argument if unknown.
    int index_of(std::string_view name) const;
    std::optional<int> find_vertex(std::string_view name) const;
    std::vector<std::string> names_of(VertexSet W) const;

    /// Edges as (u, v) index pairs with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

    Graph induced(VertexSet W) const;
    Graph add_true_twin(int v, std::string name) const;
    Graph add_universal_vertex(std::string name) const;
    Graph remove_vertex(int v) const;

    /// FNV-1a over names and edges; used as a cheap identity for memoization
    /// and report correlation.
    std::uint64_t fingerprint() const { return fingerprint_; }

    bool operator==(const Graph& o) const { return names_ == o.names_ && adj_ == o.adj_; }

private:
    std::vector<std::string> names_;
    std::vector<VertexSet> adj_;
    std::unordered_map<std::string, int> index_;
    int edge_count_ = 0;
    std::uint64_t fingerprint_ = 0;

    void check_vertex(int v) const;
    void finish_build();
};

/// Same vertex-name set and same named edges, regardless of declaration
/// order. This is the "isomorphic via the identity on names" notion used by
/// the twin add/delete round-trip and the file round-trip.
bool named_equal(const Graph& a, const Graph& b);

// Local vertex predicates.
bool is_true_twins(const Graph& g, int u, int v);
bool is_simplicial(const Graph& g, int v);
bool is_simple_vertex(const Graph& g, int v);
// Variants evaluated inside the subgraph induced by `within` (v must be a
// member); these drive the elimination-ordering checks without rebuilding
// graphs.
bool is_simplicial_in(const Graph& g, int v, VertexSet within);
bool is_simple_in(const Graph& g, int v, VertexSet within);

bool is_clique(const Graph& g, VertexSet W);
bool is_independent(const Graph& g, VertexSet W);
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components_within(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
/// True iff the graph stays connected after deleting any set of at most k-1
/// vertices. Defined in recognition.cpp (delegates to vertex_connectivity).
bool is_k_connected(const Graph& g, int k);

/// Ordered vertex sequence interpreted cyclically. Only constructible through
/// the checked factories, so a Cycle value is always a real cycle of the
/// graph it was checked against: >= 3 distinct vertices, consecutive ones
/// (including last -> first) adjacent.
class Cycle {
public:
    static Cycle checked(const Graph& g, std::vector<int> seq);
    static Cycle from_names(const Graph& g, const std::vector<std::string>& names);

    const std::vector<int>& vertices() const { return seq_; }
    int length() const { return static_cast<int>(seq_.size()); }
    VertexSet vertex_set() const;
    std::vector<std::pair<int, int>> edge_list() const;
    std::vector<std::string> names(const Graph& g) const;
    bool is_valid_in(const Graph& g) const;
    /// Rotation- and reflection-invariant normal form, for set comparisons.
    std::vector<int> canonical() const;

private:
    explicit Cycle(std::vector<int> seq) : seq_(std::move(seq)) {}
    std::vector<int> seq_;
};

}  // namespace cyclex
