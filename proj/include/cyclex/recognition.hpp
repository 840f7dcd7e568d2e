#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

enum class OrderingKind { Perfect, Simple };

/// order[0] is eliminated first; a perfect ordering has each vertex
/// simplicial in the subgraph induced by itself and its successors, a simple
/// ordering has it simple there.
struct EliminationOrdering {
    std::vector<int> order;
    OrderingKind kind;
};

/// Verifies that `eo` really is what its kind claims, vertex by vertex.
bool verify_elimination_ordering(const Graph& g, const EliminationOrdering& eo);

/// Maximum cardinality search plus a full simpliciality verification of the
/// resulting ordering. Returns the verified perfect elimination ordering iff
/// the graph is chordal; the ordering is never trusted unchecked.
std::optional<EliminationOrdering> maximum_cardinality_search(const Graph& g);

bool is_chordal(const Graph& g);

/// Greedy simple-vertex elimination: repeatedly delete any simple vertex of
/// the remaining induced subgraph. Succeeds for all n vertices iff the graph
/// is strongly chordal. The seeded overload randomizes which simple vertex is
/// taken at each step (the result must not depend on the choice).
std::optional<EliminationOrdering> simple_elimination_ordering(const Graph& g);
std::optional<EliminationOrdering> simple_elimination_ordering(const Graph& g,
                                                               std::uint64_t tie_break_seed);

bool is_strongly_chordal(const Graph& g);

/// Minimum vertex-cut size via unit-capacity vertex-split max-flow over all
/// non-adjacent pairs; complete graphs are n-1 by convention. Requires
/// n >= 2. The overload reports one minimum cut (empty for complete graphs).
int vertex_connectivity(const Graph& g);
int vertex_connectivity(const Graph& g, std::vector<int>& min_cut);
/// Smallest disconnecting subset by direct enumeration; independent of the
/// flow route. Practical for n <= 13.
int vertex_connectivity_bruteforce(const Graph& g);

/// A small named pattern graph to search for as an induced subgraph.
struct Pattern {
    std::string name;
    Graph graph;
};

namespace patterns {
/// Path on k+1 vertices plus a hub adjacent to every path vertex.
Pattern k_fan(int k);
Pattern three_fan();
Pattern four_fan();
/// Clique y1..yk plus independent x1..xk, xi adjacent to yi and y(i mod k)+1.
Pattern k_sun(int k);
/// Complete graph on five vertices minus one edge.
Pattern k5_minus_e();
/// Chordless cycle of the given length (>= 4).
Pattern hole(int len);
/// The 6-vertex chordal obstruction with degree sequence (2,2,3,3,4,4):
/// vertices xp,x,z,zp,y,yp with edges xp-x, xp-z, x-z, x-zp, z-zp, z-y,
/// zp-y, zp-yp, y-yp; z and zp are the degree-4 vertices.
Pattern a_bar();
}  // namespace patterns

/// Induced embedding of a pattern: image[i] is the graph vertex for pattern
/// vertex i; edges and non-edges are both preserved.
struct PatternOccurrence {
    std::vector<int> image;
    VertexSet image_set() const;
    std::vector<std::pair<std::string, std::string>> name_map(const Pattern& p,
                                                              const Graph& g) const;
};

/// First induced occurrence found by backtracking with degree and adjacency
/// pruning, or nothing.
std::optional<PatternOccurrence> find_induced_pattern(const Graph& g, const Pattern& p);
bool has_induced_pattern(const Graph& g, const Pattern& p);
/// Visits every induced embedding (including symmetric ones); return false
/// from the callback to stop early.
void for_each_induced_pattern(const Graph& g, const Pattern& p,
                              const std::function<bool(const PatternOccurrence&)>& visit);

/// Checks that every induced K5-e has a true-twins pair among its five
/// vertices; violating vertex sets are reported.
struct K5eTwinsReport {
    bool ok = true;
    std::vector<VertexSet> violations;
};
K5eTwinsReport every_k5e_has_true_twins(const Graph& g);

struct ClassFlags {
    bool chordal;
    bool strongly_chordal;
    bool fan3_free;
    bool fan4_free;
    bool abar_free;
    bool k5e_twins_ok;
    bool ptolemaic;  // chordal and 3-fan-free
};
ClassFlags class_flags(const Graph& g);

/// True iff every edge of the cycle has a common neighbor of its endpoints
/// inside V(C). Holds for every cycle of a chordal graph; evaluated as a
/// plain property so non-chordal inputs can demonstrate the converse.
bool check_lemma_common_neighbor(const Graph& g, const Cycle& c);

/// For a clique S of a connected chordal graph: every connected component of
/// G - S must contain a vertex that is simplicial in G itself. Throws if S is
/// not a clique.
bool check_simplicial_in_components(const Graph& g, VertexSet S);

}  // namespace cyclex
