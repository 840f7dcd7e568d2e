#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cyclex/extension_spec.hpp"
#include "cyclex/graph.hpp"

namespace cyclex {

/// A constructed graph together with the role labels the builders assign:
/// the backbone path, the three hub vertices, the five degree-2 vertices
/// whose incident edges are the heavy edges, the star sides, and any
/// twin-padding vertices. Aliases map alternative names (z0, zt) onto the
/// real vertices (c, d) so both spellings address the same vertex.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> path_vertices;  // in path order
    std::vector<std::string> hubs;           // u1, u2, u3
    std::vector<std::string> degree2;        // v1..v5
    std::vector<std::string> star_x;         // x1..xk (independent side)
    std::vector<std::string> star_y;         // y1..yk (clique side)
    std::vector<std::string> twin_pad;       // tw1..twm, twins of v1
    std::vector<std::pair<std::string, std::string>> heavy_edges;  // the 10
    std::map<std::string, std::string> aliases;  // e.g. z0 -> c

    /// Resolves aliases; names without an alias entry pass through.
    const std::string& resolve(const std::string& name) const;
    int index_of(const std::string& name) const;  // alias-aware
};

/// 15-vertex base graph: 7-vertex path a..g, three universal hub vertices
/// u1..u3 (pairwise adjacent and adjacent to the whole path), and five
/// degree-2 vertices v1..v5 attached by the 10 heavy edges
/// a-v1, v1-u2, u2-v2, v2-g, f-v4, v4-u3, u3-v3, v3-b, e-v5, v5-u1.
LabeledGraph build_H_hat();

/// build_H_hat() minus the edge u1-e and minus every nonheavy edge incident
/// to u2 or u3; 22 edges remain, and N(u2) = {v1, v2}, N(u3) = {v3, v4}.
LabeledGraph build_H_hat_minus();

/// Generalizes build_H_hat by replacing the edge c-d with a path
/// c z1 ... z(t-1) d whose interior vertices are adjacent to all three hubs.
/// t = 1 reproduces build_H_hat exactly; 14 + t vertices.
LabeledGraph build_G(int t);
LabeledGraph build_G_minus(int t);

/// Independent set X of size p completely joined to a clique Y of size q.
LabeledGraph build_star(int p, int q);

/// build_G(t) joined with a (k, k)-star: every Y vertex becomes universal
/// over the old graph, and u2 and u3 are joined to every X vertex;
/// 14 + t + 2k vertices. Requires t >= 1 and k >= 1.
LabeledGraph build_G_k(int t, int k);

struct ConstructionParams {
    int t;
    int k;
    int n;
    ExtensionSpec spec;

    /// Derives t = max(S) and validates n >= 14 + t + 2k (the message quotes
    /// the required minimum on violation).
    static ConstructionParams make(int n, int k, ExtensionSpec spec);
};

/// The cycle witnessing non-S-extendability: traverses every vertex except
/// the c..d path block (Z), visiting v1's twin-pad vertices consecutively
/// between v1 and u2 and the star pairs x1 y1 ... xk yk between them and v2.
Cycle witness_cycle(const LabeledGraph& lg);

struct Counterexample {
    LabeledGraph graph;
    Cycle cycle;
    ConstructionParams params;
};

/// The (2+k)-connected Hamiltonian strongly chordal graph on exactly n
/// vertices (base construction plus true twins of v1) whose witness cycle
/// is not S-extendable.
Counterexample counterexample(int n, int k, const ExtensionSpec& spec);

}  // namespace cyclex
