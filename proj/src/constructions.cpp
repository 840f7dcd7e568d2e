#include "cyclex/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclex {

namespace {

const std::vector<std::pair<std::string, std::string>> kHeavyEdges = {
    {"a", "v1"}, {"v1", "u2"}, {"u2", "v2"}, {"v2", "g"}, {"f", "v4"},
    {"v4", "u3"}, {"u3", "v3"}, {"v3", "b"}, {"e", "v5"}, {"v5", "u1"},
};

using NamedEdge = std::pair<std::string, std::string>;

std::set<NamedEdge> normalized(const std::vector<NamedEdge>& edges) {
    std::set<NamedEdge> out;
    for (const auto& e : edges)
        out.insert(e.first < e.second ? e : NamedEdge{e.second, e.first});
    return out;
}

// Deletes the edge u1-e plus every nonheavy edge incident to u2 or u3.
LabeledGraph strip_to_minus(const LabeledGraph& base) {
    const std::set<NamedEdge> heavy = normalized(base.heavy_edges);
    std::vector<NamedEdge> edges;
    for (auto [ui, vi] : base.graph.edges()) {
        NamedEdge e{base.graph.name_of(ui), base.graph.name_of(vi)};
        NamedEdge k = e.first < e.second ? e : NamedEdge{e.second, e.first};
        const bool touches_hub23 = e.first == "u2" || e.second == "u2" ||
                                   e.first == "u3" || e.second == "u3";
        if (touches_hub23 && !heavy.count(k)) continue;
        if (k == NamedEdge{"e", "u1"}) continue;
        edges.push_back(e);
    }
    LabeledGraph out = base;
    std::vector<std::string> names;
    for (int v = 0; v < base.graph.vertex_count(); ++v) names.push_back(base.graph.name_of(v));
    out.graph = Graph::from_named_edges(std::move(names), edges);
    return out;
}

}  // namespace

const std::string& LabeledGraph::resolve(const std::string& name) const {
    auto it = aliases.find(name);
    return it == aliases.end() ? name : it->second;
}

int LabeledGraph::index_of(const std::string& name) const {
    return graph.index_of(resolve(name));
}

LabeledGraph build_G(int t) {
    if (t < 1) throw std::invalid_argument("build_G: t must be >= 1");
    LabeledGraph lg;
    // Backbone path with the c..d block expanded to c z1 .. z(t-1) d.
    std::vector<std::string> path{"a", "b", "c"};
    for (int i = 1; i < t; ++i) path.push_back("z" + std::to_string(i));
    path.insert(path.end(), {"d", "e", "f", "g"});

    std::vector<std::string> names = path;
    names.insert(names.end(), {"u1", "u2", "u3", "v1", "v2", "v3", "v4", "v5"});

    std::vector<NamedEdge> edges;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
    for (const auto& hub : {"u1", "u2", "u3"})
        for (const auto& w : path) edges.emplace_back(hub, w);
    edges.insert(edges.end(), {{"u1", "u2"}, {"u1", "u3"}, {"u2", "u3"}});
    edges.insert(edges.end(), kHeavyEdges.begin(), kHeavyEdges.end());

    lg.graph = Graph::from_named_edges(std::move(names), edges);
    lg.path_vertices = path;
    lg.hubs = {"u1", "u2", "u3"};
    lg.degree2 = {"v1", "v2", "v3", "v4", "v5"};
    lg.heavy_edges = kHeavyEdges;
    lg.aliases["z0"] = "c";
    lg.aliases["z" + std::to_string(t)] = "d";
    return lg;
}

LabeledGraph build_H_hat() { return build_G(1); }

LabeledGraph build_H_hat_minus() { return strip_to_minus(build_H_hat()); }

LabeledGraph build_G_minus(int t) { return strip_to_minus(build_G(t)); }

LabeledGraph build_star(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("build_star: p and q must be >= 1");
    LabeledGraph lg;
    std::vector<std::string> names;
    std::vector<NamedEdge> edges;
    for (int i = 1; i <= p; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= q; ++i) names.push_back("y" + std::to_string(i));
    for (int i = 1; i <= q; ++i)
        for (int j = i + 1; j <= q; ++j)
            edges.emplace_back("y" + std::to_string(i), "y" + std::to_string(j));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j)
            edges.emplace_back("x" + std::to_string(i), "y" + std::to_string(j));
    lg.graph = Graph::from_named_edges(std::move(names), edges);
    for (int i = 1; i <= p; ++i) lg.star_x.push_back("x" + std::to_string(i));
    for (int i = 1; i <= q; ++i) lg.star_y.push_back("y" + std::to_string(i));
    return lg;
}

LabeledGraph build_G_k(int t, int k) {
    if (t < 1) throw std::invalid_argument("build_G_k: t must be >= 1");
    if (k < 1) throw std::invalid_argument("build_G_k: k must be >= 1 (use build_G for k = 0)");
    LabeledGraph lg = build_G(t);
    std::vector<std::string> names;
    for (int v = 0; v < lg.graph.vertex_count(); ++v) names.push_back(lg.graph.name_of(v));
    const std::vector<std::string> old_names = names;

    std::vector<NamedEdge> edges;
    for (auto [u, v] : lg.graph.edges())
        edges.emplace_back(lg.graph.name_of(u), lg.graph.name_of(v));

    for (int i = 1; i <= k; ++i) {
        names.push_back("x" + std::to_string(i));
        lg.star_x.push_back(names.back());
    }
    for (int i = 1; i <= k; ++i) {
        names.push_back("y" + std::to_string(i));
        lg.star_y.push_back(names.back());
    }
    // (k, k)-star: X independent, Y a clique, X completely joined to Y.
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(lg.star_y[i], lg.star_y[j]);
    for (const auto& x : lg.star_x)
        for (const auto& y : lg.star_y) edges.emplace_back(x, y);
    // Y vertices become universal over the old graph; u2 and u3 reach X.
    for (const auto& y : lg.star_y)
        for (const auto& w : old_names) edges.emplace_back(y, w);
    for (const auto& x : lg.star_x) {
        edges.emplace_back("u2", x);
        edges.emplace_back("u3", x);
    }
    lg.graph = Graph::from_named_edges(std::move(names), edges);
    return lg;
}

ConstructionParams ConstructionParams::make(int n, int k, ExtensionSpec spec) {
    if (k < 0) throw std::invalid_argument("ConstructionParams: k must be >= 0");
    const int t = spec.max_size();
    const int minimum = 14 + t + 2 * k;
    if (n < minimum)
        throw std::invalid_argument("ConstructionParams: n = " + std::to_string(n) +
                                    " is below the required minimum 14 + t + 2k = " +
                                    std::to_string(minimum) + " (t = " + std::to_string(t) +
                                    ", k = " + std::to_string(k) + ")");
    return ConstructionParams{t, k, n, std::move(spec)};
}

Cycle witness_cycle(const LabeledGraph& lg) {
    std::vector<std::string> names{"a", "v1"};
    names.insert(names.end(), lg.twin_pad.begin(), lg.twin_pad.end());
    names.push_back("u2");
    for (std::size_t i = 0; i < lg.star_x.size(); ++i) {
        names.push_back(lg.star_x[i]);
        names.push_back(lg.star_y[i]);
    }
    for (const auto& w : {"v2", "g", "u1", "v5", "e", "f", "v4", "u3", "v3", "b"})
        names.push_back(w);
    std::vector<int> seq;
    seq.reserve(names.size());
    for (const auto& name : names) seq.push_back(lg.index_of(name));
    return Cycle::checked(lg.graph, std::move(seq));
}

Counterexample counterexample(int n, int k, const ExtensionSpec& spec) {
    ConstructionParams params = ConstructionParams::make(n, k, spec);
    LabeledGraph lg = params.k == 0 ? build_G(params.t) : build_G_k(params.t, params.k);
    const int pad = params.n - lg.graph.vertex_count();
    for (int i = 1; i <= pad; ++i) {
        const std::string name = "tw" + std::to_string(i);
        lg.graph = lg.graph.add_true_twin(lg.graph.index_of("v1"), name);
        lg.twin_pad.push_back(name);
    }
    Cycle cycle = witness_cycle(lg);
    return Counterexample{std::move(lg), std::move(cycle), std::move(params)};
}

}  // namespace cyclex
