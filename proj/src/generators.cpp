#include "cyclex/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclex/prng.hpp"
#include "cyclex/recognition.hpp"

namespace cyclex {

namespace {

// Elimination game on an adjacency-mask working copy: in order, each
// vertex's not-yet-eliminated neighbors get completed into a clique. The
// filled graph is chordal with `order` as a perfect elimination ordering.
void chordalize(std::vector<VertexSet>& adj, const std::vector<int>& order) {
    const int n = static_cast<int>(adj.size());
    VertexSet remaining = VertexSet::full(n);
    for (int v : order) {
        remaining.remove(v);
        const VertexSet later = adj[v] & remaining;
        for (int a : later)
            for (int b : later)
                if (a < b && !adj[a].contains(b)) {
                    adj[a].add(b);
                    adj[b].add(a);
                }
    }
}

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_below(i + 1)]);
    return perm;
}

}  // namespace

Graph random_hamiltonian_chordal(const GenSpec& spec) {
    if (spec.n < 3)
        throw std::invalid_argument("random_hamiltonian_chordal: n must be >= 3");
    if (spec.fill_density < 0.0 || spec.fill_density > 1.0)
        throw std::invalid_argument("random_hamiltonian_chordal: density must be in [0, 1]");
    const int n = spec.n;
    SplitMix64 rng(spec.seed);

    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v].add((v + 1) % n);
        adj[v].add((v + n - 1) % n);
    }
    chordalize(adj, random_permutation(n, rng));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (adj[u].contains(v)) continue;
            if (rng.next_unit() < spec.fill_density) {
                adj[u].add(v);
                adj[v].add(u);
            }
        }
    chordalize(adj, random_permutation(n, rng));

    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph(std::move(names), edges);
}

bool passes_filters(const Graph& g, const ClassFilterSet& filters) {
    if (filters.strongly_chordal && !is_strongly_chordal(g)) return false;
    if (filters.fan3_free && has_induced_pattern(g, patterns::three_fan())) return false;
    if (filters.fan4_free && has_induced_pattern(g, patterns::four_fan())) return false;
    if (filters.abar_free && has_induced_pattern(g, patterns::a_bar())) return false;
    if (filters.k5e_twins_ok && !every_k5e_has_true_twins(g).ok) return false;
    return true;
}

std::optional<Graph> sample_in_class(const GenSpec& spec, int max_attempts) {
    SplitMix64 seeder(spec.seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        GenSpec attempt_spec = spec;
        attempt_spec.seed = seeder.next();
        Graph g = random_hamiltonian_chordal(attempt_spec);
        if (passes_filters(g, spec.filters)) return g;
    }
    return std::nullopt;
}

}  // namespace cyclex
