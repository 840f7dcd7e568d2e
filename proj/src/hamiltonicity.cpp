#include "cyclex/hamiltonicity.hpp"

#include <algorithm>
#include <string>

namespace cyclex {

namespace {

// Backtracking Hamiltonian-cycle search over an induced subset, in the index
// space of the owner graph. Independent of HamTable by design: the two are
// cross-checked against each other in the tests.
class CycleSearch {
public:
    CycleSearch(const Graph& g, VertexSet W) : world_(W) {
        adj_.assign(g.vertex_count(), VertexSet());
        for (int v : W) adj_[v] = g.neighbors(v) & W;
        // Fail-first heuristics: anchor at a minimum-degree vertex, then try
        // neighbors in ascending static degree.
        start_ = W.min();
        for (int v : W)
            if (adj_[v].count() < adj_[start_].count()) start_ = v;
        std::vector<int> by_degree = W.to_vector();
        std::sort(by_degree.begin(), by_degree.end(),
                  [&](int a, int b) { return adj_[a].count() != adj_[b].count()
                                             ? adj_[a].count() < adj_[b].count()
                                             : a < b; });
        ordered_ = std::move(by_degree);
    }

    std::optional<std::vector<int>> run() {
        const int n = world_.count();
        if (n < 3) return std::nullopt;
        for (int v : world_)
            if (adj_[v].count() < 2) return std::nullopt;
        path_.clear();
        path_.push_back(start_);
        if (extend(VertexSet::single(start_), start_)) return path_;
        return std::nullopt;
    }

private:
    bool extend(VertexSet visited, int head) {
        if (visited == world_) return adj_[head].contains(start_);
        if (!prune_ok(visited, head)) return false;
        for (int v : ordered_) {
            if (visited.contains(v) || !adj_[head].contains(v)) continue;
            path_.push_back(v);
            if (extend(visited | VertexSet::single(v), v)) return true;
            path_.pop_back();
        }
        return false;
    }

    bool prune_ok(VertexSet visited, int head) const {
        const VertexSet rest = world_ - visited;
        // The closing edge must come from a still-unvisited neighbor of the
        // start vertex.
        if (!adj_[start_].intersects(rest)) return false;
        const VertexSet ends = VertexSet::single(head) | VertexSet::single(start_);
        const VertexSet usable = rest | ends;
        const bool lone = rest.count() == 1;
        // Every unvisited vertex still needs two incident cycle edges, and
        // they can only go to unvisited vertices, the path head, or the
        // start. A vertex left with only the two path ends would have to be
        // simultaneously the next and the final vertex, so unless it is the
        // lone remaining vertex the branch is dead.
        for (int v : rest) {
            const VertexSet avail = adj_[v] & usable;
            if (avail.count() < 2) return false;
            if (!lone && avail.is_subset_of(ends)) return false;
        }
        // The head must be able to reach every unvisited vertex through
        // unvisited vertices.
        VertexSet reach = VertexSet::single(head);
        for (;;) {
            VertexSet grow = reach;
            for (int v : reach) grow = grow | (adj_[v] & rest);
            if (grow == reach) break;
            reach = grow;
        }
        return rest.is_subset_of(reach);
    }

    VertexSet world_;
    std::vector<VertexSet> adj_;
    std::vector<int> ordered_;
    int start_ = 0;
    std::vector<int> path_;
};

}  // namespace

HamTable::HamTable(const Graph& g, int cap) : graph_(g), n_(g.vertex_count()), cap_(cap) {
    if (cap_ < 3 || cap_ > 26)
        throw std::invalid_argument("HamTable: cap must be between 3 and 26");
    if (n_ > cap_)
        throw capacity_error("HamTable: graph has " + std::to_string(n_) +
                             " vertices, subset table capped at " + std::to_string(cap_) +
                             " (raise the cap or use the targeted search)");
    adj_.assign(n_, 0);
    for (int v = 0; v < n_; ++v)
        adj_[v] = static_cast<std::uint32_t>(g.neighbors(v).bits());
    path_ends_.assign(std::size_t{1} << n_, 0);
    for (std::uint32_t S = 1; S < (std::uint32_t{1} << n_); ++S) {
        const std::uint32_t anchor_bit = S & (~S + 1);
        if (S == anchor_bit) {
            path_ends_[S] = anchor_bit;  // the one-vertex path
            continue;
        }
        std::uint32_t ends = 0;
        std::uint32_t rest = S ^ anchor_bit;
        while (rest) {
            const std::uint32_t vbit = rest & (~rest + 1);
            rest ^= vbit;
            const int v = std::countr_zero(vbit);
            if (path_ends_[S ^ vbit] & adj_[v]) ends |= vbit;
        }
        path_ends_[S] = ends;
    }
}

bool HamTable::ham(VertexSet W) const {
    if (!W.is_subset_of(VertexSet::full(n_)))
        throw std::invalid_argument("HamTable::ham: subset index out of range");
    if (W.count() < 3) return false;
    const std::uint32_t S = static_cast<std::uint32_t>(W.bits());
    return (path_ends_[S] & adj_[W.min()]) != 0;
}

std::optional<Cycle> HamTable::witness_cycle(VertexSet W) const {
    if (!ham(W)) return std::nullopt;
    const int anchor = W.min();
    std::uint32_t S = static_cast<std::uint32_t>(W.bits());
    std::uint32_t head_options = path_ends_[S] & adj_[anchor];
    std::vector<int> rev;
    int head = std::countr_zero(head_options);
    while (head != anchor) {
        rev.push_back(head);
        S ^= std::uint32_t{1} << head;
        head_options = path_ends_[S] & adj_[head];
        head = std::countr_zero(head_options);
    }
    rev.push_back(anchor);
    std::reverse(rev.begin(), rev.end());
    return Cycle::checked(graph_, std::move(rev));
}

HamTable build_ham_table(const Graph& g, int cap) { return HamTable(g, cap); }

std::optional<Cycle> hamiltonian_cycle(const Graph& g) {
    if (g.vertex_count() < 3) return std::nullopt;
    CycleSearch search(g, g.vertex_set());
    auto seq = search.run();
    if (!seq) return std::nullopt;
    return Cycle::checked(g, std::move(*seq));
}

bool is_induced_hamiltonian(const Graph& g, VertexSet W, const HamTable* table) {
    if (!W.is_subset_of(g.vertex_set()))
        throw std::invalid_argument("is_induced_hamiltonian: subset index out of range");
    if (W.count() < 3)
        throw std::invalid_argument("is_induced_hamiltonian: needs at least 3 vertices");
    if (table && table->graph_fingerprint() == g.fingerprint()) return table->ham(W);
    CycleSearch search(g, W);
    return search.run().has_value();
}

bool is_pancyclic(const Graph& g, const HamTable& table) {
    if (table.graph_fingerprint() != g.fingerprint())
        throw std::invalid_argument("is_pancyclic: table built for a different graph");
    const int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<char> seen(n + 1, 0);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t S = 7; S <= full; ++S) {
        const int size = std::popcount(S);
        if (size < 3 || seen[size]) continue;
        if (table.ham(VertexSet(S))) seen[size] = 1;
    }
    for (int len = 3; len <= n; ++len)
        if (!seen[len]) return false;
    return true;
}

}  // namespace cyclex
