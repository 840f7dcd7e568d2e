#include "cyclex/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclex {

namespace {

bool valid_token(std::string_view name) {
    if (name.empty()) return false;
    for (char c : name) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

std::uint64_t fnv1a_step(std::uint64_t h, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xff;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

VertexSet VertexSet::single(int v) {
    VertexSet s;
    s.add(v);
    return s;
}

VertexSet VertexSet::full(int n) {
    if (n < 0 || n > max_size) throw std::invalid_argument("VertexSet::full: bad size");
    if (n == 0) return VertexSet();
    return VertexSet(~std::uint64_t{0} >> (max_size - n));
}

VertexSet VertexSet::of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

VertexSet& VertexSet::add(int v) {
    if (v < 0 || v >= max_size) throw std::invalid_argument("VertexSet: index out of range");
    bits_ |= std::uint64_t{1} << v;
    return *this;
}

VertexSet& VertexSet::remove(int v) {
    if (v < 0 || v >= max_size) throw std::invalid_argument("VertexSet: index out of range");
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
}

Graph::Graph(std::vector<std::string> names, const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)) {
    if (vertex_count() > VertexSet::max_size)
        throw std::invalid_argument("Graph: at most 64 vertices supported");
    adj_.assign(names_.size(), VertexSet());
    for (int i = 0; i < vertex_count(); ++i) {
        if (!valid_token(names_[i]))
            throw std::invalid_argument("Graph: invalid vertex name '" + names_[i] + "'");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("Graph: duplicate vertex name '" + names_[i] + "'");
    }
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at '" + names_[u] + "'");
        if (adj_[u].contains(v))
            throw std::invalid_argument("Graph: duplicate edge " + names_[u] + " " + names_[v]);
        adj_[u].add(v);
        adj_[v].add(u);
        ++edge_count_;
    }
    finish_build();
}

Graph Graph::from_named_edges(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) idx.emplace(names[i], i);
    std::vector<std::pair<int, int>> index_edges;
    index_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = idx.find(a), ib = idx.find(b);
        if (ia == idx.end()) throw std::invalid_argument("Graph: unknown vertex '" + a + "'");
        if (ib == idx.end()) throw std::invalid_argument("Graph: unknown vertex '" + b + "'");
        index_edges.emplace_back(ia->second, ib->second);
    }
    return Graph(std::move(names), index_edges);
}

void Graph::finish_build() {
    std::uint64_t h = 0xcbf29ce484222325ull;
    h = fnv1a_step(h, static_cast<std::uint64_t>(vertex_count()));
    for (const auto& name : names_) {
        for (char c : name) h = fnv1a_step(h, static_cast<unsigned char>(c));
        h = fnv1a_step(h, 0xff);
    }
    for (int v = 0; v < vertex_count(); ++v) h = fnv1a_step(h, adj_[v].bits());
    fingerprint_ = h;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("Graph: vertex index out of range");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].contains(v);
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

VertexSet Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    return adj_[v] | VertexSet::single(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_[v].count();
}

const std::string& Graph::name_of(int v) const {
    check_vertex(v);
    return names_[v];
}

int Graph::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        throw std::invalid_argument("Graph: unknown vertex '" + std::string(name) + "'");
    return it->second;
}

std::optional<int> Graph::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> Graph::names_of(VertexSet W) const {
    std::vector<std::string> out;
    out.reserve(W.count());
    for (int v : W) out.push_back(name_of(v));
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(VertexSet W) const {
    if (!W.is_subset_of(vertex_set()))
        throw std::invalid_argument("Graph::induced: subset index out of range");
    std::vector<std::string> names;
    std::vector<int> new_index(vertex_count(), -1);
    for (int v : W) {
        new_index[v] = static_cast<int>(names.size());
        names.push_back(names_[v]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : W)
        for (int v : adj_[u] & W)
            if (u < v) edges.emplace_back(new_index[u], new_index[v]);
    return Graph(std::move(names), edges);
}

Graph Graph::add_true_twin(int v, std::string name) const {
    check_vertex(v);
    if (index_.count(name))
        throw std::invalid_argument("Graph: duplicate vertex name '" + name + "'");
    std::vector<std::string> names = names_;
    names.push_back(std::move(name));
    const int t = vertex_count();
    auto edge_list = edges();
    for (int u : closed_neighborhood(v)) edge_list.emplace_back(u, t);
    return Graph(std::move(names), edge_list);
}

Graph Graph::add_universal_vertex(std::string name) const {
    if (index_.count(name))
        throw std::invalid_argument("Graph: duplicate vertex name '" + name + "'");
    std::vector<std::string> names = names_;
    names.push_back(std::move(name));
    const int t = vertex_count();
    auto edge_list = edges();
    for (int u = 0; u < t; ++u) edge_list.emplace_back(u, t);
    return Graph(std::move(names), edge_list);
}

Graph Graph::remove_vertex(int v) const {
    check_vertex(v);
    return induced(vertex_set() - VertexSet::single(v));
}

bool named_equal(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        auto bv = b.find_vertex(a.name_of(v));
        if (!bv) return false;
        for (int u : a.neighbors(v))
            if (!b.adjacent(*bv, b.index_of(a.name_of(u)))) return false;
    }
    return true;
}

bool is_true_twins(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("is_true_twins: vertices must differ");
    return g.closed_neighborhood(u) == g.closed_neighborhood(v);
}

bool is_simplicial(const Graph& g, int v) {
    return is_simplicial_in(g, v, g.vertex_set());
}

bool is_simple_vertex(const Graph& g, int v) {
    return is_simple_in(g, v, g.vertex_set());
}

bool is_simplicial_in(const Graph& g, int v, VertexSet within) {
    if (!within.contains(v))
        throw std::invalid_argument("is_simplicial_in: vertex not in subgraph");
    const VertexSet nbrs = g.neighbors(v) & within;
    for (int u : nbrs)
        if (!(nbrs - VertexSet::single(u)).is_subset_of(g.neighbors(u))) return false;
    return true;
}

bool is_simple_in(const Graph& g, int v, VertexSet within) {
    if (!within.contains(v))
        throw std::invalid_argument("is_simple_in: vertex not in subgraph");
    const VertexSet nbrs = g.neighbors(v) & within;
    // Closed neighborhoods (inside `within`) of the neighbors must form an
    // inclusion chain. Sorted by size, that reduces to consecutive inclusion;
    // equal-size sets only chain when identical, which the check covers.
    std::vector<VertexSet> closed;
    closed.reserve(nbrs.count());
    for (int u : nbrs) closed.push_back((g.neighbors(u) & within) | VertexSet::single(u));
    std::sort(closed.begin(), closed.end(),
              [](VertexSet a, VertexSet b) { return a.count() < b.count(); });
    for (std::size_t i = 0; i + 1 < closed.size(); ++i)
        if (!closed[i].is_subset_of(closed[i + 1])) return false;
    return true;
}

bool is_clique(const Graph& g, VertexSet W) {
    if (!W.is_subset_of(g.vertex_set()))
        throw std::invalid_argument("is_clique: subset index out of range");
    for (int u : W)
        if (!(W - VertexSet::single(u)).is_subset_of(g.neighbors(u))) return false;
    return true;
}

bool is_independent(const Graph& g, VertexSet W) {
    if (!W.is_subset_of(g.vertex_set()))
        throw std::invalid_argument("is_independent: subset index out of range");
    for (int u : W)
        if (g.neighbors(u).intersects(W)) return false;
    return true;
}

std::vector<VertexSet> connected_components_within(const Graph& g, VertexSet within) {
    if (!within.is_subset_of(g.vertex_set()))
        throw std::invalid_argument("connected_components: subset index out of range");
    std::vector<VertexSet> comps;
    VertexSet todo = within;
    while (!todo.empty()) {
        VertexSet comp = VertexSet::single(todo.min());
        for (;;) {
            VertexSet grow = comp;
            for (int v : comp) grow = grow | (g.neighbors(v) & within);
            if (grow == comp) break;
            comp = grow;
        }
        comps.push_back(comp);
        todo = todo - comp;
    }
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components_within(g, g.vertex_set());
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Cycle Cycle::checked(const Graph& g, std::vector<int> seq) {
    const int len = static_cast<int>(seq.size());
    if (len < 3) throw std::invalid_argument("Cycle: needs at least 3 vertices");
    VertexSet seen;
    for (int v : seq) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("Cycle: vertex index out of range");
        if (seen.contains(v)) throw std::invalid_argument("Cycle: repeated vertex");
        seen.add(v);
    }
    for (int i = 0; i < len; ++i) {
        const int u = seq[i], v = seq[(i + 1) % len];
        if (!g.adjacent(u, v))
            throw std::invalid_argument("Cycle: " + g.name_of(u) + " and " + g.name_of(v) +
                                        " are not adjacent");
    }
    return Cycle(std::move(seq));
}

Cycle Cycle::from_names(const Graph& g, const std::vector<std::string>& names) {
    std::vector<int> seq;
    seq.reserve(names.size());
    for (const auto& name : names) seq.push_back(g.index_of(name));
    return checked(g, std::move(seq));
}

VertexSet Cycle::vertex_set() const {
    VertexSet s;
    for (int v : seq_) s.add(v);
    return s;
}

std::vector<std::pair<int, int>> Cycle::edge_list() const {
    std::vector<std::pair<int, int>> out;
    const int len = length();
    out.reserve(len);
    for (int i = 0; i < len; ++i) {
        int u = seq_[i], v = seq_[(i + 1) % len];
        out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
}

std::vector<std::string> Cycle::names(const Graph& g) const {
    std::vector<std::string> out;
    out.reserve(seq_.size());
    for (int v : seq_) out.push_back(g.name_of(v));
    return out;
}

bool Cycle::is_valid_in(const Graph& g) const {
    const int len = length();
    VertexSet seen;
    for (int v : seq_) {
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        seen.add(v);
    }
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(seq_[i], seq_[(i + 1) % len])) return false;
    return len >= 3;
}

std::vector<int> Cycle::canonical() const {
    const int len = length();
    int start = 0;
    for (int i = 1; i < len; ++i)
        if (seq_[i] < seq_[start]) start = i;
    std::vector<int> fwd(len), bwd(len);
    for (int i = 0; i < len; ++i) {
        fwd[i] = seq_[(start + i) % len];
        bwd[i] = seq_[(start - i + len) % len];
    }
    return std::min(fwd, bwd);
}

}  // namespace cyclex
