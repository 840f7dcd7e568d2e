#include "cyclex/recognition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "cyclex/prng.hpp"

namespace cyclex {

bool verify_elimination_ordering(const Graph& g, const EliminationOrdering& eo) {
    const int n = g.vertex_count();
    if (static_cast<int>(eo.order.size()) != n) return false;
    VertexSet remaining = g.vertex_set();
    for (int v : eo.order) {
        if (!remaining.contains(v)) return false;  // not a permutation
        const bool ok = eo.kind == OrderingKind::Perfect ? is_simplicial_in(g, v, remaining)
                                                         : is_simple_in(g, v, remaining);
        if (!ok) return false;
        remaining.remove(v);
    }
    return true;
}

std::optional<EliminationOrdering> maximum_cardinality_search(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<char> picked(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!picked[v] && (best < 0 || weight[v] > weight[best])) best = v;
        picked[best] = 1;
        visit.push_back(best);
        for (int u : g.neighbors(best))
            if (!picked[u]) ++weight[u];
    }
    // MCS numbers vertices from the back of a perfect elimination ordering;
    // the ordering is then verified rather than trusted.
    EliminationOrdering eo{std::vector<int>(visit.rbegin(), visit.rend()),
                           OrderingKind::Perfect};
    if (!verify_elimination_ordering(g, eo)) return std::nullopt;
    return eo;
}

bool is_chordal(const Graph& g) { return maximum_cardinality_search(g).has_value(); }

namespace {

// Any simple vertex works at every step (strong chordality is hereditary and
// every strongly chordal graph has a simple vertex). The deterministic
// variant takes a minimum-degree simple vertex; the seeded one picks
// uniformly so tests can confirm the choice does not matter.
std::optional<EliminationOrdering> seo_greedy(const Graph& g, SplitMix64* rng) {
    VertexSet remaining = g.vertex_set();
    std::vector<int> order;
    order.reserve(g.vertex_count());
    std::vector<int> simple;
    while (!remaining.empty()) {
        simple.clear();
        for (int v : remaining)
            if (is_simple_in(g, v, remaining)) simple.push_back(v);
        if (simple.empty()) return std::nullopt;
        int pick;
        if (rng) {
            pick = simple[rng->next_below(static_cast<int>(simple.size()))];
        } else {
            pick = simple.front();
            for (int v : simple) {
                if ((g.neighbors(v) & remaining).count() <
                    (g.neighbors(pick) & remaining).count())
                    pick = v;
            }
        }
        order.push_back(pick);
        remaining.remove(pick);
    }
    return EliminationOrdering{std::move(order), OrderingKind::Simple};
}

}  // namespace

std::optional<EliminationOrdering> simple_elimination_ordering(const Graph& g) {
    return seo_greedy(g, nullptr);
}

std::optional<EliminationOrdering> simple_elimination_ordering(const Graph& g,
                                                               std::uint64_t tie_break_seed) {
    SplitMix64 rng(tie_break_seed);
    return seo_greedy(g, &rng);
}

bool is_strongly_chordal(const Graph& g) { return simple_elimination_ordering(g).has_value(); }

namespace {

// Unit-capacity vertex-split network: node 2v is "into v", node 2v+1 is "out
// of v"; the in->out arc carries capacity 1, edge arcs are effectively
// unbounded. Max flow out(s) -> in(t) counts internally vertex-disjoint s-t
// paths (Menger).
class VertexSplitFlow {
public:
    explicit VertexSplitFlow(const Graph& g) : n_(g.vertex_count()) {
        const int big = n_ + 2;
        cap_.assign(2 * n_, std::vector<int>(2 * n_, 0));
        for (int v = 0; v < n_; ++v) cap_[in(v)][out(v)] = 1;
        for (auto [u, v] : g.edges()) {
            cap_[out(u)][in(v)] = big;
            cap_[out(v)][in(u)] = big;
        }
    }

    // Runs Edmonds-Karp until exhaustion or until the flow reaches `stop_at`.
    int max_disjoint_paths(int s, int t, int stop_at) {
        const int src = out(s), dst = in(t);
        cap_[in(s)][out(s)] = cap_[in(t)][out(t)] = n_ + 2;
        int flow = 0;
        while (flow < stop_at && augment(src, dst)) ++flow;
        return flow;
    }

    // After a maxed-out run: vertices whose in-node is residually reachable
    // from the source while the out-node is not.
    std::vector<int> cut_vertices(int s, int t) {
        std::vector<char> reach = residual_reachable(out(s));
        std::vector<int> cut;
        for (int v = 0; v < n_; ++v) {
            if (v == s || v == t) continue;
            if (reach[in(v)] && !reach[out(v)]) cut.push_back(v);
        }
        return cut;
    }

private:
    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    bool augment(int src, int dst) {
        std::vector<int> prev(2 * n_, -1);
        prev[src] = src;
        std::deque<int> queue{src};
        while (!queue.empty() && prev[dst] < 0) {
            const int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < 2 * n_; ++y) {
                if (prev[y] >= 0 || cap_[x][y] <= 0) continue;
                prev[y] = x;
                queue.push_back(y);
            }
        }
        if (prev[dst] < 0) return false;
        for (int y = dst; y != src; y = prev[y]) {
            --cap_[prev[y]][y];
            ++cap_[y][prev[y]];
        }
        return true;
    }

    std::vector<char> residual_reachable(int src) const {
        std::vector<char> reach(2 * n_, 0);
        reach[src] = 1;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y = 0; y < 2 * n_; ++y) {
                if (reach[y] || cap_[x][y] <= 0) continue;
                reach[y] = 1;
                queue.push_back(y);
            }
        }
        return reach;
    }

    int n_;
    std::vector<std::vector<int>> cap_;
};

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

int connectivity_impl(const Graph& g, std::vector<int>* min_cut) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: needs at least 2 vertices");
    if (min_cut) min_cut->clear();
    if (is_complete(g)) return n - 1;  // no cut exists; n-1 by convention
    int best = n;
    int best_s = -1, best_t = -1;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(s, t)) continue;
            VertexSplitFlow flow(g);
            const int f = flow.max_disjoint_paths(s, t, best);
            if (f < best) {
                best = f;
                best_s = s;
                best_t = t;
            }
        }
    }
    if (min_cut) {
        VertexSplitFlow flow(g);
        flow.max_disjoint_paths(best_s, best_t, n);
        *min_cut = flow.cut_vertices(best_s, best_t);
    }
    return best;
}

}  // namespace

int vertex_connectivity(const Graph& g) { return connectivity_impl(g, nullptr); }

int vertex_connectivity(const Graph& g, std::vector<int>& min_cut) {
    return connectivity_impl(g, &min_cut);
}

int vertex_connectivity_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: needs at least 2 vertices");
    const VertexSet all = g.vertex_set();
    for (int k = 0; k <= n - 2; ++k) {
        // All k-subsets, as bit patterns.
        for (std::uint64_t S = 0; S < (std::uint64_t{1} << n); ++S) {
            if (std::popcount(S) != k) continue;
            const VertexSet rest = all - VertexSet(S);
            if (rest.count() >= 2 && connected_components_within(g, rest).size() > 1) return k;
        }
    }
    return n - 1;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    const int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return k <= 1;
    return vertex_connectivity(g) >= k;
}

namespace patterns {

Pattern k_fan(int k) {
    if (k < 1) throw std::invalid_argument("k_fan: k must be >= 1");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= k; ++i) {
        names.push_back("p" + std::to_string(i));
        if (i > 0) edges.emplace_back(i - 1, i);
    }
    names.push_back("hub");
    for (int i = 0; i <= k; ++i) edges.emplace_back(i, k + 1);
    return Pattern{std::to_string(k) + "-fan", Graph(std::move(names), edges)};
}

Pattern three_fan() { return k_fan(3); }
Pattern four_fan() { return k_fan(4); }

Pattern k_sun(int k) {
    if (k < 3) throw std::invalid_argument("k_sun: k must be >= 3");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) names.push_back("y" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(k + i, i);
        edges.emplace_back(k + i, (i + 1) % k);
    }
    return Pattern{std::to_string(k) + "-sun", Graph(std::move(names), edges)};
}

Pattern k5_minus_e() {
    std::vector<std::string> names{"s1", "s2", "t1", "t2", "t3"};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 0 && j == 1)) edges.emplace_back(i, j);
    return Pattern{"k5-e", Graph(std::move(names), edges)};
}

Pattern hole(int len) {
    if (len < 4) throw std::invalid_argument("hole: length must be >= 4");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < len; ++i) {
        names.push_back("c" + std::to_string(i));
        edges.emplace_back(i, (i + 1) % len);
    }
    return Pattern{"hole" + std::to_string(len), Graph(std::move(names), edges)};
}

Pattern a_bar() {
    std::vector<std::string> names{"xp", "x", "z", "zp", "y", "yp"};
    std::vector<std::pair<std::string, std::string>> edges{
        {"xp", "x"}, {"xp", "z"}, {"x", "z"}, {"x", "zp"}, {"z", "zp"},
        {"z", "y"},  {"zp", "y"}, {"zp", "yp"}, {"y", "yp"},
    };
    return Pattern{"a-bar", Graph::from_named_edges(std::move(names), edges)};
}

}  // namespace patterns

VertexSet PatternOccurrence::image_set() const {
    VertexSet s;
    for (int v : image) s.add(v);
    return s;
}

std::vector<std::pair<std::string, std::string>> PatternOccurrence::name_map(
    const Pattern& p, const Graph& g) const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(image.size());
    for (int i = 0; i < static_cast<int>(image.size()); ++i)
        out.emplace_back(p.graph.name_of(i), g.name_of(image[i]));
    return out;
}

namespace {

// Match order for the backtracking embedder: start at a maximum-degree
// pattern vertex, then always extend with an unplaced vertex seeing the most
// placed ones. All patterns here are connected, so every vertex after the
// first has at least one placed neighbor to check against.
std::vector<int> pattern_match_order(const Graph& p) {
    const int pn = p.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(pn, 0);
    for (int step = 0; step < pn; ++step) {
        int best = -1, best_links = -1;
        for (int v = 0; v < pn; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : p.neighbors(v))
                if (placed[u]) ++links;
            if (links > best_links ||
                (links == best_links && p.degree(v) > p.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

class PatternSearch {
public:
    PatternSearch(const Graph& g, const Pattern& p,
                  const std::function<bool(const PatternOccurrence&)>& visit)
        : g_(g), p_(p.graph), visit_(visit), order_(pattern_match_order(p.graph)) {
        image_.assign(p_.vertex_count(), -1);
    }

    void run() {
        if (p_.vertex_count() > g_.vertex_count() || p_.vertex_count() == 0) return;
        place(0, VertexSet());
    }

private:
    // Returns false to abort the whole search (callback asked to stop).
    bool place(int depth, VertexSet used) {
        if (depth == p_.vertex_count()) {
            return visit_(PatternOccurrence{image_});
        }
        const int pv = order_[depth];
        const int pdeg = p_.degree(pv);
        for (int u = 0; u < g_.vertex_count(); ++u) {
            if (used.contains(u) || g_.degree(u) < pdeg) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int q = order_[d];
                ok = p_.adjacent(pv, q) == g_.adjacent(u, image_[q]);
            }
            if (!ok) continue;
            image_[pv] = u;
            if (!place(depth + 1, used | VertexSet::single(u))) return false;
            image_[pv] = -1;
        }
        return true;
    }

    const Graph& g_;
    const Graph& p_;
    const std::function<bool(const PatternOccurrence&)>& visit_;
    std::vector<int> order_;
    std::vector<int> image_;
};

}  // namespace

void for_each_induced_pattern(const Graph& g, const Pattern& p,
                              const std::function<bool(const PatternOccurrence&)>& visit) {
    PatternSearch(g, p, visit).run();
}

std::optional<PatternOccurrence> find_induced_pattern(const Graph& g, const Pattern& p) {
    std::optional<PatternOccurrence> found;
    for_each_induced_pattern(g, p, [&](const PatternOccurrence& occ) {
        found = occ;
        return false;
    });
    return found;
}

bool has_induced_pattern(const Graph& g, const Pattern& p) {
    return find_induced_pattern(g, p).has_value();
}

K5eTwinsReport every_k5e_has_true_twins(const Graph& g) {
    const int n = g.vertex_count();
    K5eTwinsReport report;
    if (n < 5) return report;
    // A 5-vertex subset induces K5-e exactly when it spans 9 edges.
    std::vector<int> idx{0, 1, 2, 3, 4};
    for (;;) {
        VertexSet W = VertexSet::of({idx[0], idx[1], idx[2], idx[3], idx[4]});
        int edges = 0;
        for (int u : W) edges += (g.neighbors(u) & W).count();
        if (edges / 2 == 9) {
            bool twins = false;
            for (int u : W) {
                for (int v : W) {
                    if (u < v && is_true_twins(g, u, v)) twins = true;
                }
            }
            if (!twins) {
                report.ok = false;
                report.violations.push_back(W);
            }
        }
        // next 5-combination of {0..n-1}
        int i = 4;
        while (i >= 0 && idx[i] == n - 5 + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
    return report;
}

ClassFlags class_flags(const Graph& g) {
    ClassFlags f{};
    f.chordal = is_chordal(g);
    f.strongly_chordal = is_strongly_chordal(g);
    f.fan3_free = !has_induced_pattern(g, patterns::three_fan());
    f.fan4_free = !has_induced_pattern(g, patterns::four_fan());
    f.abar_free = !has_induced_pattern(g, patterns::a_bar());
    f.k5e_twins_ok = every_k5e_has_true_twins(g).ok;
    f.ptolemaic = f.chordal && f.fan3_free;
    return f;
}

bool check_lemma_common_neighbor(const Graph& g, const Cycle& c) {
    if (!c.is_valid_in(g))
        throw std::invalid_argument("check_lemma_common_neighbor: invalid cycle");
    const VertexSet vc = c.vertex_set();
    const auto& seq = c.vertices();
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
        const int u = seq[i], v = seq[(i + 1) % len];
        if ((g.neighbors(u) & g.neighbors(v) & vc).empty()) return false;
    }
    return true;
}

bool check_simplicial_in_components(const Graph& g, VertexSet S) {
    if (!S.is_subset_of(g.vertex_set()))
        throw std::invalid_argument("check_simplicial_in_components: subset out of range");
    if (!is_clique(g, S))
        throw std::invalid_argument("check_simplicial_in_components: S is not a clique");
    for (const VertexSet& comp : connected_components_within(g, g.vertex_set() - S)) {
        bool found = false;
        for (int v : comp)
            if (is_simplicial(g, v)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace cyclex
