#include "doctest.h"

#include "cyclex/constructions.hpp"
#include "cyclex/generators.hpp"
#include "cyclex/hamiltonicity.hpp"
#include "cyclex/recognition.hpp"
#include "support/oracles.hpp"

using namespace cyclex;

namespace {

Graph complete(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) names.push_back("k" + std::to_string(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(std::move(names), edges);
}

Graph cycle_graph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        names.push_back("c" + std::to_string(v));
        edges.emplace_back(v, (v + 1) % n);
    }
    return Graph(std::move(names), edges);
}

Graph path_graph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) names.push_back("p" + std::to_string(v));
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(std::move(names), edges);
}

}  // namespace

TEST_CASE("table on tiny fixed graphs") {
    SUBCASE("K4: every triple and the whole set") {
        Graph k4 = complete(4);
        HamTable table(k4);
        for (std::uint64_t S = 0; S < 16; ++S) {
            const VertexSet W(S);
            if (W.count() >= 3) CHECK(table.ham(W));
        }
    }
    SUBCASE("C4: whole set only") {
        Graph c4 = cycle_graph(4);
        HamTable table(c4);
        CHECK(table.ham(c4.vertex_set()));
        for (int skip = 0; skip < 4; ++skip)
            CHECK_FALSE(table.ham(c4.vertex_set() - VertexSet::single(skip)));
    }
    SUBCASE("K5 triples") {
        Graph k5 = complete(5);
        HamTable table(k5);
        CHECK(table.ham(VertexSet::of({0, 2, 4})));
        CHECK(is_induced_hamiltonian(k5, VertexSet::of({1, 2, 3}), &table));
    }
}

TEST_CASE("hamiltonian_cycle") {
    CHECK_FALSE(hamiltonian_cycle(path_graph(4)).has_value());

    auto hh = build_H_hat();
    auto cyc = hamiltonian_cycle(hh.graph);
    REQUIRE(cyc.has_value());
    CHECK(cyc->length() == 15);
    CHECK(cyc->is_valid_in(hh.graph));

    // The construction's own Hamiltonian witness.
    Cycle listed = Cycle::from_names(
        hh.graph, {"a", "v1", "u2", "v2", "g", "f", "v4", "u3", "v3", "b", "c", "d", "e",
                   "v5", "u1"});
    CHECK(listed.vertex_set() == hh.graph.vertex_set());
}

TEST_CASE("witness cycles validate for the star-joined family") {
    for (auto [t, k] : {std::pair{1, 1}, {2, 2}, {3, 1}}) {
        auto lg = build_G_k(t, k);
        Cycle ham = Cycle::from_names(lg.graph, [&] {
            std::vector<std::string> names{"a", "v1", "u2"};
            for (int i = 1; i <= k; ++i) {
                names.push_back("x" + std::to_string(i));
                names.push_back("y" + std::to_string(i));
            }
            for (const char* w : {"v2", "g", "f", "v4", "u3", "v3", "b"}) names.push_back(w);
            names.push_back("c");
            for (int i = 1; i < t; ++i) names.push_back("z" + std::to_string(i));
            names.push_back("d");
            for (const char* w : {"e", "v5", "u1"}) names.push_back(w);
            return names;
        }());
        CHECK(ham.vertex_set() == lg.graph.vertex_set());
    }
}

TEST_CASE("witness reconstruction at full 15-vertex scale") {
    auto hh = build_H_hat();
    HamTable table(hh.graph);
    auto witness = table.witness_cycle(hh.graph.vertex_set());
    REQUIRE(witness.has_value());
    CHECK(witness->vertex_set() == hh.graph.vertex_set());
    CHECK(witness->is_valid_in(hh.graph));
}

TEST_CASE("stripped base graph loses the near-Hamiltonian subsets") {
    auto hm = build_H_hat_minus();
    HamTable table(hm.graph);
    VertexSet minus_c = hm.graph.vertex_set() - VertexSet::single(hm.graph.index_of("c"));
    VertexSet minus_d = hm.graph.vertex_set() - VertexSet::single(hm.graph.index_of("d"));
    CHECK_FALSE(table.ham(minus_c));
    CHECK_FALSE(table.ham(minus_d));
    // The full graph still is Hamiltonian.
    CHECK(table.ham(hm.graph.vertex_set()));
}

TEST_CASE("table agrees with per-subset backtracking and permutation scan") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + rng.next_below(7);  // 4..10
        Graph g = testing::random_graph(n, 0.25 + 0.5 * rng.next_unit(), rng);
        HamTable table(g);
        for (std::uint64_t S = 0; S < (std::uint64_t{1} << n); ++S) {
            const VertexSet W(S);
            if (W.count() < 3) continue;
            const bool direct = is_induced_hamiltonian(g, W, nullptr);
            CHECK(table.ham(W) == direct);
            if (n <= 8) CHECK(direct == testing::hamiltonian_by_permutation(g, W));
        }
    }
}

TEST_CASE("witness reconstruction from the table") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = testing::random_graph(8, 0.5, rng);
        HamTable table(g);
        for (std::uint64_t S = 0; S < 256; ++S) {
            const VertexSet W(S);
            if (W.count() < 3) continue;
            auto witness = table.witness_cycle(W);
            CHECK(witness.has_value() == table.ham(W));
            if (witness) {
                CHECK(witness->vertex_set() == W);
                CHECK(witness->is_valid_in(g));
            }
        }
    }
}

TEST_CASE("search decision matches the table") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 4 + rng.next_below(9);
        Graph g = testing::random_graph(n, 0.2 + 0.5 * rng.next_unit(), rng);
        HamTable table(g);
        CHECK(hamiltonian_cycle(g).has_value() == table.ham(g.vertex_set()));
    }
}

TEST_CASE("adding a universal vertex or true twin keeps Hamiltonicity") {
    SplitMix64 rng(91);
    int done = 0;
    while (done < 110) {
        const int n = 5 + rng.next_below(8);  // 5..12
        Graph g = testing::random_graph(n, 0.3 + 0.4 * rng.next_unit(), rng);
        if (!hamiltonian_cycle(g).has_value()) continue;
        ++done;
        Graph u = g.add_universal_vertex("uni");
        CHECK(hamiltonian_cycle(u).has_value());
        Graph t = g.add_true_twin(rng.next_below(n), "twin");
        CHECK(hamiltonian_cycle(t).has_value());
    }
}

TEST_CASE("pancyclicity") {
    Graph k4 = complete(4);
    CHECK(is_pancyclic(k4, HamTable(k4)));
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(is_pancyclic(c5, HamTable(c5)));  // no triangle

    auto hh = build_H_hat();
    CHECK(is_pancyclic(hh.graph, HamTable(hh.graph)));

    // Hamiltonian chordal graphs are pancyclic.
    SplitMix64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        GenSpec spec;
        spec.n = 5 + rng.next_below(8);
        spec.seed = rng.next();
        spec.fill_density = 0.3 * rng.next_unit();
        Graph g = random_hamiltonian_chordal(spec);
        CHECK(is_pancyclic(g, HamTable(g)));
    }
}

TEST_CASE("capacity is enforced and named") {
    Graph big = path_graph(23);
    CHECK_THROWS_AS(HamTable{big}, capacity_error);
    try {
        HamTable table(big);
    } catch (const capacity_error& e) {
        CHECK(std::string(e.what()).find("22") != std::string::npos);
    }
    CHECK_NOTHROW(HamTable(big, 23));
    CHECK_THROWS_AS(is_induced_hamiltonian(complete(4), VertexSet::of({0, 1})),
                    std::invalid_argument);
}
