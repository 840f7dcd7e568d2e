#include "doctest.h"

#include <algorithm>
#include <set>

#include "cyclex/constructions.hpp"
#include "cyclex/extendability.hpp"
#include "cyclex/hamiltonicity.hpp"
#include "cyclex/recognition.hpp"
#include "support/oracles.hpp"

using namespace cyclex;

namespace {

std::set<std::pair<std::string, std::string>> named_edge_set(const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) {
        std::string a = g.name_of(u), b = g.name_of(v);
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("the 15-vertex base graph") {
    auto hh = build_H_hat();
    const Graph& g = hh.graph;
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 40);

    // Heavy edges are exactly the edges incident to the degree-2 set.
    std::set<std::pair<std::string, std::string>> heavy;
    for (auto [a, b] : hh.heavy_edges) {
        if (b < a) std::swap(a, b);
        heavy.insert({a, b});
    }
    CHECK(heavy.size() == 10);
    std::set<std::pair<std::string, std::string>> incident;
    for (const auto& vname : hh.degree2) {
        const int v = g.index_of(vname);
        CHECK(g.degree(v) == 2);
        for (int u : g.neighbors(v)) {
            std::string a = g.name_of(u), b = vname;
            if (b < a) std::swap(a, b);
            incident.insert({a, b});
        }
    }
    CHECK(heavy == incident);

    CHECK(g.neighbors(g.index_of("v3")) ==
          VertexSet::of({g.index_of("u3"), g.index_of("b")}));

    // The full Hamiltonian witness from the construction.
    Cycle ham = Cycle::from_names(g, {"a", "v1", "u2", "v2", "g", "f", "v4", "u3", "v3", "b",
                                      "c", "d", "e", "v5", "u1"});
    CHECK(ham.vertex_set() == g.vertex_set());

    CHECK(is_chordal(g));
    CHECK(is_strongly_chordal(g));
}

TEST_CASE("the stripped base graph") {
    auto hm = build_H_hat_minus();
    const Graph& g = hm.graph;
    CHECK(g.vertex_count() == 15);
    CHECK(g.edge_count() == 22);
    CHECK(g.degree(g.index_of("d")) == 3);
    CHECK(g.neighbors(g.index_of("d")) ==
          VertexSet::of({g.index_of("c"), g.index_of("e"), g.index_of("u1")}));
    CHECK(g.neighbors(g.index_of("u2")) ==
          VertexSet::of({g.index_of("v1"), g.index_of("v2")}));
    CHECK(g.neighbors(g.index_of("u3")) ==
          VertexSet::of({g.index_of("v3"), g.index_of("v4")}));
    CHECK_FALSE(g.adjacent(g.index_of("e"), g.index_of("u1")));
    CHECK(hm.heavy_edges == build_H_hat().heavy_edges);

    // Stripping opens a 6-hole (a v1 u2 v2 g u1), so the stripped graph is
    // Hamiltonian but no longer chordal.
    CHECK(Cycle::from_names(g, {"a", "v1", "u2", "v2", "g", "u1"}).is_valid_in(g));
    CHECK_FALSE(is_chordal(g));
    CHECK(hamiltonian_cycle(g).has_value());
}

TEST_CASE("stretched family") {
    CHECK(named_equal(build_G(1).graph, build_H_hat().graph));
    CHECK(build_G(3).graph.vertex_count() == 17);
    CHECK_THROWS_AS(build_G(0), std::invalid_argument);

    auto gm = build_G_minus(3);
    for (int j = 1; j <= 2; ++j)
        CHECK(gm.graph.degree(gm.graph.index_of("z" + std::to_string(j))) == 3);
    CHECK(gm.graph.degree(gm.index_of("z0")) == 3);  // alias of c
    CHECK(gm.graph.degree(gm.index_of("z3")) == 3);  // alias of d

    // Alias bookkeeping: z0/zt address c/d.
    auto g3 = build_G(3);
    CHECK(g3.resolve("z0") == "c");
    CHECK(g3.resolve("z3") == "d");
    CHECK(g3.index_of("z0") == g3.graph.index_of("c"));
}

TEST_CASE("stars") {
    auto s11 = build_star(1, 1);
    CHECK(s11.graph.vertex_count() == 2);
    CHECK(s11.graph.edge_count() == 1);

    auto s33 = build_star(3, 3);
    CHECK(s33.graph.vertex_count() == 6);
    CHECK(s33.graph.edge_count() == 12);
    VertexSet xs;
    for (const auto& x : s33.star_x) xs.add(s33.graph.index_of(x));
    CHECK(is_independent(s33.graph, xs));
    VertexSet ys;
    for (const auto& y : s33.star_y) ys.add(s33.graph.index_of(y));
    CHECK(is_clique(s33.graph, ys));

    auto s21 = build_star(2, 1);
    CHECK(s21.graph.vertex_count() == 3);
    CHECK(s21.graph.edge_count() == 2);  // P3

    CHECK_THROWS_AS(build_star(0, 2), std::invalid_argument);
}

TEST_CASE("star-joined family") {
    auto g33 = build_G_k(3, 3);
    CHECK(g33.graph.vertex_count() == 14 + 3 + 6);
    // X independent, Y a clique, Y universal.
    VertexSet xs;
    for (const auto& x : g33.star_x) xs.add(g33.graph.index_of(x));
    CHECK(is_independent(g33.graph, xs));
    for (const auto& y : g33.star_y)
        CHECK(g33.graph.degree(g33.graph.index_of(y)) == g33.graph.vertex_count() - 1);
    // X vertices see Y, u2 and u3 only.
    for (const auto& x : g33.star_x) {
        VertexSet expect;
        for (const auto& y : g33.star_y) expect.add(g33.graph.index_of(y));
        expect.add(g33.graph.index_of("u2")).add(g33.graph.index_of("u3"));
        CHECK(g33.graph.neighbors(g33.graph.index_of(x)) == expect);
    }

    CHECK(build_G_k(2, 1).graph.vertex_count() == 18);
    for (int k = 1; k <= 2; ++k) {
        auto lg = build_G_k(2, k);
        CHECK(lg.graph.degree(lg.graph.index_of("v1")) == 2 + k);
    }
    CHECK_THROWS_AS(build_G_k(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_G_k(1, 0), std::invalid_argument);
}

TEST_CASE("witness cycles") {
    auto g3 = build_G(3);
    Cycle c = witness_cycle(g3);
    CHECK(c.length() == 13);
    VertexSet omitted = g3.graph.vertex_set() - c.vertex_set();
    VertexSet z;
    z.add(g3.index_of("z0")).add(g3.index_of("z1")).add(g3.index_of("z2"))
        .add(g3.index_of("z3"));
    CHECK(omitted == z);

    auto g22 = build_G_k(2, 2);
    CHECK(witness_cycle(g22).length() == 13 + 2 * 2);
}

TEST_CASE("counterexample factory") {
    SUBCASE("minimum size reproduces the 15-vertex base") {
        auto ce = counterexample(15, 0, ExtensionSpec::of({1}));
        CHECK(named_equal(ce.graph.graph, build_H_hat().graph));
        CHECK(named_edge_set(ce.graph.graph) == named_edge_set(build_H_hat().graph));
        CHECK(ce.cycle.vertex_set() ==
              ce.graph.graph.vertex_set() -
                  VertexSet::of({ce.graph.graph.index_of("c"), ce.graph.graph.index_of("d")}));
    }
    SUBCASE("padding reaches the requested size") {
        auto ce = counterexample(18, 0, ExtensionSpec::of({1, 2, 3}));
        CHECK(ce.graph.graph.vertex_count() == 18);
        CHECK(ce.graph.twin_pad == std::vector<std::string>{"tw1"});
        const int v1 = ce.graph.graph.index_of("v1");
        CHECK(is_true_twins(ce.graph.graph, v1, ce.graph.graph.index_of("tw1")));
        // All twins lie on the witness cycle.
        CHECK(ce.cycle.vertex_set().contains(ce.graph.graph.index_of("tw1")));
    }
    SUBCASE("bound violation names the minimum") {
        CHECK_THROWS_WITH_AS(counterexample(14, 0, ExtensionSpec::of({1})),
                             doctest::Contains("minimum 14 + t + 2k = 15"),
                             std::invalid_argument);
        CHECK_THROWS_AS(counterexample(16, 1, ExtensionSpec::of({1})), std::invalid_argument);
    }
    SUBCASE("base properties at desk scale") {
        for (auto [t, k] : {std::pair{1, 0}, {2, 0}, {1, 1}}) {
            auto ce = counterexample(14 + t + 2 * k, k, ExtensionSpec::up_to(t));
            CAPTURE(t);
            CAPTURE(k);
            CHECK(is_chordal(ce.graph.graph));
            CHECK(is_strongly_chordal(ce.graph.graph));
            CHECK(hamiltonian_cycle(ce.graph.graph).has_value());
            CHECK(vertex_connectivity(ce.graph.graph) == 2 + k);
            CHECK_FALSE(is_set_extendable(ce.graph.graph, ce.cycle.vertex_set(),
                                          ExtensionSpec::up_to(t)).has_value());
        }
    }
    SUBCASE("padding up to base+4 preserves the profile") {
        const int t = 1, k = 0;
        auto ce = counterexample(14 + t + 4, k, ExtensionSpec::up_to(t));
        CHECK(ce.graph.graph.vertex_count() == 19);
        CHECK(is_strongly_chordal(ce.graph.graph));
        CHECK(hamiltonian_cycle(ce.graph.graph).has_value());
        CHECK(vertex_connectivity(ce.graph.graph) == 2 + k);
        CHECK_FALSE(is_set_extendable(ce.graph.graph, ce.cycle.vertex_set(),
                                      ExtensionSpec::up_to(t)).has_value());
    }
}
