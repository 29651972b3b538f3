#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cliquegraph/cliques.hpp"
#include "cliquegraph/errors.hpp"
#include "cliquegraph/generators.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/isomorphism.hpp"
#include "oracles.hpp"

using namespace cliquegraph;

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(40, 6) == 3838380);
}

TEST_CASE("clique enumeration matches the subset oracle exhaustively") {
    // every labeled graph on up to 5 vertices
    for (int n = 0; n <= 5; ++n) {
        oracles::for_each_graph(n, [&](const Graph& g) {
            REQUIRE(enumerate_maximal_cliques(g) == oracles::subset_maximal_cliques(g));
            for (int order = 1; order <= n; ++order)
                REQUIRE(enumerate_cliques_of_order(g, order) == oracles::subset_cliques(g, order));
        });
    }
}

TEST_CASE("clique enumeration matches the subset oracle on random graphs") {
    std::mt19937_64 rng(0x5eedu);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracles::random_graph(rng, 9, t % 2 ? 0.4 : 0.7);
        REQUIRE(enumerate_maximal_cliques(g) == oracles::subset_maximal_cliques(g));
        for (int order = 2; order <= 5; ++order)
            REQUIRE(enumerate_cliques_of_order(g, order) == oracles::subset_cliques(g, order));
    }
}

TEST_CASE("clique listings are canonical") {
    auto cliques = enumerate_cliques_of_order(rook_graph(4), 4);
    CHECK(std::is_sorted(cliques.begin(), cliques.end()));
    for (const auto& c : cliques) CHECK(std::is_sorted(c.begin(), c.end()));
    CHECK_THROWS_AS(enumerate_cliques_of_order(rook_graph(3), 0), invalid_argument_error);
}

TEST_CASE("clique counts of named graphs") {
    // rook's graph on n x n: the n-cliques are the rows and columns
    CHECK(enumerate_maximal_cliques(rook_graph(3)).size() == 6);
    CHECK(enumerate_cliques_of_order(rook_graph(5), 5).size() == 10);
    CHECK(enumerate_cliques_of_order(rook_graph(5), 5) == oracles::subset_cliques(rook_graph(5), 5));

    CHECK(enumerate_cliques_of_order(triangular_graph(5), 4).size() == 5);
    CHECK(enumerate_cliques_of_order(triangular_graph(4), 3).size() == 8);

    CHECK(clique_number(rook_graph(4)) == 4);
    CHECK(clique_number(oracles::cycle(5)) == 2);
    CHECK(clique_number(complete_graph(7)) == 7);
    CHECK(clique_number(oracles::petersen()) == 2);
    CHECK(clique_number(Graph(3)) == 1);
    CHECK(clique_number(Graph(0)) == 0);
}

TEST_CASE("clique regularity") {
    CHECK(is_clique_regular(rook_graph(5), 5));
    CHECK(is_clique_regular(oracles::bowtie(), 3));
    CHECK(is_clique_regular(oracles::petersen(), 2));

    auto c5 = check_clique_regular(oracles::cycle(5), 3);
    CHECK_FALSE(c5.regular);
    REQUIRE(c5.counterexample.has_value());
    CHECK(c5.counterexample->first >= 0);
    CHECK(c5.counterexample_count == 0);

    auto k4 = check_clique_regular(complete_graph(4), 3);
    CHECK_FALSE(k4.regular);
    CHECK(k4.counterexample_count == 2);  // each edge of K_4 closes two triangles

    auto empty = check_clique_regular(Graph(4), 2);
    CHECK_FALSE(empty.regular);
    CHECK(empty.counterexample == Edge{-1, -1});

    CHECK_THROWS_AS(check_clique_regular(rook_graph(3), 1), invalid_argument_error);
}

TEST_CASE("clique regular orders") {
    CHECK(clique_regular_orders(rook_graph(4)) == std::vector<int>{2, 4});
    CHECK(clique_regular_orders(complete_graph(4)) == std::vector<int>{2, 4});
    CHECK(clique_regular_orders(oracles::cycle(6)) == std::vector<int>{2});
    CHECK(clique_regular_orders(oracles::bowtie()) == std::vector<int>{2, 3});
    // the octahedron: every edge lies in two triangles
    CHECK(clique_regular_orders(triangular_graph(4)) == std::vector<int>{2});
    CHECK(clique_regular_orders(Graph(3)).empty());
}

TEST_CASE("clique graph structure") {
    CliqueGraphResult cg = build_clique_graph(rook_graph(3), 3);
    REQUIRE(cg.cliques.size() == 6);
    CHECK(cg.omega == 3);
    CHECK(cg.graph.vertex_count() == 6);
    // three rows meet three columns: K_{3,3}
    CHECK(complete_multipartite_parts(cg.graph) == std::vector<int>{3, 3});

    // incidence agrees with membership
    for (int v = 0; v < 9; ++v)
        for (int c = 0; c < 6; ++c) {
            bool in = std::binary_search(cg.cliques[static_cast<std::size_t>(c)].begin(),
                                         cg.cliques[static_cast<std::size_t>(c)].end(), v);
            CHECK(cg.incidence(v, c) == in);
        }
    // each vertex lies on one row clique and one column clique
    for (const auto& row : cg.vertex_cliques) CHECK(row.count() == 2);

    CHECK(build_clique_graph(oracles::cycle(4), 3).graph.vertex_count() == 0);
    CHECK_THROWS_AS(build_clique_graph(rook_graph(3), 1), invalid_argument_error);
}

TEST_CASE("line graph equals the direct construction") {
    for (int n = 0; n <= 5; ++n)
        oracles::for_each_graph(
            n, [&](const Graph& g) { REQUIRE(build_line_graph(g).graph == oracles::direct_line_graph(g)); });
    std::mt19937_64 rng(7u);
    for (int t = 0; t < 20; ++t) {
        Graph g = oracles::random_graph(rng, 9, 0.5);
        REQUIRE(build_line_graph(g).graph == oracles::direct_line_graph(g));
    }
    CHECK(build_line_graph(oracles::petersen()).graph.vertex_count() == 15);
}

TEST_CASE("incidence identities") {
    CHECK(verify_incidence_identities(rook_graph(3), 3));
    CHECK(verify_incidence_identities(rook_graph(5), 5));
    CHECK(verify_incidence_identities(triangular_graph(5), 4));
    CHECK(verify_incidence_identities(oracles::bowtie(), 3));
    CHECK(verify_incidence_identities(oracles::petersen(), 2));
    CHECK_THROWS_AS(verify_incidence_identities(oracles::cycle(5), 3),
                    not_clique_regular_error);
}

TEST_CASE("clique-ordered line graph") {
    CliqueOrderedLineGraph col = clique_ordered_line_graph(rook_graph(3), 3);
    CHECK(col.omega == 3);
    CHECK(col.block == 3);
    CHECK(col.edges.size() == 18);  // 9 vertices of degree 4
    CHECK(col.line.vertex_count() == 18);
    CHECK(col.clique_graph == build_clique_graph(rook_graph(3), 3).graph);
    // the edge list is a permutation of the graph's edges
    auto sorted = col.edges;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == rook_graph(3).edges());

    CHECK_THROWS_AS(clique_ordered_line_graph(complete_graph(4), 3), not_clique_regular_error);
}

TEST_CASE("phi identity") {
    PhiIdentity phi = phi_identity(rook_graph(3), 3);
    CHECK(phi.clique_count() == 6);
    CHECK(phi.expected_pair_value(0, 0) == 6);  // 6 * binom(3,3)
    for (int i = 0; i < 6; ++i)
        for (int j = i; j < 6; ++j) CHECK(phi.pair_value(i, j) == phi.expected_pair_value(i, j));

    CHECK(verify_phi_identity(rook_graph(3), 3));
    CHECK(verify_phi_identity(rook_graph(4), 4));
    CHECK(verify_phi_identity(triangular_graph(5), 4));
    CHECK(verify_phi_identity(oracles::bowtie(), 3));
    CHECK(verify_phi_identity(oracles::petersen(), 2));
}

TEST_CASE("line graph clique regularity condition") {
    CHECK_THROWS_AS(line_graph_clique_regular_condition(oracles::path(3), 2),
                    invalid_argument_error);

    // order >= 4: all degrees 0, 1 or omega, with omega attained
    Graph star5 = complete_bipartite(1, 5);
    CHECK(line_graph_clique_regular_condition(star5, 5));
    CHECK_FALSE(line_graph_clique_regular_condition(star5, 4));
    // K_5 is 4-regular, so its line graph is 4-clique regular; K_6 is not
    CHECK(line_graph_clique_regular_condition(complete_graph(5), 4));
    CHECK_FALSE(line_graph_clique_regular_condition(complete_graph(6), 4));
    // matching: no vertex reaches the order
    Graph matching(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(line_graph_clique_regular_condition(matching, 4));

    // order 3: K_3 components, or triangle-free with degrees in {1,3}
    CHECK(line_graph_clique_regular_condition(complete_graph(3), 3));
    CHECK(line_graph_clique_regular_condition(complete_bipartite(3, 3), 3));
    CHECK(line_graph_clique_regular_condition(complete_bipartite(1, 3), 3));
    CHECK_FALSE(line_graph_clique_regular_condition(complete_graph(4), 3));
    CHECK_FALSE(line_graph_clique_regular_condition(oracles::cycle(6), 3));
    CHECK_FALSE(line_graph_clique_regular_condition(matching, 3));
    // mixed components are fine as long as each qualifies
    Graph mixed(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {3, 6}});
    CHECK(line_graph_clique_regular_condition(mixed, 3));
}

TEST_CASE("3-clique graph of line graph recovers this graph") {
    // three triangles, one degree-2 vertex each, joined by a triangle-free
    // matching on the degree-3 vertices
    Graph g(9, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8},
                {1, 4}, {2, 7}, {5, 8}});
    C3IsoConditions cond = c3_line_iso_conditions(g);
    CHECK(cond.degrees_2_or_3);
    CHECK(cond.deg2_on_triangle);
    CHECK(cond.triangle_one_deg2);
    CHECK(cond.triangles_disjoint);
    CHECK(cond.all());
    Graph c3 = build_clique_graph(build_line_graph(g).graph, 3).graph;
    CHECK(are_isomorphic(c3, g));

    // single conditions failing
    CHECK_FALSE(c3_line_iso_conditions(oracles::cycle(6)).deg2_on_triangle);
    CHECK_FALSE(c3_line_iso_conditions(complete_graph(4)).triangle_one_deg2);
    CHECK_FALSE(c3_line_iso_conditions(oracles::bowtie()).degrees_2_or_3);
    Graph prism(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(c3_line_iso_conditions(prism).triangle_one_deg2);
}
