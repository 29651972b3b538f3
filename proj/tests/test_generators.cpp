#include <catch2/catch_amalgamated.hpp>

#include "cliquegraph/cliques.hpp"
#include "cliquegraph/corpus.hpp"
#include "cliquegraph/errors.hpp"
#include "cliquegraph/generators.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/isomorphism.hpp"
#include "cliquegraph/srg.hpp"
#include "oracles.hpp"

using namespace cliquegraph;

namespace {

SrgParams params_of(const Graph& g) {
    auto cls = classify_srg(g);
    REQUIRE(cls.has_value());
    return cls->params;
}

}  // namespace

TEST_CASE("rook graphs") {
    CHECK(params_of(rook_graph(2)) == SrgParams{4, 2, 0, 2});  // the 4-cycle
    CHECK(params_of(rook_graph(3)) == SrgParams{9, 4, 1, 2});
    CHECK(params_of(rook_graph(6)) == SrgParams{36, 10, 4, 2});

    // numbering: cell (r, c) is vertex r*n + c
    Graph g = rook_graph(3);
    CHECK(g.adjacent(0, 1));       // same row
    CHECK(g.adjacent(0, 3));       // same column
    CHECK_FALSE(g.adjacent(0, 4)); // diagonal
    CHECK(g.degree(4) == 4);

    CHECK_THROWS_AS(rook_graph(1), invalid_argument_error);
}

TEST_CASE("triangular graphs") {
    CHECK(triangular_graph(3) == complete_graph(3));
    CHECK(params_of(triangular_graph(5)) == SrgParams{10, 6, 3, 4});
    CHECK(params_of(triangular_graph(6)) == SrgParams{15, 8, 4, 4});
    CHECK(params_of(triangular_graph(7)) == SrgParams{21, 10, 5, 4});
    CHECK(params_of(triangular_graph(8)) == SrgParams{28, 12, 6, 4});

    // T_4 is the octahedron, complete tripartite with parts of size 2
    CHECK(complete_multipartite_parts(triangular_graph(4)) == std::vector<int>{2, 2, 2});
    // T_5 is the complement of the Petersen graph
    CHECK(are_isomorphic(triangular_graph(5), complement(oracles::petersen())));

    CHECK_THROWS_AS(triangular_graph(2), invalid_argument_error);
}

TEST_CASE("orthogonal arrays") {
    OrthogonalArray oa = orthogonal_array(5, 3);
    CHECK(oa.rows.size() == 25);
    // pair coverage, re-checked here independently of the constructor
    for (int i = 0; i < oa.m; ++i)
        for (int j = i + 1; j < oa.m; ++j) {
            std::set<std::pair<int, int>> seen;
            for (const auto& row : oa.rows)
                seen.insert({row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]});
            CHECK(seen.size() == 25);
        }

    // two columns reproduce the rook graph, vertex for vertex
    CHECK(oa_block_graph(orthogonal_array(5, 2)) == rook_graph(5));
    // the full column count makes every pair of rows agree somewhere
    CHECK(oa_block_graph(orthogonal_array(3, 4)) == complete_graph(9));
    CHECK(oa_block_graph(orthogonal_array(2, 3)) == complete_graph(4));

    CHECK_THROWS_AS(orthogonal_array(4, 2), unsupported_error);
    CHECK_THROWS_AS(orthogonal_array(6, 3), unsupported_error);
    CHECK_THROWS_AS(orthogonal_array(9, 2), unsupported_error);
    CHECK_THROWS_AS(orthogonal_array(5, 1), invalid_argument_error);
    CHECK_THROWS_AS(orthogonal_array(5, 7), invalid_argument_error);
    CHECK_THROWS_AS(orthogonal_array(2, 4), invalid_argument_error);
}

TEST_CASE("orthogonal array block graph") {
    Graph g = oa_block_graph(orthogonal_array(5, 3));
    CHECK(params_of(g) == SrgParams{25, 12, 5, 6});

    // the 5-cliques are exactly the 15 column-value classes
    OrthogonalArray oa = orthogonal_array(5, 3);
    auto cliques = enumerate_cliques_of_order(g, 5);
    REQUIRE(cliques.size() == 15);
    for (const auto& c : cliques) {
        bool shared = false;
        for (int j = 0; j < oa.m && !shared; ++j) {
            int v = oa.rows[static_cast<std::size_t>(c[0])][static_cast<std::size_t>(j)];
            bool all = true;
            for (int row : c)
                all = all && oa.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] == v;
            shared = all;
        }
        CHECK(shared);
    }
    CHECK(is_clique_regular(g, 5));
}

TEST_CASE("symplectic generalized quadrangles") {
    IncidenceStructure gq2 = gq_symplectic(2);
    CHECK(gq2.points == 15);
    CHECK(gq2.lines.size() == 15);
    CHECK(gq2.s == 2);
    CHECK(gq2.t == 2);
    CHECK(params_of(gq_collinearity_graph(gq2)) == SrgParams{15, 6, 1, 3});

    IncidenceStructure gq3 = gq_symplectic(3);
    CHECK(gq3.points == 40);
    CHECK(gq3.lines.size() == 40);
    CHECK(gq3.s == 3);
    CHECK(gq3.t == 3);
    CHECK(params_of(gq_collinearity_graph(gq3)) == SrgParams{40, 12, 2, 4});

    CHECK_THROWS_AS(gq_symplectic(4), unsupported_error);
}

TEST_CASE("elliptic generalized quadrangles") {
    IncidenceStructure e2 = gq_elliptic(2);
    CHECK(e2.points == 27);
    CHECK(e2.lines.size() == 45);
    CHECK(e2.s == 2);
    CHECK(e2.t == 4);
    CHECK(params_of(gq_collinearity_graph(e2)) == SrgParams{27, 10, 1, 5});

    IncidenceStructure e3 = gq_elliptic(3);
    CHECK(e3.points == 112);
    CHECK(e3.lines.size() == 280);
    CHECK(e3.s == 3);
    CHECK(e3.t == 9);
    CHECK(params_of(gq_collinearity_graph(e3)) == SrgParams{112, 30, 2, 10});

    CHECK_THROWS_AS(gq_elliptic(5), unsupported_error);
}

TEST_CASE("generalized quadrangle validation and duality") {
    IncidenceStructure st = gq_symplectic(2);

    IncidenceStructure broken = st;
    broken.lines.pop_back();
    CHECK_THROWS_AS(validate_gq(broken), invalid_argument_error);

    IncidenceStructure empty;
    CHECK_THROWS_AS(validate_gq(empty), invalid_argument_error);

    IncidenceStructure unsorted = st;
    std::swap(unsorted.lines.front()[0], unsorted.lines.front()[1]);
    CHECK_THROWS_AS(validate_gq(unsorted), invalid_argument_error);

    IncidenceStructure dual = gq_dual(st);
    CHECK(dual.points == 15);
    CHECK(dual.s == 2);
    CHECK(dual.t == 2);

    // the dual of the elliptic quadrangle has swapped orders
    IncidenceStructure de = gq_dual(gq_elliptic(2));
    CHECK(de.points == 45);
    CHECK(de.lines.size() == 27);
    CHECK(de.s == 4);
    CHECK(de.t == 2);
    CHECK(params_of(gq_collinearity_graph(de)) == SrgParams{45, 12, 3, 3});

    // dualizing twice restores the structure verbatim
    IncidenceStructure dd = gq_dual(dual);
    CHECK(dd.points == st.points);
    CHECK(dd.lines == st.lines);
    CHECK(dd.s == st.s);
    CHECK(dd.t == st.t);
}

TEST_CASE("ternary code coset graph") {
    Graph g = golay_coset_graph();
    CHECK(g.vertex_count() == 243);
    auto info = degree_info(g);
    CHECK(info.regular);
    CHECK(info.k == 22);
    CHECK(params_of(g) == SrgParams{243, 22, 1, 2});
}

TEST_CASE("standard corpus is consistent") {
    auto corpus = standard_corpus();
    REQUIRE(corpus.size() == 12);
    std::vector<std::string> names;
    for (const auto& e : corpus) {
        names.push_back(e.name);
        CHECK(params_of(e.graph) == e.params);
        CHECK(is_clique_regular(e.graph, e.omega));
    }
    CHECK(names == std::vector<std::string>{"rook-3", "rook-4", "rook-5", "rook-6",
                                            "triangular-5", "triangular-6", "triangular-7",
                                            "triangular-8", "oa-block-5-3", "gq-symplectic-2",
                                            "gq-symplectic-3", "gq-elliptic-2"});

    CorpusEntry golay = golay_corpus_entry();
    CHECK(golay.name == "golay");
    CHECK(golay.omega == 3);
    CHECK(golay.params == SrgParams{243, 22, 1, 2});
}
