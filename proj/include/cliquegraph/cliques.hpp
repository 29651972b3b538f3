// Clique machinery: maximal-clique enumeration (Bron-Kerbosch with pivot),
// fixed-order clique listing, clique regularity, clique graphs and their
// incidence structure, and the two matrix identities that tie a
// clique-regular graph to its clique graph.
//
// Canonical clique order everywhere: cliques as sorted vertex lists,
// listed lexicographically. Clique-graph vertex i is cliques[i], incidence
// column i likewise; nothing downstream works if this drifts.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "cliquegraph/errors.hpp"
#include "cliquegraph/graph.hpp"

namespace cliquegraph {

using Clique = std::vector<int>;

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::vector<Clique> enumerate_maximal_cliques(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Clique> out;
    if (n == 0) return out;
    Clique r;
    Bitset p(n), x(n);
    for (int v = 0; v < n; ++v) p.set(v);

    auto bk = [&](auto&& self, Bitset pp, Bitset xx) -> void {
        if (pp.none() && xx.none()) {
            Clique c = r;
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return;
        }
        // Pivot on the vertex of P|X covering most of P.
        int pivot = -1, cover = -1;
        Bitset both = pp | xx;
        for (int u : both) {
            int c = pp.intersection_count(g.neighbors(u));
            if (c > cover) {
                cover = c;
                pivot = u;
            }
        }
        Bitset ext = pp;
        ext.and_not(g.neighbors(pivot));
        for (int v : ext) {
            r.push_back(v);
            self(self, pp & g.neighbors(v), xx & g.neighbors(v));
            r.pop_back();
            pp.reset(v);
            xx.set(v);
        }
    };
    bk(bk, p, x);
    std::sort(out.begin(), out.end());
    return out;
}

// All cliques of exactly `order` vertices, in lexicographic order. Candidates
// are only extended upward, so the listing is naturally canonical.
inline std::vector<Clique> enumerate_cliques_of_order(const Graph& g, int order) {
    if (order < 1) throw invalid_argument_error("clique order must be at least 1");
    const int n = g.vertex_count();
    std::vector<Clique> out;
    Clique cur;
    auto grow = [&](auto&& self, const Bitset& cand, int need) -> void {
        if (need == 0) {
            out.push_back(cur);
            return;
        }
        if (cand.count() < need) return;
        for (int v : cand) {
            Bitset next = cand & g.neighbors(v);
            next.reset_below(v + 1);  // extend upward only
            cur.push_back(v);
            self(self, next, need - 1);
            cur.pop_back();
        }
    };
    Bitset all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    grow(grow, all, order);
    return out;
}

inline int clique_number(const Graph& g) {
    std::size_t best = 0;
    for (const auto& c : enumerate_maximal_cliques(g)) best = std::max(best, c.size());
    return static_cast<int>(best);
}

struct CliqueRegularity {
    bool regular = false;
    // When not regular: an edge lying in != 1 cliques of the requested order,
    // with its clique count. Empty edge set reports {-1,-1}.
    std::optional<Edge> counterexample;
    long long counterexample_count = 0;
};

// Every edge must lie in exactly one clique of order `omega`, and the edge
// set must be nonempty.
inline CliqueRegularity check_clique_regular(const Graph& g, int omega) {
    if (omega < 2) throw invalid_argument_error("clique regularity needs order >= 2");
    const int n = g.vertex_count();
    CliqueRegularity res;
    if (g.edge_count() == 0) {
        res.counterexample = Edge{-1, -1};
        return res;
    }
    std::vector<int> count(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& c : enumerate_cliques_of_order(g, omega))
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                ++count[static_cast<std::size_t>(c[i]) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(c[j])];
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            long long c = count[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(v)];
            if (c != 1) {
                res.counterexample = Edge{u, v};
                res.counterexample_count = c;
                return res;
            }
        }
    res.regular = true;
    return res;
}

inline bool is_clique_regular(const Graph& g, int omega) {
    return check_clique_regular(g, omega).regular;
}

// Orders omega >= 2 for which the graph is clique regular. Theory says this
// is a subset of {2, clique number}; that is re-checked here and a violation
// is loud since it would mean the enumeration itself is broken.
inline std::vector<int> clique_regular_orders(const Graph& g) {
    std::vector<int> orders;
    const int w = clique_number(g);
    for (int omega = 2; omega <= std::max(w, 2); ++omega)
        if (is_clique_regular(g, omega)) orders.push_back(omega);
    for (int o : orders)
        if (o != 2 && o != w)
            throw theorem_violation_error("clique-regular order outside {2, clique number}");
    return orders;
}

struct CliqueGraphResult {
    int omega = 0;
    std::vector<Clique> cliques;         // canonical (lexicographic) order
    Graph graph;                         // vertex i <-> cliques[i]
    std::vector<Bitset> vertex_cliques;  // row v: which cliques contain v
    bool incidence(int v, int c) const { return vertex_cliques[static_cast<std::size_t>(v)].test(c); }
};

// Clique graph: one vertex per clique of order omega, adjacent when the
// cliques share at least one vertex. Zero cliques gives the empty graph.
inline CliqueGraphResult build_clique_graph(const Graph& g, int omega) {
    if (omega < 2) throw invalid_argument_error("clique graph needs order >= 2");
    CliqueGraphResult res;
    res.omega = omega;
    res.cliques = enumerate_cliques_of_order(g, omega);
    const int m = static_cast<int>(res.cliques.size());
    res.graph = Graph(m);
    res.vertex_cliques.assign(static_cast<std::size_t>(g.vertex_count()), Bitset(m));
    for (int c = 0; c < m; ++c)
        for (int v : res.cliques[static_cast<std::size_t>(c)])
            res.vertex_cliques[static_cast<std::size_t>(v)].set(c);
    for (const auto& row : res.vertex_cliques) {
        for (int i : row)
            for (int j = row.find_next(i + 1); j >= 0; j = row.find_next(j + 1))
                res.graph.add_edge(i, j);
    }
    return res;
}

inline CliqueGraphResult build_line_graph(const Graph& g) { return build_clique_graph(g, 2); }

// Both incidence identities for a clique-regular graph, checked entrywise in
// exact integer arithmetic:
//   R^T R            == A_C + omega * I
//   (omega-1) R R^T  == (omega-1) A + D
// where R is the vertex/clique incidence matrix, A_C the clique-graph
// adjacency, A the graph adjacency and D the degree diagonal.
inline bool verify_incidence_identities(const Graph& g, int omega) {
    if (!is_clique_regular(g, omega))
        throw not_clique_regular_error("incidence identities need a clique-regular graph");
    CliqueGraphResult cg = build_clique_graph(g, omega);
    const int n = g.vertex_count();
    const int m = static_cast<int>(cg.cliques.size());

    for (int i = 0; i < m; ++i) {
        const auto& ci = cg.cliques[static_cast<std::size_t>(i)];
        for (int j = i; j < m; ++j) {
            const auto& cj = cg.cliques[static_cast<std::size_t>(j)];
            long long dot = 0;  // |c_i ∩ c_j| by merge over sorted lists
            for (std::size_t a = 0, b = 0; a < ci.size() && b < cj.size();) {
                if (ci[a] == cj[b]) ++dot, ++a, ++b;
                else if (ci[a] < cj[b]) ++a;
                else ++b;
            }
            long long want = (i == j) ? omega : (cg.graph.adjacent(i, j) ? 1 : 0);
            if (dot != want) return false;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) {
            long long dot = cg.vertex_cliques[static_cast<std::size_t>(u)].intersection_count(
                cg.vertex_cliques[static_cast<std::size_t>(v)]);
            long long lhs = static_cast<long long>(omega - 1) * dot;
            long long rhs = (u == v) ? g.degree(u)
                                     : static_cast<long long>(omega - 1) * (g.adjacent(u, v) ? 1 : 0);
            if (lhs != rhs) return false;
        }
    return true;
}

// Line graph of a clique-regular graph with its edges ordered clique by
// clique (block i holds the binom(omega,2) edges of clique i, lexicographic
// within the block). This ordering makes the edge-replication map phi a
// plain coordinate blow-up.
struct CliqueOrderedLineGraph {
    int omega = 0;
    int block = 0;                   // binom(omega, 2)
    std::vector<Edge> edges;         // grouped by clique
    Graph line;                      // adjacency: edges sharing an endpoint
    Graph clique_graph;
};

inline CliqueOrderedLineGraph clique_ordered_line_graph(const Graph& g, int omega) {
    if (!is_clique_regular(g, omega))
        throw not_clique_regular_error("clique-ordered line graph needs a clique-regular graph");
    CliqueGraphResult cg = build_clique_graph(g, omega);
    CliqueOrderedLineGraph out;
    out.omega = omega;
    out.block = static_cast<int>(binomial(omega, 2));
    out.clique_graph = std::move(cg.graph);
    for (const auto& c : cg.cliques)
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) out.edges.emplace_back(c[i], c[j]);
    const int M = static_cast<int>(out.edges.size());
    if (M != g.edge_count())
        throw theorem_violation_error("clique blocks do not partition the edge set");
    out.line = Graph(M);
    std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(g.vertex_count()));
    for (int e = 0; e < M; ++e) {
        at_vertex[static_cast<std::size_t>(out.edges[static_cast<std::size_t>(e)].first)].push_back(e);
        at_vertex[static_cast<std::size_t>(out.edges[static_cast<std::size_t>(e)].second)].push_back(e);
    }
    for (const auto& list : at_vertex)
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) out.line.add_edge(list[i], list[j]);
    return out;
}

// phi(v) repeats coordinate i of a clique-indexed vector once per edge of
// clique i. The identity under test, exact over the integers:
//   v^T (6*binom(omega,3) I + (omega-1)^2 A_C) v  ==  phi(v)^T A_L phi(v)
// pair_value(i, j) evaluates the right side on basis vectors e_i, e_j.
struct PhiIdentity {
    CliqueOrderedLineGraph data;

    long long pair_value(int i, int j) const {
        long long s = 0;
        for (int e = i * data.block; e < (i + 1) * data.block; ++e)
            for (int f = j * data.block; f < (j + 1) * data.block; ++f)
                if (e != f && data.line.adjacent(e, f)) ++s;
        return s;
    }
    long long expected_pair_value(int i, int j) const {
        if (i == j) return 6 * binomial(data.omega, 3);
        long long w = static_cast<long long>(data.omega - 1);
        return data.clique_graph.adjacent(i, j) ? w * w : 0;
    }
    int clique_count() const { return data.clique_graph.vertex_count(); }
};

inline PhiIdentity phi_identity(const Graph& g, int omega) {
    return PhiIdentity{clique_ordered_line_graph(g, omega)};
}

// Full check: every basis pair, then `trials` random integer vectors pushed
// through phi. All arithmetic is int64 (entries are tiny).
inline bool verify_phi_identity(const Graph& g, int omega, int trials = 8,
                                std::uint64_t seed = 20260819u) {
    PhiIdentity phi = phi_identity(g, omega);
    const int m = phi.clique_count();
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j)
            if (phi.pair_value(i, j) != phi.expected_pair_value(i, j)) return false;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-5, 5);
    const long long diag = 6 * binomial(omega, 3);
    const long long off = static_cast<long long>(omega - 1) * (omega - 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<long long> v(static_cast<std::size_t>(m));
        for (auto& x : v) x = coord(rng);
        long long lhs = 0;
        for (int i = 0; i < m; ++i) lhs += diag * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        for (auto [a, b] : phi.data.clique_graph.edges())
            lhs += 2 * off * v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(b)];
        long long rhs = 0;
        for (auto [e, f] : phi.data.line.edges())
            rhs += 2 * v[static_cast<std::size_t>(e / phi.data.block)] *
                   v[static_cast<std::size_t>(f / phi.data.block)];
        if (lhs != rhs) return false;
    }
    return true;
}

// The four structural conditions under which the 3-clique graph of a line
// graph recovers the original connected graph. Kept separate so a failing
// test can say which one broke.
struct C3IsoConditions {
    bool degrees_2_or_3 = false;       // every degree is 2 or 3
    bool deg2_on_triangle = false;     // every degree-2 vertex lies on a triangle
    bool triangle_one_deg2 = false;    // every triangle has exactly one degree-2 vertex
    bool triangles_disjoint = false;   // distinct triangles share no vertex
    bool all() const {
        return degrees_2_or_3 && deg2_on_triangle && triangle_one_deg2 && triangles_disjoint;
    }
};

inline C3IsoConditions c3_line_iso_conditions(const Graph& g) {
    const int n = g.vertex_count();
    C3IsoConditions c;
    c.degrees_2_or_3 = true;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d != 2 && d != 3) c.degrees_2_or_3 = false;
    }
    auto triangles = enumerate_cliques_of_order(g, 3);
    std::vector<int> tri_count(static_cast<std::size_t>(n), 0);
    c.triangle_one_deg2 = true;
    for (const auto& t : triangles) {
        int deg2 = 0;
        for (int v : t) {
            ++tri_count[static_cast<std::size_t>(v)];
            if (g.degree(v) == 2) ++deg2;
        }
        if (deg2 != 1) c.triangle_one_deg2 = false;
    }
    c.deg2_on_triangle = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2 && tri_count[static_cast<std::size_t>(v)] == 0)
            c.deg2_on_triangle = false;
    c.triangles_disjoint = true;
    for (int v = 0; v < n; ++v)
        if (tri_count[static_cast<std::size_t>(v)] > 1) c.triangles_disjoint = false;
    return c;
}

// Degree-side characterization of when a line graph is clique regular of a
// given order. Isolated vertices are immaterial (they do not appear in the
// line graph), and at least one vertex of degree >= 2 is required so the
// line graph has an edge at all.
inline bool line_graph_clique_regular_condition(const Graph& g, int omega) {
    if (omega < 3) throw invalid_argument_error("classification applies for order >= 3");
    const int n = g.vertex_count();
    if (omega >= 4) {
        bool has_omega = false;
        for (int v = 0; v < n; ++v) {
            int d = g.degree(v);
            if (d == omega) has_omega = true;
            else if (d != 0 && d != 1) return false;
        }
        return has_omega;
    }
    // omega == 3: each component with an edge is K_3, or triangle-free with
    // degrees in {1, 3}.
    bool has_line_edge = false;
    for (const auto& comp : connected_components(g)) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.edge_count() == 0) continue;
        bool is_k3 = (sub.vertex_count() == 3 && sub.edge_count() == 3);
        if (!is_k3) {
            if (!enumerate_cliques_of_order(sub, 3).empty()) return false;
            for (int v = 0; v < sub.vertex_count(); ++v) {
                int d = sub.degree(v);
                if (d != 1 && d != 3) return false;
            }
        }
        for (int v = 0; v < sub.vertex_count(); ++v)
            if (sub.degree(v) >= 2) has_line_edge = true;
    }
    return has_line_edge;
}

}  // namespace cliquegraph
