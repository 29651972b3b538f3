// Simple undirected graph on vertices 0..n-1, dense bitset adjacency rows.
// Immutable by convention after construction; add_edge validates everything
// (no loops, in-range endpoints) so an invalid Graph cannot exist.
#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "cliquegraph/bitset.hpp"
#include "cliquegraph/errors.hpp"

namespace cliquegraph {

using Edge = std::pair<int, int>;

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(check_n(n)), Bitset(n)) {}
    Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw invalid_argument_error("loop edges are not allowed");
        adj_[static_cast<std::size_t>(u)].set(v);
        adj_[static_cast<std::size_t>(v)].set(u);
    }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].test(v);
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).count(); }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[static_cast<std::size_t>(u)].find_next(u + 1); v >= 0;
                 v = adj_[static_cast<std::size_t>(u)].find_next(v + 1))
                out.emplace_back(u, v);
        return out;
    }

  private:
    static int check_n(int n) {
        if (n < 0) throw invalid_argument_error("vertex count must be nonnegative");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw invalid_argument_error("vertex index out of range");
    }

    int n_ = 0;
    std::vector<Bitset> adj_;
};

struct DegreeInfo {
    std::vector<int> degrees;
    int max_degree = 0;
    bool regular = false;
    int k = 0;  // meaningful only when regular
};

inline DegreeInfo degree_info(const Graph& g) {
    DegreeInfo info;
    const int n = g.vertex_count();
    info.degrees.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) info.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    info.max_degree = n ? *std::max_element(info.degrees.begin(), info.degrees.end()) : 0;
    int mn = n ? *std::min_element(info.degrees.begin(), info.degrees.end()) : 0;
    info.regular = (mn == info.max_degree);
    info.k = info.regular ? info.max_degree : 0;
    return info;
}

inline Bitset common_neighbors(const Graph& g, int u, int v) {
    return g.neighbors(u) & g.neighbors(v);
}

inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// Parts are laid out consecutively: part 0 gets vertices 0..parts[0]-1, etc.
inline Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p <= 0) throw invalid_argument_error("part sizes must be positive");
        n += p;
    }
    Graph g(n);
    int a_start = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int b_start = a_start + parts[i];
        int rest = b_start;
        for (int u = a_start; u < b_start; ++u)
            for (int v = rest; v < n; ++v) g.add_edge(u, v);
        a_start = b_start;
    }
    return g;
}

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    Bitset seen(n);
    std::vector<int> stack{0};
    seen.set(0);
    int visited = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbors(u)) {
            if (!seen.test(v)) {
                seen.set(v);
                ++visited;
                stack.push_back(v);
            }
        }
    }
    return visited == n;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    Bitset seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int v : g.neighbors(comp[i]))
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Subgraph induced by `verts` (which must be sorted). Vertex i of the result
// corresponds to verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph s(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

}  // namespace cliquegraph
