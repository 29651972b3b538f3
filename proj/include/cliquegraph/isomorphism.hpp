// Graph isomorphism by backtracking over candidate bitsets, with iterated
// degree/neighbor-color refinement for pruning. Returns a verified witness
// permutation. Refuses (resource_limit_error) instead of running forever
// when the node budget is exhausted; complete multipartite graphs are
// recognized structurally and dispatched without search, since they defeat
// color refinement.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cliquegraph/errors.hpp"
#include "cliquegraph/graph.hpp"

namespace cliquegraph {

struct IsoOptions {
    long long node_budget = 50'000'000;
};

// Part sizes (ascending) if the graph is complete multipartite, i.e. its
// complement is a disjoint union of cliques. Edgeless graphs count (one
// part), as does the empty graph (no parts).
inline std::optional<std::vector<int>> complete_multipartite_parts(const Graph& g) {
    Graph co = complement(g);
    std::vector<int> sizes;
    for (const auto& comp : connected_components(co)) {
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!co.adjacent(comp[i], comp[j])) return std::nullopt;
        sizes.push_back(static_cast<int>(comp.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

namespace iso_detail {

// One round of joint color refinement; returns false when the color
// histograms of the two graphs diverge (not isomorphic).
inline bool refine_joint(const Graph& g, const Graph& h, std::vector<int>& cg,
                         std::vector<int>& ch) {
    const int n = g.vertex_count();
    bool changed = true;
    while (changed) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& gr, const std::vector<int>& cols, int v) {
            std::vector<int> nb;
            for (int w : gr.neighbors(v)) nb.push_back(cols[static_cast<std::size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            return Sig{cols[static_cast<std::size_t>(v)], std::move(nb)};
        };
        std::map<Sig, int> ids;
        std::vector<Sig> sg(static_cast<std::size_t>(n)), sh(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sg[static_cast<std::size_t>(v)] = signature(g, cg, v);
            sh[static_cast<std::size_t>(v)] = signature(h, ch, v);
            ids.emplace(sg[static_cast<std::size_t>(v)], 0);
            ids.emplace(sh[static_cast<std::size_t>(v)], 0);
        }
        int next = 0;
        for (auto& [sig, id] : ids) id = next++;
        std::vector<int> ng(static_cast<std::size_t>(n)), nh(static_cast<std::size_t>(n));
        std::vector<int> histg(static_cast<std::size_t>(next), 0), histh(histg);
        for (int v = 0; v < n; ++v) {
            ng[static_cast<std::size_t>(v)] = ids[sg[static_cast<std::size_t>(v)]];
            nh[static_cast<std::size_t>(v)] = ids[sh[static_cast<std::size_t>(v)]];
            ++histg[static_cast<std::size_t>(ng[static_cast<std::size_t>(v)])];
            ++histh[static_cast<std::size_t>(nh[static_cast<std::size_t>(v)])];
        }
        if (histg != histh) return false;
        changed = (ng != cg) || (nh != ch);
        cg = std::move(ng);
        ch = std::move(nh);
    }
    return true;
}

inline bool verify_witness(const Graph& g, const Graph& h, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) !=
                h.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

struct Searcher {
    const Graph& g;
    const Graph& h;
    int n;
    long long budget;
    std::vector<int> perm;       // g vertex -> h vertex, -1 while unmapped
    std::vector<bool> mapped_g;
    Bitset used_h;

    Searcher(const Graph& g_, const Graph& h_, long long budget_)
        : g(g_), h(h_), n(g_.vertex_count()), budget(budget_),
          perm(static_cast<std::size_t>(n), -1),
          mapped_g(static_cast<std::size_t>(n), false), used_h(n) {}

    bool run(std::vector<Bitset> cand) {
        int u = -1, best = -1;
        for (int v = 0; v < n; ++v) {
            if (mapped_g[static_cast<std::size_t>(v)]) continue;
            int c = cand[static_cast<std::size_t>(v)].count();
            if (best < 0 || c < best) {
                best = c;
                u = v;
            }
        }
        if (u < 0) return true;  // everything mapped
        if (best == 0) return false;
        for (int x : cand[static_cast<std::size_t>(u)]) {
            if (--budget < 0)
                throw resource_limit_error("isomorphism search exceeded node budget");
            perm[static_cast<std::size_t>(u)] = x;
            mapped_g[static_cast<std::size_t>(u)] = true;
            used_h.set(x);
            std::vector<Bitset> next = cand;
            bool dead = false;
            for (int w = 0; w < n && !dead; ++w) {
                if (mapped_g[static_cast<std::size_t>(w)]) continue;
                auto& cw = next[static_cast<std::size_t>(w)];
                if (g.adjacent(w, u))
                    cw &= h.neighbors(x);
                else
                    cw.and_not(h.neighbors(x));
                cw.reset(x);
                if (cw.none()) dead = true;
            }
            if (!dead && run(std::move(next))) return true;
            mapped_g[static_cast<std::size_t>(u)] = false;
            used_h.reset(x);
            perm[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    }
};

}  // namespace iso_detail

inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h,
                                                        IsoOptions opts = {}) {
    const int n = g.vertex_count();
    if (n != h.vertex_count()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    {
        auto dg = degree_info(g).degrees, dh = degree_info(h).degrees;
        std::sort(dg.begin(), dg.end());
        std::sort(dh.begin(), dh.end());
        if (dg != dh) return std::nullopt;
    }

    // Complete multipartite graphs (our most common isomorphism targets) are
    // handled by comparing part sizes; refinement cannot split them.
    auto pg = complete_multipartite_parts(g);
    auto ph = complete_multipartite_parts(h);
    if (pg.has_value() != ph.has_value()) return std::nullopt;
    if (pg && ph) {
        if (*pg != *ph) return std::nullopt;
        auto group_parts = [](const Graph& gr) {
            auto comps = connected_components(complement(gr));
            std::sort(comps.begin(), comps.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            return comps;
        };
        auto cg = group_parts(g), ch = group_parts(h);
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < cg.size(); ++i)
            for (std::size_t j = 0; j < cg[i].size(); ++j)
                perm[static_cast<std::size_t>(cg[i][j])] = ch[i][j];
        if (!iso_detail::verify_witness(g, h, perm))
            throw theorem_violation_error("multipartite witness failed verification");
        return perm;
    }

    std::vector<int> colg(static_cast<std::size_t>(n)), colh(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        colg[static_cast<std::size_t>(v)] = g.degree(v);
        colh[static_cast<std::size_t>(v)] = h.degree(v);
    }
    if (!iso_detail::refine_joint(g, h, colg, colh)) return std::nullopt;

    std::vector<Bitset> cand(static_cast<std::size_t>(n), Bitset(n));
    for (int u = 0; u < n; ++u)
        for (int x = 0; x < n; ++x)
            if (colg[static_cast<std::size_t>(u)] == colh[static_cast<std::size_t>(x)])
                cand[static_cast<std::size_t>(u)].set(x);

    iso_detail::Searcher s(g, h, opts.node_budget);
    if (!s.run(std::move(cand))) return std::nullopt;
    if (!iso_detail::verify_witness(g, h, s.perm))
        throw theorem_violation_error("isomorphism witness failed verification");
    return s.perm;
}

inline bool are_isomorphic(const Graph& g, const Graph& h, IsoOptions opts = {}) {
    return find_isomorphism(g, h, opts).has_value();
}

}  // namespace cliquegraph
