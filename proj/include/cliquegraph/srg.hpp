// Strongly regular graph parameter algebra.
//
// Four related jobs: classify a concrete graph as (edge-/strongly) regular,
// compute the exact spectrum {k^1, r^f, s^g} from a parameter tuple alone,
// recognize regular clique assemblies through two independent
// characterizations, and predict the parameters of the omega-clique graph of
// a strongly regular graph without building either graph.
#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquegraph/cliques.hpp"
#include "cliquegraph/errors.hpp"
#include "cliquegraph/exact_value.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/spectral.hpp"
#include "cliquegraph/spectrum.hpp"

namespace cliquegraph {

// Parameter tuple of a strongly regular graph: n vertices, degree k, adjacent
// pairs share lambda neighbours, non-adjacent pairs share mu.
struct SrgParams {
    long long n = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;

    bool operator==(const SrgParams&) const = default;

    std::string str() const {
        return "(" + std::to_string(n) + ", " + std::to_string(k) + ", " +
               std::to_string(lambda) + ", " + std::to_string(mu) + ")";
    }
};

struct EdgeRegularParams {
    long long n = 0;
    long long k = 0;
    long long lambda = 0;
};

// Regular with at least one edge and a constant number of common neighbours
// over adjacent pairs. Returns nullopt when any condition fails.
inline std::optional<EdgeRegularParams> classify_edge_regular(const Graph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return std::nullopt;
    auto info = degree_info(g);
    if (!info.regular) return std::nullopt;
    long long lambda = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            long long c = common_neighbors(g, u, v).count();
            if (lambda == -1) lambda = c;
            if (c != lambda) return std::nullopt;
        }
    return EdgeRegularParams{g.vertex_count(), info.k, lambda};
}

namespace srg_detail {

// Every component is a complete graph and all components have the same order.
inline bool union_of_equal_complete(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.empty()) return false;
    std::size_t order = comps.front().size();
    for (const auto& comp : comps) {
        if (comp.size() != order) return false;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return false;
    }
    return true;
}

inline long long isqrt_ll(long long v) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace srg_detail

struct SrgClassification {
    SrgParams params;
    // A disjoint union of equal-order complete graphs, or the complement of
    // one (complete multipartite with equal parts). These satisfy the common
    // neighbour conditions but carry no further structure.
    bool boring = false;
};

// Constant degree, constant lambda over adjacent pairs and constant mu over
// non-adjacent pairs. Vacuous cases take the convention lambda = 0 (no edges)
// and mu = 0 (no non-adjacent pairs); the empty graph is not classified.
inline std::optional<SrgClassification> classify_srg(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    auto info = degree_info(g);
    if (!info.regular) return std::nullopt;
    long long lambda = -1;
    long long mu = -1;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            long long c = common_neighbors(g, u, v).count();
            long long& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot == -1) slot = c;
            if (c != slot) return std::nullopt;
        }
    if (lambda == -1) lambda = 0;
    if (mu == -1) mu = 0;
    SrgClassification out;
    out.params = SrgParams{g.vertex_count(), info.k, lambda, mu};
    out.boring = srg_detail::union_of_equal_complete(g) ||
                 srg_detail::union_of_equal_complete(complement(g));
    return out;
}

// Exact eigenvalue data of a strongly regular graph described by parameters
// alone: the degree eigenvalue k with multiplicity 1, and the two roots
// r > s of x^2 - (lambda - mu)x - (k - mu) with multiplicities f and g.
struct SrgSpectrum {
    long long k = 0;
    ExactValue r;
    ExactValue s;
    long long f = 0;
    long long g = 0;
};

// Derives {k^1, r^f, s^g} from the parameters, rejecting tuples that cannot
// belong to any strongly regular graph. Checks, in order: basic shape, the
// double-counting identity k(k - lambda - 1) = (n - k - 1) mu, and
// integrality and positivity of the multiplicities
//     f, g = ((n - 1) -/+ T / sqrt(D)) / 2
// with D = (lambda - mu)^2 + 4(k - mu) and T = 2k + (n - 1)(lambda - mu).
// When T = 0 the multiplicities coincide at (n - 1)/2 and D need not be a
// perfect square (conference case); otherwise D must be a square whose root
// divides T with matching parity.
inline SrgSpectrum srg_spectrum_from_params(const SrgParams& p) {
    if (p.n <= 0 || p.k < 0 || p.lambda < 0 || p.mu < 0)
        throw invalid_argument_error("negative or empty parameters " + p.str());
    if (p.k >= p.n)
        throw invalid_argument_error("degree too large for vertex count " + p.str());
    if (p.k * (p.k - p.lambda - 1) != (p.n - p.k - 1) * p.mu)
        throw invalid_argument_error("identity k(k-lambda-1) = (n-k-1)mu fails for " + p.str());
    if (p.mu > p.k)
        throw infeasible_params_error("mu exceeds the degree for " + p.str());
    if (p.k > 0 && p.lambda > p.k - 1)
        throw infeasible_params_error("lambda exceeds degree - 1 for " + p.str());

    long long diff = p.lambda - p.mu;
    long long disc = diff * diff + 4 * (p.k - p.mu);
    if (disc <= 0)
        throw infeasible_params_error("degenerate discriminant for " + p.str());

    SrgSpectrum out;
    out.k = p.k;
    long long trace = 2 * p.k + (p.n - 1) * diff;
    if (trace == 0) {
        // Conference case: the restricted multiplicities coincide.
        if ((p.n - 1) % 2 != 0)
            throw infeasible_params_error("equal multiplicities need an odd vertex count, " +
                                          p.str());
        out.f = out.g = (p.n - 1) / 2;
        out.r = ExactValue::make(diff, 1, disc, 2);
        out.s = ExactValue::make(diff, -1, disc, 2);
    } else {
        long long e = srg_detail::isqrt_ll(disc);
        if (e * e != disc)
            throw infeasible_params_error(
                "irrational eigenvalues with unequal multiplicities for " + p.str());
        if (trace % e != 0 || ((p.n - 1) - trace / e) % 2 != 0)
            throw infeasible_params_error("non-integral multiplicities for " + p.str());
        out.f = ((p.n - 1) - trace / e) / 2;
        out.g = ((p.n - 1) + trace / e) / 2;
        if (out.f <= 0 || out.g <= 0)
            throw infeasible_params_error("non-positive multiplicity for " + p.str());
        out.r = ExactValue::rational(diff + e, 2);
        out.s = ExactValue::rational(diff - e, 2);
    }

    // k + f*r + g*s is the trace of the adjacency matrix and must vanish.
    ExactValue total = ExactValue::integer(p.k) + out.r * ExactValue::integer(out.f) +
                       out.s * ExactValue::integer(out.g);
    if (!(total == ExactValue::integer(0)))
        throw infeasible_params_error("eigenvalue trace is nonzero for " + p.str());
    return out;
}

inline Spectrum srg_spectrum(const SrgParams& p) {
    SrgSpectrum sp = srg_spectrum_from_params(p);
    std::vector<std::pair<ExactValue, long long>> items;
    items.emplace_back(ExactValue::integer(sp.k), 1);
    items.emplace_back(sp.r, sp.f);
    items.emplace_back(sp.s, sp.g);
    return make_exact_spectrum(std::move(items));
}

// Decides whether g is a regular clique assembly with clique order omega.
// Two characterizations are evaluated independently and must agree:
//  - by definition: regular, at least one edge, every maximal clique of
//    order omega, and every edge in exactly one omega-clique;
//  - by edge counts alone: every edge in exactly one omega-clique and
//    edge-regular with lambda = omega - 2.
inline bool is_regular_clique_assembly(const Graph& g, int omega) {
    if (omega < 2) throw invalid_argument_error("clique order must be at least 2");
    bool clique_reg = is_clique_regular(g, omega);

    auto maximal = enumerate_maximal_cliques(g);
    bool uniform = true;
    for (const auto& c : maximal)
        if (static_cast<int>(c.size()) != omega) uniform = false;
    auto info = degree_info(g);
    bool by_definition = info.regular && g.edge_count() > 0 && uniform && clique_reg;

    bool by_edge_regularity = false;
    if (clique_reg) {
        auto erg = classify_edge_regular(g);
        by_edge_regularity = erg.has_value() && erg->lambda == omega - 2;
    }

    if (by_definition != by_edge_regularity)
        throw theorem_violation_error("clique assembly characterizations disagree on a graph with " +
                                      std::to_string(g.vertex_count()) + " vertices");
    return by_definition;
}

// True exactly when the omega-clique graph of a strongly regular graph with
// these parameters has the same parameters again.
inline bool same_params_criterion(const SrgParams& p, int omega) {
    return p.k == static_cast<long long>(omega) * (omega - 1);
}

// Counting screen for a strongly regular graph to be an omega-clique
// assembly. Requires lambda = omega - 2 (each edge then closes into exactly
// one omega-clique candidate); the mu common neighbours of a non-adjacent
// pair lie in distinct cliques through either vertex, and the k neighbours
// split into k/(omega - 1) cliques, so k >= mu (omega - 1).
inline bool rca_necessary_condition(const SrgParams& p, int omega) {
    if (p.lambda != omega - 2)
        throw not_applicable_error("condition applies only when lambda = omega - 2, got " +
                                   p.str());
    return p.k >= p.mu * (omega - 1);
}

// Multiplicity bound for a primitive strongly regular graph: the vertex
// count is at most f(f+3)/2 for each restricted multiplicity f.
inline bool absolute_bound_holds(long long n, long long f, long long g) {
    return n <= f * (f + 3) / 2 && n <= g * (g + 3) / 2;
}

// Parameter-level description of the omega-clique graph of a strongly
// regular graph, computed without constructing either graph.
struct CliqueGraphSrgClassification {
    long long m = 0;       // vertices of the clique graph
    long long k_star = 0;  // its degree
    Spectrum predicted_spectrum;
    bool is_srg = false;
    bool same_params = false;
    std::optional<SrgParams> predicted_params;  // set when is_srg
};

// Predicts the omega-clique graph of a strongly regular graph with
// parameters p: vertex count m = nk/(omega(omega-1)), degree
// omega(k/(omega-1) - 1), spectrum obtained by shifting every eigenvalue by
// k/(omega-1) - omega and adjoining -omega with multiplicity m - n. The
// result is strongly regular exactly when s = -k/(omega-1) (the shifted s
// merges with the adjoined eigenvalue, leaving three distinct values) or
// k = omega(omega-1) (the shift is the identity and m = n). Parameters of
// the predicted graph follow from closed forms when lambda = omega - 2 and
// from r* + s* = lambda* - mu*, r* s* = mu* - k* otherwise.
inline CliqueGraphSrgClassification clique_graph_srg_classification(const SrgParams& p,
                                                                    int omega) {
    if (omega < 2) throw invalid_argument_error("clique order must be at least 2");
    if (p.n == p.k + 1 || p.mu <= 0 || p.mu >= p.k)
        throw not_applicable_error("parameters " + p.str() +
                                   " describe a complete, disconnected or complete "
                                   "multipartite graph");
    SrgSpectrum sp = srg_spectrum_from_params(p);
    if (p.k % (omega - 1) != 0)
        throw not_applicable_error("degree of " + p.str() + " not divisible by omega - 1");
    if ((p.n * p.k) % (static_cast<long long>(omega) * (omega - 1)) != 0)
        throw not_applicable_error("clique count of " + p.str() + " is not integral");

    CliqueGraphSrgClassification out;
    const long long kk = p.k / (omega - 1);  // cliques through each vertex
    out.m = p.n * p.k / (static_cast<long long>(omega) * (omega - 1));
    out.k_star = omega * (kk - 1);
    out.predicted_spectrum = predicted_clique_spectrum(srg_spectrum(p), p.k, omega);

    out.same_params = same_params_criterion(p, omega);
    out.is_srg = out.same_params || sp.s == ExactValue::rational(-p.k, omega - 1);
    if (!out.is_srg) return out;

    SrgParams predicted;
    predicted.n = out.m;
    predicted.k = out.k_star;
    if (p.lambda == omega - 2) {
        predicted.lambda = kk - 2;
        predicted.mu = p.mu + omega - kk;
    } else {
        // Read lambda* and mu* off the predicted spectrum.
        const auto& entries = out.predicted_spectrum.entries;
        if (entries.empty() || !entries.front().exact ||
            !(*entries.front().exact == ExactValue::integer(out.k_star)))
            throw theorem_violation_error(
                "predicted spectrum does not start at the predicted degree for " + p.str());
        if (entries.size() == 1) {
            // A single eigenvalue: the predicted graph has no edges.
            if (out.k_star != 0)
                throw theorem_violation_error("one-point spectrum with positive degree for " +
                                              p.str());
            predicted.lambda = 0;
            predicted.mu = 0;
        } else if (entries.size() == 2) {
            // Degree plus -1: a union of equal complete graphs.
            if (!entries[1].exact || !(*entries[1].exact == ExactValue::integer(-1)))
                throw theorem_violation_error("two-point spectrum not of complete type for " +
                                              p.str());
            predicted.lambda = out.k_star - 1;
            predicted.mu = 0;
        } else if (entries.size() == 3) {
            if (!entries[1].exact || !entries[2].exact)
                throw theorem_violation_error("inexact predicted spectrum for " + p.str());
            ExactValue mu_star = ExactValue::integer(out.k_star) +
                                 *entries[1].exact * *entries[2].exact;
            ExactValue lambda_star = mu_star + *entries[1].exact + *entries[2].exact;
            if (!mu_star.is_integer() || !lambda_star.is_integer())
                throw theorem_violation_error("non-integral predicted parameters for " + p.str());
            predicted.lambda = lambda_star.as_integer();
            predicted.mu = mu_star.as_integer();
            if (predicted.lambda < 0 || predicted.mu < 0)
                throw theorem_violation_error("negative predicted parameters for " + p.str());
        } else {
            throw theorem_violation_error("predicted spectrum has more than three eigenvalues for " +
                                          p.str());
        }
    }
    if (out.same_params && !(predicted == p))
        throw theorem_violation_error(
            "parameters should be preserved at k = omega(omega-1) but changed for " + p.str());
    out.predicted_params = predicted;
    return out;
}

// One discarded candidate of the enumeration below.
struct SrgCandidateRejection {
    std::string branch;
    SrgParams params;
    std::string reason;
};

struct SrgEnumerationResult {
    std::vector<SrgParams> accepted;
    std::vector<SrgCandidateRejection> rejected;
};

// Enumerates all parameter tuples of strongly regular graphs with lambda = 1
// whose 3-clique graph is again strongly regular. That condition forces
// s = -k/2 or, failing that, k = 3 * 2 = 6. With lambda = 1:
//  - k = 6: the identity gives (n - 7) mu = 24, so mu | 24 and n = 24/mu + 7;
//  - s = -k/2: the quadratic for s forces mu = k/2 and then n = 3(k - 1),
//    and the multiplicity of s is 8(k - 1)/(k + 2), integral only when
//    (k + 2) | 24.
// Candidates are discarded when the multiplicities fail to be positive
// integers, when the absolute bound fails, or when the tuple describes a
// boring (complete) graph.
inline SrgEnumerationResult enumerate_srg_locally_linear_with_srg_clique_graph() {
    SrgEnumerationResult out;
    auto consider = [&out](const std::string& branch, const SrgParams& p) {
        if (p.n == p.k + 1) {
            out.rejected.push_back({branch, p, "boring: complete graph K_" + std::to_string(p.n)});
            return;
        }
        SrgSpectrum sp;
        try {
            sp = srg_spectrum_from_params(p);
        } catch (const error& e) {  // invalid or infeasible parameters
            out.rejected.push_back({branch, p, e.what()});
            return;
        }
        if (!absolute_bound_holds(p.n, sp.f, sp.g)) {
            long long worst = std::min(sp.f, sp.g);
            out.rejected.push_back({branch, p,
                                    "absolute bound fails: " + std::to_string(p.n) + " > " +
                                        std::to_string(worst * (worst + 3) / 2)});
            return;
        }
        if (std::find(out.accepted.begin(), out.accepted.end(), p) == out.accepted.end())
            out.accepted.push_back(p);
    };

    for (long long mu = 1; mu <= 24; ++mu) {
        if (24 % mu != 0) continue;
        consider("k = 6", SrgParams{24 / mu + 7, 6, 1, mu});
    }
    for (long long d = 4; d <= 24; ++d) {
        if (24 % d != 0) continue;
        long long k = d - 2;  // so that (k + 2) | 24; every such k is even
        consider("s = -k/2", SrgParams{3 * (k - 1), k, 1, k / 2});
    }

    std::sort(out.accepted.begin(), out.accepted.end(),
              [](const SrgParams& a, const SrgParams& b) { return a.n < b.n; });
    return out;
}

}  // namespace cliquegraph
