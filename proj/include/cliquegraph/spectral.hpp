// Exact characteristic polynomials and the spectral transfer from a
// k-regular clique-regular graph to its clique graph:
//
//   p(C; x) = (x + omega)^(m - n) * p(G; x + omega - k/(omega-1)),
//   m = n k / (omega (omega-1)).
//
// A negative exponent m - n means exact division, and a nonzero remainder
// there is reported as a theorem violation (it cannot happen when the
// hypotheses really hold). The eigenvalue-level version of the same map
// shifts every eigenvalue by k/(omega-1) - omega and adds -omega with
// multiplicity m - n, merging and cancelling entries exactly.
#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "cliquegraph/cliques.hpp"
#include "cliquegraph/errors.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/polynomial.hpp"
#include "cliquegraph/spectrum.hpp"

namespace cliquegraph {

inline int default_exact_limit() { return 128; }

// Characteristic polynomial det(xI - A), computed division-free with the
// Berkowitz vector recurrence over exact integers. O(n^4) coefficient
// operations, so callers must opt in beyond `limit` vertices.
inline IntPolynomial char_poly_exact(const Graph& g, int limit = default_exact_limit()) {
    const int n = g.vertex_count();
    if (n > limit)
        throw resource_limit_error("graph exceeds the exact characteristic-polynomial limit (" +
                                   std::to_string(limit) + "); use the numeric spectrum instead");
    if (n == 0) return IntPolynomial::from_ints({1});

    // p: descending coefficients of the char poly of the trailing r x r
    // principal submatrix A[n-r.., n-r..]. Diagonal entries are zero for a
    // simple graph, which trims the Toeplitz column to t = (1, 0, -R A'^j C).
    std::vector<mpz_class> p{1, 0};  // r = 1
    for (int r = 2; r <= n; ++r) {
        const int base = n - r;
        const Bitset& row = g.neighbors(base);

        // t[j] for j = 0..r; w walks A'^(j-2) C where A' is the previous
        // trailing submatrix and R = C^T is the new border row.
        std::vector<mpz_class> t(static_cast<std::size_t>(r) + 1);
        t[0] = 1;
        t[1] = 0;
        std::vector<mpz_class> w(static_cast<std::size_t>(r) - 1);
        for (int i = 0; i < r - 1; ++i)
            w[static_cast<std::size_t>(i)] = row.test(base + 1 + i) ? 1 : 0;
        for (int j = 2; j <= r; ++j) {
            mpz_class dot = 0;
            for (int i = 0; i < r - 1; ++i)
                if (row.test(base + 1 + i)) dot += w[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(j)] = -dot;
            if (j == r) break;
            std::vector<mpz_class> next(static_cast<std::size_t>(r) - 1);
            for (int i = 0; i < r - 1; ++i) {
                const Bitset& nb = g.neighbors(base + 1 + i);
                mpz_class acc = 0;
                for (int k = 0; k < r - 1; ++k)
                    if (nb.test(base + 1 + k)) acc += w[static_cast<std::size_t>(k)];
                next[static_cast<std::size_t>(i)] = acc;
            }
            w = std::move(next);
        }

        std::vector<mpz_class> q(static_cast<std::size_t>(r) + 1);
        for (int i = 0; i <= r; ++i) {
            mpz_class acc = 0;
            for (int j = 0; j <= i && j <= r; ++j) {
                int pi = i - j;
                if (pi < r) acc += t[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(pi)];
            }
            q[static_cast<std::size_t>(i)] = acc;
        }
        p = std::move(q);
    }
    std::vector<mpz_class> ascending(p.rbegin(), p.rend());
    return IntPolynomial(std::move(ascending));
}

namespace spectral_detail {

inline void check_transfer_preconditions(long long n, long long k, int omega) {
    if (omega < 2) throw invalid_argument_error("clique order must be at least 2");
    if (k <= 0 || n <= 0) throw not_applicable_error("transfer needs a nonempty regular graph");
    if (k % (omega - 1) != 0)
        throw not_applicable_error("degree must be divisible by omega - 1");
    if ((n * k) % (static_cast<long long>(omega) * (omega - 1)) != 0)
        throw not_applicable_error("n*k must be divisible by omega*(omega-1)");
}

}  // namespace spectral_detail

// Characteristic polynomial predicted for the clique graph of a k-regular
// clique-regular graph whose own char poly is `p`.
inline IntPolynomial predicted_clique_charpoly(const IntPolynomial& p, long long n, long long k,
                                               int omega) {
    spectral_detail::check_transfer_preconditions(n, k, omega);
    if (p.degree() != n || !p.is_monic())
        throw not_applicable_error("characteristic polynomial must be monic of degree n");
    const long long m = n * k / (static_cast<long long>(omega) * (omega - 1));
    IntPolynomial q = p;
    q.taylor_shift(omega - k / (omega - 1));
    if (m >= n) {
        for (long long i = 0; i < m - n; ++i) q.multiply_by_linear(omega);
    } else {
        for (long long i = 0; i < n - m; ++i) {
            mpz_class rem = q.divide_by_linear(omega);
            if (rem != 0)
                throw theorem_violation_error(
                    "shifted polynomial not divisible by (x + omega); hypotheses violated");
        }
    }
    return q;
}

// Same map at eigenvalue level. Input entries must be exact; the result is
// exact, merged, with cancellations checked (a net negative multiplicity is
// a theorem violation).
inline Spectrum predicted_clique_spectrum(const Spectrum& spec, long long k, int omega) {
    spectral_detail::check_transfer_preconditions(spec.total(), k, omega);
    const long long n = spec.total();
    bool has_k = false;
    std::vector<std::pair<ExactValue, long long>> items;
    for (const auto& e : spec.entries) {
        if (!e.exact) throw not_applicable_error("spectrum transfer needs exact eigenvalues");
        if (*e.exact == ExactValue::integer(k)) has_k = true;
        items.emplace_back(*e.exact + ExactValue::integer(k / (omega - 1) - omega),
                           e.multiplicity);
    }
    if (!has_k) throw not_applicable_error("spectrum does not contain the degree k");
    const long long m = n * k / (static_cast<long long>(omega) * (omega - 1));
    items.emplace_back(ExactValue::integer(-omega), m - n);
    return make_exact_spectrum(std::move(items));
}

// Upgrade numerically grouped eigenvalues to exact ones where the
// characteristic polynomial confirms them. Integer candidates are verified
// root-by-root through exact deflation; if exactly two irrational groups of
// equal multiplicity remain, they are tested as the conjugate roots of a
// repeated integer quadratic (the strongly-regular shape). Groups the
// polynomial does not confirm keep their numeric form, so a mixed result is
// possible and every entry stays honestly labeled.
inline Spectrum refine_spectrum_exact(const IntPolynomial& charpoly, const Spectrum& numeric) {
    if (charpoly.degree() != numeric.total() || !charpoly.is_monic()) return numeric;
    IntPolynomial rest = charpoly;
    Spectrum out = numeric;
    std::vector<std::size_t> open;  // indices not yet confirmed
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        auto& e = out.entries[i];
        // entries arriving already snapped to integers still get deflated, so
        // `rest` really is the polynomial with all integer roots removed
        long long r = 0;
        bool integral = false;
        if (e.exact) {
            if (!e.exact->is_integer()) continue;
            r = e.exact->as_integer();
            integral = true;
        } else {
            double near = std::round(e.value);
            if (std::abs(e.value - near) <= 1e-3) {
                r = static_cast<long long>(near);
                integral = true;
            }
        }
        if (!integral) {
            open.push_back(i);
            continue;
        }
        IntPolynomial trial = rest;
        bool ok = true;
        for (long long t = 0; t < e.multiplicity && ok; ++t)
            ok = trial.divide_by_linear(-r) == 0;
        if (ok) {
            rest = std::move(trial);
            e.exact = ExactValue::integer(r);
            e.value = static_cast<double>(r);
            e.tol.reset();
        } else if (!e.exact) {
            open.push_back(i);
        }
        // an entry that was already exact but fails deflation keeps its label;
        // the surd branch below is then blocked by the degree check
    }
    // conjugate surd pair: remaining factor (x^2 + bx + c)^d
    if (open.size() == 2) {
        auto& e1 = out.entries[open[0]];
        auto& e2 = out.entries[open[1]];
        if (e1.multiplicity == e2.multiplicity && rest.degree() == 2 * e1.multiplicity) {
            double bs = -(e1.value + e2.value), cs = e1.value * e2.value;
            long long b = static_cast<long long>(std::round(bs));
            long long c = static_cast<long long>(std::round(cs));
            long long disc = b * b - 4 * c;
            if (std::abs(bs - static_cast<double>(b)) < 1e-3 &&
                std::abs(cs - static_cast<double>(c)) < 1e-3 && disc > 0) {
                IntPolynomial trial = rest;
                const mpz_class bz(static_cast<long>(b)), cz(static_cast<long>(c));
                bool ok = true;
                for (long long t = 0; t < e1.multiplicity && ok; ++t) {
                    // synthetic division by x^2 + bx + c
                    auto& a = trial.coeffs;
                    if (a.size() < 3) {
                        ok = false;
                        break;
                    }
                    std::vector<mpz_class> q(a.size() - 2);
                    for (std::size_t i = a.size(); i-- > 2;) {
                        q[i - 2] = a[i];
                        a[i - 1] -= bz * q[i - 2];
                        a[i - 2] -= cz * q[i - 2];
                    }
                    ok = a[0] == 0 && a[1] == 0;
                    trial = IntPolynomial(std::move(q));
                }
                if (ok) {
                    ExactValue hi = ExactValue::make(-b, 1, disc, 2);
                    ExactValue lo = ExactValue::make(-b, -1, disc, 2);
                    // entries are ordered descending, so open[0] is the + root
                    e1.exact = hi;
                    e1.value = hi.approx();
                    e1.tol.reset();
                    e2.exact = lo;
                    e2.value = lo.approx();
                    e2.tol.reset();
                }
            }
        }
    }
    return out;
}

struct EigenBounds {
    double low = 0;
    double high = 0;
};

// Interlacing-based window for clique-graph eigenvalues, from the extreme
// line-graph eigenvalues mu_min, mu_max of the underlying graph.
inline EigenBounds interlacing_bounds(int omega, double mu_min, double mu_max) {
    if (omega < 2) throw invalid_argument_error("clique order must be at least 2");
    double f = static_cast<double>(omega) / (omega - 1);
    return {f * (mu_min / 2 - omega + 2), f * (mu_max / 2 - omega + 2)};
}

// Degree-based window: every clique-graph eigenvalue lies in
// [-omega, omega*(max_degree/(omega-1) - 1)].
inline EigenBounds degree_bounds(int omega, int max_degree) {
    if (omega < 2) throw invalid_argument_error("clique order must be at least 2");
    return {-static_cast<double>(omega),
            omega * (static_cast<double>(max_degree) / (omega - 1) - 1)};
}

// For a connected non-complete clique-regular graph, the largest line-graph
// eigenvalue must clear 2*omega - 4.
inline bool check_line_bound(int omega, double mu_max) {
    return 2.0 * omega - 4.0 < mu_max;
}

inline bool all_within(const std::vector<double>& vals, const EigenBounds& b, double tol = 1e-9) {
    for (double v : vals)
        if (v < b.low - tol || v > b.high + tol) return false;
    return true;
}

}  // namespace cliquegraph
