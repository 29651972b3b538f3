// Deterministic constructors for the graph families under study: rook and
// triangular graphs, orthogonal-array block graphs, generalized quadrangles
// (symplectic and elliptic) with their collinearity graphs and duals, and
// the 243-vertex coset graph of the perfect ternary [11,6,5] code.
//
// Every constructor validates its output structurally before returning
// (OA pair coverage, the four GQ axioms, expected srg parameters), so a
// returned object is always well formed. Vertex numberings are fixed and
// documented per family; outputs are reproducible byte-for-byte.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cliquegraph/bitset.hpp"
#include "cliquegraph/cliques.hpp"
#include "cliquegraph/errors.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/srg.hpp"

namespace cliquegraph {

namespace gen_detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int mod_pow(int base, int exp, int m) {
    long long acc = 1, b = ((base % m) + m) % m;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) acc = acc * b % m;
        b = b * b % m;
    }
    return static_cast<int>(acc);
}

inline int inv_mod(int x, int p) { return mod_pow(x, p - 2, p); }

// Scale a nonzero coordinate vector so its first nonzero entry is 1.
inline std::vector<int> canonical_rep(std::vector<int> v, int q) {
    for (int c : v)
        if (c % q != 0) {
            int f = inv_mod(((c % q) + q) % q, q);
            for (int& x : v) x = ((x % q) + q) % q * f % q;
            return v;
        }
    throw invalid_argument_error("zero vector has no projective representative");
}

// All points of projective d-space over the field of q elements, each as its
// canonical representative, ordered by reading the coordinate vector as a
// base-q number with the first coordinate most significant.
inline std::vector<std::vector<int>> projective_points(int d, int q) {
    std::vector<std::vector<int>> pts;
    long long total = 1;
    for (int i = 0; i <= d; ++i) total *= q;
    for (long long code = 1; code < total; ++code) {
        std::vector<int> v(static_cast<std::size_t>(d) + 1);
        long long rest = code;
        for (int i = d; i >= 0; --i) {
            v[static_cast<std::size_t>(i)] = static_cast<int>(rest % q);
            rest /= q;
        }
        int first = 0;
        while (v[static_cast<std::size_t>(first)] == 0) ++first;
        if (v[static_cast<std::size_t>(first)] == 1) pts.push_back(std::move(v));
    }
    return pts;
}

}  // namespace gen_detail

// Vertices are the cells of an n x n board, numbered row * n + column; two
// cells are adjacent when they share a row or a column.
inline Graph rook_graph(int n) {
    if (n < 2) throw invalid_argument_error("board size must be at least 2");
    Graph g(n * n);
    for (int a = 0; a < n * n; ++a)
        for (int b = a + 1; b < n * n; ++b)
            if (a / n == b / n || a % n == b % n) g.add_edge(a, b);
    auto cls = classify_srg(g);
    if (!cls || !(cls->params == SrgParams{static_cast<long long>(n) * n, 2 * (n - 1), n - 2, 2}))
        throw theorem_violation_error("rook graph failed its parameter check");
    return g;
}

// Line graph of the complete graph on n vertices: one vertex per pair
// {i, j}, i < j, in lexicographic order; adjacent when the pairs intersect.
inline Graph triangular_graph(int n) {
    if (n < 3) throw invalid_argument_error("triangular graph needs n >= 3");
    Graph g = build_line_graph(complete_graph(n)).graph;
    if (n >= 4) {
        auto cls = classify_srg(g);
        SrgParams want{static_cast<long long>(n) * (n - 1) / 2, 2 * (n - 2), n - 2, 4};
        if (!cls || !(cls->params == want))
            throw theorem_violation_error("triangular graph failed its parameter check");
    }
    return g;
}

// n^2 x m array over the symbols 0..n-1 in which every ordered pair of
// symbols appears exactly once in every pair of columns.
struct OrthogonalArray {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> rows;  // n^2 rows of m entries
};

// Linear construction over the prime field: row (a, b) has column 0 = a,
// column 1 = b and column j = a + (j-1) b for j >= 2; rows are ordered by
// a * n + b. Distinct multipliers keep the columns pairwise orthogonal,
// which caps m at n + 1.
inline OrthogonalArray orthogonal_array(int n, int m) {
    if (!gen_detail::is_prime(n))
        throw unsupported_error("symbol count must be prime, got " + std::to_string(n));
    if (m < 2 || m > n + 1)
        throw invalid_argument_error("column count must lie in 2.." + std::to_string(n + 1));
    OrthogonalArray oa;
    oa.n = n;
    oa.m = m;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> row(static_cast<std::size_t>(m));
            row[0] = a;
            row[1] = b;
            for (int j = 2; j < m; ++j) row[static_cast<std::size_t>(j)] = (a + (j - 1) * b) % n;
            oa.rows.push_back(std::move(row));
        }
    // pair-coverage validation over every column pair
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
            for (const auto& row : oa.rows) {
                int code = row[static_cast<std::size_t>(i)] * n + row[static_cast<std::size_t>(j)];
                if (seen[static_cast<std::size_t>(code)])
                    throw theorem_violation_error("orthogonal array repeats a symbol pair");
                seen[static_cast<std::size_t>(code)] = 1;
            }
        }
    return oa;
}

// Rows of the array as vertices, adjacent when they agree in some column.
inline Graph oa_block_graph(const OrthogonalArray& oa) {
    int total = static_cast<int>(oa.rows.size());
    Graph g(total);
    for (int a = 0; a < total; ++a)
        for (int b = a + 1; b < total; ++b) {
            const auto& ra = oa.rows[static_cast<std::size_t>(a)];
            const auto& rb = oa.rows[static_cast<std::size_t>(b)];
            for (int j = 0; j < oa.m; ++j)
                if (ra[static_cast<std::size_t>(j)] == rb[static_cast<std::size_t>(j)]) {
                    g.add_edge(a, b);
                    break;
                }
        }
    return g;
}

// Point-line geometry with every line carrying s+1 points, every point on
// t+1 lines, two lines meeting in at most one point, and: for every point P
// off a line l there is exactly one line through P meeting l.
struct IncidenceStructure {
    int points = 0;
    std::vector<std::vector<int>> lines;  // sorted point indices, sorted lists
    int s = 0;
    int t = 0;
};

struct GqOrders {
    int s = 0;
    int t = 0;
};

// Checks all four axioms and returns the orders; throws otherwise.
inline GqOrders validate_gq(const IncidenceStructure& st) {
    if (st.points <= 0 || st.lines.empty())
        throw invalid_argument_error("structure has no points or no lines");
    std::size_t line_size = st.lines.front().size();
    if (line_size < 2) throw invalid_argument_error("lines need at least two points");
    std::vector<std::vector<int>> through(static_cast<std::size_t>(st.points));
    for (std::size_t li = 0; li < st.lines.size(); ++li) {
        const auto& line = st.lines[li];
        if (line.size() != line_size)
            throw invalid_argument_error("line sizes are not uniform");
        for (std::size_t i = 0; i < line.size(); ++i) {
            int p = line[i];
            if (p < 0 || p >= st.points) throw invalid_argument_error("line point out of range");
            if (i > 0 && line[i - 1] >= p)
                throw invalid_argument_error("line points must be strictly increasing");
            through[static_cast<std::size_t>(p)].push_back(static_cast<int>(li));
        }
    }
    std::size_t per_point = through.front().size();
    for (const auto& lst : through)
        if (lst.size() != per_point)
            throw invalid_argument_error("points lie on differing numbers of lines");
    if (per_point < 1) throw invalid_argument_error("a point lies on no line");

    // two distinct lines share at most one point
    for (std::size_t a = 0; a < st.lines.size(); ++a)
        for (std::size_t b = a + 1; b < st.lines.size(); ++b) {
            const auto& la = st.lines[a];
            const auto& lb = st.lines[b];
            int shared = 0;
            std::size_t i = 0, j = 0;
            while (i < la.size() && j < lb.size()) {
                if (la[i] == lb[j]) ++shared, ++i, ++j;
                else if (la[i] < lb[j]) ++i;
                else ++j;
            }
            if (shared > 1) throw invalid_argument_error("two lines share more than one point");
        }

    // unique projection: for P off l, exactly one point of l collinear with P
    std::vector<Bitset> collinear(static_cast<std::size_t>(st.points), Bitset(st.points));
    for (const auto& line : st.lines)
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j) {
                collinear[static_cast<std::size_t>(line[i])].set(line[j]);
                collinear[static_cast<std::size_t>(line[j])].set(line[i]);
            }
    for (int p = 0; p < st.points; ++p)
        for (const auto& line : st.lines) {
            if (std::binary_search(line.begin(), line.end(), p)) continue;
            int hits = 0;
            for (int q : line)
                if (collinear[static_cast<std::size_t>(p)].test(q)) ++hits;
            if (hits != 1)
                throw invalid_argument_error("projection axiom fails: " + std::to_string(hits) +
                                             " collinear points instead of 1");
        }
    return {static_cast<int>(line_size) - 1, static_cast<int>(per_point) - 1};
}

namespace gen_detail {

// All canonical representatives on the projective line spanned by two
// distinct points, as sorted indices into `index`.
inline std::vector<int> projective_line(const std::vector<int>& p, const std::vector<int>& r,
                                        const std::map<std::vector<int>, int>& index, int q) {
    std::set<int> pts;
    auto lookup = [&](const std::vector<int>& v) {
        auto it = index.find(canonical_rep(v, q));
        if (it == index.end()) throw invalid_argument_error("line leaves the point set");
        return it->second;
    };
    pts.insert(lookup(r));
    for (int lam = 0; lam < q; ++lam) {
        std::vector<int> v(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) v[i] = (p[i] + lam * r[i]) % q;
        pts.insert(lookup(v));
    }
    return std::vector<int>(pts.begin(), pts.end());
}

inline IncidenceStructure finish_gq(int points, std::set<std::vector<int>> line_set) {
    IncidenceStructure st;
    st.points = points;
    st.lines.assign(line_set.begin(), line_set.end());
    GqOrders ord = validate_gq(st);
    st.s = ord.s;
    st.t = ord.t;
    return st;
}

}  // namespace gen_detail

// Points of projective 3-space over the prime field of order q, lines the
// totally isotropic lines of the symplectic form
// B(x, y) = x0 y1 - x1 y0 + x2 y3 - x3 y2. Gives a GQ(q, q); point numbering
// follows projective_points, lines sorted lexicographically.
inline IncidenceStructure gq_symplectic(int q) {
    if (!gen_detail::is_prime(q))
        throw unsupported_error("field order must be prime, got " + std::to_string(q));
    auto pts = gen_detail::projective_points(3, q);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    auto form = [q](const std::vector<int>& x, const std::vector<int>& y) {
        int v = (x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % q;
        return ((v % q) + q) % q;
    };
    std::set<std::vector<int>> line_set;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (form(pts[a], pts[b]) == 0)
                line_set.insert(gen_detail::projective_line(pts[a], pts[b], index, q));
    return gen_detail::finish_gq(static_cast<int>(pts.size()), std::move(line_set));
}

// Points of an elliptic quadric in projective 5-space over the prime field
// of order q: zeros of Q(x) = x0 x1 + x2 x3 + f(x4, x5) with f an
// irreducible binary quadratic form; lines are the totally singular lines.
// Gives a GQ(q, q^2); numbering as in gq_symplectic.
inline IncidenceStructure gq_elliptic(int q) {
    if (q != 2 && q != 3)
        throw unsupported_error("only field orders 2 and 3 are supported, got " + std::to_string(q));
    // smallest coefficients making z^2 + bz + c rootless over the field
    int fb = -1, fc = -1;
    for (int b = 0; b < q && fb < 0; ++b)
        for (int c = 0; c < q && fb < 0; ++c) {
            bool root = false;
            for (int z = 0; z < q; ++z)
                if ((z * z + b * z + c) % q == 0) root = true;
            if (!root) {
                fb = b;
                fc = c;
            }
        }
    auto quadric = [q, fb, fc](const std::vector<int>& x) {
        int v = (x[0] * x[1] + x[2] * x[3] + x[4] * x[4] + fb * x[4] * x[5] + fc * x[5] * x[5]) % q;
        return ((v % q) + q) % q;
    };
    auto all = gen_detail::projective_points(5, q);
    std::vector<std::vector<int>> pts;
    for (auto& v : all)
        if (quadric(v) == 0) pts.push_back(v);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<int>(i);
    // polarization of Q; a line through two singular points is totally
    // singular exactly when they are orthogonal under it
    auto bilinear = [q, &quadric](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> sum(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) sum[i] = (x[i] + y[i]) % q;
        int v = (quadric(sum) - quadric(x) - quadric(y)) % q;
        return ((v % q) + q) % q;
    };
    std::set<std::vector<int>> line_set;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
            if (bilinear(pts[a], pts[b]) == 0)
                line_set.insert(gen_detail::projective_line(pts[a], pts[b], index, q));
    return gen_detail::finish_gq(static_cast<int>(pts.size()), std::move(line_set));
}

// Points as vertices, adjacent when some line contains both.
inline Graph gq_collinearity_graph(const IncidenceStructure& st) {
    validate_gq(st);
    Graph g(st.points);
    for (const auto& line : st.lines)
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j)
                if (!g.adjacent(line[i], line[j])) g.add_edge(line[i], line[j]);
    return g;
}

// Swaps the roles of points and lines: new point i is old line i, new line p
// collects the old lines through old point p. A GQ(s,t) becomes a GQ(t,s).
inline IncidenceStructure gq_dual(const IncidenceStructure& st) {
    validate_gq(st);
    IncidenceStructure dual;
    dual.points = static_cast<int>(st.lines.size());
    dual.lines.assign(static_cast<std::size_t>(st.points), {});
    for (std::size_t li = 0; li < st.lines.size(); ++li)
        for (int p : st.lines[li])
            dual.lines[static_cast<std::size_t>(p)].push_back(static_cast<int>(li));
    for (auto& line : dual.lines) std::sort(line.begin(), line.end());
    GqOrders ord = validate_gq(dual);
    dual.s = ord.s;
    dual.t = ord.t;
    return dual;
}

namespace gen_detail {

// Reduced row echelon form over the field of order p; returns pivot columns.
inline std::vector<int> rref_mod(std::vector<std::vector<int>>& m, int p) {
    std::vector<int> pivots;
    std::size_t rows = m.size(), cols = m.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        int f = inv_mod(((m[r][c] % p) + p) % p, p);
        for (auto& x : m[r]) x = ((x % p) + p) % p * f % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % p == 0) continue;
            int mult = m[i][c] % p;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = (((m[i][j] - mult * m[r][j]) % p) + p) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace gen_detail

// Coset graph of the perfect ternary [11, 6, 5] code: one vertex per coset
// of the code in the 11-dimensional ternary space (3^5 = 243 of them),
// adjacent when the cosets differ by a vector of weight 1. Vertices are
// numbered by the coset syndrome read as a base-3 number, least significant
// component first. The code is spanned by the 6 cyclic shifts of the fixed
// row (2, 0, 1, 2, 1, 1, 0, 0, 0, 0, 0); minimum weight, the perfect
// covering property and the srg(243, 22, 1, 2) classification are all
// verified during construction.
inline Graph golay_coset_graph() {
    constexpr int N = 11, K = 6, Q = 3;
    static const std::array<int, 6> gen_poly{2, 0, 1, 2, 1, 1};
    std::vector<std::vector<int>> basis(K, std::vector<int>(N, 0));
    for (int i = 0; i < K; ++i)
        for (int j = 0; j < 6; ++j) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = gen_poly[static_cast<std::size_t>(j)];

    // minimum nonzero weight over all 3^6 codewords must be 5
    int min_weight = N + 1;
    for (int code = 1; code < 729; ++code) {
        std::vector<int> word(N, 0);
        int rest = code;
        for (int i = 0; i < K; ++i, rest /= Q) {
            int coef = rest % Q;
            if (coef == 0) continue;
            for (int j = 0; j < N; ++j)
                word[static_cast<std::size_t>(j)] =
                    (word[static_cast<std::size_t>(j)] + coef * basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) % Q;
        }
        int w = 0;
        for (int x : word) w += x != 0;
        min_weight = std::min(min_weight, w);
    }
    if (min_weight != 5)
        throw theorem_violation_error("code minimum weight is " + std::to_string(min_weight) +
                                      ", expected 5");

    // parity-check rows = basis of the solution space of basis * x = 0
    auto reduced = basis;
    auto pivots = gen_detail::rref_mod(reduced, Q);
    if (pivots.size() != K) throw theorem_violation_error("generator rows are dependent");
    std::vector<char> is_pivot(N, 0);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
    std::vector<std::vector<int>> check;
    for (int fc = 0; fc < N; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<int> h(N, 0);
        h[static_cast<std::size_t>(fc)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            h[static_cast<std::size_t>(pivots[r])] = (Q - reduced[r][static_cast<std::size_t>(fc)]) % Q;
        check.push_back(std::move(h));
    }
    const int R = static_cast<int>(check.size());  // 5

    auto syndrome_index = [&](const std::vector<int>& v) {
        int idx = 0, base = 1;
        for (int r = 0; r < R; ++r, base *= Q) {
            int dot = 0;
            for (int j = 0; j < N; ++j) dot += check[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
            idx += dot % Q * base;
        }
        return idx;
    };

    // perfect covering: syndromes of all vectors of weight <= 2 are distinct
    // and therefore hit all 243 cosets
    std::set<int> covered{0};
    std::vector<int> weight_one;
    for (int j = 0; j < N; ++j)
        for (int c = 1; c < Q; ++c) {
            std::vector<int> v(N, 0);
            v[static_cast<std::size_t>(j)] = c;
            int s = syndrome_index(v);
            weight_one.push_back(s);
            covered.insert(s);
        }
    for (int j = 0; j < N; ++j)
        for (int l = j + 1; l < N; ++l)
            for (int cj = 1; cj < Q; ++cj)
                for (int cl = 1; cl < Q; ++cl) {
                    std::vector<int> v(N, 0);
                    v[static_cast<std::size_t>(j)] = cj;
                    v[static_cast<std::size_t>(l)] = cl;
                    covered.insert(syndrome_index(v));
                }
    if (covered.size() != 243)
        throw theorem_violation_error("code is not perfect: " + std::to_string(covered.size()) +
                                      " cosets covered by weight <= 2 vectors");

    Graph g(243);
    for (int v = 0; v < 243; ++v) {
        std::array<int, 5> dig{};
        for (int r = 0, rest = v; r < R; ++r, rest /= Q) dig[static_cast<std::size_t>(r)] = rest % Q;
        for (int s : weight_one) {
            int u = 0, base = 1;
            for (int r = 0, rest = s; r < R; ++r, rest /= Q, base *= Q)
                u += (dig[static_cast<std::size_t>(r)] + rest % Q) % Q * base;
            if (u > v) g.add_edge(v, u);
        }
    }
    auto cls = classify_srg(g);
    if (!cls || !(cls->params == SrgParams{243, 22, 1, 2}))
        throw theorem_violation_error("coset graph failed its parameter check");
    return g;
}

}  // namespace cliquegraph
