// Spectrum container plus the numeric eigenvalue path. Entries carry their
// provenance: `exact` set means the value is known in closed form; `tol` set
// means it came out of the floating-point solver (possibly snapped to an
// integer afterwards, in which case both are set).
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "cliquegraph/errors.hpp"
#include "cliquegraph/exact_value.hpp"
#include "cliquegraph/graph.hpp"

namespace cliquegraph {

struct SpectrumEntry {
    std::optional<ExactValue> exact;
    double value = 0.0;  // numeric view, always populated
    long long multiplicity = 0;
    std::optional<double> tol;  // set when the value came from the numeric solver
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;  // descending by value

    long long total() const {
        long long t = 0;
        for (const auto& e : entries) t += e.multiplicity;
        return t;
    }
};

// Build an all-exact spectrum: merges duplicate values, drops zero
// multiplicities, rejects negative ones.
inline Spectrum make_exact_spectrum(std::vector<std::pair<ExactValue, long long>> items) {
    std::vector<std::pair<ExactValue, long long>> merged;
    for (auto& [v, m] : items) {
        bool found = false;
        for (auto& [w, wm] : merged)
            if (w == v) {
                wm += m;
                found = true;
                break;
            }
        if (!found) merged.emplace_back(v, m);
    }
    Spectrum s;
    for (auto& [v, m] : merged) {
        if (m < 0) throw theorem_violation_error("negative eigenvalue multiplicity");
        if (m == 0) continue;
        s.entries.push_back(SpectrumEntry{v, v.approx(), m, std::nullopt});
    }
    std::sort(s.entries.begin(), s.entries.end(),
              [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.value > y.value; });
    return s;
}

// Raw eigenvalues of the adjacency matrix, ascending. Dense symmetric
// solver; per-eigenvalue relative accuracy is far below the 1e-9 contract
// for the matrix sizes this library targets.
inline std::vector<double> eigenvalues_numeric(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw numeric_error("eigenvalue solver did not converge");
    std::vector<double> vals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vals[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    std::sort(vals.begin(), vals.end());
    return vals;
}

// Group sorted values into multiplicity classes (gap < tol joins a group),
// snap group means within tol of an integer, and refuse to guess when a
// group smears across more than 10*tol.
inline Spectrum group_eigenvalues(const std::vector<double>& ascending, double tol) {
    if (tol <= 0) throw invalid_argument_error("tolerance must be positive");
    Spectrum s;
    std::size_t i = 0;
    while (i < ascending.size()) {
        std::size_t j = i + 1;
        while (j < ascending.size() && ascending[j] - ascending[j - 1] < tol) ++j;
        double lo = ascending[i], hi = ascending[j - 1];
        if (hi - lo > 10 * tol)
            throw numeric_error("eigenvalue group spans more than 10x tolerance");
        double mean = 0;
        for (std::size_t k = i; k < j; ++k) mean += ascending[k];
        mean /= static_cast<double>(j - i);
        SpectrumEntry e;
        e.multiplicity = static_cast<long long>(j - i);
        e.tol = tol;
        double snapped = std::round(mean) + 0.0;  // turn -0.0 into +0.0
        if (std::abs(mean - snapped) <= tol) {
            e.exact = ExactValue::integer(static_cast<long long>(snapped));
            e.value = snapped;
        } else {
            e.value = mean;
        }
        s.entries.push_back(e);
        i = j;
    }
    std::reverse(s.entries.begin(), s.entries.end());  // descending
    return s;
}

inline Spectrum spectrum_numeric(const Graph& g, double tol = 1e-6) {
    return group_eigenvalues(eigenvalues_numeric(g), tol);
}

}  // namespace cliquegraph
