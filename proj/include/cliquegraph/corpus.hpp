// The fixed test corpus: every strongly regular family instance small enough
// for exact spectral work (largest member has 40 vertices), each paired with
// its expected parameters and its distinguished clique order. The coset graph
// on 243 vertices is kept out of the standard list because exact polynomial
// work on it is deliberately out of scope; callers that want it ask for it
// explicitly.
#pragma once

#include <string>
#include <vector>

#include "cliquegraph/generators.hpp"
#include "cliquegraph/graph.hpp"
#include "cliquegraph/srg.hpp"

namespace cliquegraph {

struct CorpusEntry {
    std::string name;
    Graph graph;
    SrgParams params;  // expected classification, asserted by tests
    int omega = 0;     // the clique order the family theorems speak about
};

inline std::vector<CorpusEntry> standard_corpus() {
    std::vector<CorpusEntry> out;
    for (int n = 3; n <= 6; ++n)
        out.push_back({"rook-" + std::to_string(n), rook_graph(n),
                       {static_cast<long long>(n) * n, 2 * (n - 1), n - 2, 2}, n});
    for (int n = 5; n <= 8; ++n)
        out.push_back({"triangular-" + std::to_string(n), triangular_graph(n),
                       {static_cast<long long>(n) * (n - 1) / 2, 2 * (n - 2), n - 2, 4}, n - 1});
    out.push_back({"oa-block-5-3", oa_block_graph(orthogonal_array(5, 3)), {25, 12, 5, 6}, 5});
    out.push_back({"gq-symplectic-2", gq_collinearity_graph(gq_symplectic(2)), {15, 6, 1, 3}, 3});
    out.push_back({"gq-symplectic-3", gq_collinearity_graph(gq_symplectic(3)), {40, 12, 2, 4}, 4});
    out.push_back({"gq-elliptic-2", gq_collinearity_graph(gq_elliptic(2)), {27, 10, 1, 5}, 3});
    return out;
}

inline CorpusEntry golay_corpus_entry() {
    return {"golay", golay_coset_graph(), {243, 22, 1, 2}, 3};
}

}  // namespace cliquegraph
