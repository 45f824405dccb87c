#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "nlflow/digraph.hpp"

namespace nlflow {

/// Lexicographically smallest sorted arc list over all vertex relabellings.
/// Two digraphs on the same vertex count are isomorphic iff their canonical
/// arc lists agree. O(n! m log m).
inline std::vector<Arc> canonical_arcs(const Digraph& d) {
    std::vector<Vertex> perm(d.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Arc> best;
    bool first = true;
    std::vector<Arc> mapped(d.arc_count());
    do {
        for (std::size_t i = 0; i < d.arc_count(); ++i) mapped[i] = {perm[d.arc(i).tail], perm[d.arc(i).head]};
        std::sort(mapped.begin(), mapped.end());
        if (first || mapped < best) {
            best = mapped;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// One representative per isomorphism class of digraphs with
/// n <= max_n vertices and m <= max_m arcs. Parallel and antiparallel arcs
/// are included; loops only on request. Ordered by (n, m, canonical arcs).
inline std::vector<Digraph> digraph_catalog(std::size_t max_n, std::size_t max_m, bool with_loops = false,
                                            std::size_t min_n = 0) {
    std::vector<Digraph> out;
    for (std::size_t n = min_n; n <= max_n; ++n) {
        std::vector<Arc> types;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v || with_loops) types.push_back({u, v});
        for (std::size_t m = 0; m <= max_m; ++m) {
            std::set<std::vector<Arc>> classes;
            std::vector<Arc> arcs;
            auto choose = [&](auto&& self, std::size_t from) -> void {
                if (arcs.size() == m) {
                    classes.insert(canonical_arcs(Digraph(n, arcs)));
                    return;
                }
                for (std::size_t t = from; t < types.size(); ++t) {
                    arcs.push_back(types[t]);
                    self(self, t);
                    arcs.pop_back();
                }
            };
            choose(choose, 0);
            for (const auto& c : classes) out.emplace_back(n, c);
        }
    }
    return out;
}

}  // namespace nlflow
