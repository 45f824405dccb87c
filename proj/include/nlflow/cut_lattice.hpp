#pragma once

// Directed cuts, directed cycles, and the lattices
//
//   {A \ C : C a union of dicuts}     ordered by superset,
//   {A \ C : C a union of dicycles}   ordered by superset.
//
// The empty union is admitted, so A itself is always the first element.

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "nlflow/arc_set.hpp"
#include "nlflow/digraph.hpp"
#include "nlflow/error.hpp"
#include "nlflow/poset.hpp"

namespace nlflow {

inline constexpr std::size_t default_lattice_limit = 1'000'000;

/// Distinct nonempty dicuts, sorted lexicographically by arc indices.
using DicutFamily = std::vector<ArcSet>;

/// Family of distinct arc sets `A \ C`; element 0 is A.
struct ArcSetLattice {
    std::size_t universe = 0;
    std::vector<ArcSet> elements;

    std::size_t size() const noexcept { return elements.size(); }

    /// (elements, superset). Element 0 (= A) is the minimum of this order.
    FinitePoset<ArcSet> poset() const {
        return FinitePoset<ArcSet>(elements, [](const ArcSet& x, const ArcSet& y) {
            return y.is_subset_of(x);
        });
    }
};

using CutLattice = ArcSetLattice;
using CycleLattice = ArcSetLattice;

/// All distinct nonempty delta+(U) with no arc entering U, for
/// {} != U != V. U ranges over in-closed unions of strong components.
inline DicutFamily enumerate_dicuts(const Digraph& d, std::size_t limit = default_lattice_limit) {
    auto scc = strongly_connected_components(d);
    const std::size_t k = scc.size();
    std::vector<std::vector<std::size_t>> preds(k);
    for (const Arc& a : d.arcs()) {
        auto cu = scc.component_of[a.tail];
        auto cv = scc.component_of[a.head];
        if (cu != cv) preds[cv].push_back(cu);
    }

    std::unordered_set<ArcSet> seen;
    DicutFamily family;
    std::vector<bool> in_u(k, false);
    std::size_t visited = 0;

    // Components are in topological order, so every predecessor of c is
    // decided before c. Including c requires all its predecessors.
    auto emit = [&] {
        ArcSet cut(d.arc_count());
        for (ArcIndex a = 0; a < d.arc_count(); ++a)
            if (in_u[scc.component_of[d.arc(a).tail]] && !in_u[scc.component_of[d.arc(a).head]])
                cut.insert(a);
        if (!cut.empty() && seen.insert(cut).second) family.push_back(std::move(cut));
    };
    auto recurse = [&](auto&& self, std::size_t c) -> void {
        if (++visited > limit)
            throw ResourceError("dicut enumeration exceeded the limit of " + std::to_string(limit) +
                                " vertex ideals");
        if (c == k) {
            emit();
            return;
        }
        in_u[c] = false;
        self(self, c + 1);
        bool closed = std::all_of(preds[c].begin(), preds[c].end(), [&](auto p) { return in_u[p]; });
        if (closed) {
            in_u[c] = true;
            self(self, c + 1);
            in_u[c] = false;
        }
    };
    recurse(recurse, 0);
    std::sort(family.begin(), family.end(), [](const ArcSet& a, const ArcSet& b) { return lex_less(a, b); });
    return family;
}

/// S meets every member of the dicut family.
inline bool intersects_every_dicut(const DicutFamily& dicuts, const ArcSet& s) {
    return std::all_of(dicuts.begin(), dicuts.end(), [&](const ArcSet& c) { return c.intersects(s); });
}

/// S is a dijoin iff D/S is totally cyclic.
inline bool is_dijoin(const Digraph& d, const ArcSet& s) { return is_totally_cyclic(contract(d, s)); }

inline bool is_feedback_arc_set(const Digraph& d, const ArcSet& s) { return is_acyclic(delete_arcs(d, s)); }

/// Arc sets of all elementary directed cycles: loops, digons from
/// antiparallel pairs, and longer cycles. Parallel arcs yield distinct
/// cycles. Each cycle is found once, from its smallest vertex.
inline std::vector<ArcSet> enumerate_directed_cycles(const Digraph& d,
                                                     std::size_t limit = default_lattice_limit) {
    const std::size_t n = d.vertex_count();
    std::vector<std::vector<ArcIndex>> out(n);
    for (ArcIndex a = 0; a < d.arc_count(); ++a) out[d.arc(a).tail].push_back(a);

    std::vector<ArcSet> cycles;
    std::vector<bool> on_path(n, false);
    ArcSet path(d.arc_count());

    auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
        for (ArcIndex a : out[v]) {
            Vertex w = d.arc(a).head;
            if (w == start) {
                ArcSet cycle = path;
                cycle.insert(a);
                cycles.push_back(std::move(cycle));
                if (cycles.size() > limit)
                    throw ResourceError("cycle enumeration exceeded the limit of " + std::to_string(limit));
            } else if (w > start && !on_path[w]) {
                on_path[w] = true;
                path.insert(a);
                self(self, start, w);
                path.erase(a);
                on_path[w] = false;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = true;
        dfs(dfs, s, s);
        on_path[s] = false;
    }
    std::sort(cycles.begin(), cycles.end(), [](const ArcSet& a, const ArcSet& b) { return lex_less(a, b); });
    return cycles;
}

/// Complements of all unions of members of `family` (including the empty
/// union), deduplicated. Built by breadth-first closure under union with
/// one more member, so the work is bounded by the number of distinct unions.
inline ArcSetLattice build_union_lattice(std::size_t universe, const std::vector<ArcSet>& family,
                                         std::size_t limit = default_lattice_limit) {
    std::vector<ArcSet> unions{ArcSet(universe)};
    std::unordered_set<ArcSet> seen{unions.front()};
    for (std::size_t i = 0; i < unions.size(); ++i) {
        for (const ArcSet& member : family) {
            ArcSet next = unions[i] | member;
            if (seen.insert(next).second) {
                if (unions.size() >= limit)
                    throw ResourceError("lattice exceeded the limit of " + std::to_string(limit) + " elements");
                unions.push_back(std::move(next));
            }
        }
    }
    ArcSetLattice lattice{universe, {}};
    lattice.elements.reserve(unions.size());
    for (const ArcSet& c : unions) lattice.elements.push_back(c.complement());
    return lattice;
}

inline CutLattice build_cut_lattice(const Digraph& d, std::size_t limit = default_lattice_limit) {
    return build_union_lattice(d.arc_count(), enumerate_dicuts(d, limit), limit);
}

inline CycleLattice build_cycle_lattice(const Digraph& d, std::size_t limit = default_lattice_limit) {
    return build_union_lattice(d.arc_count(), enumerate_directed_cycles(d, limit), limit);
}

}  // namespace nlflow
