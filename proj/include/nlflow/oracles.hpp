#pragma once

// Exhaustive ground-truth counters. Nothing here consults a lattice or a
// Moebius function: every count is obtained by enumerating assignments and
// testing the defining property directly.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nlflow/abelian_group.hpp"
#include "nlflow/cut_lattice.hpp"
#include "nlflow/digraph.hpp"
#include "nlflow/error.hpp"
#include "nlflow/polynomial.hpp"

namespace nlflow {

inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

using GroupFlow = std::vector<GroupElement>;

namespace detail {

/// base^exp, or nothing if it exceeds budget.
inline bool within_budget(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && total > budget / base) return false;
        total *= base;
    }
    return total <= budget;
}

inline void require_budget(std::uint64_t base, std::size_t exp, std::uint64_t budget, const char* what) {
    if (!within_budget(base, exp, budget))
        throw ResourceError(std::string(what) + ": " + std::to_string(base) + "^" + std::to_string(exp) +
                            " assignments exceed the budget of " + std::to_string(budget));
}

/// Memoized "D/S is totally cyclic" keyed by support.
class DijoinCache {
public:
    explicit DijoinCache(const Digraph& d) : d_(d) {}

    bool operator()(const ArcSet& support) {
        auto [it, inserted] = cache_.try_emplace(support, false);
        if (inserted) it->second = is_dijoin(d_, support);
        return it->second;
    }

private:
    const Digraph& d_;
    std::unordered_map<ArcSet, bool> cache_;
};

}  // namespace detail

/// Conservation at every vertex, in G. Loops add to both sides.
inline bool is_group_flow(const Digraph& d, const AbelianGroup& g, const GroupFlow& f) {
    if (f.size() != d.arc_count()) throw PreconditionError("flow must assign every arc");
    std::vector<GroupElement> excess(d.vertex_count(), g.zero());
    for (ArcIndex a = 0; a < d.arc_count(); ++a) {
        excess[d.arc(a).tail] = g.add(excess[d.arc(a).tail], f[a]);
        excess[d.arc(a).head] = g.sub(excess[d.arc(a).head], f[a]);
    }
    for (auto e : excess)
        if (e != g.zero()) return false;
    return true;
}

inline ArcSet support(const GroupFlow& f) {
    ArcSet s(f.size());
    for (ArcIndex a = 0; a < f.size(); ++a)
        if (f[a] != 0) s.insert(a);
    return s;
}

/// Calls visit(f) for every G-flow of D, enumerating all |G|^m assignments
/// lexicographically (arc 0 most significant).
template <class Visit>
void for_each_group_flow(const Digraph& d, const AbelianGroup& g, Visit&& visit,
                         std::uint64_t budget = default_enumeration_budget) {
    const std::size_t m = d.arc_count();
    detail::require_budget(g.order(), m, budget, "group flow enumeration");
    GroupFlow f(m, g.zero());
    while (true) {
        if (is_group_flow(d, g, f)) visit(f);
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (++f[i] < g.order()) break;
            f[i] = 0;
            if (i == 0) return;
        }
        if (m == 0) return;
    }
}

/// Number of G-flows whose support contraction is totally cyclic.
inline mpz_class count_nl_group_flows(const Digraph& d, const AbelianGroup& g,
                                      std::uint64_t budget = default_enumeration_budget) {
    detail::DijoinCache dijoin(d);
    mpz_class count = 0;
    for_each_group_flow(d, g, [&](const GroupFlow& f) {
        if (dijoin(support(f))) ++count;
    }, budget);
    return count;
}

/// Same count, but the support test is "meets every dicut" instead of
/// contraction.
inline mpz_class count_group_flows_with_dicut_meeting_support(const Digraph& d, const AbelianGroup& g,
                                                              std::uint64_t budget = default_enumeration_budget) {
    auto dicuts = enumerate_dicuts(d);
    mpz_class count = 0;
    for_each_group_flow(d, g, [&](const GroupFlow& f) {
        if (intersects_every_dicut(dicuts, support(f))) ++count;
    }, budget);
    return count;
}

/// Calls visit(f) for every integer flow with |f(a)| <= k-1 on all arcs
/// (exact conservation in Z). Values on the arcs outside a spanning forest
/// are enumerated; forest arcs are then forced by conservation, peeling
/// leaves towards each root.
template <class Visit>
void for_each_integer_flow(const Digraph& d, long long k, Visit&& visit,
                           std::uint64_t budget = default_enumeration_budget) {
    if (k < 1) throw DomainError("k must be at least 1");
    const std::size_t n = d.vertex_count();
    const std::size_t m = d.arc_count();
    const long long bound = k - 1;

    detail::UnionFind uf(n);
    std::vector<bool> in_forest(m, false);
    std::vector<std::vector<std::pair<Vertex, ArcIndex>>> adj(n);
    std::vector<ArcIndex> free_arcs;
    for (ArcIndex a = 0; a < m; ++a) {
        const Arc& arc = d.arc(a);
        if (!arc.is_loop() && uf.unite(arc.tail, arc.head)) {
            in_forest[a] = true;
            adj[arc.tail].emplace_back(arc.head, a);
            adj[arc.head].emplace_back(arc.tail, a);
        } else {
            free_arcs.push_back(a);
        }
    }
    detail::require_budget(static_cast<std::uint64_t>(2 * k - 1), free_arcs.size(), budget,
                           "integer flow enumeration");

    // BFS order per tree; parent arc of each non-root vertex.
    constexpr auto none = static_cast<ArcIndex>(-1);
    std::vector<ArcIndex> parent_arc(n, none);
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    for (Vertex r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = true;
        std::size_t head = order.size();
        order.push_back(r);
        while (head < order.size()) {
            Vertex v = order[head++];
            for (auto [w, a] : adj[v]) {
                if (seen[w]) continue;
                seen[w] = true;
                parent_arc[w] = a;
                order.push_back(w);
            }
        }
    }

    std::vector<long long> f(m, 0);
    for (auto a : free_arcs) f[a] = -bound;
    std::vector<long long> excess(n);
    while (true) {
        std::fill(excess.begin(), excess.end(), 0);
        for (auto a : free_arcs) {
            excess[d.arc(a).tail] += f[a];
            excess[d.arc(a).head] -= f[a];
        }
        bool ok = true;
        for (std::size_t i = order.size(); i-- > 0 && ok;) {
            Vertex v = order[i];
            ArcIndex a = parent_arc[v];
            if (a == none) continue;
            // Choose f(a) so the net outflow at v vanishes.
            long long value = d.arc(a).tail == v ? -excess[v] : excess[v];
            if (value > bound || value < -bound) {
                ok = false;
                break;
            }
            f[a] = value;
            excess[d.arc(a).tail] += value;
            excess[d.arc(a).head] -= value;
        }
        if (ok) visit(static_cast<const std::vector<long long>&>(f));

        std::size_t i = free_arcs.size();
        while (true) {
            if (i == 0) return;
            --i;
            if (++f[free_arcs[i]] <= bound) break;
            f[free_arcs[i]] = -bound;
        }
    }
}

inline ArcSet support(const std::vector<long long>& f) {
    ArcSet s(f.size());
    for (ArcIndex a = 0; a < f.size(); ++a)
        if (f[a] != 0) s.insert(a);
    return s;
}

/// Integer flows with entries in {0, +-1, ..., +-(k-1)} whose support
/// contraction is totally cyclic.
inline mpz_class count_nl_integer_kflows(const Digraph& d, long long k,
                                         std::uint64_t budget = default_enumeration_budget) {
    detail::DijoinCache dijoin(d);
    mpz_class count = 0;
    for_each_integer_flow(d, k, [&](const std::vector<long long>& f) {
        if (dijoin(support(f))) ++count;
    }, budget);
    return count;
}

/// Maps V -> {0..k-1} whose colour classes all induce acyclic subdigraphs.
inline mpz_class count_acyclic_colorings(const Digraph& d, unsigned k,
                                         std::uint64_t budget = default_enumeration_budget) {
    if (d.has_loop()) throw DomainError("acyclic colourings are defined for loopless digraphs only");
    const std::size_t n = d.vertex_count();
    if (k == 0) return n == 0 ? 1 : 0;
    detail::require_budget(k, n, budget, "colouring enumeration");

    std::vector<unsigned> colour(n, 0);
    std::vector<std::size_t> indeg(n);
    std::vector<std::vector<Vertex>> out(n);
    std::vector<Vertex> ready;
    mpz_class count = 0;
    while (true) {
        // Kahn on the monochromatic arcs.
        for (auto& o : out) o.clear();
        std::fill(indeg.begin(), indeg.end(), 0);
        for (const Arc& a : d.arcs()) {
            if (colour[a.tail] != colour[a.head]) continue;
            out[a.tail].push_back(a.head);
            ++indeg[a.head];
        }
        ready.clear();
        for (Vertex v = 0; v < n; ++v)
            if (indeg[v] == 0) ready.push_back(v);
        std::size_t removed = 0;
        while (!ready.empty()) {
            Vertex v = ready.back();
            ready.pop_back();
            ++removed;
            for (Vertex w : out[v])
                if (--indeg[w] == 0) ready.push_back(w);
        }
        if (removed == n) ++count;

        std::size_t i = n;
        while (true) {
            if (i == 0) return count;
            --i;
            if (++colour[i] < k) break;
            colour[i] = 0;
        }
    }
}

/// Existence of NL-flows across Z_k, every abelian group of order k, and
/// bounded integer flows.
struct EquivalenceReport {
    unsigned k = 0;
    bool cyclic_group = false;
    std::vector<std::pair<std::string, bool>> groups;
    bool integer = false;

    bool consistent() const {
        if (integer != cyclic_group) return false;
        for (const auto& [name, exists] : groups)
            if (exists != cyclic_group) return false;
        return true;
    }
};

inline EquivalenceReport equivalence_report(const Digraph& d, unsigned k,
                                            std::uint64_t budget = default_enumeration_budget) {
    EquivalenceReport r;
    r.k = k;
    r.cyclic_group = count_nl_group_flows(d, AbelianGroup::cyclic(k), budget) > 0;
    for (const auto& g : groups_of_order(k))
        r.groups.emplace_back(g.to_string(), count_nl_group_flows(d, g, budget) > 0);
    r.integer = count_nl_integer_kflows(d, k, budget) > 0;
    return r;
}

inline bool check_equivalence_theorem(const Digraph& d, unsigned k,
                                      std::uint64_t budget = default_enumeration_budget) {
    return equivalence_report(d, k, budget).consistent();
}

inline std::vector<InterpolationPoint> integer_flow_counts(const Digraph& d, const std::vector<long long>& ks,
                                                           std::uint64_t budget = default_enumeration_budget) {
    std::vector<InterpolationPoint> points;
    for (long long k : ks) points.push_back({mpz_class(static_cast<long>(k)), count_nl_integer_kflows(d, k, budget)});
    return points;
}

inline std::size_t integer_flow_degree_bound(const Digraph& d) { return d.arc_count() - rank(d, d.all_arcs()); }

namespace detail {

inline void require_fit_points(std::size_t have, std::size_t bound) {
    if (have < bound + 2)
        throw PreconditionError("need at least " + std::to_string(bound + 2) + " values of k (degree bound " +
                                std::to_string(bound) + " plus a witness)");
}

}  // namespace detail

/// Interpolates integer NL-k-flow counts over `ks`. The degree bound is the
/// cycle-space dimension m - rk(A); every value of `ks` beyond the first
/// bound + 1 is a held-out witness, and there must be at least one.
inline IntPolynomial fit_integer_flow_polynomial(const Digraph& d, const std::vector<long long>& ks,
                                                 std::uint64_t budget = default_enumeration_budget) {
    const auto bound = integer_flow_degree_bound(d);
    detail::require_fit_points(ks.size(), bound);
    return interpolate_exact(integer_flow_counts(d, ks, budget), bound);
}

/// As fit_integer_flow_polynomial, without requiring integer coefficients.
inline std::vector<mpq_class> fit_integer_flow_polynomial_rational(const Digraph& d, const std::vector<long long>& ks,
                                                                   std::uint64_t budget = default_enumeration_budget) {
    const auto bound = integer_flow_degree_bound(d);
    detail::require_fit_points(ks.size(), bound);
    return interpolate_rational(integer_flow_counts(d, ks, budget), bound);
}

/// k = first, first+1, ..., enough for the fit plus `witnesses` held-out values.
inline std::vector<long long> default_fit_range(std::size_t degree_bound, std::size_t witnesses = 1,
                                                long long first = 2) {
    std::vector<long long> ks;
    for (std::size_t i = 0; i < degree_bound + 1 + witnesses; ++i) ks.push_back(first + static_cast<long long>(i));
    return ks;
}

}  // namespace nlflow
