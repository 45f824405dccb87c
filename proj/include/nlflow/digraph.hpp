#pragma once

// Digraph representation and the structural primitives used throughout:
// weak components and graphic rank, strong components in condensation
// order, total cyclicity, arc contraction/deletion and topological order.
//
// Vertices are dense indices 0..n-1. An arc is identified by its position
// in the arc list, so parallel arcs stay distinct. Loops are allowed.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlflow/arc_set.hpp"
#include "nlflow/error.hpp"

namespace nlflow {

using Vertex = std::size_t;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    bool is_loop() const noexcept { return tail == head; }
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph {
public:
    Digraph() = default;

    explicit Digraph(std::size_t n, std::vector<Arc> arcs = {})
        : n_(n), arcs_(std::move(arcs)) {
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            if (arcs_[i].tail >= n_ || arcs_[i].head >= n_)
                throw DomainError("arc " + std::to_string(i) + " has an endpoint outside [0," +
                                  std::to_string(n_) + ")");
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const Arc& arc(ArcIndex a) const { return arcs_.at(a); }

    ArcSet no_arcs() const { return ArcSet(arcs_.size()); }
    ArcSet all_arcs() const { return ArcSet::full(arcs_.size()); }

    bool has_loop() const {
        return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.is_loop(); });
    }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Vertex partition. Labels are dense, numbered by first occurrence in
/// vertex order.
struct Components {
    std::vector<std::size_t> label;
    std::size_t count = 0;
};

/// Weak components of the spanning subdigraph (V, arcs).
inline Components weak_components(const Digraph& d, const ArcSet& arcs) {
    detail::UnionFind uf(d.vertex_count());
    for (ArcIndex a : arcs.indices()) uf.unite(d.arc(a).tail, d.arc(a).head);
    Components c;
    c.label.assign(d.vertex_count(), 0);
    std::vector<std::size_t> root_label(d.vertex_count(), d.vertex_count());
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        auto r = uf.find(v);
        if (root_label[r] == d.vertex_count()) root_label[r] = c.count++;
        c.label[v] = root_label[r];
    }
    return c;
}

/// Graphic-matroid rank: n minus the number of weak components of (V, arcs).
inline std::size_t rank(const Digraph& d, const ArcSet& arcs) {
    return d.vertex_count() - weak_components(d, arcs).count;
}

/// Strong components listed in a topological order of the condensation:
/// every arc (u,v) satisfies component_of[u] <= component_of[v].
struct Condensation {
    std::vector<std::vector<Vertex>> components;
    std::vector<std::size_t> component_of;

    std::size_t size() const noexcept { return components.size(); }

    std::vector<std::size_t> sizes() const {
        std::vector<std::size_t> s;
        for (const auto& c : components) s.push_back(c.size());
        return s;
    }
};

inline Condensation strongly_connected_components(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::vector<Vertex>> out(n);
    for (const Arc& a : d.arcs()) out[a.tail].push_back(a.head);

    // Iterative Tarjan. Components are emitted in reverse topological order.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> found;
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<std::pair<Vertex, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next < out[v].size()) {
                Vertex w = out[v][next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
            Vertex finished = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
        }
    }

    Condensation c;
    c.components.assign(found.rbegin(), found.rend());
    c.component_of.assign(n, 0);
    for (std::size_t i = 0; i < c.components.size(); ++i)
        for (Vertex v : c.components[i]) c.component_of[v] = i;
    return c;
}

/// Every weak component is strongly connected, i.e. every arc lies inside a
/// strong component. The arcless digraph is totally cyclic.
inline bool is_totally_cyclic(const Digraph& d) {
    auto scc = strongly_connected_components(d);
    return std::all_of(d.arcs().begin(), d.arcs().end(), [&](const Arc& a) {
        return scc.component_of[a.tail] == scc.component_of[a.head];
    });
}

/// D/S: merges vertices along the weak components of (V,S). Arcs outside S
/// survive in their original order; those whose ends merge become loops.
inline Digraph contract(const Digraph& d, const ArcSet& s) {
    auto comps = weak_components(d, s);
    std::vector<Arc> arcs;
    for (ArcIndex a = 0; a < d.arc_count(); ++a) {
        if (s.contains(a)) continue;
        arcs.push_back({comps.label[d.arc(a).tail], comps.label[d.arc(a).head]});
    }
    return Digraph(comps.count, std::move(arcs));
}

/// D - S: removes the arcs of S, keeps every vertex.
inline Digraph delete_arcs(const Digraph& d, const ArcSet& s) {
    std::vector<Arc> arcs;
    for (ArcIndex a = 0; a < d.arc_count(); ++a)
        if (!s.contains(a)) arcs.push_back(d.arc(a));
    return Digraph(d.vertex_count(), std::move(arcs));
}

/// Kahn's algorithm, always taking the smallest available vertex. Empty
/// optional when D has a directed cycle (a loop counts).
inline std::optional<std::vector<Vertex>> topological_order(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> indeg(n, 0);
    std::vector<std::vector<Vertex>> out(n);
    for (const Arc& a : d.arcs()) {
        out[a.tail].push_back(a.head);
        ++indeg[a.head];
    }
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::vector<Vertex> order;
    while (!ready.empty()) {
        auto it = std::min_element(ready.begin(), ready.end());
        Vertex v = *it;
        ready.erase(it);
        order.push_back(v);
        for (Vertex w : out[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    if (order.size() != n) return std::nullopt;
    return order;
}

inline bool is_acyclic(const Digraph& d) { return topological_order(d).has_value(); }

/// n x m matrix; column a has +1 at tail(a), -1 at head(a), zero for a loop.
using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix incidence_matrix(const Digraph& d) {
    IntMatrix m(d.vertex_count(), std::vector<int>(d.arc_count(), 0));
    for (ArcIndex a = 0; a < d.arc_count(); ++a) {
        const Arc& arc = d.arc(a);
        if (arc.is_loop()) continue;
        m[arc.tail][a] = 1;
        m[arc.head][a] = -1;
    }
    return m;
}

}  // namespace nlflow
