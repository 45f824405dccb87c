#pragma once

// Closed forms for complete digraphs.
//
// Complete acyclic digraph on n vertices:
//
//   sum_{p=1}^{n} (-1)^{p-1} sum_{(k_1..k_p) |= n} prod_i x^{C(k_i - 1, 2)}
//
// Complete digraph with strong components of sizes k_1..k_d (in condensation
// order): the same sum over compositions (d_1..d_p) of d, with each block
// of consecutive components contributing x^{C(n_j - 1, 2)} where n_j is the
// number of vertices in the block.

#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nlflow/digraph.hpp"
#include "nlflow/error.hpp"
#include "nlflow/polynomial.hpp"

namespace nlflow {

/// Ordered tuple of positive parts with a fixed total.
struct Composition {
    std::vector<unsigned> parts;

    unsigned total() const { return std::accumulate(parts.begin(), parts.end(), 0U); }
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Visits every composition of n into p positive parts in lexicographic order.
template <class Visit>
void for_each_composition(unsigned n, unsigned p, Visit&& visit) {
    if (p < 1 || p > n) throw DomainError("compositions need 1 <= p <= n");
    Composition c;
    c.parts.assign(p, 1);
    std::function<void(unsigned, unsigned)> fill = [&](unsigned index, unsigned remaining) {
        if (index + 1 == p) {
            c.parts[index] = remaining;
            visit(static_cast<const Composition&>(c));
            return;
        }
        // Leave at least one for each later part.
        for (unsigned part = 1; part + (p - index - 1) <= remaining; ++part) {
            c.parts[index] = part;
            fill(index + 1, remaining - part);
        }
    };
    fill(0, n);
}

inline std::vector<Composition> compositions(unsigned n, unsigned p) {
    std::vector<Composition> out;
    for_each_composition(n, p, [&](const Composition& c) { out.push_back(c); });
    return out;
}

namespace detail {

inline unsigned choose2(unsigned m) { return m < 2 ? 0 : m * (m - 1) / 2; }

inline unsigned block_exponent(unsigned vertices) { return vertices == 0 ? 0 : choose2(vertices - 1); }

}  // namespace detail

inline IntPolynomial complete_digraph_nl_poly(const std::vector<unsigned>& sizes) {
    if (sizes.empty()) throw DomainError("need at least one strong component");
    for (unsigned s : sizes)
        if (s == 0) throw DomainError("component sizes must be positive");
    const auto d = static_cast<unsigned>(sizes.size());
    IntPolynomial result;
    for (unsigned p = 1; p <= d; ++p) {
        const mpz_class sign = (p % 2 == 1) ? 1 : -1;
        for_each_composition(d, p, [&](const Composition& c) {
            unsigned exponent = 0;
            std::size_t next = 0;  // first component of the current block
            for (unsigned block : c.parts) {
                unsigned vertices = 0;
                for (unsigned s = 0; s < block; ++s) vertices += sizes[next + s];
                next += block;
                exponent += detail::block_exponent(vertices);
            }
            result.add_term(sign, exponent);
        });
    }
    return result;
}

inline IntPolynomial complete_acyclic_nl_poly(unsigned n) {
    if (n < 1) throw DomainError("complete acyclic digraph needs n >= 1");
    return complete_digraph_nl_poly(std::vector<unsigned>(n, 1));
}

/// Constant term for the complete acyclic digraph: 1, 0, -1 as n mod 3 is 1, 2, 0.
inline int constant_term(unsigned n) {
    if (n < 1) throw DomainError("constant_term needs n >= 1");
    switch (n % 3) {
        case 0: return -1;
        case 1: return 1;
        default: return 0;
    }
}

/// Coefficient of x for the complete acyclic digraph, n >= 4.
inline long long linear_term(unsigned n) {
    if (n < 4) throw DomainError("linear_term needs n >= 4");
    const auto nn = static_cast<long long>(n);
    switch (n % 3) {
        case 0: return nn / 3;
        case 1: return -2 * (nn - 1) / 3;
        default: return (nn - 2) / 3;
    }
}

/// The two highest-degree terms (exponent, coefficient), n >= 4.
inline std::vector<std::pair<unsigned, long long>> leading_terms(unsigned n) {
    if (n < 4) throw DomainError("leading_terms needs n >= 4");
    return {{detail::choose2(n - 1), 1}, {detail::choose2(n - 2), -2}};
}

// Builders for explicit complete digraphs.

/// Arcs i -> j for i < j, listed lexicographically.
inline Digraph complete_acyclic_digraph(unsigned n) {
    std::vector<Arc> arcs;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) arcs.push_back({i, j});
    return Digraph(n, std::move(arcs));
}

enum class StrongTemplate {
    rotational,        // i beats i+1..i+(k-1)/2 mod k; odd k only
    hamiltonian_cycle  // 0->1->...->k-1->0, remaining pairs i->j for i<j; k >= 3
};

/// Strong tournament on k vertices (k = 1 or k >= 3). Arcs are listed
/// by (min endpoint, max endpoint).
inline std::vector<Arc> strong_tournament_arcs(unsigned k, StrongTemplate shape) {
    if (k == 2) throw DomainError("no strong tournament on 2 vertices");
    std::vector<Arc> arcs;
    if (k <= 1) return arcs;
    if (shape == StrongTemplate::rotational && k % 2 == 0)
        throw DomainError("rotational tournaments need an odd number of vertices");
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = i + 1; j < k; ++j) {
            bool forward;
            if (shape == StrongTemplate::rotational) {
                forward = (j - i) <= (k - 1) / 2;
            } else {
                forward = !(i == 0 && j == k - 1);
            }
            arcs.push_back(forward ? Arc{i, j} : Arc{j, i});
        }
    return arcs;
}

/// Default witness: rotational for odd sizes, Hamiltonian-cycle template for even.
inline std::vector<Arc> strong_tournament_arcs(unsigned k) {
    return strong_tournament_arcs(k, k % 2 == 1 ? StrongTemplate::rotational : StrongTemplate::hamiltonian_cycle);
}

/// Tournament whose strong components have the given sizes in condensation
/// order: all arcs between components point from earlier to later.
inline Digraph tournament_with_condensation(const std::vector<unsigned>& sizes,
                                            const std::function<std::vector<Arc>(unsigned)>& component =
                                                [](unsigned k) { return strong_tournament_arcs(k); }) {
    std::vector<Vertex> offset;
    Vertex n = 0;
    for (unsigned s : sizes) {
        offset.push_back(n);
        n += s;
    }
    std::vector<Arc> arcs;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        for (const Arc& a : component(sizes[c])) arcs.push_back({a.tail + offset[c], a.head + offset[c]});
        for (std::size_t later = c + 1; later < sizes.size(); ++later)
            for (Vertex u = 0; u < sizes[c]; ++u)
                for (Vertex v = 0; v < sizes[later]; ++v) arcs.push_back({offset[c] + u, offset[later] + v});
    }
    return Digraph(n, std::move(arcs));
}

}  // namespace nlflow
