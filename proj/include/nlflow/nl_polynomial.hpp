#pragma once

// NL-flow and NL-coflow polynomials by Moebius inversion over the dicut
// and dicycle lattices.
//
//   flow:    sum_{B in cut lattice}   mu(A,B) x^{|B| - rk(B)}
//   coflow:  sum_{B in cycle lattice} mu(A,B) x^{rk(A) - rk(A \ B)}
//
// Evaluating the flow polynomial at k counts NL-G-flows for any abelian
// group of order k. For a loopless digraph with c weak components,
// k^c times the coflow polynomial at k counts acyclic k-colourings.

#include <cstddef>

#include "nlflow/cut_lattice.hpp"
#include "nlflow/digraph.hpp"
#include "nlflow/polynomial.hpp"
#include "nlflow/poset.hpp"

namespace nlflow {

namespace detail {

template <class ExponentFn>
IntPolynomial lattice_sum(const ArcSetLattice& lattice, ExponentFn exponent) {
    auto poset = lattice.poset();
    Mobius<ArcSet> mu(poset);
    auto row = mu.row(0);
    IntPolynomial p;
    for (std::size_t b = 0; b < lattice.size(); ++b) {
        if (row[b] == 0) continue;
        p.add_term(mpz_class(static_cast<long>(row[b])),
                   static_cast<IntPolynomial::Exponent>(exponent(lattice.elements[b])));
    }
    return p;
}

}  // namespace detail

inline IntPolynomial nl_flow_polynomial(const Digraph& d, std::size_t limit = default_lattice_limit) {
    return detail::lattice_sum(build_cut_lattice(d, limit),
                               [&](const ArcSet& b) { return b.size() - rank(d, b); });
}

inline IntPolynomial nl_coflow_polynomial(const Digraph& d, std::size_t limit = default_lattice_limit) {
    const std::size_t full_rank = rank(d, d.all_arcs());
    return detail::lattice_sum(build_cycle_lattice(d, limit), [&](const ArcSet& b) {
        return full_rank - rank(d, b.complement());
    });
}

}  // namespace nlflow
