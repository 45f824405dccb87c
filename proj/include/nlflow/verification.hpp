#pragma once

// Formula-versus-oracle sweep shared by the `verify` command and the
// acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nlflow/abelian_group.hpp"
#include "nlflow/digraph.hpp"
#include "nlflow/digraph_io.hpp"
#include "nlflow/nl_polynomial.hpp"
#include "nlflow/oracles.hpp"

namespace nlflow {

struct Mismatch {
    std::string check;
    Digraph digraph;
    unsigned k = 0;
    std::string expected;
    std::string got;

    std::string describe() const {
        std::string arcs;
        for (const Arc& a : digraph.arcs())
            arcs += (arcs.empty() ? "" : ",") + std::to_string(a.tail) + ">" + std::to_string(a.head);
        return check + ": n=" + std::to_string(digraph.vertex_count()) + " arcs=[" + arcs +
               "] k=" + std::to_string(k) + " expected=" + expected + " got=" + got;
    }
};

struct VerifyOptions {
    unsigned max_k = 4;
    std::uint64_t budget = default_enumeration_budget;
    bool flows = true;
    bool colorings = true;
    bool equivalence = true;
};

inline mpz_class power(unsigned base, std::size_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// Checks, for k = 1..max_k: the flow polynomial against NL-G-flow counts
/// for every group of order k; k^c times the coflow polynomial against
/// acyclic colourings (loopless only); and existence agreement across
/// Z_k, all groups of order k and integer k-flows.
inline std::vector<Mismatch> verify_digraph(const Digraph& d, const VerifyOptions& opt = {}) {
    std::vector<Mismatch> found;
    const auto phi = opt.flows || opt.equivalence ? nl_flow_polynomial(d) : IntPolynomial{};
    const bool colourable = opt.colorings && !d.has_loop();
    const auto psi = colourable ? nl_coflow_polynomial(d) : IntPolynomial{};
    const auto components = weak_components(d, d.all_arcs()).count;

    for (unsigned k = 1; k <= opt.max_k; ++k) {
        const mpz_class phi_k = phi.evaluate(k);
        if (opt.flows) {
            for (const auto& g : groups_of_order(k)) {
                auto counted = count_nl_group_flows(d, g, opt.budget);
                if (counted != phi_k)
                    found.push_back({"flow-polynomial/" + g.to_string(), d, k, phi_k.get_str(), counted.get_str()});
            }
        }
        if (colourable) {
            const mpz_class expected = power(k, components) * psi.evaluate(k);
            auto counted = count_acyclic_colorings(d, k, opt.budget);
            if (counted != expected)
                found.push_back({"coloring-identity", d, k, expected.get_str(), counted.get_str()});
        }
        if (opt.equivalence) {
            auto report = equivalence_report(d, k, opt.budget);
            if (!report.consistent() || report.cyclic_group != (phi_k > 0)) {
                std::string got = std::string("zk=") + (report.cyclic_group ? "1" : "0") +
                                  " int=" + (report.integer ? "1" : "0");
                for (const auto& [name, exists] : report.groups) got += " " + name + "=" + (exists ? "1" : "0");
                found.push_back({"equivalence", d, k, phi_k > 0 ? "all-exist" : "none-exist", got});
            }
        }
    }
    return found;
}

}  // namespace nlflow
