// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "nlflow/nlflow.hpp"

using namespace nlflow;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string data_path(const std::string& name) { return std::string(NLFLOW_DATA_DIR) + "/" + name; }

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s) [%.2fs] %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
}

Outcome sweep(const std::vector<Digraph>& catalog, VerifyOptions opt) {
    std::size_t bad = 0;
    std::string first;
    for (const auto& d : catalog) {
        auto mm = verify_digraph(d, opt);
        if (!mm.empty() && first.empty()) first = "; first: " + mm.front().describe();
        bad += mm.size();
    }
    return {bad == 0, std::to_string(catalog.size()) + " digraphs, " + std::to_string(bad) + " mismatches" + first};
}

}  // namespace

int main() {
    const auto catalog = digraph_catalog(4, 6);

    criterion(1, "complete acyclic table via CLI", [] {
        std::size_t bad = 0;
        for (int n = 1; n <= 8; ++n) {
            std::ostringstream out, err;
            int status = cli::dispatch({"complete-acyclic", "-n", std::to_string(n)}, out, err);
            auto golden = read_file(data_path("golden/complete_acyclic_n" + std::to_string(n) + ".txt"));
            if (status != 0 || golden.empty() || out.str() != golden) ++bad;
        }
        return Outcome{bad == 0, "n=1..8, " + std::to_string(bad) + " byte mismatches"};
    });

    criterion(2, "closed form equals lattice sum", [] {
        std::size_t bad = 0;
        for (unsigned n = 1; n <= 7; ++n)
            if (complete_acyclic_nl_poly(n) != nl_flow_polynomial(complete_acyclic_digraph(n))) ++bad;
        return Outcome{bad == 0, "n=1..7, " + std::to_string(bad) + " mismatches"};
    });

    criterion(3, "NL-G-flow counts vs polynomial, all groups k<=4", [&] {
        VerifyOptions opt;
        opt.colorings = false;
        opt.equivalence = false;
        auto o = sweep(catalog, opt);
        std::size_t differ = 0;
        for (const auto& d : catalog)
            if (count_nl_group_flows(d, AbelianGroup::parse("z4")) !=
                count_nl_group_flows(d, AbelianGroup::parse("z2xz2")))
                ++differ;
        o.pass = o.pass && differ == 0;
        o.detail += "; Z4 vs Z2xZ2 differ on " + std::to_string(differ);
        return o;
    });

    criterion(4, "acyclic colourings = k^c psi(k)", [&] {
        VerifyOptions opt;
        opt.flows = false;
        opt.equivalence = false;
        return sweep(catalog, opt);
    });

    criterion(5, "flow existence equivalence", [&] {
        VerifyOptions opt;
        opt.flows = false;
        opt.colorings = false;
        return sweep(catalog, opt);
    });

    std::size_t rational_only = 0;
    criterion(6, "integer NL-k-flow counts fit an integer polynomial", [&] {
        std::size_t non_integer = 0, witness = 0;
        std::string first;
        for (const auto& d : catalog) {
            const auto ks = default_fit_range(integer_flow_degree_bound(d));
            try {
                fit_integer_flow_polynomial(d, ks);
            } catch (const NotIntegerPolynomialError& e) {
                ++non_integer;
                if (first.empty()) {
                    first = "; first: n=" + std::to_string(d.vertex_count()) + " arcs=[";
                    for (const Arc& a : d.arcs()) first += std::to_string(a.tail) + ">" + std::to_string(a.head) + " ";
                    first += "] " + std::string(e.what());
                }
                try {
                    fit_integer_flow_polynomial_rational(d, ks);
                    ++rational_only;
                } catch (const PolynomialityError&) {
                    ++witness;
                }
            } catch (const PolynomialityError&) {
                ++witness;
            }
        }
        return Outcome{non_integer == 0 && witness == 0,
                       std::to_string(catalog.size()) + " digraphs, " + std::to_string(non_integer) +
                           " non-integer fits, " + std::to_string(witness) + " witness failures" + first};
    });
    std::printf("INFO rational-coefficient polynomial with verified held-out witness: %zu of %zu digraphs\n",
                rational_only, catalog.size());

    criterion(7, "term propositions", [] {
        std::size_t bad = 0;
        for (unsigned n = 4; n <= 40; ++n) {
            const int table[3] = {-1, 1, 0};
            if (constant_term(n) != table[n % 3]) ++bad;
            if (constant_term(n) != -(constant_term(n - 1) + constant_term(n - 2))) ++bad;
            const long long nn = n;
            const long long lin = n % 3 == 0 ? nn / 3 : n % 3 == 1 ? -2 * (nn - 1) / 3 : (nn - 2) / 3;
            if (linear_term(n) != lin) ++bad;
        }
        for (unsigned n = 4; n <= 12; ++n) {
            auto p = complete_acyclic_nl_poly(n);
            if (p.coefficient(0) != constant_term(n) || p.coefficient(1) != static_cast<long>(linear_term(n))) ++bad;
            auto lead = leading_terms(n);
            if (lead[0].first != (n - 1) * (n - 2) / 2 || lead[0].second != 1) ++bad;
            if (lead[1].first != (n - 2) * (n - 3) / 2 || lead[1].second != -2) ++bad;
            if (p.degree() != lead[0].first) ++bad;
            for (auto [e, c] : lead)
                if (p.coefficient(e) != static_cast<long>(c)) ++bad;
        }
        return Outcome{bad == 0, std::to_string(bad) + " mismatches"};
    });

    criterion(8, "condensation theorem", [] {
        std::size_t bad = 0, tuples = 0;
        const auto target = complete_digraph_nl_poly({1, 4, 1});
        if (target.to_string() != "x^10-2x^6+x^3") ++bad;
        if (nl_flow_polynomial(parse_digraph(read_file(data_path("tournament_1_4_1.txt")))) != target) ++bad;
        if (nl_flow_polynomial(tournament_with_condensation({1, 4, 1})) != target) ++bad;
        for (unsigned total = 1; total <= 7; ++total)
            for (unsigned parts = 1; parts <= total; ++parts)
                for_each_composition(total, parts, [&](const Composition& c) {
                    for (unsigned s : c.parts)
                        if (s == 2) return;
                    ++tuples;
                    if (nl_flow_polynomial(tournament_with_condensation(c.parts)) != complete_digraph_nl_poly(c.parts))
                        ++bad;
                });
        return Outcome{bad == 0, std::to_string(tuples) + " size tuples, " + std::to_string(bad) + " mismatches"};
    });

    criterion(9, "matroid counts and Farkas alternative", [&] {
        std::size_t bad = 0, instances = 0, both = 0, neither = 0;
        for (const auto& d : catalog) {
            TUMatrix m(d);
            for (unsigned k = 1; k <= 3; ++k) {
                if (count_nl_group_flows_matroid(m, AbelianGroup::cyclic(k)) !=
                    count_nl_group_flows(d, AbelianGroup::cyclic(k)))
                    ++bad;
                if (count_nl_integer_kflows_matroid(m, k) != count_nl_integer_kflows(d, k)) ++bad;
            }
            for (std::uint64_t s = 0; s < (1ULL << d.arc_count()); ++s) {
                auto set = ArcSet::from_mask(d.arc_count(), s);
                auto f = farkas_alternative(contract_matroid(m, set));
                ++instances;
                if (f.both()) ++both;
                if (f.neither()) ++neither;
                if (!f.exactly_one() || !f.verified() || f.positive_flow.has_value() != is_dijoin(d, set)) ++bad;
            }
        }
        return Outcome{bad == 0, std::to_string(catalog.size()) + " digraphs, " + std::to_string(instances) +
                                     " Farkas instances, both=" + std::to_string(both) +
                                     " neither=" + std::to_string(neither) + ", " + std::to_string(bad) +
                                     " mismatches"};
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
    return failures == 0 ? 0 : 1;
}
