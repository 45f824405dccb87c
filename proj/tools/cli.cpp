#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlflow/nlflow.hpp"

namespace nlflow::cli {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_mismatch = 2;

class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error("usage", what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error("io", what) {}
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

std::vector<std::size_t> parse_index_list(const std::string& list, const char* what) {
    std::vector<std::size_t> out;
    if (list.empty()) return out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw UsageError(std::string(what) + ": '" + list + "' is not a comma-separated list of non-negative integers");
        out.push_back(std::stoul(item));
    }
    return out;
}

ArcSet parse_arc_set(const std::string& list, std::size_t universe) {
    ArcSet s(universe);
    for (auto a : parse_index_list(list, "--arcs")) {
        if (a >= universe)
            throw DomainError("arc index " + std::to_string(a) + " outside [0," + std::to_string(universe) + ")");
        s.insert(a);
    }
    return s;
}

std::vector<std::string> to_strings(const RationalVector& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

struct Session {
    std::ostream& out;
    std::ostream& err;
    bool json_output = false;
    bool report = false;
    std::string command;
    std::string input_bytes;

    Digraph load_digraph(const std::string& path) {
        auto bytes = slurp(path);
        input_bytes += bytes;
        return parse_digraph(bytes);
    }

    TUMatrix load_matrix(const std::string& path) {
        auto bytes = slurp(path);
        input_bytes += bytes;
        return parse_matrix(bytes);
    }

    json header() const { return json{{"schema", 1}, {"command", command}}; }

    void emit_polynomial(const IntPolynomial& p) {
        if (json_output) {
            json j = header();
            j["text"] = p.to_string();
            j["coeffs"] = p.to_json()["coeffs"];
            out << j.dump() << '\n';
        } else {
            out << p.to_string() << '\n';
        }
    }

    void emit_count(const mpz_class& count, json extra = json::object()) {
        if (json_output) {
            json j = header();
            j.update(extra);
            j["count"] = count.get_str();
            out << j.dump() << '\n';
        } else {
            out << count.get_str() << '\n';
        }
    }

    void emit_bool(const char* key, bool value, json extra = json::object()) {
        if (json_output) {
            json j = header();
            j[key] = value;
            j.update(extra);
            out << j.dump() << '\n';
        } else {
            out << (value ? "true" : "false") << '\n';
        }
    }
};

int run_verify(Session& s, std::size_t max_n, std::size_t max_m, unsigned max_k, std::uint64_t budget) {
    VerifyOptions opt;
    opt.max_k = max_k;
    opt.budget = budget;
    auto catalog = digraph_catalog(max_n, max_m);
    std::vector<Mismatch> mismatches;
    for (const auto& d : catalog) {
        auto found = verify_digraph(d, opt);
        mismatches.insert(mismatches.end(), found.begin(), found.end());
    }
    if (s.json_output) {
        json j = s.header();
        j["digraphs"] = catalog.size();
        j["max_n"] = max_n;
        j["max_m"] = max_m;
        j["max_k"] = max_k;
        j["mismatches"] = json::array();
        for (const auto& mm : mismatches)
            j["mismatches"].push_back({{"check", mm.check},
                                       {"digraph", to_text(mm.digraph)},
                                       {"k", mm.k},
                                       {"expected", mm.expected},
                                       {"got", mm.got}});
        s.out << j.dump() << '\n';
    } else {
        for (const auto& mm : mismatches) s.out << "mismatch " << mm.describe() << '\n';
        s.out << "verified " << catalog.size() << " digraphs (n<=" << max_n << ", m<=" << max_m
              << ", k<=" << max_k << "): " << mismatches.size() << " mismatches\n";
    }
    return mismatches.empty() ? exit_ok : exit_mismatch;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session s{out, err};
    CLI::App app{"Neumann-Lara flow and coflow polynomials of digraphs"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", s.json_output, "Emit JSON instead of text");
    app.add_flag("--report", s.report, "Write a run report (digest, timing) to stderr");

    std::function<int()> action;
    std::string file, group_spec, arcs_list, sizes_list, matrix_file, contract_list;
    long long k = 0;
    unsigned n = 0;
    std::size_t max_n = 4, max_m = 6;
    unsigned max_k = 4;
    std::uint64_t budget = default_enumeration_budget;
    long long k_from = 2;
    std::size_t witnesses = 1;
    bool rational_fit = false;

    auto* poly = app.add_subcommand("poly", "NL-flow polynomial of a digraph");
    poly->add_option("FILE", file, "Digraph file")->required();
    poly->callback([&] { action = [&] { s.emit_polynomial(nl_flow_polynomial(s.load_digraph(file))); return exit_ok; }; });

    auto* copoly = app.add_subcommand("copoly", "NL-coflow polynomial of a digraph");
    copoly->add_option("FILE", file, "Digraph file")->required();
    copoly->callback([&] { action = [&] { s.emit_polynomial(nl_coflow_polynomial(s.load_digraph(file))); return exit_ok; }; });

    auto* count = app.add_subcommand("count", "Count NL-G-flows by exhaustive enumeration");
    count->add_option("FILE", file, "Digraph file")->required();
    count->add_option("--group", group_spec, "Group, e.g. z4, z2xz2")->required();
    count->add_option("--budget", budget, "Maximum number of assignments");
    count->callback([&] {
        action = [&] {
            auto g = AbelianGroup::parse(group_spec);
            s.emit_count(count_nl_group_flows(s.load_digraph(file), g, budget), {{"group", g.to_string()}});
            return exit_ok;
        };
    });

    auto* count_int = app.add_subcommand("count-int", "Count integer NL-k-flows by exhaustive enumeration");
    count_int->add_option("FILE", file, "Digraph file")->required();
    count_int->add_option("-k", k, "Bound k (entries in {0,+-1,...,+-(k-1)})")->required();
    count_int->add_option("--budget", budget, "Maximum number of assignments");
    count_int->callback([&] {
        action = [&] { s.emit_count(count_nl_integer_kflows(s.load_digraph(file), k, budget), {{"k", k}}); return exit_ok; };
    });

    auto* colorings = app.add_subcommand("colorings", "Count acyclic vertex k-colourings");
    colorings->add_option("FILE", file, "Digraph file")->required();
    colorings->add_option("-k", k, "Number of colours")->required();
    colorings->add_option("--budget", budget, "Maximum number of assignments");
    colorings->callback([&] {
        action = [&] {
            if (k < 0) throw UsageError("-k must be non-negative");
            s.emit_count(count_acyclic_colorings(s.load_digraph(file), static_cast<unsigned>(k), budget), {{"k", k}});
            return exit_ok;
        };
    });

    auto* dicuts = app.add_subcommand("dicuts", "List the directed cuts, one per line");
    dicuts->add_option("FILE", file, "Digraph file")->required();
    dicuts->callback([&] {
        action = [&] {
            auto family = enumerate_dicuts(s.load_digraph(file));
            if (s.json_output) {
                json j = s.header();
                j["dicuts"] = json::array();
                for (const auto& c : family) j["dicuts"].push_back(c.indices());
                s.out << j.dump() << '\n';
            } else {
                for (const auto& c : family) {
                    auto idx = c.indices();
                    for (std::size_t i = 0; i < idx.size(); ++i) s.out << (i ? " " : "") << idx[i];
                    s.out << '\n';
                }
            }
            return exit_ok;
        };
    });

    auto* dijoin = app.add_subcommand("dijoin", "Decide whether an arc set is a dijoin");
    dijoin->add_option("FILE", file, "Digraph file")->required();
    dijoin->add_option("--arcs", arcs_list, "Comma-separated arc indices")->required();
    dijoin->callback([&] {
        action = [&] {
            auto d = s.load_digraph(file);
            s.emit_bool("dijoin", is_dijoin(d, parse_arc_set(arcs_list, d.arc_count())));
            return exit_ok;
        };
    });

    auto* acyclic = app.add_subcommand("complete-acyclic", "Closed-form polynomial of the complete acyclic digraph");
    acyclic->add_option("-n", n, "Number of vertices")->required();
    acyclic->callback([&] { action = [&] { s.emit_polynomial(complete_acyclic_nl_poly(n)); return exit_ok; }; });

    auto* tournament = app.add_subcommand("tournament", "Closed-form polynomial from strong component sizes");
    tournament->add_option("--sizes", sizes_list, "Comma-separated component sizes in condensation order")->required();
    tournament->callback([&] {
        action = [&] {
            std::vector<unsigned> sizes;
            for (auto v : parse_index_list(sizes_list, "--sizes")) sizes.push_back(static_cast<unsigned>(v));
            s.emit_polynomial(complete_digraph_nl_poly(sizes));
            return exit_ok;
        };
    });

    auto* matroid = app.add_subcommand("matroid", "Regular oriented matroids given by TU matrices");
    matroid->require_subcommand(1);

    auto* mcount = matroid->add_subcommand("count", "Count NL-G-flows (--group) or integer NL-k-flows (-k)");
    mcount->add_option("--matrix", matrix_file, "Matrix file")->required();
    auto* mgroup = mcount->add_option("--group", group_spec, "Group, e.g. z4, z2xz2");
    auto* mk = mcount->add_option("-k", k, "Integer bound k");
    mgroup->excludes(mk);
    mcount->add_option("--budget", budget, "Maximum number of assignments");
    mcount->callback([&] {
        action = [&] {
            auto m = s.load_matrix(matrix_file);
            if (!group_spec.empty()) {
                auto g = AbelianGroup::parse(group_spec);
                s.emit_count(count_nl_group_flows_matroid(m, g, budget), {{"group", g.to_string()}});
            } else if (k > 0) {
                s.emit_count(count_nl_integer_kflows_matroid(m, k, budget), {{"k", k}});
            } else {
                throw UsageError("matroid count needs --group SPEC or -k K (K >= 1)");
            }
            return exit_ok;
        };
    });

    auto* mtc = matroid->add_subcommand("tc", "Decide total cyclicity, with a Farkas certificate in JSON mode");
    mtc->add_option("--matrix", matrix_file, "Matrix file")->required();
    mtc->add_option("--contract", contract_list, "Comma-separated columns to contract first");
    mtc->callback([&] {
        action = [&] {
            auto m = s.load_matrix(matrix_file);
            auto outcome = farkas_alternative(contract_matroid(m, parse_arc_set(contract_list, m.cols())));
            if (!outcome.exactly_one() || !outcome.verified())
                throw std::logic_error("Farkas alternative produced an inconsistent certificate pair");
            json extra = json::object();
            if (outcome.positive_flow) extra["positive_flow"] = to_strings(*outcome.positive_flow);
            if (outcome.nonnegative_covector) extra["nonnegative_covector"] = to_strings(*outcome.nonnegative_covector);
            s.emit_bool("totally_cyclic", outcome.positive_flow.has_value(), extra);
            return exit_ok;
        };
    });

    auto* mfit = matroid->add_subcommand("poly-fit", "Interpolate integer NL-k-flow counts with held-out witnesses");
    mfit->add_option("--matrix", matrix_file, "Matrix file")->required();
    mfit->add_option("--k-from", k_from, "Smallest k used (default 2)");
    mfit->add_option("--witnesses", witnesses, "Held-out values of k (default 1)");
    mfit->add_option("--budget", budget, "Maximum number of assignments");
    mfit->add_flag("--rational", rational_fit, "Allow rational coefficients in the interpolant");
    mfit->callback([&] {
        action = [&] {
            auto m = s.load_matrix(matrix_file);
            if (witnesses < 1) throw UsageError("--witnesses must be at least 1");
            auto ks = default_fit_range(m.cols() - matroid_rank(m), witnesses, k_from);
            if (!rational_fit) {
                s.emit_polynomial(fit_integer_flow_polynomial_matroid(m, ks, budget));
            } else {
                auto coeffs = fit_integer_flow_polynomial_matroid_rational(m, ks, budget);
                if (s.json_output) {
                    json j = s.header();
                    j["text"] = render_rational_polynomial(coeffs);
                    j["coeffs"] = json::object();
                    for (std::size_t e = 0; e < coeffs.size(); ++e)
                        if (sgn(coeffs[e]) != 0) j["coeffs"][std::to_string(e)] = coeffs[e].get_str();
                    s.out << j.dump() << '\n';
                } else {
                    s.out << render_rational_polynomial(coeffs) << '\n';
                }
            }
            return exit_ok;
        };
    });

    auto* verify = app.add_subcommand("verify", "Sweep all small digraphs: formulas against brute force");
    verify->add_option("--max-n", max_n, "Largest vertex count (default 4)");
    verify->add_option("--max-m", max_m, "Largest arc count (default 6)");
    verify->add_option("--max-k", max_k, "Largest k (default 4)");
    verify->add_option("--budget", budget, "Maximum number of assignments per count");
    verify->callback([&] { action = [&] { return run_verify(s, max_n, max_m, max_k, budget); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), '\n', ' ');
        err << "error: usage: " << what << '\n';
        return exit_error;
    }

    for (const auto* sub : app.get_subcommands()) {
        s.command = sub->get_name();
        for (const auto* inner : sub->get_subcommands()) s.command += " " + inner->get_name();
    }

    const auto start = std::chrono::steady_clock::now();
    int status = exit_ok;
    try {
        status = action();
    } catch (const Error& e) {
        err << "error: " << e.kind() << ": " << e.what() << '\n';
        status = exit_error;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        status = exit_error;
    }
    if (s.report) {
        const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
        json r{{"schema", 1},
               {"report",
                {{"command", s.command},
                 {"input_digest", s.input_bytes.empty() ? "" : fnv1a_hex(s.input_bytes)},
                 {"elapsed_ms", elapsed.count()},
                 {"exit_status", status}}}};
        err << r.dump() << '\n';
    }
    return status;
}

}  // namespace nlflow::cli
