#pragma once

// NL-flow theory on regular oriented matroids given by totally unimodular
// matrices. Flows are kernel vectors, coflows are row-space vectors; the
// contraction by S has as flow space the projection of ker(M) onto E \ S.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nlflow/abelian_group.hpp"
#include "nlflow/arc_set.hpp"
#include "nlflow/digraph.hpp"
#include "nlflow/digraph_io.hpp"
#include "nlflow/error.hpp"
#include "nlflow/oracles.hpp"
#include "nlflow/polynomial.hpp"
#include "nlflow/rational_linalg.hpp"

namespace nlflow {

/// p x q matrix with entries in {0, +-1}. Total unimodularity is a separate
/// certificate (is_totally_unimodular), not a construction invariant.
class TUMatrix {
public:
    TUMatrix() = default;

    TUMatrix(std::size_t rows, std::size_t cols, IntMatrix entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_) throw DomainError("matrix has the wrong number of rows");
        for (const auto& r : entries_) {
            if (r.size() != cols_) throw DomainError("matrix row has the wrong number of entries");
            for (int v : r)
                if (v < -1 || v > 1) throw DomainError("matrix entries must be in {-1,0,1}");
        }
    }

    explicit TUMatrix(const Digraph& d)
        : TUMatrix(d.vertex_count(), d.arc_count(), incidence_matrix(d)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i][j]; }
    const IntMatrix& entries() const noexcept { return entries_; }

    RationalMatrix to_rational() const { return RationalMatrix::from_rows(entries_, cols_); }

    friend bool operator==(const TUMatrix&, const TUMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntMatrix entries_;
};

/// Text format: `p q`, then p rows of q entries in {-1,0,1}; `#` comments.
inline TUMatrix read_matrix(std::istream& in) {
    auto lines = detail::tokenize_lines(in);
    if (lines.empty()) throw ParseError("missing header line 'p q'");
    if (lines[0].tokens.size() != 2) throw ParseError("header must be 'p q'");
    auto p = detail::parse_count(lines[0].tokens[0], lines[0].line_no);
    auto q = detail::parse_count(lines[0].tokens[1], lines[0].line_no);
    if (lines.size() - 1 != p)
        throw ParseError("expected " + std::to_string(p) + " matrix rows, found " + std::to_string(lines.size() - 1));
    IntMatrix entries;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].tokens.size() != q)
            throw ParseError("line " + std::to_string(lines[i].line_no) + ": expected " + std::to_string(q) +
                             " entries");
        std::vector<int> row;
        for (const auto& tok : lines[i].tokens) {
            auto v = detail::parse_integer(tok, lines[i].line_no);
            if (v < -1 || v > 1)
                throw ParseError("line " + std::to_string(lines[i].line_no) + ": entry '" + tok +
                                 "' not in {-1,0,1}");
            row.push_back(static_cast<int>(v));
        }
        entries.push_back(std::move(row));
    }
    return TUMatrix(p, q, std::move(entries));
}

inline TUMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const TUMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
}

namespace detail {

/// Bareiss fraction-free elimination; exact for integer input.
inline long long integer_determinant(std::vector<std::vector<long long>> a) {
    const std::size_t n = a.size();
    long long sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

template <class Visit>
bool for_each_subset(std::size_t n, std::size_t r, Visit&& visit) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return false;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

inline constexpr std::size_t default_tu_check_bound = 8;

/// Every square submatrix has determinant in {0, +-1}. Exhaustive, so the
/// smaller dimension must not exceed `bound`.
inline bool is_totally_unimodular(const TUMatrix& m, std::size_t bound = default_tu_check_bound) {
    const std::size_t small = std::min(m.rows(), m.cols());
    if (small > bound)
        throw ResourceError("TU certificate limited to min(p,q) <= " + std::to_string(bound));
    for (std::size_t r = 2; r <= small; ++r) {
        bool ok = detail::for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rs) {
            return detail::for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cs) {
                std::vector<std::vector<long long>> sub(r, std::vector<long long>(r));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) sub[i][j] = m(rs[i], cs[j]);
                auto det = detail::integer_determinant(std::move(sub));
                return det >= -1 && det <= 1;
            });
        });
        if (!ok) return false;
    }
    return true;
}

inline std::size_t matroid_rank(const TUMatrix& m) { return rank(m.to_rational()); }

/// Linear subspace of Q^elements given by a basis; `elements` records the
/// original column index of each coordinate.
struct FlowSpace {
    std::vector<std::size_t> elements;
    std::vector<RationalVector> basis;

    std::size_t ground_size() const noexcept { return elements.size(); }
    std::size_t dimension() const noexcept { return basis.size(); }

    /// Covectors: the orthogonal complement within Q^elements.
    std::vector<RationalVector> covector_basis() const { return orthogonal_complement(basis, ground_size()); }
};

inline FlowSpace flow_space(const TUMatrix& m) {
    FlowSpace fs;
    for (std::size_t j = 0; j < m.cols(); ++j) fs.elements.push_back(j);
    fs.basis = kernel_basis(m.to_rational());
    return fs;
}

/// Flow space of O/S: ker(M) projected onto the columns outside S.
inline FlowSpace contract_matroid(const TUMatrix& m, const ArcSet& s) {
    FlowSpace fs;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!s.contains(j)) fs.elements.push_back(j);
    std::vector<RationalVector> projected;
    for (const auto& v : kernel_basis(m.to_rational())) {
        RationalVector p;
        for (auto j : fs.elements) p.push_back(v[j]);
        projected.push_back(std::move(p));
    }
    fs.basis = span_basis(projected, fs.ground_size());
    return fs;
}

namespace detail {

/// Some x in span(basis) with x_e >= 1 for every coordinate.
inline std::optional<RationalVector> positive_vector_in_span(const std::vector<RationalVector>& basis,
                                                             std::size_t ground) {
    if (ground == 0) return RationalVector{};
    const std::size_t dim = basis.size();
    // Variables t+ (dim), t- (dim), surplus s (ground):  B t+ - B t- - s = 1.
    RationalMatrix a(ground, 2 * dim + ground);
    for (std::size_t e = 0; e < ground; ++e) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(e, j) = basis[j][e];
            a(e, dim + j) = -basis[j][e];
        }
        a(e, 2 * dim + e) = -1;
    }
    auto z = find_nonnegative_solution(a, RationalVector(ground, 1));
    if (!z) return std::nullopt;
    RationalVector x(ground, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        mpq_class t = (*z)[j] - (*z)[dim + j];
        for (std::size_t e = 0; e < ground; ++e) x[e] += t * basis[j][e];
    }
    return x;
}

/// Some y in span(basis), y >= 0, with coordinates summing to 1.
inline std::optional<RationalVector> nonnegative_nonzero_vector_in_span(const std::vector<RationalVector>& basis,
                                                                        std::size_t ground) {
    const std::size_t dim = basis.size();
    if (ground == 0 || dim == 0) return std::nullopt;
    // Variables s+ (dim), s- (dim), w (ground):  C s+ - C s- - w = 0,  1.(C s+ - C s-) = 1.
    RationalMatrix a(ground + 1, 2 * dim + ground);
    RationalVector b(ground + 1, 0);
    for (std::size_t e = 0; e < ground; ++e) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(e, j) = basis[j][e];
            a(e, dim + j) = -basis[j][e];
            a(ground, j) += basis[j][e];
            a(ground, dim + j) -= basis[j][e];
        }
        a(e, 2 * dim + e) = -1;
    }
    b[ground] = 1;
    auto z = find_nonnegative_solution(a, b);
    if (!z) return std::nullopt;
    RationalVector y(ground, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        mpq_class s = (*z)[j] - (*z)[dim + j];
        for (std::size_t e = 0; e < ground; ++e) y[e] += s * basis[j][e];
    }
    return y;
}

}  // namespace detail

/// Some vector of the space is strictly positive on every coordinate.
inline bool is_totally_cyclic(const FlowSpace& fs) {
    return detail::positive_vector_in_span(fs.basis, fs.ground_size()).has_value();
}

inline bool is_totally_cyclic_matroid(const TUMatrix& m) { return is_totally_cyclic(flow_space(m)); }

inline bool is_matroid_dijoin(const TUMatrix& m, const ArcSet& s) { return is_totally_cyclic(contract_matroid(m, s)); }

/// The two sides of the Farkas alternative for total cyclicity of a flow
/// space: a strictly positive flow, or a nonzero nonnegative covector. Both
/// are searched for independently and each found certificate is verified.
struct FarkasOutcome {
    std::optional<RationalVector> positive_flow;
    std::optional<RationalVector> nonnegative_covector;
    bool flow_verified = false;
    bool covector_verified = false;

    bool both() const noexcept { return positive_flow && nonnegative_covector; }
    bool neither() const noexcept { return !positive_flow && !nonnegative_covector; }
    bool exactly_one() const noexcept { return !both() && !neither(); }
    bool verified() const noexcept {
        return (!positive_flow || flow_verified) && (!nonnegative_covector || covector_verified);
    }
};

inline FarkasOutcome farkas_alternative(const FlowSpace& fs) {
    FarkasOutcome out;
    const auto covectors = fs.covector_basis();
    out.positive_flow = detail::positive_vector_in_span(fs.basis, fs.ground_size());
    out.nonnegative_covector = detail::nonnegative_nonzero_vector_in_span(covectors, fs.ground_size());
    if (out.positive_flow) {
        const auto& x = *out.positive_flow;
        bool ok = x.size() == fs.ground_size();
        for (const auto& v : x) ok = ok && sgn(v) > 0;
        for (const auto& c : covectors) ok = ok && sgn(dot(x, c)) == 0;
        out.flow_verified = ok;
    }
    if (out.nonnegative_covector) {
        const auto& y = *out.nonnegative_covector;
        bool ok = y.size() == fs.ground_size();
        bool nonzero = false;
        for (const auto& v : y) {
            ok = ok && sgn(v) >= 0;
            nonzero = nonzero || sgn(v) != 0;
        }
        for (const auto& f : fs.basis) ok = ok && sgn(dot(y, f)) == 0;
        out.covector_verified = ok && nonzero;
    }
    return out;
}

namespace detail {

/// Row reduction that drops dependent rows and checks integrality of the
/// reduced matrix (true for TU input). Pivots solve x_B = -R x_N.
struct IntegerParametrization {
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> free_columns;
    std::vector<std::vector<long long>> coeff;  // coeff[i][f]: pivot i vs free column f
};

inline IntegerParametrization integer_parametrization(const TUMatrix& m) {
    auto e = rref(m.to_rational());
    IntegerParametrization p;
    p.pivots = e.pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) p.free_columns.push_back(c);
    p.coeff.assign(e.pivots.size(), std::vector<long long>(p.free_columns.size()));
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t f = 0; f < p.free_columns.size(); ++f) {
            const mpq_class& v = e.reduced(i, p.free_columns[f]);
            if (v.get_den() != 1) throw DomainError("matrix is not totally unimodular");
            p.coeff[i][f] = v.get_num().get_si();
        }
    return p;
}

class MatroidDijoinCache {
public:
    explicit MatroidDijoinCache(const TUMatrix& m) : m_(m) {}

    bool operator()(const ArcSet& support) {
        auto [it, inserted] = cache_.try_emplace(support, false);
        if (inserted) it->second = is_matroid_dijoin(m_, support);
        return it->second;
    }

private:
    const TUMatrix& m_;
    std::unordered_map<ArcSet, bool> cache_;
};

}  // namespace detail

/// Calls visit(x) for every x in G^q with Mx = 0, enumerating all |G|^q
/// assignments.
template <class Visit>
void for_each_group_kernel_element(const TUMatrix& m, const AbelianGroup& g, Visit&& visit,
                                   std::uint64_t budget = default_enumeration_budget) {
    const std::size_t q = m.cols();
    detail::require_budget(g.order(), q, budget, "group kernel enumeration");
    GroupFlow x(q, g.zero());
    while (true) {
        bool in_kernel = true;
        for (std::size_t i = 0; i < m.rows() && in_kernel; ++i) {
            GroupElement acc = g.zero();
            for (std::size_t j = 0; j < q; ++j) {
                if (m(i, j) == 1) acc = g.add(acc, x[j]);
                else if (m(i, j) == -1) acc = g.sub(acc, x[j]);
            }
            in_kernel = acc == g.zero();
        }
        if (in_kernel) visit(static_cast<const GroupFlow&>(x));
        std::size_t i = q;
        while (true) {
            if (i == 0) return;
            --i;
            if (++x[i] < g.order()) break;
            x[i] = 0;
        }
    }
}

/// |G|^(q-p) for a full-row-rank matrix; confirmed by exhaustive
/// enumeration whenever |G|^q fits in the budget.
inline mpz_class count_group_kernel(const TUMatrix& m, const AbelianGroup& g,
                                    std::uint64_t budget = default_enumeration_budget) {
    if (matroid_rank(m) != m.rows())
        throw DomainError("matrix is not of full row rank; row-reduce it first");
    mpz_class closed;
    mpz_ui_pow_ui(closed.get_mpz_t(), g.order(), m.cols() - m.rows());
    if (detail::within_budget(g.order(), m.cols(), budget)) {
        mpz_class counted = 0;
        for_each_group_kernel_element(m, g, [&](const GroupFlow&) { ++counted; }, budget);
        if (counted != closed)
            throw std::logic_error("kernel count " + counted.get_str() + " disagrees with |G|^(q-p) = " +
                                   closed.get_str());
    }
    return closed;
}

inline mpz_class count_nl_group_flows_matroid(const TUMatrix& m, const AbelianGroup& g,
                                              std::uint64_t budget = default_enumeration_budget) {
    detail::MatroidDijoinCache dijoin(m);
    mpz_class count = 0;
    for_each_group_kernel_element(m, g, [&](const GroupFlow& x) {
        if (dijoin(support(x))) ++count;
    }, budget);
    return count;
}

/// Calls visit(x) for every integer kernel vector with |x_j| <= k-1:
/// free coordinates are enumerated, pivot coordinates solved exactly.
template <class Visit>
void for_each_integer_kernel_vector(const TUMatrix& m, long long k, Visit&& visit,
                                    std::uint64_t budget = default_enumeration_budget) {
    if (k < 1) throw DomainError("k must be at least 1");
    auto p = detail::integer_parametrization(m);
    const long long bound = k - 1;
    detail::require_budget(static_cast<std::uint64_t>(2 * k - 1), p.free_columns.size(), budget,
                           "integer kernel enumeration");
    std::vector<long long> x(m.cols(), 0);
    for (auto c : p.free_columns) x[c] = -bound;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < p.pivots.size() && ok; ++i) {
            long long v = 0;
            for (std::size_t f = 0; f < p.free_columns.size(); ++f) v -= p.coeff[i][f] * x[p.free_columns[f]];
            ok = v >= -bound && v <= bound;
            x[p.pivots[i]] = v;
        }
        if (ok) visit(static_cast<const std::vector<long long>&>(x));
        std::size_t i = p.free_columns.size();
        while (true) {
            if (i == 0) return;
            --i;
            if (++x[p.free_columns[i]] <= bound) break;
            x[p.free_columns[i]] = -bound;
        }
    }
}

inline mpz_class count_nl_integer_kflows_matroid(const TUMatrix& m, long long k,
                                                 std::uint64_t budget = default_enumeration_budget) {
    detail::MatroidDijoinCache dijoin(m);
    mpz_class count = 0;
    for_each_integer_kernel_vector(m, k, [&](const std::vector<long long>& x) {
        if (dijoin(support(x))) ++count;
    }, budget);
    return count;
}

/// Integer kernel vector y with entries in {0, +-1, ..., +-(k-1)} and
/// y = residues (mod k), found by exhaustive search over the box.
inline std::optional<std::vector<long long>> integer_lift(const TUMatrix& m, const std::vector<unsigned>& residues,
                                                          long long k,
                                                          std::uint64_t budget = default_enumeration_budget) {
    if (residues.size() != m.cols()) throw PreconditionError("residue vector has wrong length");
    const std::size_t q = m.cols();
    detail::require_budget(2, q, budget, "lift search");
    // Each coordinate has at most two representatives in (-(k-1), k-1).
    std::vector<std::vector<long long>> choices(q);
    for (std::size_t j = 0; j < q; ++j) {
        long long r = static_cast<long long>(residues[j] % static_cast<unsigned>(k));
        choices[j].push_back(r);
        if (r != 0) choices[j].push_back(r - k);
    }
    std::vector<std::size_t> pick(q, 0);
    std::vector<long long> y(q);
    while (true) {
        for (std::size_t j = 0; j < q; ++j) y[j] = choices[j][pick[j]];
        bool kernel = true;
        for (std::size_t i = 0; i < m.rows() && kernel; ++i) {
            long long acc = 0;
            for (std::size_t j = 0; j < q; ++j) acc += m(i, j) * y[j];
            kernel = acc == 0;
        }
        if (kernel) return y;
        std::size_t j = q;
        while (true) {
            if (j == 0) return std::nullopt;
            --j;
            if (++pick[j] < choices[j].size()) break;
            pick[j] = 0;
        }
    }
}

inline std::vector<InterpolationPoint> integer_flow_counts_matroid(const TUMatrix& m, const std::vector<long long>& ks,
                                                                   std::uint64_t budget = default_enumeration_budget) {
    std::vector<InterpolationPoint> points;
    for (long long k : ks)
        points.push_back({mpz_class(static_cast<long>(k)), count_nl_integer_kflows_matroid(m, k, budget)});
    return points;
}

inline IntPolynomial fit_integer_flow_polynomial_matroid(const TUMatrix& m, const std::vector<long long>& ks,
                                                         std::uint64_t budget = default_enumeration_budget) {
    const std::size_t bound = m.cols() - matroid_rank(m);
    detail::require_fit_points(ks.size(), bound);
    return interpolate_exact(integer_flow_counts_matroid(m, ks, budget), bound);
}

inline std::vector<mpq_class> fit_integer_flow_polynomial_matroid_rational(
    const TUMatrix& m, const std::vector<long long>& ks, std::uint64_t budget = default_enumeration_budget) {
    const std::size_t bound = m.cols() - matroid_rank(m);
    detail::require_fit_points(ks.size(), bound);
    return interpolate_rational(integer_flow_counts_matroid(m, ks, budget), bound);
}

}  // namespace nlflow
