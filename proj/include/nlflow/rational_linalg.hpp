#pragma once

// Exact rational linear algebra over mpq_class: reduced row echelon form,
// kernel bases, orthogonal complements, and an exact phase-I simplex for
// { z >= 0 : A z = b }.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nlflow/error.hpp"

namespace nlflow {

using RationalVector = std::vector<mpq_class>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    template <class Int>
    static RationalMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
        RationalMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = mpq_class(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const {
        return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    RationalVector multiply(const RationalVector& x) const {
        if (x.size() != cols_) throw DomainError("dimension mismatch in matrix-vector product");
        RationalVector y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

struct EchelonForm {
    RationalMatrix reduced;           // zero rows removed
    std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

inline EchelonForm rref(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const mpq_class inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const mpq_class factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RationalMatrix reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

inline std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

/// One basis vector per non-pivot column: free coordinate 1, pivots solved.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline RationalMatrix matrix_from_row_vectors(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

/// Basis of span(vectors), in reduced echelon form.
inline std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors, std::size_t dim) {
    auto e = rref(matrix_from_row_vectors(vectors, dim));
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row(i));
    return out;
}

/// Basis of { y in Q^dim : y . v = 0 for every v }.
inline std::vector<RationalVector> orthogonal_complement(const std::vector<RationalVector>& vectors,
                                                         std::size_t dim) {
    return kernel_basis(matrix_from_row_vectors(vectors, dim));
}

inline mpq_class dot(const RationalVector& a, const RationalVector& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Some z >= 0 with A z = b, or nothing if infeasible. Phase I of the
/// simplex method with artificial variables and Bland's rule, in exact
/// arithmetic, so termination and the verdict are both exact.
inline std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    if (b.size() != rows) throw DomainError("right-hand side has wrong length");
    const std::size_t width = cols + rows + 1;  // originals | artificials | rhs
    const std::size_t rhs = width - 1;

    std::vector<RationalVector> t(rows, RationalVector(width, 0));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool flip = sgn(b[i]) < 0;
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? mpq_class(-a(i, j)) : a(i, j);
        t[i][cols + i] = 1;
        t[i][rhs] = flip ? mpq_class(-b[i]) : b[i];
        basis[i] = cols + i;
    }
    // Reduced costs of "minimise the sum of artificials".
    RationalVector cost(width, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < rows; ++i) cost[rhs] -= t[i][rhs];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < rhs; ++j)
            if (sgn(cost[j]) < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = rows;
        mpq_class best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            mpq_class ratio = t[i][rhs] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase I

        const mpq_class inv = 1 / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            const mpq_class f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        const mpq_class f = cost[enter];
        for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    if (sgn(cost[rhs]) != 0) return std::nullopt;
    RationalVector z(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < cols) z[basis[i]] = t[i][rhs];
    return z;
}

}  // namespace nlflow
