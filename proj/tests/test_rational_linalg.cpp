#include <gtest/gtest.h>

#include <random>

#include "nlflow/rational_linalg.hpp"

using namespace nlflow;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % 5) - 2;
    return m;
}

}  // namespace

TEST(Rref, Example) {
    auto m = RationalMatrix::from_rows(std::vector<std::vector<int>>{{2, 4, 2}, {1, 2, 3}, {3, 6, 5}}, 3);
    auto e = rref(m);
    EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(e.reduced.row(0), (RationalVector{1, 2, 0}));
    EXPECT_EQ(e.reduced.row(1), (RationalVector{0, 0, 1}));
    EXPECT_EQ(rank(m), 2u);
}

TEST(Kernel, RankNullityAndOrthogonality) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        auto m = random_matrix(rng, r, c);
        auto ker = kernel_basis(m);
        EXPECT_EQ(ker.size() + rank(m), c);
        for (const auto& v : ker)
            for (const auto& x : m.multiply(v)) EXPECT_EQ(sgn(x), 0);
        auto comp = orthogonal_complement(ker, c);
        EXPECT_EQ(comp.size(), rank(m));
        for (const auto& a : comp)
            for (const auto& b : ker) EXPECT_EQ(sgn(dot(a, b)), 0);
        EXPECT_EQ(span_basis(ker, c).size(), ker.size());
    }
}

TEST(NonnegativeSolution, FeasibleAndInfeasible) {
    // x + y = 1, x - y = 0
    auto a = RationalMatrix::from_rows(std::vector<std::vector<int>>{{1, 1}, {1, -1}}, 2);
    auto x = find_nonnegative_solution(a, {1, 0});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (RationalVector{mpq_class(1, 2), mpq_class(1, 2)}));
    // x + y = -1 has no nonnegative solution
    auto b = RationalMatrix::from_rows(std::vector<std::vector<int>>{{1, 1}}, 2);
    EXPECT_FALSE(find_nonnegative_solution(b, {-1}));
}

TEST(NonnegativeSolution, CertificatesSatisfyTheSystem) {
    std::mt19937 rng(8);
    int feasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
        auto a = random_matrix(rng, r, c);
        RationalVector b(r);
        for (auto& v : b) v = static_cast<long>(rng() % 5) - 2;
        auto x = find_nonnegative_solution(a, b);
        if (!x) continue;
        ++feasible;
        for (const auto& v : *x) EXPECT_GE(sgn(v), 0);
        EXPECT_EQ(a.multiply(*x), b);
    }
    EXPECT_GT(feasible, 20);
}
