#include <gtest/gtest.h>

#include <set>

#include "nlflow/catalog.hpp"
#include "nlflow/oracles.hpp"
#include "nlflow/regular_matroid.hpp"
#include "test_support.hpp"

using namespace nlflow;
using namespace nlflow::test;

namespace {

TUMatrix load(const std::string& name) {
    std::ifstream in(data_path(name));
    return read_matrix(in);
}

}  // namespace

TEST(TUMatrix, ParseAndValidate) {
    auto m = load("cycle3_reduced.mat");
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(0, 2), -1);
    EXPECT_EQ(load("k3_acyclic_incidence.mat"), TUMatrix(k3_acyclic()));
    EXPECT_THROW(parse_matrix("1 2\n1 2\n"), ParseError);
    EXPECT_THROW(TUMatrix(1, 1, IntMatrix{{2}}), DomainError);
    EXPECT_THROW(parse_matrix("1 2\n1\n"), ParseError);
    std::ostringstream out;
    write_matrix(out, m);
    EXPECT_EQ(parse_matrix(out.str()), m);
}

TEST(TotalUnimodularity, Examples) {
    EXPECT_TRUE(is_totally_unimodular(load("cycle3_reduced.mat")));
    EXPECT_FALSE(is_totally_unimodular(load("not_tu.mat")));
    for (const auto& d : digraph_catalog(4, 5)) EXPECT_TRUE(is_totally_unimodular(TUMatrix(d)));
}

TEST(FlowSpace, DimensionIsCycleRank) {
    for (const auto& d : digraph_catalog(4, 6, true)) {
        TUMatrix m(d);
        EXPECT_EQ(matroid_rank(m), rank(d, d.all_arcs()));
        EXPECT_EQ(flow_space(m).dimension(), d.arc_count() - rank(d, d.all_arcs()));
    }
}

TEST(TotalCyclicity, MatchesGraphOnEveryContraction) {
    for (const auto& d : digraph_catalog(4, 5)) {
        TUMatrix m(d);
        EXPECT_EQ(is_totally_cyclic_matroid(m), is_totally_cyclic(d));
        for (std::uint64_t s = 0; s < (1ULL << d.arc_count()); ++s) {
            auto set = ArcSet::from_mask(d.arc_count(), s);
            ASSERT_EQ(is_matroid_dijoin(m, set), is_dijoin(d, set));
        }
    }
}

TEST(Farkas, ExactlyOneVerifiedCertificate) {
    for (const auto& d : digraph_catalog(4, 5)) {
        auto outcome = farkas_alternative(flow_space(TUMatrix(d)));
        EXPECT_TRUE(outcome.exactly_one());
        EXPECT_TRUE(outcome.verified());
        EXPECT_EQ(outcome.positive_flow.has_value(), is_totally_cyclic(d));
    }
}

TEST(Farkas, SingleArcHasCovector) {
    auto outcome = farkas_alternative(flow_space(TUMatrix(single_arc())));
    ASSERT_TRUE(outcome.nonnegative_covector);
    EXPECT_EQ(*outcome.nonnegative_covector, (RationalVector{1}));
}

TEST(GroupKernel, ClosedFormAndFullRank) {
    auto m = load("cycle3_reduced.mat");
    EXPECT_EQ(count_group_kernel(m, AbelianGroup::cyclic(5)), 5);
    EXPECT_EQ(count_group_kernel(m, AbelianGroup::parse("z2xz2")), 4);
    EXPECT_THROW(count_group_kernel(TUMatrix(cycle3()), AbelianGroup::cyclic(2)), DomainError);
}

TEST(MatroidCounts, MatchGraphOracles) {
    for (const auto& d : digraph_catalog(3, 5, true)) {
        TUMatrix m(d);
        for (unsigned k = 1; k <= 3; ++k) {
            EXPECT_EQ(count_nl_group_flows_matroid(m, AbelianGroup::cyclic(k)),
                      count_nl_group_flows(d, AbelianGroup::cyclic(k)));
            EXPECT_EQ(count_nl_integer_kflows_matroid(m, k), count_nl_integer_kflows(d, k));
        }
    }
}

// Every Z_k kernel element lifts to a bounded integer kernel vector.
TEST(Lifting, ExhaustiveOnSmallMatrices) {
    for (const auto& d : digraph_catalog(3, 4)) {
        TUMatrix m(d);
        for (unsigned k : {2U, 3U}) {
            auto g = AbelianGroup::cyclic(k);
            for_each_group_kernel_element(m, g, [&](const GroupFlow& x) {
                std::vector<unsigned> residues(x.begin(), x.end());
                auto y = integer_lift(m, residues, k);
                ASSERT_TRUE(y);
                for (std::size_t j = 0; j < y->size(); ++j) {
                    EXPECT_LT(std::llabs((*y)[j]), k);
                    EXPECT_EQ((((*y)[j] % k) + k) % k, residues[j]);
                }
            });
        }
    }
}

TEST(MatroidFit, CycleMatrix) {
    auto m = load("cycle3_reduced.mat");
    EXPECT_EQ(fit_integer_flow_polynomial_matroid(m, default_fit_range(1)).to_string(), "2x-1");
}
