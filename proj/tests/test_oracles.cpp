#include <gtest/gtest.h>

#include <set>

#include "nlflow/catalog.hpp"
#include "nlflow/nl_polynomial.hpp"
#include "nlflow/oracles.hpp"
#include "nlflow/verification.hpp"
#include "test_support.hpp"

using namespace nlflow;
using namespace nlflow::test;

TEST(AbelianGroup, ParseAndArithmetic) {
    auto g = AbelianGroup::parse("z2xz3");
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.to_string(), "z2xz3");
    for (GroupElement a = 0; a < g.order(); ++a) {
        EXPECT_EQ(g.add(a, g.neg(a)), g.zero());
        EXPECT_EQ(g.times(static_cast<long long>(g.order()), a), g.zero());
        for (GroupElement b = 0; b < g.order(); ++b) EXPECT_EQ(g.add(a, b), g.add(b, a));
    }
    EXPECT_EQ(AbelianGroup::parse("z1").order(), 1u);
    EXPECT_THROW(AbelianGroup::parse("q4"), ParseError);
    EXPECT_THROW(AbelianGroup::cyclic(1U << 21), ResourceError);
}

TEST(AbelianGroup, GroupsOfOrder) {
    EXPECT_EQ(groups_of_order(1).size(), 1u);
    EXPECT_EQ(groups_of_order(4).size(), 2u);
    EXPECT_EQ(groups_of_order(8).size(), 3u);
    EXPECT_EQ(groups_of_order(12).size(), 4u);
    for (const auto& g : groups_of_order(12)) EXPECT_EQ(g.order(), 12u);
    EXPECT_THROW(groups_of_order(0), DomainError);
}

TEST(GroupFlows, Examples) {
    EXPECT_EQ(count_nl_group_flows(cycle3(), AbelianGroup::cyclic(5)), 5);
    EXPECT_EQ(count_nl_group_flows(single_arc(), AbelianGroup::cyclic(5)), 0);
    EXPECT_EQ(count_nl_group_flows(k3_acyclic(), AbelianGroup::cyclic(4)), 3);
    int flows = 0;
    for_each_group_flow(cycle3(), AbelianGroup::cyclic(3), [&](const GroupFlow& f) {
        EXPECT_TRUE(is_group_flow(cycle3(), AbelianGroup::cyclic(3), f));
        ++flows;
    });
    EXPECT_EQ(flows, 3);
    EXPECT_THROW(count_nl_group_flows(cycle3(), AbelianGroup::cyclic(5), 100), ResourceError);
}

TEST(GroupFlows, MatchPolynomialAndAreGroupIndependent) {
    for (const auto& d : digraph_catalog(3, 5, true)) {
        auto phi = nl_flow_polynomial(d);
        for (unsigned k = 1; k <= 4; ++k)
            for (const auto& g : groups_of_order(k)) EXPECT_EQ(count_nl_group_flows(d, g), phi.evaluate(k));
        EXPECT_EQ(count_nl_group_flows(d, AbelianGroup::parse("z4")),
                  count_nl_group_flows(d, AbelianGroup::parse("z2xz2")));
    }
}

// Contraction test and dicut-transversal test give the same count.
TEST(GroupFlows, SupportsCountedTwoWays) {
    for (const auto& d : digraph_catalog(4, 5)) {
        auto g = AbelianGroup::cyclic(3);
        EXPECT_EQ(count_nl_group_flows(d, g), count_group_flows_with_dicut_meeting_support(d, g));
    }
}

TEST(IntegerFlows, Examples) {
    EXPECT_EQ(count_nl_integer_kflows(cycle3(), 3), 5);
    EXPECT_EQ(count_nl_integer_kflows(single_arc(), 3), 0);
    int flows = 0;
    for_each_integer_flow(digon(), 2, [&](const std::vector<long long>& f) {
        EXPECT_EQ(f[0], f[1]);
        ++flows;
    });
    EXPECT_EQ(flows, 3);
}

TEST(IntegerFlows, AreBoundedFlows) {
    for (const auto& d : digraph_catalog(3, 4, true)) {
        std::set<std::vector<long long>> seen;
        for_each_integer_flow(d, 3, [&](const std::vector<long long>& f) {
            std::vector<long long> excess(d.vertex_count(), 0);
            for (std::size_t a = 0; a < f.size(); ++a) {
                EXPECT_LE(std::llabs(f[a]), 2);
                excess[d.arc(a).tail] += f[a];
                excess[d.arc(a).head] -= f[a];
            }
            for (auto e : excess) EXPECT_EQ(e, 0);
            EXPECT_TRUE(seen.insert(f).second);
        });
    }
}

// Every Z_k flow is the residue of an integer flow bounded by k-1.
TEST(IntegerFlows, LiftingLemma) {
    for (unsigned k : {2U, 3U, 4U}) {
        auto g = AbelianGroup::cyclic(k);
        for (const auto& d : digraph_catalog(3, 4, true)) {
            std::set<std::vector<long long>> residues;
            for_each_integer_flow(d, k, [&](const std::vector<long long>& f) {
                std::vector<long long> r;
                for (auto v : f) r.push_back(((v % k) + k) % k);
                residues.insert(r);
            });
            for_each_group_flow(d, g, [&](const GroupFlow& f) {
                EXPECT_TRUE(residues.count(std::vector<long long>(f.begin(), f.end())));
            });
        }
    }
}

TEST(Colorings, Examples) {
    EXPECT_EQ(count_acyclic_colorings(cycle3(), 3), 24);
    EXPECT_EQ(count_acyclic_colorings(single_arc(), 4), 16);
    EXPECT_EQ(count_acyclic_colorings(digon(), 2), 2);
    EXPECT_EQ(count_acyclic_colorings(Digraph(0), 3), 1);
    EXPECT_THROW(count_acyclic_colorings(Digraph(1, {{0, 0}}), 2), DomainError);
}

TEST(Colorings, MatchCoflowPolynomial) {
    for (const auto& d : digraph_catalog(4, 5)) {
        auto psi = nl_coflow_polynomial(d);
        auto c = weak_components(d, d.all_arcs()).count;
        for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(count_acyclic_colorings(d, k), power(k, c) * psi.evaluate(k));
    }
}

TEST(Equivalence, Examples) {
    auto r = equivalence_report(cycle3(), 4);
    EXPECT_TRUE(r.cyclic_group);
    EXPECT_TRUE(r.integer);
    EXPECT_EQ(r.groups.size(), 2u);
    EXPECT_TRUE(r.consistent());
    auto none = equivalence_report(single_arc(), 3);
    EXPECT_FALSE(none.cyclic_group);
    EXPECT_TRUE(none.consistent());
    for (const auto& d : digraph_catalog(3, 4))
        for (unsigned k = 1; k <= 4; ++k) EXPECT_TRUE(check_equivalence_theorem(d, k));
}

TEST(Fitting, IntegerFlowPolynomial) {
    // Constant flow c on a cycle: 2k-1 choices, all nowhere-zero or zero.
    EXPECT_EQ(fit_integer_flow_polynomial(cycle3(), default_fit_range(1)).to_string(), "2x-1");
    EXPECT_EQ(fit_integer_flow_polynomial(single_arc(), default_fit_range(0)).to_string(), "0");
    EXPECT_THROW(fit_integer_flow_polynomial(cycle3(), {2, 3}), PreconditionError);
    EXPECT_EQ(default_fit_range(2), (std::vector<long long>{2, 3, 4, 5}));
}

TEST(Verification, SmallCatalogIsClean) {
    VerifyOptions opt;
    opt.max_k = 3;
    for (const auto& d : digraph_catalog(3, 4, true)) {
        auto mismatches = verify_digraph(d, opt);
        EXPECT_TRUE(mismatches.empty()) << (mismatches.empty() ? "" : mismatches.front().describe());
    }
}
