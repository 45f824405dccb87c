#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "nlflow/catalog.hpp"
#include "nlflow/cut_lattice.hpp"
#include "test_support.hpp"

using namespace nlflow;
using namespace nlflow::test;

TEST(Dicuts, Examples) {
    EXPECT_EQ(enumerate_dicuts(single_arc()), (DicutFamily{ArcSet(1, {0})}));
    EXPECT_TRUE(enumerate_dicuts(cycle3()).empty());
    EXPECT_TRUE(enumerate_dicuts(Digraph(1)).empty());
    // ab, ac, bc: delta+({a}) = {ab, ac}, delta+({a,b}) = {ac, bc}
    EXPECT_EQ(enumerate_dicuts(k3_acyclic()), (DicutFamily{ArcSet(3, {0, 1}), ArcSet(3, {1, 2})}));
    // Disconnected: the empty dicut from a component is never listed.
    Digraph two(3, {{0, 1}});
    EXPECT_EQ(enumerate_dicuts(two), (DicutFamily{ArcSet(1, {0})}));
}

TEST(Dicuts, EveryMemberIsADirectedCut) {
    for (const auto& d : digraph_catalog(4, 5, true)) {
        for (const auto& c : enumerate_dicuts(d)) {
            ASSERT_FALSE(c.empty());
            // Removing a dicut leaves no path back across it, so the
            // arcs of c lie outside every strong component.
            auto scc = strongly_connected_components(d);
            for (auto a : c.indices())
                EXPECT_NE(scc.component_of[d.arc(a).tail], scc.component_of[d.arc(a).head]);
        }
    }
}

TEST(Dicuts, LimitRaisesResourceError) {
    EXPECT_THROW(enumerate_dicuts(k3_acyclic(), 2), ResourceError);
    EXPECT_THROW(build_cut_lattice(k3_acyclic(), 3), ResourceError);
}

// Contraction characterization vs. the transversal characterization.
TEST(Dijoin, EquivalentToMeetingEveryDicut) {
    std::size_t checked = 0;
    for (const auto& d : digraph_catalog(4, 6)) {
        auto dicuts = enumerate_dicuts(d);
        const auto m = d.arc_count();
        for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
            auto set = ArcSet::from_mask(m, s);
            ASSERT_EQ(is_dijoin(d, set), intersects_every_dicut(dicuts, set)) << set.to_string();
            ++checked;
        }
    }
    EXPECT_GT(checked, 10000u);
}

TEST(CutLattice, Examples) {
    auto k3 = build_cut_lattice(k3_acyclic());
    ASSERT_EQ(k3.size(), 4u);
    EXPECT_EQ(k3.elements[0], ArcSet::full(3));
    std::set<std::string> names;
    for (const auto& e : k3.elements) names.insert(e.to_string());
    EXPECT_EQ(names, (std::set<std::string>{"{0,1,2}", "{2}", "{0}", "{}"}));

    EXPECT_EQ(build_cut_lattice(cycle3()).size(), 1u);
}

TEST(CutLattice, ClosedUnderIntersectionWithMinimumA) {
    for (const auto& d : digraph_catalog(4, 5)) {
        auto lattice = build_cut_lattice(d);
        auto poset = lattice.poset();
        EXPECT_EQ(poset.minimum(), std::optional<std::size_t>(0));
        std::unordered_set<ArcSet> members(lattice.elements.begin(), lattice.elements.end());
        EXPECT_EQ(members.size(), lattice.size());
        for (const auto& x : lattice.elements)
            for (const auto& y : lattice.elements) EXPECT_TRUE(members.count(x & y));
    }
}

TEST(Cycles, Examples) {
    EXPECT_EQ(enumerate_directed_cycles(cycle3()), (std::vector<ArcSet>{ArcSet::full(3)}));
    EXPECT_TRUE(enumerate_directed_cycles(k3_acyclic()).empty());
    EXPECT_EQ(enumerate_directed_cycles(digon()).size(), 1u);
    EXPECT_EQ(enumerate_directed_cycles(Digraph(1, {{0, 0}})), (std::vector<ArcSet>{ArcSet(1, {0})}));
    Digraph doubled(2, {{0, 1}, {0, 1}, {1, 0}});
    EXPECT_EQ(enumerate_directed_cycles(doubled), (std::vector<ArcSet>{ArcSet(3, {0, 2}), ArcSet(3, {1, 2})}));
}

TEST(Cycles, FeedbackArcSetsMeetEveryCycle) {
    for (const auto& d : digraph_catalog(3, 5, true)) {
        auto cycles = enumerate_directed_cycles(d);
        const auto m = d.arc_count();
        for (std::uint64_t s = 0; s < (1ULL << m); ++s) {
            auto set = ArcSet::from_mask(m, s);
            bool meets = std::all_of(cycles.begin(), cycles.end(), [&](const ArcSet& c) { return c.intersects(set); });
            EXPECT_EQ(is_feedback_arc_set(d, set), meets);
        }
    }
}

TEST(CycleLattice, Examples) {
    auto c3 = build_cycle_lattice(cycle3());
    ASSERT_EQ(c3.size(), 2u);
    EXPECT_EQ(c3.elements[1], ArcSet(3));
    EXPECT_EQ(build_cycle_lattice(k3_acyclic()).size(), 1u);
}
