#include <gtest/gtest.h>

#include "support.hpp"

using namespace softdito;
using softdito::testing::named;
using softdito::testing::sample;
using softdito::testing::set_of;

namespace {

class FixtureP4Source : public ::testing::Test {
protected:
    dsl::SpecDocument doc = sample("p4.sdt");
    ContextPtr cu = named(doc.contexts, "CU");
    SoftCotopology kappa1 = named(doc.cotopologies, "kappa1");
    SoftCotopology kappa2 = named(doc.cotopologies, "kappa2");
    SoftSet K = named(doc.sets, "K1");
    ParamSet A = cu->param_set({"e1", "e2"});
};

TEST_F(FixtureP4Source, ListedFamilyIsACotopology) {
    EXPECT_TRUE(check_cotopology(cu, kappa1.listed()).ok());
    EXPECT_TRUE(check_cotopology(cu, {}).ok());
}

TEST_F(FixtureP4Source, SlicesAtBothParameters) {
    const std::vector<PointSet> expected{PointSet{}, cu->point_set({"c"}), cu->universe()};
    EXPECT_EQ(slice_at_parameter(kappa1, "e1"), expected);
    EXPECT_EQ(slice_at_parameter(kappa1, "e2"), expected);
}

TEST_F(FixtureP4Source, ClosureIsTheSmallestClosedSuperset) {
    const auto f = set_of(cu, {{"e1", {"c"}}, {"e2", {}}});
    EXPECT_EQ(closure(kappa1, f), K);
    EXPECT_EQ(closure(kappa1, null(cu, A)), null(cu, A));
    EXPECT_EQ(closure(kappa1, whole(cu)), whole(cu));
}

TEST_F(FixtureP4Source, AdherencePointsAtTheFullDomain) {
    const auto f = set_of(cu, {{"e1", {"c"}}, {"e2", {}}});
    const auto pts = adherence_points(kappa1, f);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_EQ(pts[0], make_point(cu, "c", {"e1", "e2"}));
    const auto all = adherence_points(kappa1, whole(cu, A));
    EXPECT_EQ(all.size(), cu->num_points());
}

TEST_F(FixtureP4Source, AccumulationPointsAdhere) {
    const auto f = set_of(cu, {{"e1", {"c"}}, {"e2", {}}});
    const auto acc = accumulation(kappa1, f);
    for (const auto& p : oracle::enumerate_points(cu)) {
        if (p.domain == A && point_in(p, acc)) {
            const auto adh = adherence_points(kappa1, f);
            EXPECT_NE(std::find(adh.begin(), adh.end(), p), adh.end());
        }
    }
}

TEST_F(FixtureP4Source, RemoteNeighborhoods) {
    const auto a = make_point(cu, "a", {"e1", "e2"});
    const auto c = make_point(cu, "c", {"e1", "e2"});
    EXPECT_TRUE(is_remote_nbhd(kappa1, K, a));
    EXPECT_FALSE(is_remote_nbhd(kappa1, K, c));
    for (const auto& p : oracle::enumerate_points(cu)) {
        EXPECT_TRUE(is_remote_nbhd(kappa1, null(cu), p));
    }
    EXPECT_TRUE(is_remote_nbhd_of_set(kappa1, K, whole(cu, A)));
    EXPECT_TRUE(is_remote_nbhd_of_set(kappa1, null(cu), whole(cu, A)));
    // K itself is closed, contains K and does not contain Ũ_E.
    EXPECT_TRUE(is_remote_nbhd_of_set(kappa1, K, whole(cu)));
    // Ũ_E is its own only closed superset, which contains Ũ_E.
    EXPECT_FALSE(is_remote_nbhd_of_set(kappa1, whole(cu), whole(cu)));
}

TEST_F(FixtureP4Source, StrongRemoteNeighborhoods) {
    const auto a = make_point(cu, "a", {"e1", "e2"});
    EXPECT_TRUE(is_strong_remote_nbhd(kappa1, null(cu, A), a));
    EXPECT_TRUE(is_strong_remote_nbhd(kappa1, K, a));
    EXPECT_FALSE(is_strong_remote_nbhd(kappa1, K, make_point(cu, "c", {"e1"})));
}

TEST_F(FixtureP4Source, T0HoldsButT1Fails) {
    EXPECT_TRUE(check_kappa_axiom(kappa1, Axiom::T0, PointScope::at(A)).holds);
    const auto t1 = check_kappa_axiom(kappa1, Axiom::T1);
    ASSERT_FALSE(t1.holds);
    ASSERT_TRUE(t1.witness);
    EXPECT_EQ(t1.witness->side, "kappa");
    EXPECT_THROW(check_kappa_axiom(kappa1, "T9"), ArgumentError);
}

TEST_F(FixtureP4Source, MapIsKappaContinuous) {
    const auto f = named(doc.maps, "f");
    EXPECT_TRUE(is_kappa_continuous(f, kappa1, kappa2));
    EXPECT_FALSE(is_kappa_continuous(f, SoftCotopology(cu, {}), kappa2));
}

TEST(CotopologyCheck, MissingUnionIsReported) {
    const auto ctx = Context::make({"x", "y"}, {"e1", "e2"});
    const auto k = set_of(ctx, {{"e1", {"x"}}});
    const auto l = set_of(ctx, {{"e2", {"y"}}});
    const auto report = check_cotopology(ctx, {k, l});
    ASSERT_FALSE(report.ok());
    bool union_missing = false;
    for (const auto& v : report.violations) {
        union_missing = union_missing || (v.op == FamilyOp::unite && v.result == unite(k, l));
    }
    EXPECT_TRUE(union_missing);
}

TEST(CotopologyAxioms, PointClosedFamilyIsT1) {
    const auto ctx = oracle::standard_context(2, 1);
    const auto kappa = generate_cotopology(ctx, {soft_point(ctx, 0, ctx->all_params()), soft_point(ctx, 1, ctx->all_params())});
    EXPECT_TRUE(check_kappa_axiom(kappa, Axiom::T1).holds);
}

class CotopologyLaws : public ::testing::Test {
protected:
    oracle::Catalog cat{oracle::parse_bounds("2,1")};
};

TEST_F(CotopologyLaws, ClosureAxioms) {
    for (std::size_t c = 0; c < cat.size(); ++c) {
        for (const auto& kappa : cat.cotopologies(c)) {
            for (const auto& f : cat.sets(c)) {
                const auto cl = closure(kappa, f);
                EXPECT_TRUE(is_closed(kappa, cl));
                EXPECT_TRUE(is_subset(f, cl));
                EXPECT_EQ(closure(kappa, cl), cl);
                for (const auto& g : cat.sets(c)) {
                    if (is_subset(f, g)) {
                        EXPECT_TRUE(is_subset(cl, closure(kappa, g)));
                    }
                }
            }
        }
    }
}

TEST_F(CotopologyLaws, IdentityContinuityAndClosedness) {
    for (std::size_t c = 0; c < cat.size(); ++c) {
        const auto id = SoftMap::identity(cat.contexts()[c]);
        for (const auto& k1 : cat.cotopologies(c)) {
            for (const auto& k2 : cat.cotopologies(c)) {
                EXPECT_EQ(is_kappa_continuous(id, k1, k2), k1.includes(k2));
                EXPECT_EQ(is_closed_map(id, k1, k2), k2.includes(k1));
            }
        }
    }
}

TEST_F(CotopologyLaws, SeparationChain) {
    for (std::size_t c = 0; c < cat.size(); ++c) {
        for (const auto& kappa : cat.cotopologies(c)) {
            const bool t0 = check_kappa_axiom(kappa, Axiom::T0).holds;
            const bool t1 = check_kappa_axiom(kappa, Axiom::T1).holds;
            const bool t2 = check_kappa_axiom(kappa, Axiom::T2).holds;
            EXPECT_TRUE(!t2 || t1);
            EXPECT_TRUE(!t1 || t0);
        }
    }
}

} // namespace
