#include <gtest/gtest.h>

#include "support.hpp"

using namespace softdito;
using softdito::testing::params;
using softdito::testing::set_of;

namespace {

class SoftSetTest : public ::testing::Test {
protected:
    ContextPtr ctx = Context::make({"x", "z"}, {"e1", "e2", "e3", "e4"});
    SoftSet F = set_of(ctx, {{"e1", {"x"}}, {"e2", {"x", "z"}}});
    SoftSet G = set_of(ctx, {{"e1", {"x"}}});
    ParamSet A = params(ctx, {"e1", "e2"});
};

TEST_F(SoftSetTest, WholeAndNullHaveTheRequestedDomain) {
    const auto w = whole(ctx, A);
    EXPECT_EQ(w, set_of(ctx, {{"e1", {"x", "z"}}, {"e2", {"x", "z"}}}));
    EXPECT_TRUE(is_whole(whole(ctx)));
    EXPECT_EQ(whole(ctx, ParamSet{}).domain(), ParamSet{});
    const auto n = null(ctx, A);
    EXPECT_EQ(n, set_of(ctx, {{"e1", {}}, {"e2", {}}}));
    EXPECT_TRUE(n.is_null());
    EXPECT_TRUE(is_subset(n, F));
}

TEST_F(SoftSetTest, DomainOutsideTheParametersIsRejected) {
    const auto outside = ParamSet::first(5);
    EXPECT_THROW(whole(ctx, outside), DomainError);
    EXPECT_THROW(null(ctx, outside), DomainError);
}

TEST_F(SoftSetTest, ComplementIsPerParameterDifference) {
    EXPECT_EQ(complement(F), set_of(ctx, {{"e1", {"z"}}, {"e2", {}}}));
    EXPECT_EQ(complement(complement(F)), F);
    EXPECT_EQ(complement(whole(ctx, A)), null(ctx, A));
}

TEST_F(SoftSetTest, IntersectionKeepsCommonParameters) {
    EXPECT_EQ(intersect(F, G), G);
    EXPECT_EQ(intersect(F, whole(ctx)), F);
    EXPECT_EQ(intersect(F, complement(F)), null(ctx, A));
    const auto H = set_of(ctx, {{"e3", {"z"}}});
    EXPECT_EQ(intersect(F, H).domain(), ParamSet{});
}

TEST_F(SoftSetTest, UnionCombinesDomains) {
    const auto H = set_of(ctx, {{"e2", {"z"}}});
    EXPECT_EQ(unite(G, H), set_of(ctx, {{"e1", {"x"}}, {"e2", {"z"}}}));
    EXPECT_EQ(unite(null(ctx), F), pad(F, ctx->all_params()));
    EXPECT_EQ(unite(whole(ctx), F), whole(ctx));
    EXPECT_EQ(unite(F, complement(F)), whole(ctx, A));
}

TEST_F(SoftSetTest, EmptyFamiliesAreRejected) {
    std::vector<SoftSet> none;
    EXPECT_THROW(intersect(std::span<const SoftSet>(none)), ArgumentError);
    EXPECT_THROW(unite(std::span<const SoftSet>(none)), ArgumentError);
}

TEST_F(SoftSetTest, SubsetNeedsDomainInclusion) {
    EXPECT_TRUE(is_subset(G, F));
    EXPECT_FALSE(is_subset(F, G));
    EXPECT_TRUE(is_subset(F, F));
    EXPECT_TRUE(is_subset(null(ctx, A), F));
    EXPECT_FALSE(is_subset(null(ctx), F));
    EXPECT_TRUE(equals(F, F));
    EXPECT_FALSE(equals(null(ctx, A), null(ctx)));
}

TEST_F(SoftSetTest, SoftPointsAndMembership) {
    EXPECT_EQ(soft_point(ctx, 0, A), set_of(ctx, {{"e1", {"x"}}, {"e2", {"x"}}}));
    EXPECT_THROW(soft_point(ctx, 0, ParamSet{}), ArgumentError);
    EXPECT_THROW(make_point(ctx, 0, ParamSet{}), ArgumentError);
    const auto z = make_point(ctx, "z", {"e1", "e2"});
    EXPECT_FALSE(point_in(z, G));
    EXPECT_TRUE(point_in(z, F) == false);
    const auto x = make_point(ctx, "x", {"e1", "e2"});
    EXPECT_TRUE(point_in(x, F));
    EXPECT_TRUE(point_in(x, whole(ctx)));
    EXPECT_FALSE(point_in(x, null(ctx, A)));
    EXPECT_EQ(complement(to_soft_set(x)).at(0), ctx->point_set({"z"}));
}

TEST_F(SoftSetTest, LabelsAreValidated) {
    EXPECT_THROW(set_of(ctx, {{"e9", {"x"}}}), DomainError);
    EXPECT_THROW(set_of(ctx, {{"e1", {"q"}}}), DomainError);
    EXPECT_THROW(set_of(ctx, {{"e1", {"x"}}, {"e1", {"z"}}}), ArgumentError);
    EXPECT_THROW(Context::make({"x", "x"}, {"e"}), ArgumentError);
}

TEST_F(SoftSetTest, OperationsRefuseMixedContexts) {
    const auto other = Context::make({"x", "y"}, {"e1", "e2", "e3", "e4"});
    EXPECT_THROW(intersect(F, whole(other)), ArgumentError);
    EXPECT_THROW(is_subset(F, whole(other)), ArgumentError);
}

// Algebraic laws over every soft set of a (2,2) context.
TEST(SoftSetLaws, LatticeAndComplementLawsHoldExhaustively) {
    const auto ctx = oracle::standard_context(2, 2);
    const auto all = oracle::enumerate_soft_sets(ctx);
    ASSERT_EQ(all.size(), 25u);
    for (const auto& f : all) {
        EXPECT_EQ(unite(f, f), f);
        EXPECT_EQ(intersect(f, f), f);
        EXPECT_EQ(unite(f, complement(f)), whole(ctx, f.domain()));
        for (const auto& g : all) {
            EXPECT_EQ(unite(f, g), unite(g, f));
            EXPECT_EQ(intersect(f, g), intersect(g, f));
            EXPECT_EQ(is_subset(f, g), equals(intersect(f, g), f));
            EXPECT_EQ(is_subset(f, g), equals(unite(f, g), g));
            EXPECT_TRUE(is_subset(complement(intersect(f, g)), unite(complement(f), complement(g))));
            if (f.domain() == g.domain()) {
                EXPECT_EQ(is_subset(f, g), is_subset(complement(g), complement(f)));
            }
        }
        for (const auto& p : oracle::enumerate_points(ctx)) {
            EXPECT_FALSE(point_in(p, f) && point_in(p, complement(f)));
        }
    }
}

TEST(SoftSetEnumeration, CountsFollowTheFormula) {
    EXPECT_EQ(oracle::enumerate_soft_sets(oracle::standard_context(1, 1)).size(), 3u);
    EXPECT_EQ(oracle::enumerate_soft_sets(oracle::standard_context(2, 2)).size(), 25u);
    EXPECT_EQ(oracle::enumerate_soft_sets(oracle::standard_context(2, 1)).size(), 5u);
    EXPECT_EQ(oracle::soft_set_count(*oracle::standard_context(3, 2)), 81u);
    EXPECT_THROW(oracle::enumerate_soft_sets(oracle::standard_context(3, 3), 100), BoundsError);
}

TEST(SoftSetEnumeration, OrderIsCanonicalAndDuplicateFree) {
    const auto all = oracle::enumerate_soft_sets(oracle::standard_context(2, 2));
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
    EXPECT_EQ(oracle::enumerate_soft_sets(oracle::standard_context(2, 2)), all);
}

} // namespace
