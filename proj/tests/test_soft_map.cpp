#include <gtest/gtest.h>

#include "support.hpp"

using namespace softdito;
using softdito::testing::named;
using softdito::testing::sample;
using softdito::testing::set_of;

namespace {

class FixtureP4 : public ::testing::Test {
protected:
    dsl::SpecDocument doc = sample("p4.sdt");
    ContextPtr cu = named(doc.contexts, "CU");
    ContextPtr cv = named(doc.contexts, "CV");
    SoftMap f = named(doc.maps, "f");
};

TEST_F(FixtureP4, ImageOfKIsConcentratedOnP2) {
    const auto k = named(doc.sets, "K1");
    EXPECT_EQ(image(f, k), set_of(cv, {{"p2", {"2"}}}));
    EXPECT_EQ(image(f, null(cu)), null(cv, cv->param_set({"p2"})));
}

TEST_F(FixtureP4, ImageOfWholeIsStrictlyInsideTheTarget) {
    const auto range = image(f, whole(cu));
    EXPECT_EQ(range, set_of(cv, {{"p2", {"1", "2"}}}));
    EXPECT_TRUE(is_subset(range, whole(cv)));
    EXPECT_NE(range, whole(cv));
}

TEST_F(FixtureP4, PreimageOfK2IsK1) {
    EXPECT_EQ(preimage(f, named(doc.sets, "K2")), named(doc.sets, "K1"));
    EXPECT_EQ(preimage(f, whole(cv)), whole(cu));
    EXPECT_EQ(preimage(f, null(cv)), null(cu));
}

TEST_F(FixtureP4, RestrictionToTheImage) {
    const auto induced = restrict_to_image(f, named(doc.cotopologies, "kappa2"));
    EXPECT_TRUE(induced.contains(set_of(cv, {{"p2", {"2"}}})));
    EXPECT_TRUE(induced.contains(set_of(cv, {{"p2", {"1", "2"}}})));
    EXPECT_TRUE(induced.contains(null(cv, cv->param_set({"p1"}))));
}

TEST_F(FixtureP4, CompositionWithIdentity) {
    EXPECT_EQ(compose(SoftMap::identity(cv), f), f);
    EXPECT_EQ(compose(f, SoftMap::identity(cu)), f);
    EXPECT_THROW(compose(f, f), ArgumentError);
}

TEST(SoftMapConstruction, TablesMustBeTotalAndInRange) {
    const auto a = oracle::standard_context(2, 1);
    const auto b = oracle::standard_context(1, 1);
    EXPECT_THROW(SoftMap(a, b, {0}, {0}), ArgumentError);
    EXPECT_THROW(SoftMap(a, b, {0, 1}, {0}), DomainError);
    EXPECT_THROW(SoftMap::from_labels(a, b, {{"x", "x"}}, {{"e1", "e1"}}), ArgumentError);
}

TEST(SoftMapConstruction, SurjectiveMapsKeepTheCotopology) {
    const auto ctx = oracle::standard_context(2, 2);
    const auto k = generate_cotopology(ctx, {set_of(ctx, {{"e1", {"x"}}})});
    EXPECT_EQ(restrict_to_image(SoftMap::identity(ctx), k), k);
}

// Image and preimage laws over every map between the (2,1) and (2,2)
// contexts in both directions, with every soft set on each side.
TEST(SoftMapLaws, ImagePreimageIdentitiesHoldExhaustively) {
    const auto small = oracle::standard_context(2, 1);
    const auto big = oracle::standard_context(2, 2);
    for (const auto& [src, tgt] : {std::pair{small, big}, std::pair{big, small}, std::pair{big, big}}) {
        const auto range_src = oracle::enumerate_soft_sets(src);
        const auto range_tgt = oracle::enumerate_soft_sets(tgt);
        for (const auto& f : oracle::enumerate_maps(src, tgt)) {
            const auto range = image(f, whole(src));
            for (const auto& g : range_tgt) {
                EXPECT_TRUE(is_subset(image(f, preimage(f, g)), g));
                EXPECT_EQ(image(f, preimage(f, g)), intersect(g, range));
                EXPECT_EQ(preimage(f, complement(g)), complement(preimage(f, g)));
                for (const auto& h : range_tgt) {
                    EXPECT_EQ(preimage(f, unite(g, h)), unite(preimage(f, g), preimage(f, h)));
                    EXPECT_EQ(preimage(f, intersect(g, h)), intersect(preimage(f, g), preimage(f, h)));
                }
            }
            for (const auto& s : range_src) {
                EXPECT_TRUE(is_subset(s, preimage(f, image(f, s))));
                for (const auto& t : range_src) {
                    EXPECT_EQ(image(f, unite(s, t)), unite(image(f, s), image(f, t)));
                    EXPECT_TRUE(is_subset(image(f, intersect(s, t)), intersect(image(f, s), image(f, t))));
                }
            }
        }
    }
}

TEST(SoftMapLaws, PreimageOfCompositeIsIteratedPreimage) {
    const auto u = oracle::standard_context(2, 1);
    const auto v = oracle::standard_context(2, 2);
    const auto w = oracle::standard_context(1, 2);
    const auto targets = oracle::enumerate_soft_sets(w);
    for (const auto& f : oracle::enumerate_maps(u, v)) {
        for (const auto& g : oracle::enumerate_maps(v, w)) {
            const auto gf = compose(g, f);
            for (const auto& k : targets) {
                EXPECT_EQ(preimage(gf, k), preimage(f, preimage(g, k)));
            }
        }
    }
}

} // namespace
