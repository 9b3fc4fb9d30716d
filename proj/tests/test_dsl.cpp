#include <gtest/gtest.h>

#include "support.hpp"

using namespace softdito;
using softdito::testing::named;
using softdito::testing::sample;

namespace {

bool mentions(const dsl::ParseResult& r, const std::string& kind, const std::string& text) {
    for (const auto& e : r.errors) {
        if (e.kind == kind && e.message.find(text) != std::string::npos) {
            return true;
        }
    }
    return false;
}

TEST(Dsl, FirstFixtureParses) {
    const auto doc = sample("p1.sdt");
    EXPECT_EQ(doc.contexts.size(), 1u);
    EXPECT_EQ(doc.sets.size(), 2u);
    EXPECT_EQ(doc.topologies.size(), 1u);
    EXPECT_EQ(doc.domains.size(), 1u);
    EXPECT_EQ(doc.kind_of("tau"), "topology");
    EXPECT_EQ(doc.kind_of("nothing"), "");
}

TEST(Dsl, SerializationRoundTrips) {
    for (const auto* name : {"p1.sdt", "p2.sdt", "p3.sdt", "p4.sdt"}) {
        const auto doc = sample(name);
        const auto text = dsl::serialize(doc);
        const auto again = dsl::parse(text);
        ASSERT_TRUE(again.ok()) << name << ": " << again.errors.front().to_string();
        EXPECT_TRUE(again.document == doc) << name;
        EXPECT_EQ(dsl::serialize(again.document), text) << name;
    }
}

TEST(Dsl, PointsDitopologiesAndMapsRoundTrip) {
    const std::string text = R"(
context C { universe = {x, y}  params = {e1, e2} }
softset F in C over {e1} { e1: {x} }
point p in C = y over {e1, e2}
topology tau in C = { F }
cotopology kappa in C = { }
ditopology d in C = (tau, kappa)
map id : C -> C { points { x->x  y->y }  params { e1->e1  e2->e2 } }
)";
    const auto r = dsl::parse(text);
    ASSERT_TRUE(r.ok()) << r.errors.front().to_string();
    const auto& doc = r.document;
    EXPECT_EQ(named(doc.points, "p"), make_point(named(doc.contexts, "C"), "y", {"e1", "e2"}));
    EXPECT_EQ(named(doc.maps, "id"), SoftMap::identity(named(doc.contexts, "C")));
    EXPECT_EQ(named(doc.ditopologies, "d").tau, "tau");
    const auto again = dsl::parse(dsl::serialize(doc));
    ASSERT_TRUE(again.ok());
    EXPECT_TRUE(again.document == doc);
}

TEST(Dsl, UnknownPointIsAResolutionError) {
    const auto r = dsl::parse("context C { universe = {x}  params = {e} }\nsoftset F in C over {e} { e: {q} }\n");
    ASSERT_FALSE(r.ok());
    EXPECT_TRUE(mentions(r, "resolution", "'q'"));
    EXPECT_EQ(r.errors.front().loc.line, 2u);
}

TEST(Dsl, DuplicateNamesAreRejected) {
    const auto r = dsl::parse("context C { universe = {x}  params = {e} }\ncontext C { universe = {y}  params = {e} }\n");
    ASSERT_FALSE(r.ok());
    EXPECT_TRUE(mentions(r, "resolution", "duplicate declaration 'C'"));
}

TEST(Dsl, EveryErrorIsCollected) {
    const std::string text = "context C { universe = {x}  params = {e} }\n"
                             "softset F in D over {e} { e: {x} }\n"
                             "softset G in C over {e} { e: {z} }\n"
                             "topology t in C = { H }\n"
                             "softset $ in C\n";
    const auto r = dsl::parse(text);
    EXPECT_TRUE(mentions(r, "resolution", "unknown context 'D'"));
    EXPECT_TRUE(mentions(r, "resolution", "'z'"));
    EXPECT_TRUE(mentions(r, "resolution", "unknown soft set 'H'"));
    EXPECT_TRUE(mentions(r, "lexical", "'$'"));
    EXPECT_GE(r.errors.size(), 4u);
    for (const auto& e : r.errors) {
        EXPECT_GT(e.loc.line, 0u) << e.to_string();
    }
}

TEST(Dsl, SyntaxErrorsCarryLocations) {
    const auto r = dsl::parse("context C { universe = {x} params = {e} }\nsoftset F in C over {e} e: {x} }\n");
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.errors.front().kind, "syntax");
    EXPECT_EQ(r.errors.front().loc.line, 2u);
}

TEST(Dsl, MapsMustBeTotal) {
    const auto r = dsl::parse("context C { universe = {x, y}  params = {e} }\n"
                              "map f : C -> C { points { x->x }  params { e->e } }\n");
    EXPECT_TRUE(mentions(r, "resolution", "no image"));
}

TEST(Dsl, UnreadableFileIsReported) {
    const auto r = dsl::parse_file(std::string(SOFTDITO_SAMPLES_DIR) + "/does-not-exist.sdt");
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.errors.front().kind, "io");
}

TEST(Dsl, InstancesRoundTripThroughTheDsl) {
    oracle::Catalog cat(oracle::parse_bounds("2,2"));
    const auto& tops = cat.topologies(3);
    oracle::Instance inst;
    inst.topologies = {tops.back()};
    inst.sets = {cat.sets(3)[7]};
    inst.points = {cat.points(3).front()};
    inst.scope = cat.contexts()[3]->param_set({"e1"});
    inst.scope_context = cat.contexts()[3];
    const auto text = oracle::serialize_instance(inst);
    EXPECT_EQ(oracle::serialize_instance(oracle::parse_instance(text)), text);
}

} // namespace
