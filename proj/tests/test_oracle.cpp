#include <gtest/gtest.h>

#include "support.hpp"

using namespace softdito;
using namespace softdito::oracle;

namespace {

std::size_t topology_count(std::size_t u, std::size_t e, std::size_t members = 6) {
    EnumBounds b;
    b.max_explicit_members = members;
    return enumerate_topologies(standard_context(u, e), b).size();
}

// Regression census: the number of families (with at most six listed
// members) per context, frozen after the first verified run.
TEST(OracleCensus, TopologyCountsAreFrozen) {
    EXPECT_EQ(topology_count(1, 1), 1u);
    EXPECT_EQ(topology_count(2, 1), 4u);
    EXPECT_EQ(topology_count(1, 2), 9u);
    EXPECT_EQ(topology_count(3, 1), 29u);
    EXPECT_EQ(topology_count(2, 2), 935u);
    EXPECT_EQ(topology_count(1, 3), 362u);
}

// With no effective member bound every closed family appears; the total
// matches tools/census_check.py, which tests all 2^20 candidate families.
TEST(OracleCensus, UnboundedCountMatchesBruteForce) {
    EXPECT_EQ(topology_count(2, 2, 20), 1335u);
}

TEST(OracleCensus, CotopologiesShareTheCount) {
    EXPECT_EQ(enumerate_cotopologies(standard_context(2, 1), EnumBounds{}).size(), 4u);
}

TEST(OracleCensus, EveryEnumeratedFamilyIsValidAndDistinct) {
    const auto ctx = standard_context(1, 2);
    const auto fams = enumerate_topologies(ctx, EnumBounds{});
    for (std::size_t i = 0; i < fams.size(); ++i) {
        EXPECT_TRUE(fams[i].check().ok());
        for (std::size_t j = 0; j < i; ++j) {
            EXPECT_FALSE(fams[i] == fams[j]);
        }
    }
    EXPECT_TRUE(fams.front().listed().empty());
}

TEST(OracleCensus, SingleGeneratorClosesIntoATopology) {
    const auto ctx = standard_context(2, 1);
    const auto f = soft_point(ctx, 0, ctx->all_params());
    const auto tau = generate_topology(ctx, {f});
    EXPECT_TRUE(tau.check().ok());
    EXPECT_TRUE(tau.contains(f));
    EXPECT_TRUE(generate_topology(ctx, {}).listed().empty());
}

TEST(OracleBounds, ParsingAcceptsTwoOrThreeFields) {
    const auto b = parse_bounds("3,1");
    EXPECT_EQ(b.max_universe, 3u);
    EXPECT_EQ(b.max_params, 1u);
    EXPECT_EQ(b.max_explicit_members, 6u);
    EXPECT_EQ(parse_bounds("2,2,4").max_explicit_members, 4u);
    for (const auto* bad : {"", "2", "2,", "0,1", "a,b", "1,2,3,4", "2,-1"}) {
        EXPECT_THROW(parse_bounds(bad), ArgumentError) << bad;
    }
}

TEST(OracleBounds, ContextsAreOrderedByParametersThenPoints) {
    const auto ctxs = contexts_within(parse_bounds("2,2"));
    ASSERT_EQ(ctxs.size(), 4u);
    EXPECT_EQ(ctxs[1]->num_points(), 2u);
    EXPECT_EQ(ctxs[1]->num_params(), 1u);
    EXPECT_EQ(ctxs[2]->num_points(), 1u);
    EXPECT_EQ(ctxs[2]->num_params(), 2u);
}

TEST(OracleRegistry, IdsAreUniqueAndGrouped) {
    const auto all = theorem_ids();
    std::set<std::string> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
    std::size_t grouped = 0;
    for (const auto* g : {"algebra", "maps", "topology", "cotopology", "ditopology"}) {
        grouped += theorem_ids(g).size();
    }
    EXPECT_EQ(grouped, all.size());
    EXPECT_THROW(theorem_ids("geometry"), ArgumentError);
}

TEST(OracleRegistry, UnknownIdsAreRejected) {
    EXPECT_THROW(find_counterexample("no-such-property", parse_bounds("1,1")), ArgumentError);
    EXPECT_THROW(find_counterexample("subset-transitive", parse_bounds("1,1")), ArgumentError);
    EXPECT_THROW(run_theorems({"no-such-property"}, parse_bounds("1,1")), ArgumentError);
}

TEST(OracleCounterexamples, SmallSeparationWitnessesExist) {
    for (const auto* id : {"tau-T0-not-T1", "kappa-T0-not-T1", "tau-regular-not-T1", "de-morgan-strictness",
                           "interior-union-strict", "closure-intersection-strict"}) {
        const auto r = find_counterexample(id, parse_bounds("2,1"));
        EXPECT_EQ(r.status, ReportStatus::counterexample) << id << ": " << r.note;
        ASSERT_TRUE(r.witness) << id;
        EXPECT_TRUE(r.replayed) << id;
        EXPECT_TRUE(replay(id, *r.witness)) << id;
    }
}

// The tau-T0-not-T1 witness must not need a larger space than the first fixture.
TEST(OracleCounterexamples, T0NotT1WitnessIsNoLargerThanTheFixture) {
    const auto r = find_counterexample("tau-T0-not-T1", EnumBounds{});
    ASSERT_TRUE(r.witness);
    const auto inst = parse_instance(*r.witness);
    ASSERT_EQ(inst.topologies.size(), 1u);
    EXPECT_LE(inst.topologies[0].context()->num_points(), 2u);
    EXPECT_LE(inst.topologies[0].context()->num_params(), 4u);
}

TEST(OracleCounterexamples, EscalationFindsT1NotT2) {
    const auto r = find_counterexample("kappa-T1-not-T2", parse_bounds("2,1"));
    EXPECT_EQ(r.status, ReportStatus::counterexample) << r.note;
    EXPECT_EQ(r.bounds, "2,2,6");
    EXPECT_NE(r.note.find("escalated"), std::string::npos);
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(replay("kappa-T1-not-T2", *r.witness));
}

// Enlarging the bounds only appends contexts, so the first witness found
// at the smaller bounds is found again.
TEST(OracleCounterexamples, WitnessesSurviveLargerBounds) {
    for (const auto* id : {"tau-T0-not-T1", "kappa-T0-not-T1", "de-morgan-strictness"}) {
        const auto small = find_counterexample(id, parse_bounds("2,1"));
        const auto large = find_counterexample(id, parse_bounds("2,2"));
        ASSERT_TRUE(small.witness && large.witness) << id;
        EXPECT_EQ(*small.witness, *large.witness) << id;
    }
}

TEST(OracleReplay, ReplayReproducesTheVerdictOnly) {
    const auto ctx = standard_context(1, 1);
    Instance inst;
    inst.sets = {whole(ctx), null(ctx)};
    const auto text = serialize_instance(inst);
    // The law holds here, so there is no violation to reproduce.
    EXPECT_FALSE(replay("subset-iff-intersection", text));
    EXPECT_THROW(replay("no-such-property", text), ArgumentError);
}

// Found only beyond the default instance budget at (2,2): the map merges
// e1 and e2, so the preimage gains a parameter the local definition never
// constrains.
TEST(OracleReplay, MergedParametersBreakLocalKappaContinuity) {
    const std::string witness = R"(
context C1 { universe = {x, y}  params = {e1, e2} }
context C2 { universe = {x, y}  params = {e1} }
point p1 in C1 = y over {e2}
cotopology kappa1 in C1 = { { e2: {x} } }
cotopology kappa2 in C2 = { { e1: {x} } }
map f1 : C1 -> C2 { points { x->x y->y }  params { e1->e1 e2->e1 } }
)";
    EXPECT_TRUE(replay("kappa-continuity-at-point-remote-preimage", witness));
    EXPECT_TRUE(replay("kappa-continuity-at-point-corollary", witness));
    const auto inst = parse_instance(witness);
    EXPECT_TRUE(props::kappa_continuous_at(inst.maps[0], inst.cotopologies[0], inst.cotopologies[1], inst.points[0]));
}

TEST(OracleSuite, AlgebraAndMapsReportsAreDeterministicAndReplayable) {
    std::vector<std::string> ids = theorem_ids("algebra");
    for (auto& id : theorem_ids("maps")) {
        ids.push_back(id);
    }
    const auto b = parse_bounds("2,1");
    const auto first = run_theorems(ids, b);
    const auto second = run_theorems(ids, b);
    ASSERT_EQ(first.size(), ids.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        const auto& r = first[i];
        EXPECT_EQ(r.id, second[i].id);
        EXPECT_EQ(r.note, second[i].note);
        EXPECT_EQ(r.witness, second[i].witness);
        EXPECT_EQ(r.instances, second[i].instances);
        if (r.status != ReportStatus::verified) {
            ASSERT_TRUE(r.witness) << r.id;
            EXPECT_TRUE(r.replayed) << r.id;
        } else {
            EXPECT_FALSE(r.witness) << r.id;
            EXPECT_TRUE(r.exhaustive) << r.id;
        }
    }
}

TEST(OracleSuite, UnionWithWholeIsLoggedAsDiscrepancy) {
    const auto r = run_theorems({"whole-union-absorbs"}, parse_bounds("1,1"));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].status, ReportStatus::discrepancy_logged);
    ASSERT_TRUE(r[0].witness);
    EXPECT_TRUE(r[0].replayed);
}

TEST(OracleSuite, BudgetTruncationIsReported) {
    auto b = parse_bounds("2,2");
    b.instance_budget = 10;
    const auto r = run_theorems({"subset-transitive"}, b);
    EXPECT_FALSE(r[0].exhaustive);
    EXPECT_EQ(r[0].instances, 10u);
    EXPECT_NE(r[0].note.find("instance budget"), std::string::npos);
}

} // namespace
