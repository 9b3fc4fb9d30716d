#include <gtest/gtest.h>

#include "support.hpp"

using namespace softdito;
using softdito::testing::named;
using softdito::testing::sample;
using softdito::testing::set_of;

namespace {

std::vector<std::string> labels(const Context& ctx, const std::vector<std::size_t>& pts) {
    std::vector<std::string> out;
    for (auto i : pts) {
        out.push_back(ctx.points()[i]);
    }
    return out;
}

class FixtureP1 : public ::testing::Test {
protected:
    dsl::SpecDocument doc = sample("p1.sdt");
    ContextPtr ctx = named(doc.contexts, "C1");
    SoftTopology tau = named(doc.topologies, "tau");
    ParamSet A = named(doc.domains, "A").value;
};

TEST_F(FixtureP1, ListedFamilyIsATopology) {
    EXPECT_TRUE(check_topology(ctx, tau.listed()).ok());
    EXPECT_TRUE(check_topology(ctx, {}).ok());
}

TEST_F(FixtureP1, InteriorKeepsOnlyOpenParts) {
    const auto h = set_of(ctx, {{"e1", {"x"}}, {"e2", {"x"}}});
    EXPECT_EQ(interior(tau, h), set_of(ctx, {{"e1", {"x"}}, {"e2", {}}}));
    EXPECT_EQ(interior(tau, whole(ctx)), whole(ctx));
    EXPECT_EQ(interior(tau, named(doc.sets, "F")), named(doc.sets, "F"));
}

TEST_F(FixtureP1, ParameterSlicesAreClassicalTopologies) {
    const auto x = ctx->point_set({"x"});
    const auto xz = ctx->universe();
    EXPECT_EQ(slice_at_parameter(tau, "e1"), (std::vector<PointSet>{PointSet{}, x, xz}));
    EXPECT_EQ(slice_at_parameter(tau, "e3"), (std::vector<PointSet>{PointSet{}, xz}));
    EXPECT_THROW(slice_at_parameter(tau, std::size_t{9}), DomainError);
}

TEST_F(FixtureP1, T0ButNotT1AtTheDeclaredDomain) {
    const auto scope = PointScope::at(A);
    EXPECT_TRUE(check_tau_axiom(tau, Axiom::T0, scope).holds);
    const auto t1 = check_tau_axiom(tau, Axiom::T1, scope);
    ASSERT_FALSE(t1.holds);
    ASSERT_TRUE(t1.witness);
    EXPECT_EQ(t1.witness->domain, A);
    EXPECT_EQ(labels(*ctx, t1.witness->points), (std::vector<std::string>{"x", "z"}));
    EXPECT_FALSE(check_tau_axiom(tau, "T2", scope).holds);
}

TEST_F(FixtureP1, NoNeighborhoodOfZExcludesX) {
    const auto z = make_point(ctx, "z", {"e1", "e2"});
    const auto x = make_point(ctx, "x", {"e1", "e2"});
    for (const auto& g : tau.members_on(A)) {
        if (is_nbhd_of_point(tau, g, z)) {
            EXPECT_TRUE(point_in(x, g));
        }
    }
}

TEST_F(FixtureP1, UnknownAxiomTagIsRejected) {
    EXPECT_THROW(check_tau_axiom(tau, "T7"), ArgumentError);
}

TEST(TopologyCheck, MissingIntersectionIsNamed) {
    const auto ctx = Context::make({"x", "y"}, {"e1", "e2"});
    const auto f = set_of(ctx, {{"e1", {"x"}}, {"e2", {"x"}}});
    const auto h = set_of(ctx, {{"e1", {"x"}}, {"e2", {"y"}}});
    const auto report = check_topology(ctx, {f, h});
    ASSERT_FALSE(report.ok());
    bool named_pair = false;
    for (const auto& v : report.violations) {
        if (v.op == FamilyOp::intersect && v.result == intersect(f, h)) {
            named_pair = (v.left == f && v.right == h) || (v.left == h && v.right == f);
        }
    }
    EXPECT_TRUE(named_pair);
}

TEST(TopologyCheck, SecondFixtureIsNotClosedUnderUnion) {
    const auto doc = sample("p2.sdt");
    const auto ctx = named(doc.contexts, "C1");
    const auto tau = named(doc.topologies, "tau");
    const auto report = check_topology(ctx, tau.listed());
    ASSERT_FALSE(report.ok());
    const auto scope = PointScope::at(named(doc.domains, "A").value);
    EXPECT_TRUE(check_tau_axiom(tau, Axiom::T1, scope).holds);
    EXPECT_FALSE(check_tau_axiom(tau, Axiom::T2, scope).holds);
}

TEST(TopologyAxioms, ThirdFixtureIsRegularButNotT1) {
    const auto doc = sample("p3.sdt");
    const auto tau = named(doc.topologies, "tau");
    EXPECT_TRUE(check_topology(tau.context(), tau.listed()).ok());
    EXPECT_TRUE(check_tau_axiom(tau, Axiom::regular).holds);
    const auto t1 = check_tau_axiom(tau, Axiom::T1);
    ASSERT_FALSE(t1.holds);
    EXPECT_EQ(labels(*tau.context(), t1.witness->points), (std::vector<std::string>{"y", "z"}));
    EXPECT_FALSE(check_tau_axiom(tau, Axiom::T3).holds);
}

// Properties checked over every topology at (2,1) and every point and set.
class TopologyLaws : public ::testing::Test {
protected:
    oracle::EnumBounds bounds = oracle::parse_bounds("2,1");
    oracle::Catalog cat{bounds};
};

TEST_F(TopologyLaws, InteriorIsTheLargestOpenSubset) {
    for (std::size_t c = 0; c < cat.size(); ++c) {
        for (const auto& tau : cat.topologies(c)) {
            for (const auto& f : cat.sets(c)) {
                const auto in = interior(tau, f);
                EXPECT_TRUE(is_open(tau, in));
                EXPECT_TRUE(is_subset(in, f));
                EXPECT_EQ(interior(tau, in), in);
                for (const auto& g : tau.all_members()) {
                    if (is_subset(g, f)) {
                        EXPECT_TRUE(is_subset(g, in));
                    }
                }
            }
        }
    }
}

TEST_F(TopologyLaws, SeparationChainAndSlices) {
    for (std::size_t c = 0; c < cat.size(); ++c) {
        const auto& ctx = cat.contexts()[c];
        for (const auto& tau : cat.topologies(c)) {
            const bool t0 = check_tau_axiom(tau, Axiom::T0).holds;
            const bool t1 = check_tau_axiom(tau, Axiom::T1).holds;
            const bool t2 = check_tau_axiom(tau, Axiom::T2).holds;
            EXPECT_TRUE(!t2 || t1);
            EXPECT_TRUE(!t1 || t0);
            for (std::size_t e = 0; e < ctx->num_params(); ++e) {
                EXPECT_TRUE(oracle::props::classical_lattice(slice_at_parameter(tau, e), ctx->universe()));
            }
        }
    }
}

TEST_F(TopologyLaws, IdentityIsContinuousExactlyWhenFiner) {
    for (std::size_t c = 0; c < cat.size(); ++c) {
        const auto id = SoftMap::identity(cat.contexts()[c]);
        for (const auto& t1 : cat.topologies(c)) {
            for (const auto& t2 : cat.topologies(c)) {
                EXPECT_EQ(is_tau_continuous(id, t1, t2), t1.includes(t2));
                EXPECT_EQ(is_open_map(id, t1, t2), t2.includes(t1));
            }
        }
    }
}

TEST(TopologyContinuity, ConstantMapIntoIndiscreteTargetIsContinuous) {
    const auto src = oracle::standard_context(2, 2);
    const auto tgt = oracle::standard_context(2, 1);
    const SoftMap f(src, tgt, {0, 0}, {0, 0});
    const SoftTopology indiscrete(tgt, {});
    for (const auto& tau : oracle::enumerate_topologies(src, oracle::EnumBounds{})) {
        EXPECT_TRUE(is_tau_continuous(f, tau, indiscrete));
    }
}

} // namespace
