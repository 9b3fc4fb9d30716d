#ifndef SOFTDITO_TOPOLOGY_HPP
#define SOFTDITO_TOPOLOGY_HPP

#include <vector>

#include "family.hpp"
#include "separation.hpp"
#include "soft_map.hpp"

namespace softdito {

/// A soft topology: its members are the open soft sets.
using SoftTopology = SoftFamily<OpenKind>;

inline ValidationReport check_topology(const ContextPtr& ctx, std::vector<SoftSet> members) {
    return SoftTopology(ctx, std::move(members)).check();
}

inline SoftTopology generate_topology(const ContextPtr& ctx, std::vector<SoftSet> generators) {
    return generate_family<OpenKind>(ctx, std::move(generators));
}

inline bool is_open(const SoftTopology& tau, const SoftSet& f) { return tau.contains(f); }

/**
 * int F: the union of all open sets contained in F. Every null φ_B with
 * B ⊆ domain(F) qualifies, so the result always has domain(F); paddings of a
 * listed set qualify only when the set itself does.
 */
inline SoftSet interior(const SoftTopology& tau, const SoftSet& f) {
    require_same_context(tau.context(), f.context(), "interior");
    SoftSet acc = null(f.context(), f.domain());
    for (const auto& g : tau.generators()) {
        if (is_subset(g, f)) {
            acc = unite(acc, g);
        }
    }
    return acc;
}

/// G is a τ-neighborhood of x_A: some open H has x_A ∈̃ H ⊆̃ G.
inline bool is_nbhd_of_point(const SoftTopology& tau, const SoftSet& g, const SoftPoint& p) {
    return point_in(p, interior(tau, g));
}

/// G is a τ-neighborhood of F: some open H has F ⊆̃ H ⊆̃ G.
inline bool is_nbhd_of_set(const SoftTopology& tau, const SoftSet& g, const SoftSet& f) {
    return is_subset(f, interior(tau, g));
}

namespace detail {

inline void require_map_spaces(const SoftMap& f, const ContextPtr& src, const ContextPtr& tgt) {
    require_same_context(f.source(), src, "map source");
    require_same_context(f.target(), tgt, "map target");
}

} // namespace detail

/// Preimages of all open sets of τ2 are open in τ1. Nulls and Ũ_P pull back
/// to nulls and Ũ_E, and paddings pull back to paddings, so listed sets suffice.
inline bool is_tau_continuous(const SoftMap& f, const SoftTopology& tau1, const SoftTopology& tau2) {
    detail::require_map_spaces(f, tau1.context(), tau2.context());
    for (const auto& g : tau2.listed()) {
        if (!tau1.contains(preimage(f, g))) {
            return false;
        }
    }
    return true;
}

/// Images of all open sets of τ1 are open in τ2.
inline bool is_open_map(const SoftMap& f, const SoftTopology& tau1, const SoftTopology& tau2) {
    detail::require_map_spaces(f, tau1.context(), tau2.context());
    for (const auto& g : tau1.generators()) {
        if (!tau2.contains(image(f, g))) {
            return false;
        }
    }
    return true;
}

namespace detail {

inline bool tau_separates(const std::vector<SoftSet>& opens, const SoftPoint& in, const SoftPoint& out) {
    for (const auto& h : opens) {
        if (point_in(in, h) && !point_in(out, h)) {
            return true;
        }
    }
    return false;
}

inline bool tau_disjoint_nbhds(const std::vector<SoftSet>& opens, const SoftSet& left, const SoftSet& right) {
    for (const auto& h1 : opens) {
        if (!is_subset(left, h1)) {
            continue;
        }
        for (const auto& h2 : opens) {
            if (is_subset(right, h2) && intersect(h1, h2).is_null()) {
                return true;
            }
        }
    }
    return false;
}

inline AxiomResult tau_points_axiom(const SoftTopology& tau, Axiom axiom, const PointScope& scope) {
    const auto& ctx = tau.context();
    for (auto a : scope.domains(*ctx)) {
        const auto opens = tau.members_on(a);
        for (std::size_t x = 0; x < ctx->num_points(); ++x) {
            for (std::size_t y = x + 1; y < ctx->num_points(); ++y) {
                const SoftPoint px{ctx, x, a};
                const SoftPoint py{ctx, y, a};
                bool ok = false;
                switch (axiom) {
                case Axiom::T0:
                    ok = tau_separates(opens, px, py) || tau_separates(opens, py, px);
                    break;
                case Axiom::T1:
                    ok = tau_separates(opens, px, py) && tau_separates(opens, py, px);
                    break;
                default:
                    ok = tau_disjoint_nbhds(opens, to_soft_set(px), to_soft_set(py));
                    break;
                }
                if (!ok) {
                    return {axiom, false, AxiomWitness{axiom, a, {x, y}, {}, "tau"}};
                }
            }
        }
    }
    return {axiom, true, std::nullopt};
}

// For every x_A and every F of domain A with x_A ∈̃ F^c ∈ τ and F ≠ φ_E, some
// neighborhoods of x_A and of F (both of domain A) meet in φ_A.
inline AxiomResult tau_regular(const SoftTopology& tau, const PointScope& scope) {
    const auto& ctx = tau.context();
    const auto bottom = null(ctx);
    for (auto a : scope.domains(*ctx)) {
        const auto opens = tau.members_on(a);
        for (const auto& h : opens) {
            const auto f = complement(h);
            if (f == bottom) {
                continue;
            }
            for (std::size_t x = 0; x < ctx->num_points(); ++x) {
                const SoftPoint px{ctx, x, a};
                if (!point_in(px, h)) {
                    continue;
                }
                if (!tau_disjoint_nbhds(opens, to_soft_set(px), f)) {
                    return {Axiom::regular, false, AxiomWitness{Axiom::regular, a, {x}, {f}, "tau"}};
                }
            }
        }
    }
    return {Axiom::regular, true, std::nullopt};
}

// For F, G of domain A with open complements and F ∩̃ G = φ_A, some
// neighborhoods of F and G meet in φ_A.
inline AxiomResult tau_normal(const SoftTopology& tau, const PointScope& scope) {
    const auto& ctx = tau.context();
    for (auto a : scope.domains(*ctx)) {
        const auto opens = tau.members_on(a);
        std::vector<SoftSet> closed;
        for (const auto& h : opens) {
            closed.push_back(complement(h));
        }
        for (std::size_t i = 0; i < closed.size(); ++i) {
            for (std::size_t j = i; j < closed.size(); ++j) {
                if (!intersect(closed[i], closed[j]).is_null()) {
                    continue;
                }
                if (!tau_disjoint_nbhds(opens, closed[i], closed[j])) {
                    return {Axiom::normal, false, AxiomWitness{Axiom::normal, a, {}, {closed[i], closed[j]}, "tau"}};
                }
            }
        }
    }
    return {Axiom::normal, true, std::nullopt};
}

} // namespace detail

/**
 * Decides a τ-separation axiom. Neighborhoods used as separating witnesses
 * have the same domain A as the soft points; since enlarging a neighborhood
 * never helps separation, only open sets of domain A are tried. On failure
 * the witness carries the first offending configuration in canonical order.
 */
inline AxiomResult check_tau_axiom(const SoftTopology& tau, Axiom axiom, const PointScope& scope = PointScope::all()) {
    switch (axiom) {
    case Axiom::T0:
    case Axiom::T1:
    case Axiom::T2:
        return detail::tau_points_axiom(tau, axiom, scope);
    case Axiom::regular:
        return detail::tau_regular(tau, scope);
    case Axiom::normal:
        return detail::tau_normal(tau, scope);
    case Axiom::T3:
        return detail::combine_with_t1(axiom, detail::tau_regular(tau, scope), detail::tau_points_axiom(tau, Axiom::T1, scope));
    case Axiom::T4:
        return detail::combine_with_t1(axiom, detail::tau_normal(tau, scope), detail::tau_points_axiom(tau, Axiom::T1, scope));
    }
    throw ArgumentError("unknown axiom");
}

inline AxiomResult check_tau_axiom(const SoftTopology& tau, std::string_view axiom, const PointScope& scope = PointScope::all()) {
    return check_tau_axiom(tau, parse_axiom(axiom), scope);
}

} // namespace softdito

#endif
