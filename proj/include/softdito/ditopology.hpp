#ifndef SOFTDITO_DITOPOLOGY_HPP
#define SOFTDITO_DITOPOLOGY_HPP

#include <string>
#include <vector>

#include "cotopology.hpp"
#include "topology.hpp"

namespace softdito {

/// An independent pair (τ, κ) on one context. Nothing ties the closed sets
/// to the complements of the open ones.
struct Ditopology {
    SoftTopology tau;
    SoftCotopology kappa;

    Ditopology(SoftTopology t, SoftCotopology k) : tau(std::move(t)), kappa(std::move(k)) {
        require_same_context(tau.context(), kappa.context(), "ditopology");
    }

    const ContextPtr& context() const { return tau.context(); }
};

struct DitoValidationReport {
    ValidationReport tau;
    ValidationReport kappa;
    bool ok() const { return tau.ok() && kappa.ok(); }
};

inline DitoValidationReport check_ditopology(const ContextPtr& ctx, std::vector<SoftSet> tau_members,
                                             std::vector<SoftSet> kappa_members) {
    return {check_topology(ctx, std::move(tau_members)), check_cotopology(ctx, std::move(kappa_members))};
}

/// δ1 is coarser than δ2 in the literal sense τ2 ⊆ τ1 and κ2 ⊆ κ1.
inline bool is_coarser(const Ditopology& d1, const Ditopology& d2) {
    return d1.tau.includes(d2.tau) && d1.kappa.includes(d2.kappa);
}

/// (F, M) is a neighborhood of x_A: F a τ-neighborhood and M a remote one.
inline bool is_dito_nbhd(const Ditopology& d, const SoftSet& f, const SoftSet& m, const SoftPoint& p) {
    return is_nbhd_of_point(d.tau, f, p) && is_remote_nbhd(d.kappa, m, p);
}

inline SoftSet dito_interior(const Ditopology& d, const SoftSet& f) { return interior(d.tau, f); }
inline SoftSet dito_closure(const Ditopology& d, const SoftSet& f) { return closure(d.kappa, f); }

inline bool is_dito_continuous(const SoftMap& f, const Ditopology& d1, const Ditopology& d2) {
    return is_tau_continuous(f, d1.tau, d2.tau) && is_kappa_continuous(f, d1.kappa, d2.kappa);
}

/// Conjunction of the τ- and κ-versions of `axiom`. The τ side is checked
/// first, so the witness names τ whenever both sides fail.
inline AxiomResult check_dito_axiom(const Ditopology& d, Axiom axiom, const PointScope& scope = PointScope::all()) {
    auto t = check_tau_axiom(d.tau, axiom, scope);
    if (!t.holds) {
        return t;
    }
    return check_kappa_axiom(d.kappa, axiom, scope);
}

inline AxiomResult check_dito_axiom(const Ditopology& d, std::string_view axiom, const PointScope& scope = PointScope::all()) {
    return check_dito_axiom(d, parse_axiom(axiom), scope);
}

} // namespace softdito

#endif
