#ifndef SOFTDITO_ORACLE_PROPERTIES_HPP
#define SOFTDITO_ORACLE_PROPERTIES_HPP

#include <algorithm>
#include <iterator>

#include "../ditopology.hpp"
#include "enumerate.hpp"

// Building blocks for the theorem predicates. Most of them restate a
// definition by brute force over small contexts so that the library's
// shortcuts (listed members only, minimal closed supersets) are checked
// against something that does not share them.
namespace softdito::oracle::props {

inline bool implies(bool a, bool b) { return !a || b; }

/// Every soft set whose domain is exactly `a`, first parameter most significant.
inline std::vector<SoftSet> sets_with_domain(const ContextPtr& ctx, ParamSet a) {
    const auto idx = a.indices();
    const auto values = subsets_of(ctx->universe());
    std::vector<std::size_t> digit(idx.size(), 0);
    std::vector<SoftSet> out;
    while (true) {
        std::vector<PointSet> v(ctx->num_params());
        for (std::size_t i = 0; i < idx.size(); ++i) {
            v[idx[i]] = values[digit[i]];
        }
        out.push_back(make_soft_set(ctx, a, std::move(v)));
        std::size_t k = idx.size();
        while (k > 0 && ++digit[k - 1] == values.size()) {
            digit[--k] = 0;
        }
        if (k == 0) {
            return out;
        }
    }
}

inline bool tau_holds(const SoftTopology& t, Axiom a, const PointScope& s = PointScope::all()) {
    return check_tau_axiom(t, a, s).holds;
}

inline bool kappa_holds(const SoftCotopology& k, Axiom a, const PointScope& s = PointScope::all()) {
    return check_kappa_axiom(k, a, s).holds;
}

inline bool dito_holds(const Ditopology& d, Axiom a, const PointScope& s = PointScope::all()) {
    return check_dito_axiom(d, a, s).holds;
}

template<typename Pred_>
bool all_points(const ContextPtr& ctx, Pred_ pred) {
    for (const auto& p : enumerate_points(ctx)) {
        if (!pred(p)) {
            return false;
        }
    }
    return true;
}

/// A family of subsets of U contains ∅ and U and is closed under binary ∪ and ∩.
inline bool classical_lattice(const std::vector<PointSet>& fam, PointSet universe) {
    const auto has = [&](PointSet s) { return std::find(fam.begin(), fam.end(), s) != fam.end(); };
    if (!has(PointSet{}) || !has(universe)) {
        return false;
    }
    for (auto a : fam) {
        for (auto b : fam) {
            if (!has(a | b) || !has(a & b)) {
                return false;
            }
        }
    }
    return true;
}

/// The member-wise intersection of two families, materialized, is again a
/// valid family and equals what family_intersection() returns.
template<typename Kind_>
bool intersection_is_structure(const SoftFamily<Kind_>& a, const SoftFamily<Kind_>& b) {
    const auto ma = a.all_members();
    const auto mb = b.all_members();
    std::vector<SoftSet> common;
    std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(common));
    for (const auto& f : common) {
        for (const auto& g : common) {
            const auto u = unite(f, g);
            const auto n = intersect(f, g);
            if (!std::binary_search(common.begin(), common.end(), u) || !std::binary_search(common.begin(), common.end(), n)) {
                return false;
            }
        }
    }
    const auto fam = family_intersection(a, b);
    return fam.valid() && fam.all_members() == common;
}

/**
 * τ-continuity at x_A in one of three equivalent forms, quantifying over
 * neighborhoods G of f(x_A) with domain ψ(A):
 *   1: some neighborhood H_A of x_A has f(H_A) ⊆̃ G,
 *   2: some neighborhood H_A of x_A has H_A ⊆̃ f⁻¹(G),
 *   3: f⁻¹(G) is a neighborhood of x_A.
 */
inline bool tau_continuous_at(int form, const SoftMap& f, const SoftTopology& tau1, const SoftTopology& tau2,
                              const SoftPoint& p) {
    const auto fp = image(f, p);
    std::vector<SoftSet> hoods;
    if (form != 3) {
        for (auto& h : sets_with_domain(f.source(), p.domain)) {
            if (is_nbhd_of_point(tau1, h, p)) {
                hoods.push_back(std::move(h));
            }
        }
    }
    for (const auto& g : sets_with_domain(f.target(), fp.domain)) {
        if (!is_nbhd_of_point(tau2, g, fp)) {
            continue;
        }
        const auto pre = preimage(f, g);
        bool ok = false;
        if (form == 3) {
            ok = is_nbhd_of_point(tau1, pre, p);
        } else {
            ok = std::any_of(hoods.begin(), hoods.end(), [&](const SoftSet& h) {
                return form == 1 ? is_subset(image(f, h), g) : is_subset(h, pre);
            });
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

/// κ-continuity at x_A as defined: every remote neighborhood M of f(x_A)
/// with domain ψ(A) has a remote neighborhood N_A of x_A with
/// f(N_A) ⊇̃ M ∩̃ f(Ũ_E).
inline bool kappa_continuous_at(const SoftMap& f, const SoftCotopology& kappa1, const SoftCotopology& kappa2,
                                const SoftPoint& p) {
    const auto fp = image(f, p);
    const auto range = image(f, whole(f.source()));
    std::vector<SoftSet> remote;
    for (auto& n : sets_with_domain(f.source(), p.domain)) {
        if (is_remote_nbhd(kappa1, n, p)) {
            remote.push_back(std::move(n));
        }
    }
    for (const auto& m : sets_with_domain(f.target(), fp.domain)) {
        if (!is_remote_nbhd(kappa2, m, fp)) {
            continue;
        }
        const auto need = intersect(m, range);
        const bool ok = std::any_of(remote.begin(), remote.end(), [&](const SoftSet& n) { return is_subset(need, image(f, n)); });
        if (!ok) {
            return false;
        }
    }
    return true;
}

/// Preimages of remote neighborhoods of f(x_A) (domain ψ(A)) are remote
/// neighborhoods of x_A. With `on_image`, the remote neighborhoods are taken
/// inside f(Ũ_E) with respect to the induced cotopology.
inline bool kappa_remote_preimages(const SoftMap& f, const SoftCotopology& kappa1, const SoftCotopology& kappa2,
                                   const SoftPoint& p, bool on_image) {
    const auto fp = image(f, p);
    const auto range = image(f, whole(f.source()));
    const auto induced = on_image ? restrict_to_image(f, kappa2) : kappa2;
    for (const auto& k : sets_with_domain(f.target(), fp.domain)) {
        if (on_image && !is_subset(k, range)) {
            continue;
        }
        if (is_remote_nbhd(induced, k, fp) && !is_remote_nbhd(kappa1, preimage(f, k), p)) {
            return false;
        }
    }
    return true;
}

/// τ-separation with the two points allowed different domains: x_A against
/// y_B for all non-empty A, B and x ≠ y, separating sets of any domain.
inline bool tau_mixed_domain(const SoftTopology& tau, Axiom axiom) {
    const auto& ctx = tau.context();
    const auto opens = tau.all_members();
    const auto doms = nonempty_domains(*ctx);
    for (std::size_t x = 0; x < ctx->num_points(); ++x) {
        for (std::size_t y = x + 1; y < ctx->num_points(); ++y) {
            for (auto a : doms) {
                for (auto b : doms) {
                    const SoftPoint px{ctx, x, a};
                    const SoftPoint py{ctx, y, b};
                    bool ok = false;
                    if (axiom == Axiom::T2) {
                        ok = ::softdito::detail::tau_disjoint_nbhds(opens, to_soft_set(px), to_soft_set(py));
                    } else {
                        const bool xy = ::softdito::detail::tau_separates(opens, px, py);
                        const bool yx = ::softdito::detail::tau_separates(opens, py, px);
                        ok = axiom == Axiom::T0 ? (xy || yx) : (xy && yx);
                    }
                    if (!ok) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// x_A equals the intersection of the closed sets with domain exactly A that
/// contain it. With no such set the empty intersection is read as Ũ_A.
inline bool kappa_closed_intersection_is_point(const SoftCotopology& kappa, const SoftPoint& p) {
    auto meet = whole(kappa.context(), p.domain);
    for (const auto& k : kappa.members_on(p.domain)) {
        if (point_in(p, k)) {
            meet = intersect(meet, k);
        }
    }
    return meet == to_soft_set(p);
}

/// Strong remote neighborhood with S ⊆̃ K_C (so domain(S) ⊆ C) in place of
/// the implemented pointwise containment over C ⊆ domain(S).
inline bool strong_remote_superset_reading(const SoftCotopology& kappa, const SoftSet& s, const SoftPoint& p) {
    const auto& ctx = kappa.context();
    const auto base = p.domain | s.domain();
    for (auto extra : subsets_of(ctx->all_params() - base)) {
        const auto c = base | extra;
        for (const auto& k : kappa.members_on(c)) {
            if (excluded_everywhere(p.point, c, k) && is_subset(s, k)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace softdito::oracle::props

#endif
