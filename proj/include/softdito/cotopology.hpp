#ifndef SOFTDITO_COTOPOLOGY_HPP
#define SOFTDITO_COTOPOLOGY_HPP

#include <vector>

#include "family.hpp"
#include "separation.hpp"
#include "soft_map.hpp"

namespace softdito {

/// A soft cotopology: its members are the closed soft sets. It carries no
/// relation to any topology; in particular closed sets are not complements
/// of open ones.
using SoftCotopology = SoftFamily<ClosedKind>;

inline ValidationReport check_cotopology(const ContextPtr& ctx, std::vector<SoftSet> members) {
    return SoftCotopology(ctx, std::move(members)).check();
}

inline SoftCotopology generate_cotopology(const ContextPtr& ctx, std::vector<SoftSet> generators) {
    return generate_family<ClosedKind>(ctx, std::move(generators));
}

inline bool is_closed(const SoftCotopology& kappa, const SoftSet& f) { return kappa.contains(f); }

/// M is a remote neighborhood of x_A: some closed K has x_A ∉̃ K ⊇̃ M.
/// Padding a closed set never puts x_A into it, so the minimal closed
/// supersets of M decide.
inline bool is_remote_nbhd(const SoftCotopology& kappa, const SoftSet& m, const SoftPoint& p) {
    for (const auto& k : kappa.minimal_members_containing(m)) {
        if (!point_in(p, k)) {
            return true;
        }
    }
    return false;
}

/// S is a remote neighborhood of F: some closed K ⊇̃ S does not contain F.
inline bool is_remote_nbhd_of_set(const SoftCotopology& kappa, const SoftSet& s, const SoftSet& f) {
    for (const auto& k : kappa.minimal_members_containing(s)) {
        if (!is_subset(f, k)) {
            return true;
        }
    }
    return false;
}

/// cl F: the intersection of all closed sets containing F. Its domain is the
/// intersection of their domains and may exceed domain(F).
inline SoftSet closure(const SoftCotopology& kappa, const SoftSet& f) {
    require_same_context(kappa.context(), f.context(), "closure");
    const auto candidates = kappa.minimal_members_containing(f);
    return intersect(std::span<const SoftSet>(candidates));
}

namespace detail {

// Largest remote neighborhoods of domain A: traces on A of closed sets
// covering A. A remote neighborhood M_A of x_A sits inside such a trace.
inline std::vector<SoftSet> remote_traces(const SoftCotopology& kappa, ParamSet a, std::size_t x) {
    std::vector<SoftSet> out;
    const SoftPoint p{kappa.context(), x, a};
    for (auto& t : kappa.traces_on(a)) {
        if (!point_in(p, t)) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace detail

/**
 * Soft adherence points of F_A: the x_A such that M_A ∪̃ F^c ≠ Ũ_A for every
 * remote neighborhood M_A of x_A. Evaluated directly from remote
 * neighborhoods, independently of closure().
 */
inline std::vector<SoftPoint> adherence_points(const SoftCotopology& kappa, const SoftSet& f) {
    require_same_context(kappa.context(), f.context(), "adherence_points");
    const auto& ctx = kappa.context();
    const auto a = f.domain();
    std::vector<SoftPoint> out;
    if (a.empty()) {
        return out;
    }
    const auto top = whole(ctx, a);
    const auto fc = complement(f);
    for (std::size_t x = 0; x < ctx->num_points(); ++x) {
        bool adherent = true;
        for (const auto& m : detail::remote_traces(kappa, a, x)) {
            if (unite(m, fc) == top) {
                adherent = false;
                break;
            }
        }
        if (adherent) {
            out.push_back(SoftPoint{ctx, x, a});
        }
    }
    return out;
}

/// F': the union (at domain A) of the soft accumulation points of F_A, i.e.
/// the x_A with (M_A ∪̃ x_A) ∪̃ F^c ≠ Ũ_A for every remote neighborhood M_A.
inline SoftSet accumulation(const SoftCotopology& kappa, const SoftSet& f) {
    require_same_context(kappa.context(), f.context(), "accumulation");
    const auto& ctx = kappa.context();
    const auto a = f.domain();
    SoftSet acc = null(ctx, a);
    if (a.empty()) {
        return acc;
    }
    const auto top = whole(ctx, a);
    const auto fc = complement(f);
    for (std::size_t x = 0; x < ctx->num_points(); ++x) {
        const auto xa = soft_point(ctx, x, a);
        bool accumulates = true;
        for (const auto& m : detail::remote_traces(kappa, a, x)) {
            if (unite(unite(m, xa), fc) == top) {
                accumulates = false;
                break;
            }
        }
        if (accumulates) {
            acc = unite(acc, xa);
        }
    }
    return acc;
}

/**
 * S is a strong remote neighborhood of x_A: some closed K_C with
 * A ⊆ C ⊆ domain(S) has x ∉ K(e) and S(e) ⊆ K(e) for every e ∈ C. The
 * containment is pointwise over C, not ⊆̃.
 */
inline bool is_strong_remote_nbhd(const SoftCotopology& kappa, const SoftSet& s, const SoftPoint& p) {
    require_same_context(kappa.context(), s.context(), "is_strong_remote_nbhd");
    if (!p.domain.subset_of(s.domain())) {
        return false;
    }
    for (auto extra : subsets_of(s.domain() - p.domain)) {
        const auto c = p.domain | extra;
        for (const auto& k : kappa.members_on(c)) {
            if (excluded_everywhere(p.point, c, k) && is_subset(restrict(s, c), k)) {
                return true;
            }
        }
    }
    return false;
}

/// S is a strong remote neighborhood of F_A: some closed K_C with
/// A ⊆ C ⊆ domain(S) has S(e) ⊆ K(e) on C and F(e) ⊄ K(e) for every e ∈ A.
inline bool is_strong_remote_nbhd_of_set(const SoftCotopology& kappa, const SoftSet& s, const SoftSet& f) {
    require_same_context(kappa.context(), s.context(), "is_strong_remote_nbhd_of_set");
    if (!f.domain().subset_of(s.domain())) {
        return false;
    }
    for (auto extra : subsets_of(s.domain() - f.domain())) {
        const auto c = f.domain() | extra;
        for (const auto& k : kappa.members_on(c)) {
            if (!is_subset(restrict(s, c), k)) {
                continue;
            }
            bool escapes = true;
            f.domain().for_each([&](std::size_t e) { escapes = escapes && !f.at(e).subset_of(k.at(e)); });
            if (escapes) {
                return true;
            }
        }
    }
    return false;
}

/// Preimages of all closed sets of κ2 are closed in κ1.
inline bool is_kappa_continuous(const SoftMap& f, const SoftCotopology& kappa1, const SoftCotopology& kappa2) {
    require_same_context(f.source(), kappa1.context(), "map source");
    require_same_context(f.target(), kappa2.context(), "map target");
    for (const auto& k : kappa2.listed()) {
        if (!kappa1.contains(preimage(f, k))) {
            return false;
        }
    }
    return true;
}

/// Images of all closed sets of κ1 are closed in κ2.
inline bool is_closed_map(const SoftMap& f, const SoftCotopology& kappa1, const SoftCotopology& kappa2) {
    require_same_context(f.source(), kappa1.context(), "map source");
    require_same_context(f.target(), kappa2.context(), "map target");
    for (const auto& k : kappa1.generators()) {
        if (!kappa2.contains(image(f, k))) {
            return false;
        }
    }
    return true;
}

/// The cotopology induced on f(Ũ_E): every closed set intersected with f(Ũ_E).
inline SoftCotopology restrict_to_image(const SoftMap& f, const SoftCotopology& kappa) {
    require_same_context(f.target(), kappa.context(), "restrict_to_image");
    const auto range = image(f, whole(f.source()));
    std::vector<SoftSet> members{range};
    for (const auto& k : kappa.listed()) {
        members.push_back(intersect(k, range));
    }
    return SoftCotopology(kappa.context(), std::move(members)).reduced();
}

namespace detail {

inline bool nonempty_everywhere(const SoftSet& k) {
    bool ok = true;
    k.domain().for_each([&](std::size_t e) { ok = ok && !k.at(e).empty(); });
    return ok;
}

inline bool escapes_everywhere(const SoftSet& f, const SoftSet& k) {
    bool ok = true;
    f.domain().for_each([&](std::size_t e) { ok = ok && !f.at(e).subset_of(k.at(e)); });
    return ok;
}

// Some closed K, L of domain A, K strongly remote from `left` and L from
// `right`, with K ∪̃ L = Ũ_A. Strong remote neighborhoods of domain A live
// inside closed sets of domain exactly A.
template<typename LeftOk_, typename RightOk_>
bool kappa_strongly_separated(const std::vector<SoftSet>& closed, const SoftSet& top, LeftOk_ left_ok, RightOk_ right_ok) {
    for (const auto& k : closed) {
        if (!left_ok(k)) {
            continue;
        }
        for (const auto& l : closed) {
            if (right_ok(l) && unite(k, l) == top) {
                return true;
            }
        }
    }
    return false;
}

inline bool kappa_remote_contains(const std::vector<SoftSet>& traces, const SoftPoint& away, const SoftPoint& in) {
    for (const auto& t : traces) {
        if (!point_in(away, t) && point_in(in, t)) {
            return true;
        }
    }
    return false;
}

inline AxiomResult kappa_points_axiom(const SoftCotopology& kappa, Axiom axiom, const PointScope& scope) {
    const auto& ctx = kappa.context();
    for (auto a : scope.domains(*ctx)) {
        const auto traces = kappa.traces_on(a);
        const auto closed = kappa.members_on(a);
        const auto top = whole(ctx, a);
        for (std::size_t x = 0; x < ctx->num_points(); ++x) {
            for (std::size_t y = x + 1; y < ctx->num_points(); ++y) {
                const SoftPoint px{ctx, x, a};
                const SoftPoint py{ctx, y, a};
                bool ok = false;
                switch (axiom) {
                case Axiom::T0:
                    ok = kappa_remote_contains(traces, px, py) || kappa_remote_contains(traces, py, px);
                    break;
                case Axiom::T1:
                    ok = kappa_remote_contains(traces, px, py) && kappa_remote_contains(traces, py, px);
                    break;
                default:
                    ok = kappa_strongly_separated(
                        closed, top,
                        [&](const SoftSet& k) { return excluded_everywhere(x, a, k); },
                        [&](const SoftSet& l) { return excluded_everywhere(y, a, l); });
                    break;
                }
                if (!ok) {
                    return {axiom, false, AxiomWitness{axiom, a, {x, y}, {}, "kappa"}};
                }
            }
        }
    }
    return {axiom, true, std::nullopt};
}

inline AxiomResult kappa_regular(const SoftCotopology& kappa, const PointScope& scope) {
    const auto& ctx = kappa.context();
    for (auto a : scope.domains(*ctx)) {
        const auto closed = kappa.members_on(a);
        const auto top = whole(ctx, a);
        for (const auto& k : closed) {
            if (!nonempty_everywhere(k)) {
                continue;
            }
            for (std::size_t x = 0; x < ctx->num_points(); ++x) {
                if (point_in(SoftPoint{ctx, x, a}, k)) {
                    continue;
                }
                const bool ok = kappa_strongly_separated(
                    closed, top,
                    [&](const SoftSet& s) { return excluded_everywhere(x, a, s); },
                    [&](const SoftSet& t) { return escapes_everywhere(k, t); });
                if (!ok) {
                    return {Axiom::regular, false, AxiomWitness{Axiom::regular, a, {x}, {k}, "kappa"}};
                }
            }
        }
    }
    return {Axiom::regular, true, std::nullopt};
}

inline AxiomResult kappa_normal(const SoftCotopology& kappa, const PointScope& scope) {
    const auto& ctx = kappa.context();
    for (auto a : scope.domains(*ctx)) {
        const auto closed = kappa.members_on(a);
        const auto top = whole(ctx, a);
        for (std::size_t i = 0; i < closed.size(); ++i) {
            for (std::size_t j = i; j < closed.size(); ++j) {
                const auto& k = closed[i];
                const auto& l = closed[j];
                if (!nonempty_everywhere(k) || !nonempty_everywhere(l) || !intersect(k, l).is_null()) {
                    continue;
                }
                const bool ok = kappa_strongly_separated(
                    closed, top,
                    [&](const SoftSet& s) { return escapes_everywhere(k, s); },
                    [&](const SoftSet& t) { return escapes_everywhere(l, t); });
                if (!ok) {
                    return {Axiom::normal, false, AxiomWitness{Axiom::normal, a, {}, {k, l}, "kappa"}};
                }
            }
        }
    }
    return {Axiom::normal, true, std::nullopt};
}

} // namespace detail

/**
 * Decides a κ-separation axiom. T0/T1 use remote neighborhoods containing the
 * other point; T2, regularity and normality use strong remote neighborhoods
 * of domain A whose union is Ũ_A. Closed sets to be separated (regularity,
 * normality) must be non-empty at every parameter of A, since a strong remote
 * neighborhood of a set that is empty somewhere cannot exist.
 */
inline AxiomResult check_kappa_axiom(const SoftCotopology& kappa, Axiom axiom, const PointScope& scope = PointScope::all()) {
    switch (axiom) {
    case Axiom::T0:
    case Axiom::T1:
    case Axiom::T2:
        return detail::kappa_points_axiom(kappa, axiom, scope);
    case Axiom::regular:
        return detail::kappa_regular(kappa, scope);
    case Axiom::normal:
        return detail::kappa_normal(kappa, scope);
    case Axiom::T3:
        return detail::combine_with_t1(axiom, detail::kappa_regular(kappa, scope), detail::kappa_points_axiom(kappa, Axiom::T1, scope));
    case Axiom::T4:
        return detail::combine_with_t1(axiom, detail::kappa_normal(kappa, scope), detail::kappa_points_axiom(kappa, Axiom::T1, scope));
    }
    throw ArgumentError("unknown axiom");
}

inline AxiomResult check_kappa_axiom(const SoftCotopology& kappa, std::string_view axiom, const PointScope& scope = PointScope::all()) {
    return check_kappa_axiom(kappa, parse_axiom(axiom), scope);
}

} // namespace softdito

#endif
