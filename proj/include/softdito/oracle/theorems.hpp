#ifndef SOFTDITO_ORACLE_THEOREMS_HPP
#define SOFTDITO_ORACLE_THEOREMS_HPP

#include <string>
#include <vector>

#include "generators.hpp"
#include "properties.hpp"

namespace softdito::oracle {

enum class ReportStatus { verified, counterexample, discrepancy_logged };

inline const char* to_string(ReportStatus s) {
    switch (s) {
    case ReportStatus::verified: return "verified";
    case ReportStatus::counterexample: return "counterexample";
    case ReportStatus::discrepancy_logged: return "discrepancy-logged";
    }
    return "?";
}

/**
 * Outcome of one theorem check. `instances` counts the instances the
 * predicate was evaluated on and `skipped` those outside its scope.
 * `exhaustive` is false when the instance budget cut the search short.
 * `witness` is a DSL document; `replayed` records that parsing it back and
 * re-running the predicate reproduced the verdict.
 */
struct TheoremReport {
    std::string id;
    std::string statement;
    ClaimKind kind = ClaimKind::universal;
    ReportStatus status = ReportStatus::verified;
    std::uint64_t instances = 0;
    std::uint64_t skipped = 0;
    std::uint64_t failures = 0;
    bool exhaustive = true;
    std::string bounds;
    std::optional<std::string> witness;
    bool replayed = false;
    std::string note;
};

/**
 * A checkable claim. For universal claims `holds` must be true on every
 * generated instance; for reading comparisons it says that two readings
 * agree; for existence claims it marks an example. `remark` explains a
 * known divergence and is attached whenever the report is not clean.
 */
struct Theorem {
    std::string id;
    std::string statement;
    ClaimKind kind = ClaimKind::universal;
    gen::Search search;
    std::function<bool(const Instance&)> holds;
    std::function<bool(const Instance&)> applies = {};
    std::string remark = {};
};

namespace detail {

using I = const Instance&;

inline const SoftSet& S(I i, std::size_t k) { return i.sets.at(k); }
inline const SoftTopology& T(I i, std::size_t k = 0) { return i.topologies.at(k); }
inline const SoftCotopology& K(I i, std::size_t k = 0) { return i.cotopologies.at(k); }
inline const SoftMap& M(I i, std::size_t k = 0) { return i.maps.at(k); }
inline const SoftPoint& P(I i) { return i.points.at(0); }
inline Ditopology D(I i, std::size_t k = 0) { return Ditopology(T(i, k), K(i, k)); }

inline bool every_set(const ContextPtr& ctx, const std::function<bool(const SoftSet&)>& pred) {
    for (const auto& f : enumerate_soft_sets(ctx)) {
        if (!pred(f)) {
            return false;
        }
    }
    return true;
}

inline bool every_domain(const ContextPtr& ctx, const std::function<bool(ParamSet)>& pred) {
    for (auto a : subsets_of(ctx->all_params())) {
        if (!pred(a)) {
            return false;
        }
    }
    return true;
}

inline std::vector<Theorem> algebra_theorems() {
    using props::implies;
    const auto& all = gen::sets;
    std::vector<Theorem> v;
    v.push_back({"de-morgan-intersection-inclusion", "(F ∩̃ G ∩̃ H)^c ⊆̃ F^c ∪̃ G^c ∪̃ H^c", ClaimKind::universal, all(3),
                 [](I i) {
                     return is_subset(complement(intersect({S(i, 0), S(i, 1), S(i, 2)})),
                                      unite({complement(S(i, 0)), complement(S(i, 1)), complement(S(i, 2))}));
                 }});
    v.push_back({"de-morgan-union-inclusion", "(F ∪̃ G ∪̃ H)^c ⊇̃ F^c ∩̃ G^c ∩̃ H^c", ClaimKind::universal, all(3),
                 [](I i) {
                     return is_subset(intersect({complement(S(i, 0)), complement(S(i, 1)), complement(S(i, 2))}),
                                      complement(unite({S(i, 0), S(i, 1), S(i, 2)})));
                 }});
    v.push_back({"de-morgan-strictness", "some F, G have (F ∩̃ G)^c ≠ F^c ∪̃ G^c", ClaimKind::existence, all(2),
                 [](I i) { return complement(intersect(S(i, 0), S(i, 1))) != unite(complement(S(i, 0)), complement(S(i, 1))); }});
    v.push_back({"de-morgan-union-strictness", "some F, G have (F ∪̃ G)^c ≠ F^c ∩̃ G^c", ClaimKind::existence, all(2),
                 [](I i) { return complement(unite(S(i, 0), S(i, 1))) != intersect(complement(S(i, 0)), complement(S(i, 1))); }});
    v.push_back({"null-intersection-absorbs", "φ_E ∩̃ F_A = φ_A", ClaimKind::universal, all(1), [](I i) {
                     const auto& f = S(i, 0);
                     return intersect(null(f.context()), f) == null(f.context(), f.domain());
                 }});
    v.push_back({"null-union-identity", "φ_E ∪̃ F_A = F_A", ClaimKind::universal, all(1),
                 [](I i) { return unite(null(S(i, 0).context()), S(i, 0)) == S(i, 0); },
                 {},
                 "union takes the union of the domains, so φ_E ∪̃ F_A has domain E and differs from F_A whenever A ≠ E"});
    v.push_back({"whole-intersection-identity", "Ũ_E ∩̃ F_A = F_A", ClaimKind::universal, all(1),
                 [](I i) { return intersect(whole(S(i, 0).context()), S(i, 0)) == S(i, 0); }});
    v.push_back({"whole-union-absorbs", "Ũ_E ∪̃ F_A = Ũ_A", ClaimKind::universal, all(1),
                 [](I i) {
                     const auto& f = S(i, 0);
                     return unite(whole(f.context()), f) == whole(f.context(), f.domain());
                 },
                 {},
                 "union takes the union of the domains, so Ũ_E ∪̃ F_A = Ũ_E, which differs from Ũ_A whenever A ≠ E"});
    v.push_back({"subset-iff-intersection", "F ⊆̃ G iff F ∩̃ G = F", ClaimKind::universal, all(2),
                 [](I i) { return is_subset(S(i, 0), S(i, 1)) == (intersect(S(i, 0), S(i, 1)) == S(i, 0)); }});
    v.push_back({"subset-iff-union", "F ⊆̃ G iff F ∪̃ G = G", ClaimKind::universal, all(2),
                 [](I i) { return is_subset(S(i, 0), S(i, 1)) == (unite(S(i, 0), S(i, 1)) == S(i, 1)); }});
    v.push_back({"disjoint-inside-complement",
                 "A ⊆ B and F_A ∩̃ G_B = φ_(A∩B) imply F_A ⊆̃ G_B^c; for A = B the two are equivalent", ClaimKind::universal,
                 all(2), [](I i) {
                     const auto& f = S(i, 0);
                     const auto& g = S(i, 1);
                     const bool disjoint = intersect(f, g) == null(f.context(), f.domain() & g.domain());
                     const bool inside = is_subset(f, complement(g));
                     if (f.domain() == g.domain()) {
                         return disjoint == inside;
                     }
                     return implies(f.domain().subset_of(g.domain()) && disjoint, inside);
                 }});
    v.push_back({"complement-laws", "F_A ∪̃ F_A^c = Ũ_A and F_A ∩̃ F_A^c = φ_A", ClaimKind::universal, all(1), [](I i) {
                     const auto& f = S(i, 0);
                     return unite(f, complement(f)) == whole(f.context(), f.domain())
                         && intersect(f, complement(f)) == null(f.context(), f.domain());
                 }});
    v.push_back({"complement-reverses-inclusion", "F_A ⊆̃ G_B iff G_B^c ⊆̃ F_A^c", ClaimKind::universal, all(2),
                 [](I i) { return is_subset(S(i, 0), S(i, 1)) == is_subset(complement(S(i, 1)), complement(S(i, 0))); },
                 {},
                 "⊆̃ includes domain inclusion, which complements do not reverse: A ⊆ B forces B ⊆ A on the right, so the "
                 "equivalence holds only when A = B"});
    v.push_back({"complement-reverses-inclusion-equal-domains", "for F_A, G_A: F_A ⊆̃ G_A iff G_A^c ⊆̃ F_A^c",
                 ClaimKind::universal, all(2),
                 [](I i) { return is_subset(S(i, 0), S(i, 1)) == is_subset(complement(S(i, 1)), complement(S(i, 0))); },
                 [](I i) { return S(i, 0).domain() == S(i, 1).domain(); }});
    v.push_back({"subset-transitive", "F ⊆̃ G and G ⊆̃ H imply F ⊆̃ H", ClaimKind::universal, all(3), [](I i) {
                     return implies(is_subset(S(i, 0), S(i, 1)) && is_subset(S(i, 1), S(i, 2)), is_subset(S(i, 0), S(i, 2)));
                 }});
    v.push_back({"intersection-monotone", "F ⊆̃ G and H ⊆̃ S imply F ∩̃ H ⊆̃ G ∩̃ S", ClaimKind::universal, all(4), [](I i) {
                     return implies(is_subset(S(i, 0), S(i, 1)) && is_subset(S(i, 2), S(i, 3)),
                                    is_subset(intersect(S(i, 0), S(i, 2)), intersect(S(i, 1), S(i, 3))));
                 }});
    v.push_back({"inside-complement-disjoint", "F_A ⊆̃ G_B^c implies F_A ∩̃ G_B = φ_A", ClaimKind::universal, all(2), [](I i) {
                     const auto& f = S(i, 0);
                     return implies(is_subset(f, complement(S(i, 1))), intersect(f, S(i, 1)) == null(f.context(), f.domain()));
                 }});
    v.push_back({"union-intersection-lattice-laws", "∪̃ and ∩̃ are idempotent, commutative and associative",
                 ClaimKind::universal, all(3), [](I i) {
                     const auto& f = S(i, 0);
                     const auto& g = S(i, 1);
                     const auto& h = S(i, 2);
                     return unite(f, f) == f && intersect(f, f) == f && unite(f, g) == unite(g, f)
                         && intersect(f, g) == intersect(g, f) && unite(unite(f, g), h) == unite(f, unite(g, h))
                         && intersect(intersect(f, g), h) == intersect(f, intersect(g, h));
                 }});
    return v;
}

inline std::vector<Theorem> map_theorems() {
    std::vector<Theorem> v;
    v.push_back({"image-null-and-whole", "f(φ_A) = φ_ψ(A) for every A ⊆ E, and f(Ũ_E) ⊆̃ Ṽ_P", ClaimKind::universal,
                 gen::maps(0, 0), [](I i) {
                     const auto& f = M(i);
                     return every_domain(f.source(), [&](ParamSet a) {
                                return image(f, null(f.source(), a)) == null(f.target(), f.map_params(a));
                            })
                         && is_subset(image(f, whole(f.source())), whole(f.target()));
                 }});
    v.push_back({"image-preserves-union", "f(F ∪̃ G) = f(F) ∪̃ f(G)", ClaimKind::universal, gen::maps(2, 0), [](I i) {
                     return image(M(i), unite(S(i, 0), S(i, 1))) == unite(image(M(i), S(i, 0)), image(M(i), S(i, 1)));
                 }});
    v.push_back({"image-intersection-inclusion", "f(F ∩̃ G) ⊆̃ f(F) ∩̃ f(G)", ClaimKind::universal, gen::maps(2, 0), [](I i) {
                     return is_subset(image(M(i), intersect(S(i, 0), S(i, 1))),
                                      intersect(image(M(i), S(i, 0)), image(M(i), S(i, 1))));
                 }});
    v.push_back({"image-monotone", "F ⊆̃ G implies f(F) ⊆̃ f(G)", ClaimKind::universal, gen::maps(2, 0), [](I i) {
                     return props::implies(is_subset(S(i, 0), S(i, 1)), is_subset(image(M(i), S(i, 0)), image(M(i), S(i, 1))));
                 }});
    v.push_back({"preimage-null-and-whole", "f⁻¹(φ_P) = φ_E and f⁻¹(Ṽ_P) = Ũ_E", ClaimKind::universal, gen::maps(0, 0),
                 [](I i) {
                     const auto& f = M(i);
                     return preimage(f, null(f.target())) == null(f.source()) && preimage(f, whole(f.target())) == whole(f.source());
                 }});
    v.push_back({"preimage-preserves-union", "f⁻¹(G ∪̃ H) = f⁻¹(G) ∪̃ f⁻¹(H)", ClaimKind::universal, gen::maps(0, 2),
                 [](I i) {
                     return preimage(M(i), unite(S(i, 0), S(i, 1))) == unite(preimage(M(i), S(i, 0)), preimage(M(i), S(i, 1)));
                 }});
    v.push_back({"preimage-preserves-intersection", "f⁻¹(G ∩̃ H) = f⁻¹(G) ∩̃ f⁻¹(H)", ClaimKind::universal,
                 gen::maps(0, 2), [](I i) {
                     return preimage(M(i), intersect(S(i, 0), S(i, 1)))
                         == intersect(preimage(M(i), S(i, 0)), preimage(M(i), S(i, 1)));
                 }});
    v.push_back({"image-of-preimage-inside", "f(f⁻¹(G)) ⊆̃ G", ClaimKind::universal, gen::maps(0, 1),
                 [](I i) { return is_subset(image(M(i), preimage(M(i), S(i, 0))), S(i, 0)); }});
    v.push_back({"preimage-commutes-with-complement", "f⁻¹(G^c) = (f⁻¹(G))^c", ClaimKind::universal, gen::maps(0, 1),
                 [](I i) { return preimage(M(i), complement(S(i, 0))) == complement(preimage(M(i), S(i, 0))); }});
    v.push_back({"set-inside-preimage-of-image", "F ⊆̃ f⁻¹(f(F))", ClaimKind::universal, gen::maps(1, 0),
                 [](I i) { return is_subset(S(i, 0), preimage(M(i), image(M(i), S(i, 0)))); }});
    v.push_back({"image-of-preimage-is-trace", "f(f⁻¹(G)) = G ∩̃ f(Ũ_E)", ClaimKind::universal, gen::maps(0, 1), [](I i) {
                     const auto& f = M(i);
                     return image(f, preimage(f, S(i, 0))) == intersect(S(i, 0), image(f, whole(f.source())));
                 }});
    v.push_back({"preimage-of-composite", "(g ∘ f)⁻¹(K) = f⁻¹(g⁻¹(K))", ClaimKind::universal, gen::map_chains(), [](I i) {
                     return preimage(compose(M(i, 1), M(i, 0)), S(i, 0)) == preimage(M(i, 0), preimage(M(i, 1), S(i, 0)));
                 }});
    return v;
}

inline std::vector<Theorem> topology_theorems() {
    using props::implies;
    using props::tau_holds;
    const auto tau = gen::Side::tau;
    std::vector<Theorem> v;
    v.push_back({"topology-intersection", "τ1 ∩ τ2 is a soft topology", ClaimKind::universal, gen::family_pairs(tau),
                 [](I i) { return props::intersection_is_structure(T(i, 0), T(i, 1)); }});
    v.push_back({"topology-parameter-slices", "for every e ∈ E, τ(e) is a topology on U", ClaimKind::universal,
                 gen::family(tau, 0), [](I i) {
                     const auto& t = T(i);
                     for (std::size_t e = 0; e < t.context()->num_params(); ++e) {
                         if (!props::classical_lattice(slice_at_parameter(t, e), t.context()->universe())) {
                             return false;
                         }
                     }
                     return true;
                 }});
    v.push_back({"tau-nbhd-basics", "Ũ_E is a τ-neighborhood of every x_A, and supersets of neighborhoods are neighborhoods",
                 ClaimKind::universal, gen::family(tau, 2, true), [](I i) {
                     const auto& t = T(i);
                     return is_nbhd_of_point(t, whole(t.context()), P(i))
                         && implies(is_nbhd_of_point(t, S(i, 0), P(i)) && is_subset(S(i, 0), S(i, 1)),
                                    is_nbhd_of_point(t, S(i, 1), P(i)));
                 }});
    v.push_back({"interior-laws",
                 "int F ⊆̃ F; int F is the largest open set inside F; F is open iff int F = F; int int F = int F; "
                 "int φ_A = φ_A and int Ũ_E = Ũ_E",
                 ClaimKind::universal, gen::family(tau, 1), [](I i) {
                     const auto& t = T(i);
                     const auto& f = S(i, 0);
                     const auto& ctx = t.context();
                     const auto in = interior(t, f);
                     if (!is_subset(in, f) || !t.contains(in) || t.contains(f) != (in == f) || interior(t, in) != in) {
                         return false;
                     }
                     for (const auto& g : t.all_members()) {
                         if (is_subset(g, f) && !is_subset(g, in)) {
                             return false;
                         }
                     }
                     return interior(t, whole(ctx)) == whole(ctx)
                         && every_domain(ctx, [&](ParamSet a) { return interior(t, null(ctx, a)) == null(ctx, a); });
                 }});
    v.push_back({"interior-monotone-meet-join",
                 "F ⊆̃ G implies int F ⊆̃ int G; int(F ∩̃ G) = int F ∩̃ int G; int(F ∪̃ G) ⊇̃ int F ∪̃ int G",
                 ClaimKind::universal, gen::family(tau, 2), [](I i) {
                     const auto& t = T(i);
                     const auto& f = S(i, 0);
                     const auto& g = S(i, 1);
                     return implies(is_subset(f, g), is_subset(interior(t, f), interior(t, g)))
                         && interior(t, intersect(f, g)) == intersect(interior(t, f), interior(t, g))
                         && is_subset(unite(interior(t, f), interior(t, g)), interior(t, unite(f, g)));
                 }});
    v.push_back({"interior-union-strict", "some τ, F, G have int(F ∪̃ G) ≠ int F ∪̃ int G", ClaimKind::existence,
                 gen::family(tau, 2), [](I i) {
                     const auto& t = T(i);
                     return interior(t, unite(S(i, 0), S(i, 1))) != unite(interior(t, S(i, 0)), interior(t, S(i, 1)));
                 }});
    v.push_back({"tau-continuity-at-point-forms",
                 "at x_A: f(H_A) ⊆̃ G for some neighborhood H_A, iff H_A ⊆̃ f⁻¹(G) for some neighborhood H_A, iff "
                 "f⁻¹(G) is a neighborhood, over all neighborhoods G_ψ(A) of f(x_A)",
                 ClaimKind::universal, gen::family_maps(tau, true), [](I i) {
                     const bool a = props::tau_continuous_at(1, M(i), T(i, 0), T(i, 1), P(i));
                     const bool b = props::tau_continuous_at(2, M(i), T(i, 0), T(i, 1), P(i));
                     const bool c = props::tau_continuous_at(3, M(i), T(i, 0), T(i, 1), P(i));
                     return a == b && b == c;
                 },
                 {},
                 "neighborhoods H_A and G_ψ(A) are read with exactly the subscripted domain; a point x_A may have no "
                 "neighborhood of domain A at all, so the first two forms fail where the preimage form holds"});
    v.push_back({"tau-continuity-open-preimage-nbhd",
                 "f⁻¹(G) is a neighborhood of x_A for every soft point x_A and every open G ∋̃ f(x_A) iff preimages "
                 "of open sets are open",
                 ClaimKind::universal, gen::family_maps(tau), [](I i) {
                     const auto& f = M(i);
                     const auto opens = T(i, 1).all_members();
                     const bool local = props::all_points(f.source(), [&](const SoftPoint& p) {
                         const auto fp = image(f, p);
                         return std::all_of(opens.begin(), opens.end(), [&](const SoftSet& g) {
                             return !point_in(fp, g) || is_nbhd_of_point(T(i, 0), preimage(f, g), p);
                         });
                     });
                     return local == is_tau_continuous(f, T(i, 0), T(i, 1));
                 }});
    v.push_back({"tau-continuity-preimage-criterion",
                 "f is τ-continuous at every soft point iff preimages of open sets are open", ClaimKind::universal,
                 gen::family_maps(tau), [](I i) {
                     const auto& f = M(i);
                     const bool local = props::all_points(f.source(), [&](const SoftPoint& p) {
                         return props::tau_continuous_at(1, f, T(i, 0), T(i, 1), p);
                     });
                     return local == is_tau_continuous(f, T(i, 0), T(i, 1));
                 },
                 {},
                 "local continuity only quantifies over neighborhoods of domain ψ(A), which may not exist, while the "
                 "preimage criterion tests open sets of every domain"});
    v.push_back({"tau-continuity-composition", "g ∘ f is τ-continuous when f and g are", ClaimKind::universal,
                 gen::family_compose(tau), [](I i) {
                     return implies(is_tau_continuous(M(i, 0), T(i, 0), T(i, 1)) && is_tau_continuous(M(i, 1), T(i, 1), T(i, 2)),
                                    is_tau_continuous(compose(M(i, 1), M(i, 0)), T(i, 0), T(i, 2)));
                 }});
    v.push_back({"tau-continuity-interior-criterion", "f is τ-continuous iff f⁻¹(int F) ⊆̃ int f⁻¹(F) for every F ⊆̃ Ṽ_P",
                 ClaimKind::universal, gen::family_maps(tau), [](I i) {
                     const auto& f = M(i);
                     const bool crit = every_set(f.target(), [&](const SoftSet& g) {
                         return is_subset(preimage(f, interior(T(i, 1), g)), interior(T(i, 0), preimage(f, g)));
                     });
                     return crit == is_tau_continuous(f, T(i, 0), T(i, 1));
                 }});
    v.push_back({"identity-continuity-iff-finer", "the identity (Ũ_E, τ1) → (Ũ_E, τ2) is τ-continuous iff τ2 ⊆ τ1",
                 ClaimKind::universal, gen::family_pairs(tau), [](I i) {
                     const auto id = SoftMap::identity(T(i, 0).context());
                     return is_tau_continuous(id, T(i, 0), T(i, 1)) == T(i, 0).includes(T(i, 1));
                 }});
    v.push_back({"open-map-interior-criterion", "f is open iff f(int F) ⊆̃ int f(F) for every F ⊆̃ Ũ_E", ClaimKind::universal,
                 gen::family_maps(tau), [](I i) {
                     const auto& f = M(i);
                     const bool crit = every_set(f.source(), [&](const SoftSet& g) {
                         return is_subset(image(f, interior(T(i, 0), g)), interior(T(i, 1), image(f, g)));
                     });
                     return crit == is_open_map(f, T(i, 0), T(i, 1));
                 }});
    v.push_back({"open-map-composition", "g ∘ f is open when f and g are", ClaimKind::universal, gen::family_compose(tau),
                 [](I i) {
                     return implies(is_open_map(M(i, 0), T(i, 0), T(i, 1)) && is_open_map(M(i, 1), T(i, 1), T(i, 2)),
                                    is_open_map(compose(M(i, 1), M(i, 0)), T(i, 0), T(i, 2)));
                 }});
    v.push_back({"open-point-complements-imply-tau-T1", "if every x_A^c is open then τ is T1", ClaimKind::universal,
                 gen::family(tau, 0), [](I i) {
                     const auto& t = T(i);
                     const bool open_points = props::all_points(t.context(), [&](const SoftPoint& p) {
                         return t.contains(complement(to_soft_set(p)));
                     });
                     return implies(open_points, tau_holds(t, Axiom::T1));
                 }});
    v.push_back({"tau-separation-chain", "τ: T2 ⇒ T1 ⇒ T0, T3 ⇔ regular ∧ T1, T4 ⇔ normal ∧ T1", ClaimKind::universal,
                 gen::family(tau, 0), [](I i) {
                     const auto& t = T(i);
                     const bool t0 = tau_holds(t, Axiom::T0);
                     const bool t1 = tau_holds(t, Axiom::T1);
                     const bool t2 = tau_holds(t, Axiom::T2);
                     return implies(t2, t1) && implies(t1, t0)
                         && tau_holds(t, Axiom::T3) == (tau_holds(t, Axiom::regular) && t1)
                         && tau_holds(t, Axiom::T4) == (tau_holds(t, Axiom::normal) && t1);
                 }});
    const auto split = [](Axiom yes, Axiom no) {
        return [=](I i) { return tau_holds(T(i), yes, i.point_scope()) && !tau_holds(T(i), no, i.point_scope()); };
    };
    v.push_back({"tau-T0-not-T1", "some soft topology is τ-T0 but not τ-T1", ClaimKind::existence, gen::family_scoped(tau),
                 split(Axiom::T0, Axiom::T1)});
    v.push_back({"tau-T1-not-T2", "some soft topology is τ-T1 but not τ-T2", ClaimKind::existence, gen::family_scoped(tau),
                 split(Axiom::T1, Axiom::T2)});
    v.push_back({"tau-regular-not-T1", "some soft topology is τ-regular but not τ-T1", ClaimKind::existence,
                 gen::family_scoped(tau), split(Axiom::regular, Axiom::T1)});
    v.push_back({"tau-T2-pullback-injective-continuous",
                 "an injective τ-continuous f into a τ-T2 space has a τ-T2 source", ClaimKind::universal, gen::family_maps(tau),
                 [](I i) {
                     const auto& f = M(i);
                     return implies(f.injective() && is_tau_continuous(f, T(i, 0), T(i, 1)) && tau_holds(T(i, 1), Axiom::T2),
                                    tau_holds(T(i, 0), Axiom::T2));
                 }});
    v.push_back({"tau-T2-pushforward-bijective-open", "a bijective open f from a τ-T2 space has a τ-T2 target",
                 ClaimKind::universal, gen::family_maps(tau), [](I i) {
                     const auto& f = M(i);
                     return implies(f.injective() && f.surjective() && is_open_map(f, T(i, 0), T(i, 1))
                                        && tau_holds(T(i, 0), Axiom::T2),
                                    tau_holds(T(i, 1), Axiom::T2));
                 }});
    v.push_back({"tau-mixed-domain-separation",
                 "T0, T1 and T2 agree whether x_A, y_A share A and are separated by open sets of domain A "
                 "(implemented) or x_A, y_B range over all A, B with open sets of any domain",
                 ClaimKind::reading_comparison, gen::family(tau, 0), [](I i) {
                     for (auto ax : {Axiom::T0, Axiom::T1, Axiom::T2}) {
                         if (tau_holds(T(i), ax) != props::tau_mixed_domain(T(i), ax)) {
                             return false;
                         }
                     }
                     return true;
                 },
                 {},
                 "open sets of larger domain can separate points that no open set of domain exactly A separates, and "
                 "mixed domains add pairs the shared-domain reading never examines"});
    return v;
}

inline std::vector<Theorem> cotopology_theorems() {
    using props::implies;
    using props::kappa_holds;
    const auto kap = gen::Side::kappa;
    std::vector<Theorem> v;
    v.push_back({"cotopology-intersection", "κ1 ∩ κ2 is a soft cotopology", ClaimKind::universal, gen::family_pairs(kap),
                 [](I i) { return props::intersection_is_structure(K(i, 0), K(i, 1)); }});
    v.push_back({"cotopology-parameter-slices", "for every e ∈ E, κ(e) is a cotopology on U", ClaimKind::universal,
                 gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     for (std::size_t e = 0; e < k.context()->num_params(); ++e) {
                         if (!props::classical_lattice(slice_at_parameter(k, e), k.context()->universe())) {
                             return false;
                         }
                     }
                     return true;
                 }});
    v.push_back({"remote-nbhd-basics",
                 "φ_E is a remote neighborhood of every x_A, and subsets of remote neighborhoods are remote neighborhoods",
                 ClaimKind::universal, gen::family(kap, 2, true), [](I i) {
                     const auto& k = K(i);
                     return is_remote_nbhd(k, null(k.context()), P(i))
                         && implies(is_remote_nbhd(k, S(i, 1), P(i)) && is_subset(S(i, 0), S(i, 1)),
                                    is_remote_nbhd(k, S(i, 0), P(i)));
                 }});
    v.push_back({"closure-as-adherence",
                 "cl F_A consists of the adherence points of F_A (checked where cl F_A keeps domain A)",
                 ClaimKind::universal, gen::family(kap, 1),
                 [](I i) {
                     const auto& k = K(i);
                     const auto& f = S(i, 0);
                     const auto cl = closure(k, f);
                     std::vector<std::size_t> in_closure;
                     for (std::size_t x = 0; x < k.context()->num_points(); ++x) {
                         if (point_in(SoftPoint{k.context(), x, f.domain()}, cl)) {
                             in_closure.push_back(x);
                         }
                     }
                     std::vector<std::size_t> adherent;
                     for (const auto& p : adherence_points(k, f)) {
                         adherent.push_back(p.point);
                     }
                     return in_closure == adherent;
                 },
                 [](I i) {
                     const auto& f = S(i, 0);
                     return !f.domain().empty() && closure(K(i), f).domain() == f.domain();
                 }});
    v.push_back({"closure-domain-preserved",
                 "cl F_A, read as the intersection of closed supersets, keeps domain A as the adherence reading does",
                 ClaimKind::reading_comparison, gen::family(kap, 1),
                 [](I i) { return closure(K(i), S(i, 0)).domain() == S(i, 0).domain(); }, {},
                 "closed supersets of F_A may all have larger domains, and their intersection then extends past A"});
    v.push_back({"closure-laws",
                 "F ⊆̃ cl F; cl F is the smallest closed set containing F; F is closed iff F = cl F; cl cl F = cl F",
                 ClaimKind::universal, gen::family(kap, 1), [](I i) {
                     const auto& k = K(i);
                     const auto& f = S(i, 0);
                     const auto cl = closure(k, f);
                     if (!is_subset(f, cl) || !k.contains(cl) || k.contains(f) != (f == cl) || closure(k, cl) != cl) {
                         return false;
                     }
                     for (const auto& m : k.all_members()) {
                         if (is_subset(f, m) && !is_subset(cl, m)) {
                             return false;
                         }
                     }
                     return true;
                 }});
    v.push_back({"closure-monotone-join-meet",
                 "F ⊆̃ G implies cl F ⊆̃ cl G; cl(F ∪̃ G) = cl F ∪̃ cl G; cl(F ∩̃ G) ⊆̃ cl F ∩̃ cl G; cl Ũ_E = Ũ_E; "
                 "cl φ_A = φ_A",
                 ClaimKind::universal, gen::family(kap, 2), [](I i) {
                     const auto& k = K(i);
                     const auto& f = S(i, 0);
                     const auto& g = S(i, 1);
                     const auto& ctx = k.context();
                     return implies(is_subset(f, g), is_subset(closure(k, f), closure(k, g)))
                         && closure(k, unite(f, g)) == unite(closure(k, f), closure(k, g))
                         && is_subset(closure(k, intersect(f, g)), intersect(closure(k, f), closure(k, g)))
                         && closure(k, whole(ctx)) == whole(ctx)
                         && every_domain(ctx, [&](ParamSet a) { return closure(k, null(ctx, a)) == null(ctx, a); });
                 }});
    v.push_back({"closure-intersection-strict", "some κ, F, G have cl(F ∩̃ G) ≠ cl F ∩̃ cl G", ClaimKind::existence,
                 gen::family(kap, 2), [](I i) {
                     const auto& k = K(i);
                     return closure(k, intersect(S(i, 0), S(i, 1))) != intersect(closure(k, S(i, 0)), closure(k, S(i, 1)));
                 }});
    v.push_back({"accumulation-points-adhere", "every accumulation point of F_A is an adherence point of F_A",
                 ClaimKind::universal, gen::family(kap, 1), [](I i) {
                     const auto& k = K(i);
                     const auto& f = S(i, 0);
                     const auto acc = accumulation(k, f);
                     const auto adh = adherence_points(k, f);
                     for (std::size_t x = 0; x < k.context()->num_points(); ++x) {
                         const SoftPoint p{k.context(), x, f.domain()};
                         if (!f.domain().empty() && point_in(p, acc) && std::find(adh.begin(), adh.end(), p) == adh.end()) {
                             return false;
                         }
                     }
                     return true;
                 }});
    v.push_back({"set-with-accumulation-closed", "F ∪̃ F' is closed", ClaimKind::universal, gen::family(kap, 1),
                 [](I i) { return K(i).contains(unite(S(i, 0), accumulation(K(i), S(i, 0)))); },
                 {},
                 "F' only collects points at domain A, so F ∪̃ F' has domain A while every closed superset may need a "
                 "larger one"});
    v.push_back({"closure-is-set-with-accumulation", "cl F = F ∪̃ F'", ClaimKind::universal, gen::family(kap, 1),
                 [](I i) { return closure(K(i), S(i, 0)) == unite(S(i, 0), accumulation(K(i), S(i, 0))); },
                 {},
                 "accumulation points x_A test the whole of A at once, so F ∪̃ F' can miss values that cl F adds one "
                 "parameter at a time, and cl F can have a larger domain"});
    v.push_back({"closed-iff-accumulation-inside", "F is closed iff F' ⊆̃ F", ClaimKind::universal, gen::family(kap, 1),
                 [](I i) { return K(i).contains(S(i, 0)) == is_subset(accumulation(K(i), S(i, 0)), S(i, 0)); },
                 {},
                 "F' can be empty (for instance when |U| = 1) while F_A is not closed because no closed set has domain A "
                 "with the right values"});
    v.push_back({"kappa-continuity-image-restriction",
                 "f is κ-continuous into κ2 iff it is κ-continuous into the cotopology induced on f(Ũ_E)",
                 ClaimKind::universal, gen::family_maps(kap), [](I i) {
                     const auto& f = M(i);
                     return is_kappa_continuous(f, K(i, 0), K(i, 1)) == is_kappa_continuous(f, K(i, 0), restrict_to_image(f, K(i, 1)));
                 }});
    v.push_back({"kappa-continuity-at-point-remote-preimage",
                 "f is κ-continuous at x_A iff f⁻¹(K') is a remote neighborhood of x_A for every remote neighborhood "
                 "K' ⊆̃ f(Ũ_E) of f(x_A)",
                 ClaimKind::universal, gen::family_maps(kap, true), [](I i) {
                     return props::kappa_continuous_at(M(i), K(i, 0), K(i, 1), P(i))
                         == props::kappa_remote_preimages(M(i), K(i, 0), K(i, 1), P(i), true);
                 },
                 {},
                 "f⁻¹(K') has domain ψ⁻¹(ψ(A)), which is larger than A when ψ identifies parameters; local "
                 "continuity only constrains remote neighborhoods of domain A, so nothing forces a closed superset of "
                 "the preimage that avoids x_A"});
    v.push_back({"kappa-continuity-at-point-corollary",
                 "κ-continuity at x_A makes f⁻¹(K) a remote neighborhood of x_A for every remote neighborhood K of f(x_A)",
                 ClaimKind::universal, gen::family_maps(kap, true), [](I i) {
                     return implies(props::kappa_continuous_at(M(i), K(i, 0), K(i, 1), P(i)),
                                    props::kappa_remote_preimages(M(i), K(i, 0), K(i, 1), P(i), false));
                 },
                 {},
                 "f⁻¹(K') has domain ψ⁻¹(ψ(A)), which is larger than A when ψ identifies parameters; local "
                 "continuity only constrains remote neighborhoods of domain A, so nothing forces a closed superset of "
                 "the preimage that avoids x_A"});
    v.push_back({"closed-iff-remote-nbhd-of-outside-points",
                 "F_A is closed iff F_A is a remote neighborhood of every soft point x_B ∉̃ F_A with B ⊆ A",
                 ClaimKind::universal, gen::family(kap, 1), [](I i) {
                     const auto& k = K(i);
                     const auto& f = S(i, 0);
                     const bool remote = props::all_points(k.context(), [&](const SoftPoint& p) {
                         return !p.domain.subset_of(f.domain()) || point_in(p, f) || is_remote_nbhd(k, f, p);
                     });
                     return k.contains(f) == remote;
                 },
                 {},
                 "a remote neighborhood only needs some closed superset, which may have a larger domain than F_A, so "
                 "F_A can be remote from every outside point without being closed"});
    v.push_back({"kappa-continuity-preimage-criterion",
                 "f is κ-continuous at every soft point iff preimages of closed sets are closed", ClaimKind::universal,
                 gen::family_maps(kap), [](I i) {
                     const auto& f = M(i);
                     const bool local = props::all_points(f.source(), [&](const SoftPoint& p) {
                         return props::kappa_continuous_at(f, K(i, 0), K(i, 1), p);
                     });
                     return local == is_kappa_continuous(f, K(i, 0), K(i, 1));
                 },
                 {},
                 "local continuity only sees remote neighborhoods of domain ψ(A), while the preimage criterion tests "
                 "closed sets of every domain"});
    v.push_back({"kappa-continuity-composition", "g ∘ f is κ-continuous when f and g are", ClaimKind::universal,
                 gen::family_compose(kap), [](I i) {
                     return implies(is_kappa_continuous(M(i, 0), K(i, 0), K(i, 1)) && is_kappa_continuous(M(i, 1), K(i, 1), K(i, 2)),
                                    is_kappa_continuous(compose(M(i, 1), M(i, 0)), K(i, 0), K(i, 2)));
                 }});
    v.push_back({"closed-map-closure-criterion", "f is closed iff cl f(F) ⊆̃ f(cl F) for every F ⊆̃ Ũ_E",
                 ClaimKind::universal, gen::family_maps(kap), [](I i) {
                     const auto& f = M(i);
                     const bool crit = every_set(f.source(), [&](const SoftSet& g) {
                         return is_subset(closure(K(i, 1), image(f, g)), image(f, closure(K(i, 0), g)));
                     });
                     return crit == is_closed_map(f, K(i, 0), K(i, 1));
                 }});
    v.push_back({"kappa-T0-iff-distinct-point-closures", "κ is T0 iff cl x_A ≠ cl y_A whenever x ≠ y", ClaimKind::universal,
                 gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     const auto& ctx = k.context();
                     bool distinct = true;
                     for (auto a : nonempty_domains(*ctx)) {
                         for (std::size_t x = 0; x < ctx->num_points(); ++x) {
                             for (std::size_t y = x + 1; y < ctx->num_points(); ++y) {
                                 distinct = distinct && closure(k, soft_point(ctx, x, a)) != closure(k, soft_point(ctx, y, a));
                             }
                         }
                     }
                     return kappa_holds(k, Axiom::T0) == distinct;
                 }});
    v.push_back({"kappa-T1-iff-points-closed", "κ is T1 iff every soft point x_A is closed", ClaimKind::universal,
                 gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     const bool closed = props::all_points(k.context(), [&](const SoftPoint& p) { return k.contains(to_soft_set(p)); });
                     return kappa_holds(k, Axiom::T1) == closed;
                 },
                 {},
                 "T1 only separates pairs of distinct points, so it is vacuous when |U| = 1, and it never forces a "
                 "member of domain exactly A equal to x_A"});
    v.push_back({"kappa-T2-points-are-closures", "κ-T2 implies x_A = ∩̃{K_A ∈ κ : x_A ∈̃ K_A} for every x_A",
                 ClaimKind::universal, gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     const bool fixed = props::all_points(k.context(), [&](const SoftPoint& p) {
                         return props::kappa_closed_intersection_is_point(k, p);
                     });
                     return implies(kappa_holds(k, Axiom::T2), fixed);
                 }});
    v.push_back({"kappa-point-closures-imply-T0", "x_A = ∩̃{K_A ∈ κ : x_A ∈̃ K_A} for every x_A implies κ-T0",
                 ClaimKind::universal, gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     const bool fixed = props::all_points(k.context(), [&](const SoftPoint& p) {
                         return props::kappa_closed_intersection_is_point(k, p);
                     });
                     return implies(fixed, kappa_holds(k, Axiom::T0));
                 }});
    v.push_back({"kappa-T2-pullback-injective-continuous",
                 "an injective κ-continuous f into a κ-T2 space has a κ-T2 source", ClaimKind::universal,
                 gen::family_maps(kap), [](I i) {
                     const auto& f = M(i);
                     return implies(f.injective() && is_kappa_continuous(f, K(i, 0), K(i, 1)) && kappa_holds(K(i, 1), Axiom::T2),
                                    kappa_holds(K(i, 0), Axiom::T2));
                 }});
    v.push_back({"kappa-regular-remote-enlargement",
                 "in a κ-regular space every remote neighborhood M_A of x_A lies in some L_A ∈ ℜ(x_A)", ClaimKind::universal,
                 gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     if (!kappa_holds(k, Axiom::regular)) {
                         return true;
                     }
                     return props::all_points(k.context(), [&](const SoftPoint& p) {
                         const auto candidates = props::sets_with_domain(k.context(), p.domain);
                         for (const auto& m : candidates) {
                             if (!is_remote_nbhd(k, m, p)) {
                                 continue;
                             }
                             const bool found = std::any_of(candidates.begin(), candidates.end(), [&](const SoftSet& l) {
                                 return is_subset(m, l) && is_remote_nbhd(k, l, p);
                             });
                             if (!found) {
                                 return false;
                             }
                         }
                         return true;
                     });
                 }});
    v.push_back({"kappa-T3-implies-T2", "κ-T3 implies κ-T2", ClaimKind::universal, gen::family(kap, 0),
                 [](I i) { return implies(kappa_holds(K(i), Axiom::T3), kappa_holds(K(i), Axiom::T2)); },
                 {},
                 "the argument needs y_A to be closed under T1, which fails as kappa-T1-iff-points-closed shows, so "
                 "regularity says nothing about the pair at that domain"});
    v.push_back({"kappa-separation-chain", "κ: T2 ⇒ T1 ⇒ T0, T3 ⇔ regular ∧ T1, T4 ⇔ normal ∧ T1", ClaimKind::universal,
                 gen::family(kap, 0), [](I i) {
                     const auto& k = K(i);
                     const bool t0 = kappa_holds(k, Axiom::T0);
                     const bool t1 = kappa_holds(k, Axiom::T1);
                     const bool t2 = kappa_holds(k, Axiom::T2);
                     return implies(t2, t1) && implies(t1, t0)
                         && kappa_holds(k, Axiom::T3) == (kappa_holds(k, Axiom::regular) && t1)
                         && kappa_holds(k, Axiom::T4) == (kappa_holds(k, Axiom::normal) && t1);
                 }});
    const auto split = [](Axiom yes, Axiom no) {
        return [=](I i) { return kappa_holds(K(i), yes, i.point_scope()) && !kappa_holds(K(i), no, i.point_scope()); };
    };
    v.push_back({"kappa-T0-not-T1", "some soft cotopology is κ-T0 but not κ-T1", ClaimKind::existence,
                 gen::family_scoped(kap), split(Axiom::T0, Axiom::T1)});
    v.push_back({"kappa-T1-not-T2", "some soft cotopology is κ-T1 but not κ-T2", ClaimKind::existence,
                 gen::family_scoped(kap), split(Axiom::T1, Axiom::T2)});
    v.push_back({"strong-remote-implies-remote", "a strong remote neighborhood of x_A is a remote neighborhood of x_A",
                 ClaimKind::universal, gen::family(kap, 1, true),
                 [](I i) { return implies(is_strong_remote_nbhd(K(i), S(i, 0), P(i)), is_remote_nbhd(K(i), S(i, 0), P(i))); },
                 {},
                 "the strong witness K_C only has to cover S on C ⊆ domain(S), while a remote neighborhood needs a closed "
                 "superset of all of S"});
    v.push_back({"strong-remote-direction",
                 "strong remote neighborhoods agree under pointwise containment on C ⊆ domain(S) (implemented) and S ⊆̃ K_C",
                 ClaimKind::reading_comparison, gen::family(kap, 1, true), [](I i) {
                     return is_strong_remote_nbhd(K(i), S(i, 0), P(i)) == props::strong_remote_superset_reading(K(i), S(i, 0), P(i));
                 },
                 {},
                 "the implemented reading needs A ⊆ C ⊆ domain(S), the superset reading lets C grow past domain(S), for "
                 "instance when S = φ_∅"});
    return v;
}

inline std::vector<Theorem> dito_theorems() {
    using props::dito_holds;
    using props::implies;
    std::vector<Theorem> v;
    v.push_back({"dito-axiom-conjunction", "each ditopological axiom holds iff its τ- and κ-versions both hold",
                 ClaimKind::universal, gen::dito(0), [](I i) {
                     const auto d = D(i);
                     for (auto ax : kAllAxioms) {
                         if (dito_holds(d, ax) != (props::tau_holds(d.tau, ax) && props::kappa_holds(d.kappa, ax))) {
                             return false;
                         }
                     }
                     return true;
                 }});
    v.push_back({"dito-continuity-at-point-forms",
                 "f is continuous at x_A iff (f⁻¹(F), f⁻¹(M')) is a neighborhood of x_A for every neighborhood "
                 "(F_ψ(A), M'_ψ(A)) of f(x_A)",
                 ClaimKind::universal, gen::dito_maps(true), [](I i) {
                     const auto& f = M(i);
                     const bool at = props::tau_continuous_at(1, f, T(i, 0), T(i, 1), P(i))
                                  && props::kappa_continuous_at(f, K(i, 0), K(i, 1), P(i));
                     const bool pulls = props::tau_continuous_at(3, f, T(i, 0), T(i, 1), P(i))
                                     && props::kappa_remote_preimages(f, K(i, 0), K(i, 1), P(i), true);
                     return at == pulls;
                 }});
    v.push_back({"dito-continuity-preimage-criterion",
                 "f is continuous iff preimages of τ2-open sets are τ1-open and preimages of sets of κ2' are κ1-closed",
                 ClaimKind::universal, gen::dito_maps(), [](I i) {
                     const auto& f = M(i);
                     bool closed = true;
                     const auto induced = restrict_to_image(f, K(i, 1));
                     for (const auto& k : induced.listed()) {
                         closed = closed && K(i, 0).contains(preimage(f, k));
                     }
                     const bool crit = is_tau_continuous(f, T(i, 0), T(i, 1)) && closed;
                     return crit == is_dito_continuous(f, D(i, 0), D(i, 1));
                 }});
    v.push_back({"dito-points-closed-implies-T1", "if every x_A^c is open and every x_A closed, the ditopology is T1",
                 ClaimKind::universal, gen::dito(0), [](I i) {
                     const auto d = D(i);
                     const bool points = props::all_points(d.context(), [&](const SoftPoint& p) {
                         const auto s = to_soft_set(p);
                         return d.tau.contains(complement(s)) && d.kappa.contains(s);
                     });
                     return implies(points, dito_holds(d, Axiom::T1));
                 }});
    v.push_back({"dito-separation-chain", "ditopological T2 ⇒ T1 ⇒ T0", ClaimKind::universal, gen::dito(0), [](I i) {
                     const auto d = D(i);
                     const bool t1 = dito_holds(d, Axiom::T1);
                     return implies(dito_holds(d, Axiom::T2), t1) && implies(t1, dito_holds(d, Axiom::T0));
                 }});
    v.push_back({"dito-T0-not-T1", "some soft ditopology is T0 but not T1", ClaimKind::existence, gen::dito(0, true),
                 [](I i) { return dito_holds(D(i), Axiom::T0, i.point_scope()) && !dito_holds(D(i), Axiom::T1, i.point_scope()); }});
    v.push_back({"dito-T2-pullback-injective-continuous",
                 "an injective continuous f into a T2 ditopological space has a T2 source", ClaimKind::universal,
                 gen::dito_maps(), [](I i) {
                     const auto& f = M(i);
                     return implies(f.injective() && is_dito_continuous(f, D(i, 0), D(i, 1)) && dito_holds(D(i, 1), Axiom::T2),
                                    dito_holds(D(i, 0), Axiom::T2));
                 }});
    v.push_back({"closure-interior-nonduality", "some δ and F have (cl F)^c ≠ int(F^c)", ClaimKind::existence, gen::dito(1),
                 [](I i) {
                     const auto d = D(i);
                     return complement(dito_closure(d, S(i, 0))) != dito_interior(d, complement(S(i, 0)));
                 }});
    v.push_back({"dito-coarser-direction",
                 "δ1 coarser than δ2 means the same under τ2 ⊆ τ1, κ2 ⊆ κ1 (implemented) and τ1 ⊆ τ2, κ1 ⊆ κ2",
                 ClaimKind::reading_comparison, gen::dito_pairs(),
                 [](I i) { return is_coarser(D(i, 0), D(i, 1)) == is_coarser(D(i, 1), D(i, 0)); }, {},
                 "the two readings are converse to each other and agree only on equal or incomparable pairs"});
    return v;
}

/// Bounds to retry an existence search at when nothing turned up: at least
/// two points and two parameters.
inline EnumBounds escalated(const EnumBounds& b) {
    EnumBounds w = b;
    w.max_universe = std::max<std::size_t>(b.max_universe, 2);
    w.max_params = std::max<std::size_t>(b.max_params, 2);
    return w;
}

inline bool same_extent(const EnumBounds& a, const EnumBounds& b) {
    return a.max_universe == b.max_universe && a.max_params == b.max_params && a.max_explicit_members == b.max_explicit_members;
}

} // namespace detail

/// Every registered claim, in report order.
inline const std::vector<Theorem>& theorem_registry() {
    static const std::vector<Theorem> registry = [] {
        std::vector<Theorem> all;
        for (auto part : {detail::algebra_theorems(), detail::map_theorems(), detail::topology_theorems(),
                          detail::cotopology_theorems(), detail::dito_theorems()}) {
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return all;
    }();
    return registry;
}

/// Registry ids in order. `group` is one of algebra, maps, topology,
/// cotopology, ditopology; empty selects every claim.
inline std::vector<std::string> theorem_ids(std::string_view group = {}) {
    std::vector<Theorem> part;
    if (group.empty()) {
        part = theorem_registry();
    } else if (group == "algebra") {
        part = detail::algebra_theorems();
    } else if (group == "maps") {
        part = detail::map_theorems();
    } else if (group == "topology") {
        part = detail::topology_theorems();
    } else if (group == "cotopology") {
        part = detail::cotopology_theorems();
    } else if (group == "ditopology") {
        part = detail::dito_theorems();
    } else {
        throw ArgumentError("unknown theorem group '" + std::string(group) + "'");
    }
    std::vector<std::string> ids;
    for (const auto& t : part) {
        ids.push_back(t.id);
    }
    return ids;
}

/// Throws ArgumentError for an unknown id.
inline const Theorem& find_theorem(std::string_view id) {
    for (const auto& t : theorem_registry()) {
        if (t.id == id) {
            return t;
        }
    }
    throw ArgumentError("unknown theorem id '" + std::string(id) + "'");
}

/// Ids of the existence claims, the registry searched by find_counterexample().
inline std::vector<std::string> counterexample_ids() {
    std::vector<std::string> out;
    for (const auto& t : theorem_registry()) {
        if (t.kind == ClaimKind::existence) {
            out.push_back(t.id);
        }
    }
    return out;
}

/**
 * Re-runs `t` on a serialized witness. True when the stored verdict is
 * reproduced: an example for existence claims, a violation otherwise.
 */
inline bool replay(const Theorem& t, std::string_view witness) {
    const auto inst = parse_instance(witness);
    if (t.applies && !t.applies(inst)) {
        return false;
    }
    const bool h = t.holds(inst);
    return t.kind == ClaimKind::existence ? h : !h;
}

inline bool replay(std::string_view id, std::string_view witness) { return replay(find_theorem(id), witness); }

namespace detail {

inline TheoremReport evaluate(const Theorem& t, Catalog& cat) {
    Recorder rec(t.kind, t.holds, cat.bounds().instance_budget, t.applies);
    t.search(cat, rec);
    TheoremReport r;
    r.id = t.id;
    r.statement = t.statement;
    r.kind = t.kind;
    r.instances = rec.instances();
    r.skipped = rec.skipped();
    r.failures = rec.failures();
    r.exhaustive = !rec.truncated();
    r.bounds = cat.bounds().to_string();
    if (rec.witness()) {
        r.witness = serialize_instance(*rec.witness());
        r.replayed = replay(t, *r.witness);
    }
    const auto n = std::to_string(r.instances);
    if (t.kind == ClaimKind::existence) {
        r.status = r.witness ? ReportStatus::counterexample : ReportStatus::discrepancy_logged;
        r.note = r.witness ? "witness found after " + n + " instances"
                           : "no witness among " + n + " instances within bounds " + r.bounds;
    } else if (r.failures == 0) {
        r.status = ReportStatus::verified;
        r.note = (t.kind == ClaimKind::universal ? "holds on all " : "readings agree on all ") + n + " instances";
    } else {
        r.status = ReportStatus::discrepancy_logged;
        r.note = std::to_string(r.failures) + " of " + n
               + (t.kind == ClaimKind::universal ? " instances violate the statement" : " instances separate the readings");
        if (!t.remark.empty()) {
            r.note += "; " + t.remark;
        }
    }
    if (r.skipped > 0) {
        r.note += "; " + std::to_string(r.skipped) + " instances outside the statement's scope skipped";
    }
    if (!r.exhaustive && !(t.kind == ClaimKind::existence && r.witness)) {
        r.note += "; instance budget reached, the remaining instances were not examined";
    }
    return r;
}

/// Existence claims that find nothing are searched again at escalated bounds.
class CatalogPool {
public:
    explicit CatalogPool(const EnumBounds& b) : base_(b) {}

    Catalog& base() { return base_; }

    Catalog* wider() {
        const auto w = escalated(base_.bounds());
        if (same_extent(w, base_.bounds())) {
            return nullptr;
        }
        if (!wider_) {
            wider_.emplace(w);
        }
        return &*wider_;
    }

private:
    Catalog base_;
    std::optional<Catalog> wider_;
};

inline TheoremReport run_one(const Theorem& t, CatalogPool& pool) {
    auto r = evaluate(t, pool.base());
    if (t.kind != ClaimKind::existence || r.witness) {
        return r;
    }
    if (Catalog* wide = pool.wider()) {
        auto again = evaluate(t, *wide);
        again.note = "no witness among " + std::to_string(r.instances) + " instances within bounds " + r.bounds
                   + "; bounds escalated to " + again.bounds + ": " + again.note;
        again.instances += r.instances;
        return again;
    }
    return r;
}

} // namespace detail

/// Runs the given claims (all of them when `ids` is empty) in registry order.
inline std::vector<TheoremReport> run_theorems(const std::vector<std::string>& ids, const EnumBounds& b) {
    for (const auto& id : ids) {
        find_theorem(id);
    }
    detail::CatalogPool pool(b);
    std::vector<TheoremReport> out;
    for (const auto& t : theorem_registry()) {
        if (ids.empty() || std::find(ids.begin(), ids.end(), t.id) != ids.end()) {
            out.push_back(detail::run_one(t, pool));
        }
    }
    return out;
}

inline std::vector<TheoremReport> run_theorem_suite(const EnumBounds& b) { return run_theorems({}, b); }

/**
 * The smallest witness in canonical order for a registered existence claim,
 * escalating the bounds once when none exists within `b`. The report's
 * witness is empty when none was found at all.
 */
inline TheoremReport find_counterexample(std::string_view id, const EnumBounds& b) {
    const auto& t = find_theorem(id);
    if (t.kind != ClaimKind::existence) {
        throw ArgumentError("'" + std::string(id) + "' is not a counterexample property");
    }
    detail::CatalogPool pool(b);
    return detail::run_one(t, pool);
}

} // namespace softdito::oracle

#endif
