#ifndef SOFTDITO_SEPARATION_HPP
#define SOFTDITO_SEPARATION_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soft_set.hpp"

namespace softdito {

enum class Axiom { T0, T1, T2, regular, T3, normal, T4 };

inline constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::T0, Axiom::T1, Axiom::T2, Axiom::regular, Axiom::T3, Axiom::normal, Axiom::T4,
};

inline const char* to_string(Axiom a) {
    switch (a) {
    case Axiom::T0: return "T0";
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::regular: return "regular";
    case Axiom::T3: return "T3";
    case Axiom::normal: return "normal";
    case Axiom::T4: return "T4";
    }
    return "?";
}

inline Axiom parse_axiom(std::string_view tag) {
    for (auto a : kAllAxioms) {
        if (tag == to_string(a)) {
            return a;
        }
    }
    throw ArgumentError("unknown axiom '" + std::string(tag) + "'");
}

/**
 * Which point domains A the axioms quantify over. By default every non-empty
 * A ⊆ E; a fixed scope restricts the check to one A (the soft points x_A, y_A
 * always share A).
 */
struct PointScope {
    std::optional<ParamSet> fixed;

    static PointScope all() { return {}; }
    static PointScope at(ParamSet a) { return {a}; }

    std::vector<ParamSet> domains(const Context& ctx) const {
        if (fixed) {
            if (fixed->empty() || !fixed->subset_of(ctx.all_params())) {
                throw DomainError("axiom scope must be a non-empty subset of the parameters");
            }
            return {*fixed};
        }
        auto all = subsets_of(ctx.all_params());
        all.erase(all.begin());
        return all;
    }
};

/**
 * Why an axiom failed. For T0-T2 `points` holds the pair (x, y); for
 * regularity the point x and `sets` the soft set it could not be separated
 * from; for normality the two soft sets. `failed` names the basic axiom that
 * broke (T1 or regular/normal for T3/T4).
 */
struct AxiomWitness {
    Axiom failed = Axiom::T0;
    ParamSet domain;
    std::vector<std::size_t> points;
    std::vector<SoftSet> sets;
    std::string side;
};

struct AxiomResult {
    Axiom axiom = Axiom::T0;
    bool holds = true;
    std::optional<AxiomWitness> witness;
};

namespace detail {

inline AxiomResult combine_with_t1(Axiom axiom, const AxiomResult& base, const AxiomResult& t1) {
    if (!base.holds) {
        return {axiom, false, base.witness};
    }
    if (!t1.holds) {
        return {axiom, false, t1.witness};
    }
    return {axiom, true, std::nullopt};
}

} // namespace detail

} // namespace softdito

#endif
