#ifndef SOFTDITO_DSL_SERIALIZE_HPP
#define SOFTDITO_DSL_SERIALIZE_HPP

#include <sstream>
#include <string>

#include "document.hpp"

namespace softdito::dsl {

namespace detail {

inline bool is_identifier(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) {
            return false;
        }
    }
    return true;
}

inline const std::string& ident(const std::string& s) {
    if (!is_identifier(s)) {
        throw ArgumentError("'" + s + "' cannot be written as a DSL identifier");
    }
    return s;
}

inline std::string label_list(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out += (i ? ", " : "") + ident(labels[i]);
    }
    return out + "}";
}

} // namespace detail

/// `{x, z}`
inline std::string format_points(const Context& ctx, PointSet s) { return detail::label_list(ctx.labels(s)); }

/// `{e1, e2}`
inline std::string format_params(const Context& ctx, ParamSet s) { return detail::label_list(ctx.labels(s)); }

/// The body of a soft set: `{ e1: {x}  e2: {x, z} }`; `{}` for φ_∅.
inline std::string format_soft_set(const SoftSet& f) {
    const auto& ctx = *f.context();
    if (f.domain().empty()) {
        return "{}";
    }
    std::string out = "{";
    f.domain().for_each([&](std::size_t e) {
        out += " " + detail::ident(ctx.params()[e]) + ": " + format_points(ctx, f.at(e));
    });
    return out + " }";
}

namespace detail {

template<typename Kind_>
std::string format_family(const SpecDocument& doc, const char* keyword, const Decl<SoftFamily<Kind_>>& d) {
    const auto& fam = d.value;
    std::string out = std::string(keyword) + " " + ident(d.name) + " in " + ident(doc.context_name(fam.context())) + " = {";
    const auto& members = fam.listed();
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += i ? ", " : " ";
        std::string ref;
        for (const auto& s : doc.sets) {
            if (s.value == members[i]) {
                ref = s.name;
                break;
            }
        }
        out += ref.empty() ? format_soft_set(members[i]) : ref;
    }
    return out + (members.empty() ? "}" : " }");
}

} // namespace detail

/**
 * Writes `doc` in the DSL. Declarations are grouped by kind (contexts, sets,
 * points, domains, topologies, cotopologies, ditopologies, maps) so every
 * reference follows its target; family members that equal a named set are
 * written by name, others inline.
 */
inline std::string serialize(const SpecDocument& doc) {
    std::ostringstream os;
    using detail::ident;
    for (const auto& c : doc.contexts) {
        os << "context " << ident(c.name) << " { universe = " << detail::label_list(c.value->points())
           << "  params = " << detail::label_list(c.value->params()) << " }\n";
    }
    for (const auto& s : doc.sets) {
        const auto& ctx = *s.value.context();
        os << "softset " << ident(s.name) << " in " << ident(doc.context_name(s.value.context())) << " over "
           << format_params(ctx, s.value.domain()) << " " << format_soft_set(s.value) << "\n";
    }
    for (const auto& p : doc.points) {
        const auto& ctx = *p.value.ctx;
        os << "point " << ident(p.name) << " in " << ident(doc.context_name(p.value.ctx)) << " = "
           << ident(ctx.points()[p.value.point]) << " over " << format_params(ctx, p.value.domain) << "\n";
    }
    for (const auto& d : doc.domains) {
        os << "domain " << ident(d.name) << " in " << ident(doc.context_name(d.value.context)) << " = "
           << format_params(*d.value.context, d.value.value) << "\n";
    }
    for (const auto& t : doc.topologies) {
        os << detail::format_family(doc, "topology", t) << "\n";
    }
    for (const auto& k : doc.cotopologies) {
        os << detail::format_family(doc, "cotopology", k) << "\n";
    }
    for (const auto& d : doc.ditopologies) {
        os << "ditopology " << ident(d.name) << " in " << ident(doc.context_name(d.value.value.context())) << " = ("
           << ident(d.value.tau) << ", " << ident(d.value.kappa) << ")\n";
    }
    for (const auto& m : doc.maps) {
        const auto& f = m.value;
        const auto& src = *f.source();
        const auto& tgt = *f.target();
        os << "map " << ident(m.name) << " : " << ident(doc.context_name(f.source())) << " -> "
           << ident(doc.context_name(f.target())) << " { points {";
        for (std::size_t i = 0; i < f.phi().size(); ++i) {
            os << " " << ident(src.points()[i]) << "->" << ident(tgt.points()[f.phi()[i]]);
        }
        os << " }  params {";
        for (std::size_t i = 0; i < f.psi().size(); ++i) {
            os << " " << ident(src.params()[i]) << "->" << ident(tgt.params()[f.psi()[i]]);
        }
        os << " } }\n";
    }
    return os.str();
}

} // namespace softdito::dsl

#endif
