#ifndef SOFTDITO_ORACLE_INSTANCE_HPP
#define SOFTDITO_ORACLE_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "../dsl/parser.hpp"
#include "../dsl/serialize.hpp"

namespace softdito::oracle {

/**
 * The objects a single property check is evaluated on. Slots are positional:
 * a theorem about a map between two topologies reads maps[0], topologies[0]
 * (source) and topologies[1] (target). `scope`, when set, is an axiom scope
 * in the context of the first family.
 */
struct Instance {
    std::vector<SoftSet> sets;
    std::vector<SoftPoint> points;
    std::vector<SoftTopology> topologies;
    std::vector<SoftCotopology> cotopologies;
    std::vector<SoftMap> maps;
    std::optional<ParamSet> scope;
    ContextPtr scope_context;

    PointScope point_scope() const { return scope ? PointScope::at(*scope) : PointScope::all(); }
};

namespace detail {

inline std::string indexed(const char* stem, std::size_t i) { return stem + std::to_string(i + 1); }

inline void note_context(dsl::SpecDocument& doc, const ContextPtr& ctx) {
    for (const auto& c : doc.contexts) {
        if (same_context(c.value, ctx)) {
            return;
        }
    }
    doc.add_context(indexed("C", doc.contexts.size()), ctx);
}

} // namespace detail

/// Names: contexts C1.., sets S1.., points p1.., topologies tau1..,
/// cotopologies kappa1.., maps f1.., and the axiom scope `scope`.
inline dsl::SpecDocument to_document(const Instance& inst) {
    dsl::SpecDocument doc;
    for (const auto& s : inst.sets) detail::note_context(doc, s.context());
    for (const auto& p : inst.points) detail::note_context(doc, p.ctx);
    for (const auto& t : inst.topologies) detail::note_context(doc, t.context());
    for (const auto& k : inst.cotopologies) detail::note_context(doc, k.context());
    for (const auto& f : inst.maps) {
        detail::note_context(doc, f.source());
        detail::note_context(doc, f.target());
    }
    if (inst.scope) {
        detail::note_context(doc, inst.scope_context);
    }
    for (std::size_t i = 0; i < inst.sets.size(); ++i) doc.add_set(detail::indexed("S", i), inst.sets[i]);
    for (std::size_t i = 0; i < inst.points.size(); ++i) doc.add_point(detail::indexed("p", i), inst.points[i]);
    if (inst.scope) {
        doc.add_domain("scope", inst.scope_context, *inst.scope);
    }
    for (std::size_t i = 0; i < inst.topologies.size(); ++i) doc.add_topology(detail::indexed("tau", i), inst.topologies[i]);
    for (std::size_t i = 0; i < inst.cotopologies.size(); ++i) doc.add_cotopology(detail::indexed("kappa", i), inst.cotopologies[i]);
    for (std::size_t i = 0; i < inst.maps.size(); ++i) doc.add_map(detail::indexed("f", i), inst.maps[i]);
    return doc;
}

/// The positional reading of a document; names other than `scope` are ignored.
inline Instance from_document(const dsl::SpecDocument& doc) {
    Instance inst;
    for (const auto& s : doc.sets) inst.sets.push_back(s.value);
    for (const auto& p : doc.points) inst.points.push_back(p.value);
    for (const auto& t : doc.topologies) inst.topologies.push_back(t.value);
    for (const auto& k : doc.cotopologies) inst.cotopologies.push_back(k.value);
    for (const auto& f : doc.maps) inst.maps.push_back(f.value);
    if (const auto* d = doc.domain("scope")) {
        inst.scope = d->value;
        inst.scope_context = d->context;
    }
    return inst;
}

inline std::string serialize_instance(const Instance& inst) { return dsl::serialize(to_document(inst)); }

/// Parses a serialized witness; malformed text throws ArgumentError.
inline Instance parse_instance(std::string_view text) {
    auto r = dsl::parse(text);
    if (!r.ok()) {
        throw ArgumentError("witness does not parse: " + r.errors.front().to_string());
    }
    return from_document(r.document);
}

} // namespace softdito::oracle

#endif
