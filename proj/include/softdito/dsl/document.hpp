#ifndef SOFTDITO_DSL_DOCUMENT_HPP
#define SOFTDITO_DSL_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "../ditopology.hpp"

namespace softdito::dsl {

struct Location {
    std::size_t line = 0;
    std::size_t column = 0;
};

template<typename T_>
struct Decl {
    std::string name;
    T_ value;
    Location loc{};
};

struct DitopologyDecl {
    std::string tau;
    std::string kappa;
    Ditopology value;
};

/// A named parameter subset of one context (used e.g. as an axiom scope).
struct DomainDecl {
    ContextPtr context;
    ParamSet value;
};

/**
 * A resolved specification: every declaration is well-typed against its
 * context. Names share one namespace across kinds, and each kind keeps its
 * declaration order.
 */
class SpecDocument {
public:
    std::vector<Decl<ContextPtr>> contexts;
    std::vector<Decl<SoftSet>> sets;
    std::vector<Decl<SoftPoint>> points;
    std::vector<Decl<DomainDecl>> domains;
    std::vector<Decl<SoftTopology>> topologies;
    std::vector<Decl<SoftCotopology>> cotopologies;
    std::vector<Decl<DitopologyDecl>> ditopologies;
    std::vector<Decl<SoftMap>> maps;

    /// "context", "softset", ... or "" when the name is free.
    std::string kind_of(std::string_view name) const {
        if (find(contexts, name)) return "context";
        if (find(sets, name)) return "softset";
        if (find(points, name)) return "point";
        if (find(domains, name)) return "domain";
        if (find(topologies, name)) return "topology";
        if (find(cotopologies, name)) return "cotopology";
        if (find(ditopologies, name)) return "ditopology";
        if (find(maps, name)) return "map";
        return "";
    }

    const ContextPtr* context(std::string_view n) const { return find(contexts, n); }
    const SoftSet* set(std::string_view n) const { return find(sets, n); }
    const SoftPoint* point(std::string_view n) const { return find(points, n); }
    const DomainDecl* domain(std::string_view n) const { return find(domains, n); }
    const SoftTopology* topology(std::string_view n) const { return find(topologies, n); }
    const SoftCotopology* cotopology(std::string_view n) const { return find(cotopologies, n); }
    const DitopologyDecl* ditopology(std::string_view n) const { return find(ditopologies, n); }
    const SoftMap* map(std::string_view n) const { return find(maps, n); }

    /// Name of the declared context equal to `ctx`; throws if none.
    const std::string& context_name(const ContextPtr& ctx) const {
        for (const auto& c : contexts) {
            if (same_context(c.value, ctx)) {
                return c.name;
            }
        }
        throw ArgumentError("context is not declared in the document");
    }

    // Programmatic builders. They enforce the same rules as the parser:
    // fresh names and declared contexts.
    void add_context(std::string name, ContextPtr ctx) {
        claim(name);
        contexts.push_back({std::move(name), std::move(ctx), {}});
    }
    void add_set(std::string name, SoftSet s) {
        claim(name);
        context_name(s.context());
        sets.push_back({std::move(name), std::move(s), {}});
    }
    void add_point(std::string name, SoftPoint p) {
        claim(name);
        context_name(p.ctx);
        points.push_back({std::move(name), std::move(p), {}});
    }
    void add_domain(std::string name, ContextPtr ctx, ParamSet a) {
        claim(name);
        context_name(ctx);
        domains.push_back({std::move(name), DomainDecl{std::move(ctx), a}, {}});
    }
    void add_topology(std::string name, SoftTopology t) {
        claim(name);
        context_name(t.context());
        topologies.push_back({std::move(name), std::move(t), {}});
    }
    void add_cotopology(std::string name, SoftCotopology k) {
        claim(name);
        context_name(k.context());
        cotopologies.push_back({std::move(name), std::move(k), {}});
    }
    void add_ditopology(std::string name, const std::string& tau, const std::string& kappa) {
        claim(name);
        const auto* t = topology(tau);
        const auto* k = cotopology(kappa);
        if (t == nullptr || k == nullptr) {
            throw ArgumentError("ditopology components must be declared first");
        }
        ditopologies.push_back({std::move(name), DitopologyDecl{tau, kappa, Ditopology(*t, *k)}, {}});
    }
    void add_map(std::string name, SoftMap f) {
        claim(name);
        context_name(f.source());
        context_name(f.target());
        maps.push_back({std::move(name), std::move(f), {}});
    }

    /// Same declarations in the same order (locations ignored).
    friend bool operator==(const SpecDocument& a, const SpecDocument& b) {
        return same_decls(a.contexts, b.contexts, [](const auto& x, const auto& y) { return *x == *y; })
            && same_decls(a.sets, b.sets, std::equal_to<>{})
            && same_decls(a.points, b.points, std::equal_to<>{})
            && same_decls(a.domains, b.domains, [](const auto& x, const auto& y) {
                   return same_context(x.context, y.context) && x.value == y.value;
               })
            && same_decls(a.topologies, b.topologies, [](const auto& x, const auto& y) { return x.listed() == y.listed(); })
            && same_decls(a.cotopologies, b.cotopologies, [](const auto& x, const auto& y) { return x.listed() == y.listed(); })
            && same_decls(a.ditopologies, b.ditopologies, [](const auto& x, const auto& y) {
                   return x.tau == y.tau && x.kappa == y.kappa;
               })
            && same_decls(a.maps, b.maps, std::equal_to<>{});
    }

private:
    template<typename T_>
    static const T_* find(const std::vector<Decl<T_>>& v, std::string_view name) {
        for (const auto& d : v) {
            if (d.name == name) {
                return &d.value;
            }
        }
        return nullptr;
    }

    template<typename T_, typename Eq_>
    static bool same_decls(const std::vector<Decl<T_>>& a, const std::vector<Decl<T_>>& b, Eq_ eq) {
        if (a.size() != b.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].name != b[i].name || !eq(a[i].value, b[i].value)) {
                return false;
            }
        }
        return true;
    }

    void claim(const std::string& name) const {
        if (!kind_of(name).empty()) {
            throw ArgumentError("duplicate declaration '" + name + "'");
        }
    }
};

} // namespace softdito::dsl

#endif
