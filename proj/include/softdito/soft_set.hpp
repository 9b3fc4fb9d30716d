#ifndef SOFTDITO_SOFT_SET_HPP
#define SOFTDITO_SOFT_SET_HPP

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "context.hpp"

namespace softdito {

/**
 * A soft set F_A: a map from the parameters in its domain A to subsets of the
 * universe. Outside A the soft set is undefined, not empty; the algebra below
 * always branches on domain membership.
 *
 * Values are indexed by parameter and are kept empty outside the domain so
 * that structural equality is plain member-wise comparison.
 */
class SoftSet {
public:
    SoftSet() = default;

    /// The empty-domain soft set of `ctx`.
    explicit SoftSet(ContextPtr ctx) : ctx_(std::move(ctx)), values_(ctx_->num_params()) {}

    SoftSet(ContextPtr ctx, ParamSet domain, std::vector<PointSet> values)
        : ctx_(std::move(ctx)), domain_(domain), values_(std::move(values)) {
        if (values_.size() != ctx_->num_params()) {
            throw ArgumentError("soft set value table does not match the parameter count");
        }
        if (!domain_.subset_of(ctx_->all_params())) {
            throw DomainError("soft set domain is not a subset of the parameters");
        }
        const auto u = ctx_->universe();
        for (std::size_t e = 0; e < values_.size(); ++e) {
            if (!domain_.contains(e)) {
                if (!values_[e].empty()) {
                    throw ArgumentError("soft set has a value outside its domain");
                }
            } else if (!values_[e].subset_of(u)) {
                throw DomainError("soft set value is not a subset of the universe");
            }
        }
    }

    /// Builds a soft set from (parameter label, point labels) entries; the
    /// domain is exactly the set of listed parameters.
    static SoftSet from_labels(const ContextPtr& ctx,
                               const std::vector<std::pair<std::string, std::vector<std::string>>>& entries) {
        SoftSet s(ctx);
        for (const auto& [param, points] : entries) {
            const auto e = ctx->param(param);
            if (s.domain_.contains(e)) {
                throw ArgumentError("parameter '" + param + "' listed twice");
            }
            s.domain_ = s.domain_.with(e);
            s.values_[e] = ctx->point_set(points);
        }
        return s;
    }

    const ContextPtr& context() const { return ctx_; }
    ParamSet domain() const { return domain_; }

    /// F(e); only meaningful when e is in the domain.
    PointSet at(std::size_t e) const { return values_[e]; }
    bool defined_at(std::size_t e) const { return domain_.contains(e); }
    std::span<const PointSet> values() const { return values_; }

    /// True when every defined value is empty (the null soft set relative to its domain).
    bool is_null() const {
        for (auto v : values_) {
            if (!v.empty()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const SoftSet& a, const SoftSet& b) {
        return a.domain_ == b.domain_ && a.values_ == b.values_ && same_context(a.ctx_, b.ctx_);
    }

    /// Canonical order: parameters in order, "undefined" before any value,
    /// values by mask.
    friend std::strong_ordering operator<=>(const SoftSet& a, const SoftSet& b) {
        const auto n = std::min(a.values_.size(), b.values_.size());
        for (std::size_t e = 0; e < n; ++e) {
            const auto sa = a.state(e);
            const auto sb = b.state(e);
            if (sa != sb) {
                return sa <=> sb;
            }
        }
        return a.values_.size() <=> b.values_.size();
    }

    /// 0 when undefined at e, 1 + mask otherwise.
    std::uint64_t state(std::size_t e) const {
        return domain_.contains(e) ? values_[e].bits() + 1 : 0;
    }

private:
    friend SoftSet make_soft_set(ContextPtr, ParamSet, std::vector<PointSet>);

    ContextPtr ctx_;
    ParamSet domain_;
    std::vector<PointSet> values_;
};

/// A soft point x_A: the point x together with a non-empty parameter set A.
struct SoftPoint {
    ContextPtr ctx;
    std::size_t point = 0;
    ParamSet domain;

    friend bool operator==(const SoftPoint& a, const SoftPoint& b) {
        return a.point == b.point && a.domain == b.domain && same_context(a.ctx, b.ctx);
    }
};

// Unchecked construction for internal use where invariants hold by construction.
inline SoftSet make_soft_set(ContextPtr ctx, ParamSet domain, std::vector<PointSet> values) {
    SoftSet s;
    s.ctx_ = std::move(ctx);
    s.domain_ = domain;
    s.values_ = std::move(values);
    return s;
}

namespace detail {

inline void require_params(const ContextPtr& ctx, ParamSet a) {
    if (!a.subset_of(ctx->all_params())) {
        throw DomainError("parameter set is not a subset of the context parameters");
    }
}

inline SoftSet constant(const ContextPtr& ctx, ParamSet a, PointSet value) {
    std::vector<PointSet> values(ctx->num_params());
    a.for_each([&](std::size_t e) { values[e] = value; });
    return make_soft_set(ctx, a, std::move(values));
}

} // namespace detail

/// Ũ_A: universe at every parameter of A.
inline SoftSet whole(const ContextPtr& ctx, ParamSet a) {
    detail::require_params(ctx, a);
    return detail::constant(ctx, a, ctx->universe());
}

/// Ũ_E.
inline SoftSet whole(const ContextPtr& ctx) { return whole(ctx, ctx->all_params()); }

/// φ_A: empty at every parameter of A.
inline SoftSet null(const ContextPtr& ctx, ParamSet a) {
    detail::require_params(ctx, a);
    return detail::constant(ctx, a, PointSet{});
}

inline SoftSet null(const ContextPtr& ctx) { return null(ctx, ctx->all_params()); }

inline SoftSet complement(const SoftSet& f) {
    const auto& ctx = f.context();
    const auto u = ctx->universe();
    std::vector<PointSet> values(ctx->num_params());
    f.domain().for_each([&](std::size_t e) { values[e] = u - f.at(e); });
    return make_soft_set(ctx, f.domain(), std::move(values));
}

inline SoftSet intersect(const SoftSet& a, const SoftSet& b) {
    require_same_context(a.context(), b.context(), "intersect");
    const auto dom = a.domain() & b.domain();
    std::vector<PointSet> values(a.context()->num_params());
    dom.for_each([&](std::size_t e) { values[e] = a.at(e) & b.at(e); });
    return make_soft_set(a.context(), dom, std::move(values));
}

/// Union over parameters: at each e, the union of the members defined at e.
inline SoftSet unite(const SoftSet& a, const SoftSet& b) {
    require_same_context(a.context(), b.context(), "unite");
    const auto dom = a.domain() | b.domain();
    std::vector<PointSet> values(a.context()->num_params());
    dom.for_each([&](std::size_t e) {
        PointSet v;
        if (a.defined_at(e)) {
            v |= a.at(e);
        }
        if (b.defined_at(e)) {
            v |= b.at(e);
        }
        values[e] = v;
    });
    return make_soft_set(a.context(), dom, std::move(values));
}

inline SoftSet intersect(std::span<const SoftSet> family) {
    if (family.empty()) {
        throw ArgumentError("intersect: empty family");
    }
    SoftSet acc = family.front();
    for (const auto& f : family.subspan(1)) {
        acc = intersect(acc, f);
    }
    return acc;
}

inline SoftSet unite(std::span<const SoftSet> family) {
    if (family.empty()) {
        throw ArgumentError("unite: empty family");
    }
    SoftSet acc = family.front();
    for (const auto& f : family.subspan(1)) {
        acc = unite(acc, f);
    }
    return acc;
}

inline SoftSet intersect(std::initializer_list<SoftSet> family) {
    return intersect(std::span<const SoftSet>(family.begin(), family.size()));
}

inline SoftSet unite(std::initializer_list<SoftSet> family) {
    return unite(std::span<const SoftSet>(family.begin(), family.size()));
}

/// F ⊆̃ G: domain(F) ⊆ domain(G) and F(e) ⊆ G(e) on domain(F).
inline bool is_subset(const SoftSet& f, const SoftSet& g) {
    require_same_context(f.context(), g.context(), "is_subset");
    if (!f.domain().subset_of(g.domain())) {
        return false;
    }
    bool ok = true;
    f.domain().for_each([&](std::size_t e) { ok = ok && f.at(e).subset_of(g.at(e)); });
    return ok;
}

inline bool equals(const SoftSet& f, const SoftSet& g) {
    require_same_context(f.context(), g.context(), "equals");
    return f == g;
}

/// F restricted to domain(F) ∩ b.
inline SoftSet restrict(const SoftSet& f, ParamSet b) {
    const auto dom = f.domain() & b;
    std::vector<PointSet> values(f.context()->num_params());
    dom.for_each([&](std::size_t e) { values[e] = f.at(e); });
    return make_soft_set(f.context(), dom, std::move(values));
}

/// F ∪̃ φ_B: F extended by the empty value on the parameters of B it lacks.
inline SoftSet pad(const SoftSet& f, ParamSet b) {
    return make_soft_set(f.context(), f.domain() | b, std::vector<PointSet>(f.values().begin(), f.values().end()));
}

inline SoftPoint make_point(const ContextPtr& ctx, std::size_t x, ParamSet a) {
    if (x >= ctx->num_points()) {
        throw DomainError("soft point: point index out of range");
    }
    detail::require_params(ctx, a);
    if (a.empty()) {
        throw ArgumentError("soft point: domain must be non-empty");
    }
    return SoftPoint{ctx, x, a};
}

inline SoftPoint make_point(const ContextPtr& ctx, std::string_view x, const std::vector<std::string>& a) {
    return make_point(ctx, ctx->point(x), ctx->param_set(a));
}

/// x_A as a soft set: {x} at every parameter of A.
inline SoftSet soft_point(const ContextPtr& ctx, std::size_t x, ParamSet a) {
    const auto p = make_point(ctx, x, a);
    return detail::constant(ctx, p.domain, PointSet::single(x));
}

inline SoftSet to_soft_set(const SoftPoint& p) {
    return detail::constant(p.ctx, p.domain, PointSet::single(p.point));
}

/// x_A ∈̃ F: domain(p) ⊆ domain(F) and x ∈ F(e) for every e in domain(p).
inline bool point_in(const SoftPoint& p, const SoftSet& f) {
    require_same_context(p.ctx, f.context(), "point_in");
    if (!p.domain.subset_of(f.domain())) {
        return false;
    }
    bool ok = true;
    p.domain.for_each([&](std::size_t e) { ok = ok && f.at(e).contains(p.point); });
    return ok;
}

/// x ∉ F(e) for every e in A at which F is defined.
inline bool excluded_everywhere(std::size_t x, ParamSet a, const SoftSet& f) {
    bool ok = true;
    a.for_each([&](std::size_t e) { ok = ok && !(f.defined_at(e) && f.at(e).contains(x)); });
    return ok;
}

/// Human-readable form, e.g. {e1: {x}, e2: {x, z}}.
inline std::string to_string(const SoftSet& f) {
    const auto& ctx = f.context();
    std::string out = "{";
    bool first_param = true;
    f.domain().for_each([&](std::size_t e) {
        if (!first_param) {
            out += ", ";
        }
        first_param = false;
        out += ctx->params()[e] + ": {";
        bool first_point = true;
        f.at(e).for_each([&](std::size_t x) {
            if (!first_point) {
                out += ", ";
            }
            first_point = false;
            out += ctx->points()[x];
        });
        out += "}";
    });
    return out + "}";
}

inline std::string to_string(const SoftPoint& p) {
    std::string out = p.ctx->points()[p.point] + "_{";
    bool first = true;
    p.domain.for_each([&](std::size_t e) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += p.ctx->params()[e];
    });
    return out + "}";
}

} // namespace softdito

#endif
