#ifndef SOFTDITO_SOFT_MAP_HPP
#define SOFTDITO_SOFT_MAP_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "soft_set.hpp"

namespace softdito {

/**
 * A soft function f = (φ, ψ) between two contexts, induced by a point map
 * φ: U → V and a parameter map ψ: E → P. Both are stored as total tables
 * indexed by the source's canonical order.
 */
class SoftMap {
public:
    SoftMap(ContextPtr source, ContextPtr target, std::vector<std::size_t> phi, std::vector<std::size_t> psi)
        : source_(std::move(source)), target_(std::move(target)), phi_(std::move(phi)), psi_(std::move(psi)) {
        if (phi_.size() != source_->num_points()) {
            throw ArgumentError("point map is not total on the source universe");
        }
        if (psi_.size() != source_->num_params()) {
            throw ArgumentError("parameter map is not total on the source parameters");
        }
        for (auto v : phi_) {
            if (v >= target_->num_points()) {
                throw DomainError("point map leaves the target universe");
            }
        }
        for (auto p : psi_) {
            if (p >= target_->num_params()) {
                throw DomainError("parameter map leaves the target parameters");
            }
        }
    }

    static SoftMap from_labels(const ContextPtr& source, const ContextPtr& target,
                               const std::map<std::string, std::string>& points,
                               const std::map<std::string, std::string>& params) {
        std::vector<std::size_t> phi(source->num_points(), 0);
        std::vector<bool> seen_point(source->num_points(), false);
        for (const auto& [from, to] : points) {
            const auto i = source->point(from);
            phi[i] = target->point(to);
            seen_point[i] = true;
        }
        std::vector<std::size_t> psi(source->num_params(), 0);
        std::vector<bool> seen_param(source->num_params(), false);
        for (const auto& [from, to] : params) {
            const auto i = source->param(from);
            psi[i] = target->param(to);
            seen_param[i] = true;
        }
        for (std::size_t i = 0; i < seen_point.size(); ++i) {
            if (!seen_point[i]) {
                throw ArgumentError("point map has no image for '" + source->points()[i] + "'");
            }
        }
        for (std::size_t i = 0; i < seen_param.size(); ++i) {
            if (!seen_param[i]) {
                throw ArgumentError("parameter map has no image for '" + source->params()[i] + "'");
            }
        }
        return SoftMap(source, target, std::move(phi), std::move(psi));
    }

    static SoftMap identity(const ContextPtr& ctx) {
        std::vector<std::size_t> phi(ctx->num_points());
        std::vector<std::size_t> psi(ctx->num_params());
        for (std::size_t i = 0; i < phi.size(); ++i) {
            phi[i] = i;
        }
        for (std::size_t i = 0; i < psi.size(); ++i) {
            psi[i] = i;
        }
        return SoftMap(ctx, ctx, std::move(phi), std::move(psi));
    }

    const ContextPtr& source() const { return source_; }
    const ContextPtr& target() const { return target_; }
    const std::vector<std::size_t>& phi() const { return phi_; }
    const std::vector<std::size_t>& psi() const { return psi_; }

    PointSet map_points(PointSet s) const {
        PointSet out;
        s.for_each([&](std::size_t x) { out = out.with(phi_[x]); });
        return out;
    }

    ParamSet map_params(ParamSet s) const {
        ParamSet out;
        s.for_each([&](std::size_t e) { out = out.with(psi_[e]); });
        return out;
    }

    PointSet pull_points(PointSet s) const {
        PointSet out;
        for (std::size_t x = 0; x < phi_.size(); ++x) {
            if (s.contains(phi_[x])) {
                out = out.with(x);
            }
        }
        return out;
    }

    ParamSet pull_params(ParamSet s) const {
        ParamSet out;
        for (std::size_t e = 0; e < psi_.size(); ++e) {
            if (s.contains(psi_[e])) {
                out = out.with(e);
            }
        }
        return out;
    }

    bool injective() const { return is_injective(phi_) && is_injective(psi_); }

    bool surjective() const {
        return map_points(source_->universe()) == target_->universe()
            && map_params(source_->all_params()) == target_->all_params();
    }

    friend bool operator==(const SoftMap& a, const SoftMap& b) {
        return same_context(a.source_, b.source_) && same_context(a.target_, b.target_)
            && a.phi_ == b.phi_ && a.psi_ == b.psi_;
    }

private:
    static bool is_injective(const std::vector<std::size_t>& m) {
        std::vector<std::size_t> sorted = m;
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    ContextPtr source_;
    ContextPtr target_;
    std::vector<std::size_t> phi_;
    std::vector<std::size_t> psi_;
};

/// f(F)(p) = φ(∪{F(e) : e ∈ domain(F), ψ(e) = p}) for p ∈ ψ(domain(F)).
inline SoftSet image(const SoftMap& f, const SoftSet& s) {
    require_same_context(f.source(), s.context(), "image");
    const auto& tgt = f.target();
    std::vector<PointSet> values(tgt->num_params());
    ParamSet dom;
    s.domain().for_each([&](std::size_t e) {
        const auto p = f.psi()[e];
        dom = dom.with(p);
        values[p] |= f.map_points(s.at(e));
    });
    return make_soft_set(tgt, dom, std::move(values));
}

/// f⁻¹(G)(e) = φ⁻¹(G(ψ(e))) for e ∈ ψ⁻¹(domain(G)).
inline SoftSet preimage(const SoftMap& f, const SoftSet& g) {
    require_same_context(f.target(), g.context(), "preimage");
    const auto& src = f.source();
    const auto dom = f.pull_params(g.domain());
    std::vector<PointSet> values(src->num_params());
    dom.for_each([&](std::size_t e) { values[e] = f.pull_points(g.at(f.psi()[e])); });
    return make_soft_set(src, dom, std::move(values));
}

/// f(x_A) = φ(x)_{ψ(A)}.
inline SoftPoint image(const SoftMap& f, const SoftPoint& p) {
    require_same_context(f.source(), p.ctx, "image");
    return SoftPoint{f.target(), f.phi()[p.point], f.map_params(p.domain)};
}

/// g ∘ f.
inline SoftMap compose(const SoftMap& g, const SoftMap& f) {
    if (!same_context(f.target(), g.source())) {
        throw ArgumentError("compose: target of the inner map is not the source of the outer map");
    }
    std::vector<std::size_t> phi(f.phi().size());
    std::vector<std::size_t> psi(f.psi().size());
    for (std::size_t i = 0; i < phi.size(); ++i) {
        phi[i] = g.phi()[f.phi()[i]];
    }
    for (std::size_t i = 0; i < psi.size(); ++i) {
        psi[i] = g.psi()[f.psi()[i]];
    }
    return SoftMap(f.source(), g.target(), std::move(phi), std::move(psi));
}

} // namespace softdito

#endif
