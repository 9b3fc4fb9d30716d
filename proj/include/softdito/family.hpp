#ifndef SOFTDITO_FAMILY_HPP
#define SOFTDITO_FAMILY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "soft_set.hpp"

namespace softdito {

/**
 * True when `f` is `m` extended by empty values: domain(m) ⊆ domain(f),
 * f agrees with m on domain(m), and f(e) = ∅ on the remaining parameters.
 * Equivalently f = m ∪̃ φ_B for some B.
 */
inline bool is_padding_of(const SoftSet& f, const SoftSet& m) {
    if (!m.domain().subset_of(f.domain())) {
        return false;
    }
    for (std::size_t e = 0; e < f.values().size(); ++e) {
        if (f.at(e) != m.at(e)) {
            return false;
        }
    }
    return true;
}

inline bool is_whole(const SoftSet& f) {
    const auto& ctx = f.context();
    if (f.domain() != ctx->all_params()) {
        return false;
    }
    const auto u = ctx->universe();
    for (auto v : f.values()) {
        if (v != u) {
            return false;
        }
    }
    return true;
}

inline void sort_unique(std::vector<SoftSet>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct OpenKind {
    static constexpr const char* structure = "topology";
    static constexpr const char* member = "open";
};

struct ClosedKind {
    static constexpr const char* structure = "cotopology";
    static constexpr const char* member = "closed";
};

enum class FamilyOp { unite, intersect };

inline const char* to_string(FamilyOp op) { return op == FamilyOp::unite ? "union" : "intersection"; }

/// A pair of members whose union or intersection is missing from the family.
struct Violation {
    FamilyOp op;
    SoftSet left;
    SoftSet right;
    SoftSet result;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/**
 * A finite family of soft sets closed (when valid) under binary union and
 * intersection, with mandatory members represented implicitly.
 *
 * Every null soft set φ_A and the whole set Ũ_E are members whether listed
 * or not. Because φ_B is a member and unions of members are members, so is
 * M ∪̃ φ_B for every listed M; such paddings are recognized by predicate as
 * well. Only the listed sets are stored.
 *
 * Construction does not validate closure; see check().
 */
template<typename Kind_>
class SoftFamily {
public:
    using Kind = Kind_;

    SoftFamily() = default;

    SoftFamily(ContextPtr ctx, std::vector<SoftSet> listed) : ctx_(std::move(ctx)), listed_(std::move(listed)) {
        for (const auto& m : listed_) {
            require_same_context(ctx_, m.context(), Kind::structure);
        }
        sort_unique(listed_);
    }

    const ContextPtr& context() const { return ctx_; }

    /// The explicitly listed sets, sorted and deduplicated.
    const std::vector<SoftSet>& listed() const { return listed_; }

    bool contains(const SoftSet& f) const {
        require_same_context(ctx_, f.context(), Kind::structure);
        if (f.is_null() || is_whole(f)) {
            return true;
        }
        return std::any_of(listed_.begin(), listed_.end(), [&](const SoftSet& m) { return is_padding_of(f, m); });
    }

    /// The listed sets together with Ũ_E; every non-null member is a padding of one of these.
    std::vector<SoftSet> generators() const {
        std::vector<SoftSet> out = listed_;
        out.push_back(whole(ctx_));
        sort_unique(out);
        return out;
    }

    /// Every member whose domain is exactly `a`.
    std::vector<SoftSet> members_on(ParamSet a) const {
        std::vector<SoftSet> out{null(ctx_, a)};
        if (a == ctx_->all_params()) {
            out.push_back(whole(ctx_));
        }
        for (const auto& m : listed_) {
            if (m.domain().subset_of(a)) {
                out.push_back(pad(m, a));
            }
        }
        sort_unique(out);
        return out;
    }

    /// {K restricted to a : K a member with a ⊆ domain(K)}.
    std::vector<SoftSet> traces_on(ParamSet a) const {
        std::vector<SoftSet> out{null(ctx_, a), whole(ctx_, a)};
        for (const auto& m : listed_) {
            out.push_back(restrict(pad(m, a), a));
        }
        sort_unique(out);
        return out;
    }

    /// Every member, materialized. Exponential in the number of parameters.
    std::vector<SoftSet> all_members() const {
        const auto all = ctx_->all_params();
        std::vector<SoftSet> out;
        for (auto b : subsets_of(all)) {
            out.push_back(null(ctx_, b));
        }
        out.push_back(whole(ctx_));
        for (const auto& m : listed_) {
            for (auto b : subsets_of(all - m.domain())) {
                out.push_back(pad(m, b));
            }
        }
        sort_unique(out);
        return out;
    }

    /// Members containing `f` that are minimal among the paddings of each
    /// generator; every member containing `f` contains one of these.
    std::vector<SoftSet> minimal_members_containing(const SoftSet& f) const {
        std::vector<SoftSet> out;
        if (f.is_null()) {
            out.push_back(null(ctx_, f.domain()));
        }
        for (const auto& m : generators()) {
            const auto candidate = pad(m, f.domain() - m.domain());
            if (is_subset(f, candidate)) {
                out.push_back(candidate);
            }
        }
        sort_unique(out);
        return out;
    }

    /// Checks closure of the listed sets under binary union and intersection.
    /// Pairs involving implicit members always stay inside the family, so
    /// only listed pairs are examined.
    ValidationReport check() const {
        ValidationReport report;
        for (std::size_t i = 0; i < listed_.size(); ++i) {
            for (std::size_t j = i + 1; j < listed_.size(); ++j) {
                const auto& a = listed_[i];
                const auto& b = listed_[j];
                auto u = unite(a, b);
                if (!contains(u)) {
                    report.violations.push_back({FamilyOp::unite, a, b, std::move(u)});
                }
                auto n = intersect(a, b);
                if (!contains(n)) {
                    report.violations.push_back({FamilyOp::intersect, a, b, std::move(n)});
                }
            }
        }
        return report;
    }

    bool valid() const { return check().ok(); }

    /// Every member of `other` is a member of this family.
    bool includes(const SoftFamily& other) const {
        require_same_context(ctx_, other.ctx_, Kind::structure);
        return std::all_of(other.listed_.begin(), other.listed_.end(), [&](const SoftSet& m) { return contains(m); });
    }

    /// Canonical listing: implicit members and paddings of other listed sets dropped.
    SoftFamily reduced() const {
        std::vector<SoftSet> keep;
        for (const auto& m : listed_) {
            if (m.is_null() || is_whole(m)) {
                continue;
            }
            const bool redundant = std::any_of(listed_.begin(), listed_.end(), [&](const SoftSet& other) {
                return other != m && is_padding_of(m, other);
            });
            if (!redundant) {
                keep.push_back(m);
            }
        }
        return SoftFamily(ctx_, std::move(keep));
    }

    /// Same members.
    friend bool operator==(const SoftFamily& a, const SoftFamily& b) {
        return same_context(a.ctx_, b.ctx_) && a.includes(b) && b.includes(a);
    }

private:
    ContextPtr ctx_;
    std::vector<SoftSet> listed_;
};

/// The smallest family containing `generators` and closed under binary union
/// and intersection, in reduced form.
template<typename Kind_>
SoftFamily<Kind_> generate_family(const ContextPtr& ctx, std::vector<SoftSet> generators) {
    SoftFamily<Kind_> acc(ctx, std::move(generators));
    std::vector<SoftSet> items = acc.listed();
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            for (auto candidate : {unite(items[i], items[j]), intersect(items[i], items[j])}) {
                if (!acc.contains(candidate)) {
                    items.push_back(candidate);
                    acc = SoftFamily<Kind_>(ctx, items);
                }
            }
        }
    }
    return acc.reduced();
}

/// {F(e) : F a member defined at e}, as subsets of the universe.
template<typename Kind_>
std::vector<PointSet> slice_at_parameter(const SoftFamily<Kind_>& fam, std::size_t e) {
    const auto& ctx = fam.context();
    if (e >= ctx->num_params()) {
        throw DomainError("slice_at_parameter: parameter out of range");
    }
    std::vector<PointSet> out{PointSet{}, ctx->universe()};
    for (const auto& m : fam.listed()) {
        out.push_back(m.defined_at(e) ? m.at(e) : PointSet{});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template<typename Kind_>
std::vector<PointSet> slice_at_parameter(const SoftFamily<Kind_>& fam, std::string_view e) {
    return slice_at_parameter(fam, fam.context()->param(e));
}

/// Member-wise intersection of two families on the same context.
template<typename Kind_>
SoftFamily<Kind_> family_intersection(const SoftFamily<Kind_>& a, const SoftFamily<Kind_>& b) {
    require_same_context(a.context(), b.context(), Kind_::structure);
    std::vector<SoftSet> common;
    // A common member is a padding of some generator of each side, hence a
    // padding of the union of the two generators.
    for (const auto& m : a.generators()) {
        for (const auto& n : b.generators()) {
            auto u = unite(m, n);
            if (a.contains(u) && b.contains(u)) {
                common.push_back(std::move(u));
            }
        }
    }
    return SoftFamily<Kind_>(a.context(), std::move(common)).reduced();
}

} // namespace softdito

#endif
