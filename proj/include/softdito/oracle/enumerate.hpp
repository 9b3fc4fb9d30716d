#ifndef SOFTDITO_ORACLE_ENUMERATE_HPP
#define SOFTDITO_ORACLE_ENUMERATE_HPP

#include <charconv>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "../cotopology.hpp"
#include "../topology.hpp"

namespace softdito::oracle {

/**
 * Size limits for exhaustive runs. `budget` caps the number of soft sets per
 * context, (1 + 2^|U|)^|E|, and `family_budget` the number of distinct
 * families visited while enumerating (co)topologies of one context.
 * `instance_budget` caps the instances one theorem check may examine; a
 * report that hits it says so instead of claiming exhaustiveness.
 */
struct EnumBounds {
    std::size_t max_universe = 2;
    std::size_t max_params = 2;
    std::size_t max_explicit_members = 6;
    std::uint64_t budget = std::uint64_t{1} << 20;
    std::size_t family_budget = 200000;
    std::uint64_t instance_budget = 1000000;

    std::string to_string() const {
        return std::to_string(max_universe) + "," + std::to_string(max_params) + "," + std::to_string(max_explicit_members);
    }
};

/// Reads "U,E" or "U,E,M" (M defaults to 6). Malformed text throws ArgumentError.
inline EnumBounds parse_bounds(std::string_view text) {
    std::vector<std::size_t> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        std::size_t v = 0;
        const auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
        if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size() || v == 0) {
            throw ArgumentError("bounds must look like U,E or U,E,M with positive integers, got '" + std::string(text) + "'");
        }
        parts.push_back(v);
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
        throw ArgumentError("bounds must look like U,E or U,E,M, got '" + std::string(text) + "'");
    }
    EnumBounds b;
    b.max_universe = parts[0];
    b.max_params = parts[1];
    if (parts.size() == 3) {
        b.max_explicit_members = parts[2];
    }
    return b;
}

/// Point labels x, y, z, w, v, u, then p7, p8, ...
inline std::string point_label(std::size_t i) {
    static const char* names[] = {"x", "y", "z", "w", "v", "u"};
    return i < 6 ? names[i] : "p" + std::to_string(i + 1);
}

inline std::string param_label(std::size_t i) { return "e" + std::to_string(i + 1); }

/// The context with points x, y, ... and parameters e1, e2, ...
inline ContextPtr standard_context(std::size_t universe, std::size_t params) {
    std::vector<std::string> u;
    std::vector<std::string> e;
    for (std::size_t i = 0; i < universe; ++i) {
        u.push_back(point_label(i));
    }
    for (std::size_t i = 0; i < params; ++i) {
        e.push_back(param_label(i));
    }
    return Context::make(std::move(u), std::move(e));
}

/// Every standard context within the bounds, smallest first (by |E|, then |U|).
inline std::vector<ContextPtr> contexts_within(const EnumBounds& b) {
    std::vector<ContextPtr> out;
    for (std::size_t e = 1; e <= b.max_params; ++e) {
        for (std::size_t u = 1; u <= b.max_universe; ++u) {
            out.push_back(standard_context(u, e));
        }
    }
    return out;
}

/// (1 + 2^|U|)^|E|, or UINT64_MAX on overflow.
inline std::uint64_t soft_set_count(const Context& ctx) {
    if (ctx.num_points() >= 63) {
        return UINT64_MAX;
    }
    const std::uint64_t base = (std::uint64_t{1} << ctx.num_points()) + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < ctx.num_params(); ++i) {
        if (total > UINT64_MAX / base) {
            return UINT64_MAX;
        }
        total *= base;
    }
    return total;
}

/// The soft set at position `index` of the canonical order: a mixed-radix
/// number whose most significant digit is the first parameter's state.
inline SoftSet soft_set_at(const ContextPtr& ctx, std::uint64_t index) {
    const std::uint64_t base = (std::uint64_t{1} << ctx->num_points()) + 1;
    std::vector<PointSet> values(ctx->num_params());
    ParamSet dom;
    for (std::size_t k = ctx->num_params(); k-- > 0;) {
        const auto state = index % base;
        index /= base;
        if (state != 0) {
            dom = dom.with(k);
            values[k] = PointSet(state - 1);
        }
    }
    return make_soft_set(ctx, dom, std::move(values));
}

/// Every soft set of `ctx` exactly once, in canonical order.
inline std::vector<SoftSet> enumerate_soft_sets(const ContextPtr& ctx, std::uint64_t budget = std::uint64_t{1} << 20) {
    const auto n = soft_set_count(*ctx);
    if (n > budget) {
        throw BoundsError("enumerate_soft_sets: " + std::to_string(n) + " soft sets exceed the budget of " + std::to_string(budget));
    }
    std::vector<SoftSet> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(soft_set_at(ctx, i));
    }
    return out;
}

/// Every non-empty parameter subset, in mask order.
inline std::vector<ParamSet> nonempty_domains(const Context& ctx) { return PointScope::all().domains(ctx); }

/// Every soft point x_A, ordered by A then x.
inline std::vector<SoftPoint> enumerate_points(const ContextPtr& ctx) {
    std::vector<SoftPoint> out;
    for (auto a : nonempty_domains(*ctx)) {
        for (std::size_t x = 0; x < ctx->num_points(); ++x) {
            out.push_back(SoftPoint{ctx, x, a});
        }
    }
    return out;
}

/**
 * Every family closed under binary union and intersection whose reduced
 * listing has at most `max_explicit_members` sets. Families are reached by
 * breadth-first search from the implicit-only family, adding one soft set
 * at a time and closing; the search itself is not truncated by the member
 * bound, so no family is missed because its predecessors were large.
 * Output is sorted by (listing size, listing) for determinism.
 */
template<typename Kind_>
std::vector<SoftFamily<Kind_>> enumerate_families(const ContextPtr& ctx, const EnumBounds& b) {
    const auto sets = enumerate_soft_sets(ctx, b.budget);
    std::vector<SoftSet> candidates;
    for (const auto& s : sets) {
        if (!s.is_null() && !is_whole(s)) {
            candidates.push_back(s);
        }
    }
    std::set<std::vector<SoftSet>> seen;
    std::deque<SoftFamily<Kind_>> queue;
    SoftFamily<Kind_> start(ctx, {});
    seen.insert(start.listed());
    queue.push_back(start);
    std::vector<SoftFamily<Kind_>> out;
    while (!queue.empty()) {
        auto fam = std::move(queue.front());
        queue.pop_front();
        for (const auto& c : candidates) {
            if (fam.contains(c)) {
                continue;
            }
            auto gens = fam.listed();
            gens.push_back(c);
            auto next = generate_family<Kind_>(ctx, std::move(gens));
            if (seen.insert(next.listed()).second) {
                if (seen.size() > b.family_budget) {
                    throw BoundsError("enumerate_families: more than " + std::to_string(b.family_budget) + " families");
                }
                queue.push_back(std::move(next));
            }
        }
        if (fam.listed().size() <= b.max_explicit_members) {
            out.push_back(std::move(fam));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        if (l.listed().size() != r.listed().size()) {
            return l.listed().size() < r.listed().size();
        }
        return l.listed() < r.listed();
    });
    return out;
}

inline std::vector<SoftTopology> enumerate_topologies(const ContextPtr& ctx, const EnumBounds& b) {
    return enumerate_families<OpenKind>(ctx, b);
}

inline std::vector<SoftCotopology> enumerate_cotopologies(const ContextPtr& ctx, const EnumBounds& b) {
    return enumerate_families<ClosedKind>(ctx, b);
}

/// Every soft map between the two contexts: φ tables in lexicographic
/// order, then ψ tables.
inline std::vector<SoftMap> enumerate_maps(const ContextPtr& src, const ContextPtr& tgt, std::size_t budget = 1u << 16) {
    auto tables = [](std::size_t len, std::size_t range) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> cur(len, 0);
        while (true) {
            out.push_back(cur);
            std::size_t i = len;
            while (i > 0) {
                --i;
                if (++cur[i] < range) {
                    break;
                }
                cur[i] = 0;
                if (i == 0) {
                    return out;
                }
            }
            if (len == 0) {
                return out;
            }
        }
    };
    const auto phis = tables(src->num_points(), tgt->num_points());
    const auto psis = tables(src->num_params(), tgt->num_params());
    if (phis.size() * psis.size() > budget) {
        throw BoundsError("enumerate_maps: too many maps");
    }
    std::vector<SoftMap> out;
    for (const auto& phi : phis) {
        for (const auto& psi : psis) {
            out.emplace_back(src, tgt, phi, psi);
        }
    }
    return out;
}

} // namespace softdito::oracle

#endif
