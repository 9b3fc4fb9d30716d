#ifndef SOFTDITO_CONTEXT_HPP
#define SOFTDITO_CONTEXT_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "index_set.hpp"

namespace softdito {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

/**
 * The ambient universe U and parameter set E.
 *
 * Labels are stored sorted so that every iteration over points or parameters
 * (and everything serialized from it) follows one canonical order. Points and
 * parameters are addressed by their index in that order.
 */
class Context {
public:
    static ContextPtr make(std::vector<std::string> points, std::vector<std::string> params) {
        check_labels(points, "universe");
        check_labels(params, "params");
        return ContextPtr(new Context(std::move(points), std::move(params)));
    }

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<std::string>& params() const { return params_; }
    std::size_t num_points() const { return points_.size(); }
    std::size_t num_params() const { return params_.size(); }

    PointSet universe() const { return PointSet::first(points_.size()); }
    ParamSet all_params() const { return ParamSet::first(params_.size()); }

    std::optional<std::size_t> find_point(std::string_view label) const { return find(points_, label); }
    std::optional<std::size_t> find_param(std::string_view label) const { return find(params_, label); }

    std::size_t point(std::string_view label) const {
        auto i = find_point(label);
        if (!i) {
            throw DomainError("unknown point '" + std::string(label) + "'");
        }
        return *i;
    }

    std::size_t param(std::string_view label) const {
        auto i = find_param(label);
        if (!i) {
            throw DomainError("unknown parameter '" + std::string(label) + "'");
        }
        return *i;
    }

    PointSet point_set(const std::vector<std::string>& labels) const {
        PointSet s;
        for (const auto& l : labels) {
            s = s.with(point(l));
        }
        return s;
    }

    ParamSet param_set(const std::vector<std::string>& labels) const {
        ParamSet s;
        for (const auto& l : labels) {
            s = s.with(param(l));
        }
        return s;
    }

    std::vector<std::string> labels(PointSet s) const { return pick(points_, s.indices()); }
    std::vector<std::string> labels(ParamSet s) const { return pick(params_, s.indices()); }

    friend bool operator==(const Context& a, const Context& b) {
        return a.points_ == b.points_ && a.params_ == b.params_;
    }

private:
    Context(std::vector<std::string> points, std::vector<std::string> params)
        : points_(std::move(points)), params_(std::move(params)) {
        std::sort(points_.begin(), points_.end());
        std::sort(params_.begin(), params_.end());
    }

    static void check_labels(const std::vector<std::string>& labels, const char* what) {
        if (labels.empty()) {
            throw ArgumentError(std::string(what) + " must be non-empty");
        }
        if (labels.size() > kMaxLabels) {
            throw BoundsError(std::string(what) + " has more than 64 labels");
        }
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw ArgumentError(std::string("duplicate label '") + *dup + "' in " + what);
        }
    }

    static std::optional<std::size_t> find(const std::vector<std::string>& v, std::string_view label) {
        auto it = std::lower_bound(v.begin(), v.end(), label);
        if (it == v.end() || *it != label) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - v.begin());
    }

    static std::vector<std::string> pick(const std::vector<std::string>& v, const std::vector<std::size_t>& idx) {
        std::vector<std::string> out;
        out.reserve(idx.size());
        for (auto i : idx) {
            out.push_back(v[i]);
        }
        return out;
    }

    std::vector<std::string> points_;
    std::vector<std::string> params_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr& a, const ContextPtr& b, const char* where) {
    if (!same_context(a, b)) {
        throw ArgumentError(std::string(where) + ": operands live in different contexts");
    }
}

} // namespace softdito

#endif
