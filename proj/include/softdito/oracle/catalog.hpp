#ifndef SOFTDITO_ORACLE_CATALOG_HPP
#define SOFTDITO_ORACLE_CATALOG_HPP

#include <functional>
#include <map>
#include <memory>
#include <utility>

#include "enumerate.hpp"
#include "instance.hpp"

namespace softdito::oracle {

/**
 * Everything enumerated at one set of bounds, computed on first use and
 * reused across theorems. Contexts are indexed in the order of
 * contexts_within().
 */
class Catalog {
public:
    explicit Catalog(EnumBounds b) : bounds_(b), contexts_(contexts_within(b)) {}

    const EnumBounds& bounds() const { return bounds_; }
    const std::vector<ContextPtr>& contexts() const { return contexts_; }
    std::size_t size() const { return contexts_.size(); }

    const std::vector<SoftSet>& sets(std::size_t c) {
        return cached(sets_, c, [&] { return enumerate_soft_sets(contexts_[c], bounds_.budget); });
    }

    const std::vector<SoftPoint>& points(std::size_t c) {
        return cached(points_, c, [&] { return enumerate_points(contexts_[c]); });
    }

    const std::vector<SoftTopology>& topologies(std::size_t c) {
        return cached(topologies_, c, [&] { return enumerate_topologies(contexts_[c], bounds_); });
    }

    /// Same families as topologies(c): the two structures share their axioms.
    const std::vector<SoftCotopology>& cotopologies(std::size_t c) {
        return cached(cotopologies_, c, [&] {
            std::vector<SoftCotopology> out;
            for (const auto& t : topologies(c)) {
                out.emplace_back(contexts_[c], t.listed());
            }
            return out;
        });
    }

    const std::vector<SoftMap>& maps(std::size_t src, std::size_t tgt) {
        auto it = maps_.find({src, tgt});
        if (it == maps_.end()) {
            it = maps_.emplace(std::make_pair(src, tgt), enumerate_maps(contexts_[src], contexts_[tgt])).first;
        }
        return it->second;
    }

private:
    template<typename T_, typename Make_>
    const std::vector<T_>& cached(std::map<std::size_t, std::vector<T_>>& store, std::size_t c, Make_ make) {
        auto it = store.find(c);
        if (it == store.end()) {
            it = store.emplace(c, make()).first;
        }
        return it->second;
    }

    EnumBounds bounds_;
    std::vector<ContextPtr> contexts_;
    std::map<std::size_t, std::vector<SoftSet>> sets_;
    std::map<std::size_t, std::vector<SoftPoint>> points_;
    std::map<std::size_t, std::vector<SoftTopology>> topologies_;
    std::map<std::size_t, std::vector<SoftCotopology>> cotopologies_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<SoftMap>> maps_;
};

enum class ClaimKind { universal, existence, reading_comparison };

inline const char* to_string(ClaimKind k) {
    switch (k) {
    case ClaimKind::universal: return "universal";
    case ClaimKind::existence: return "existence";
    case ClaimKind::reading_comparison: return "reading-comparison";
    }
    return "?";
}

/**
 * Feeds instances to a predicate and keeps the bookkeeping. For universal
 * claims and reading comparisons the predicate must hold everywhere and the
 * first failure is the witness. For existence claims the predicate marks an
 * example and the search stops at the first one. Instances outside the
 * optional `applies` filter are counted as skipped. visit() returns false
 * once the search should stop, which generators must honor.
 */
class Recorder {
public:
    using Predicate = std::function<bool(const Instance&)>;

    Recorder(ClaimKind kind, Predicate pred, std::uint64_t budget, Predicate applies = {})
        : kind_(kind), pred_(std::move(pred)), applies_(std::move(applies)), budget_(budget) {}

    bool visit(const Instance& inst) {
        if (stopped_) {
            return false;
        }
        if (instances_ + skipped_ >= budget_) {
            truncated_ = true;
            stopped_ = true;
            return false;
        }
        if (applies_ && !applies_(inst)) {
            ++skipped_;
            return true;
        }
        ++instances_;
        const bool ok = pred_(inst);
        if (kind_ == ClaimKind::existence) {
            if (ok) {
                witness_ = inst;
                stopped_ = true;
            }
        } else if (!ok) {
            ++failures_;
            if (!witness_) {
                witness_ = inst;
            }
        }
        return !stopped_;
    }

    bool stopped() const { return stopped_; }
    std::uint64_t instances() const { return instances_; }
    std::uint64_t skipped() const { return skipped_; }
    std::uint64_t failures() const { return failures_; }
    bool truncated() const { return truncated_; }
    const std::optional<Instance>& witness() const { return witness_; }

private:
    ClaimKind kind_;
    Predicate pred_;
    Predicate applies_;
    std::uint64_t budget_;
    std::uint64_t instances_ = 0;
    std::uint64_t skipped_ = 0;
    std::uint64_t failures_ = 0;
    bool truncated_ = false;
    bool stopped_ = false;
    std::optional<Instance> witness_;
};

} // namespace softdito::oracle

#endif
