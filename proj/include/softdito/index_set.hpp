#ifndef SOFTDITO_INDEX_SET_HPP
#define SOFTDITO_INDEX_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace softdito {

/// Maximum number of points or parameters a context may declare.
inline constexpr std::size_t kMaxLabels = 64;

/// A subset of {0, ..., 63} stored as a bit mask. The tag keeps point sets
/// and parameter sets from being mixed up.
template<typename Tag_>
class IndexSet {
public:
    using Mask = std::uint64_t;

    constexpr IndexSet() = default;
    constexpr explicit IndexSet(Mask bits) : bits_(bits) {}

    static constexpr IndexSet single(std::size_t i) { return IndexSet(Mask{1} << i); }

    /// {0, ..., n-1}
    static constexpr IndexSet first(std::size_t n) {
        return IndexSet(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
    }

    constexpr Mask bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (Mask{1} << i)); }
    constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(Mask{1} << i)); }

    friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
    friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
    /// Set difference.
    friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }

    IndexSet& operator|=(IndexSet o) { bits_ |= o.bits_; return *this; }
    IndexSet& operator&=(IndexSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(IndexSet, IndexSet) = default;
    friend constexpr auto operator<=>(IndexSet a, IndexSet b) { return a.bits_ <=> b.bits_; }

    /// Indices in increasing order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (Mask m = bits_; m != 0; m &= m - 1) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        }
        return out;
    }

    template<typename Fn_>
    void for_each(Fn_&& fn) const {
        for (Mask m = bits_; m != 0; m &= m - 1) {
            fn(static_cast<std::size_t>(std::countr_zero(m)));
        }
    }

private:
    Mask bits_ = 0;
};

struct PointTag {};
struct ParamTag {};

using PointSet = IndexSet<PointTag>;
using ParamSet = IndexSet<ParamTag>;

/// All subsets of `of`, in increasing mask order (the empty set first).
template<typename Tag_>
std::vector<IndexSet<Tag_>> subsets_of(IndexSet<Tag_> of) {
    std::vector<IndexSet<Tag_>> out;
    const auto full = of.bits();
    typename IndexSet<Tag_>::Mask sub = 0;
    while (true) {
        out.emplace_back(sub);
        if (sub == full) {
            break;
        }
        sub = (sub - full) & full;
    }
    return out;
}

} // namespace softdito

#endif
