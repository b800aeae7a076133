#pragma once

// Finite ground sets, bitmask subsets, topologies and their classical
// interior/closure operators.

#include "gammatop/error.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gammatop {

inline constexpr std::size_t max_points = 16;
inline constexpr std::size_t max_enumerated_points = 4;

using PointIndex = std::size_t;

/// A subset of a ground set; bit i stands for the point at label position i.
struct SubsetMask {
    std::uint32_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

    static constexpr SubsetMask singleton(PointIndex i) { return SubsetMask{std::uint32_t{1} << i}; }
    static constexpr SubsetMask full(std::size_t n) { return SubsetMask{(std::uint32_t{1} << n) - 1}; }

    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(PointIndex i) const { return (bits >> i) & 1u; }
    constexpr bool subset_of(SubsetMask other) const { return (bits & ~other.bits) == 0; }
    constexpr bool meets(SubsetMask other) const { return (bits & other.bits) != 0; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }

    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask{bits | o.bits}; }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask{bits & o.bits}; }
    constexpr SubsetMask& operator|=(SubsetMask o) { bits |= o.bits; return *this; }
    constexpr SubsetMask& operator&=(SubsetMask o) { bits &= o.bits; return *this; }

    constexpr auto operator<=>(const SubsetMask&) const = default;
};

/// Ordered, distinct point labels.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<std::string> labels) : labels_(std::move(labels))
    {
        if (labels_.empty() || labels_.size() > max_points)
            throw error(errc::invalid_point_set,
                        "point count must be in 1.." + std::to_string(max_points));
        std::set<std::string_view> seen;
        for (const auto& l : labels_) {
            if (l.empty())
                throw error(errc::invalid_point_set, "empty label");
            if (!seen.insert(l).second)
                throw error(errc::invalid_point_set, "duplicate label '" + l + "'");
        }
    }

    /// Points labelled a, b, c, ...
    static PointSet standard(std::size_t n)
    {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i)
            labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
        return PointSet(std::move(labels));
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(PointIndex i) const { return labels_.at(i); }

    SubsetMask whole() const { return SubsetMask::full(size()); }
    SubsetMask complement(SubsetMask a) const { return SubsetMask{~a.bits & whole().bits}; }
    bool fits(SubsetMask a) const { return a.subset_of(whole()); }
    std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }

    PointIndex index_of(std::string_view label) const
    {
        for (PointIndex i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label)
                return i;
        throw error(errc::unknown_point, "no point labelled '" + std::string(label) + "'");
    }

    void require_point(PointIndex x) const
    {
        if (x >= size())
            throw error(errc::unknown_point, "point index " + std::to_string(x) + " out of range");
    }

    SubsetMask mask_of(std::initializer_list<std::string_view> names) const
    {
        SubsetMask m;
        for (auto name : names)
            m |= SubsetMask::singleton(index_of(name));
        return m;
    }

    std::string format(SubsetMask a) const
    {
        std::string out = "{";
        bool first = true;
        for (PointIndex i = 0; i < size(); ++i) {
            if (!a.contains(i))
                continue;
            if (!first)
                out += ",";
            out += labels_[i];
            first = false;
        }
        return out + "}";
    }

    std::vector<std::string> labels_of(SubsetMask a) const
    {
        std::vector<std::string> out;
        for (PointIndex i = 0; i < size(); ++i)
            if (a.contains(i))
                out.push_back(labels_[i]);
        return out;
    }

    bool operator==(const PointSet&) const = default;

private:
    std::vector<std::string> labels_;
};

template <class F>
void for_each_point(SubsetMask a, F&& f)
{
    for (std::uint32_t b = a.bits; b != 0; b &= b - 1)
        f(static_cast<PointIndex>(std::countr_zero(b)));
}

/// A validated family of open sets. Opens are kept in canonical
/// (numeric-ascending) order.
class Topology {
public:
    Topology() = default;

    const PointSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    const std::vector<SubsetMask>& opens() const { return opens_; }

    bool is_open(SubsetMask a) const { return a.bits < open_index_.size() && open_index_[a.bits] >= 0; }
    bool is_closed(SubsetMask a) const { return is_open(ground_.complement(a)); }

    /// Position of an open set in opens(), or -1.
    int index_of_open(SubsetMask a) const { return a.bits < open_index_.size() ? open_index_[a.bits] : -1; }

    bool operator==(const Topology& o) const { return ground_ == o.ground_ && opens_ == o.opens_; }

    friend Topology validate_topology(PointSet ground, std::span<const SubsetMask> family);

private:
    PointSet ground_;
    std::vector<SubsetMask> opens_;
    std::vector<int> open_index_;
};

inline Topology validate_topology(PointSet ground, std::span<const SubsetMask> family)
{
    for (auto m : family)
        if (!ground.fits(m))
            throw error(errc::mask_out_of_range, "subset does not fit the ground set", {m.bits});

    std::vector<SubsetMask> opens(family.begin(), family.end());
    std::sort(opens.begin(), opens.end());
    opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

    std::vector<int> index(ground.subset_count(), -1);
    for (std::size_t i = 0; i < opens.size(); ++i)
        index[opens[i].bits] = static_cast<int>(i);

    if (index[0] < 0 || index[ground.whole().bits] < 0)
        throw error(errc::missing_empty_or_whole, "the empty set and the whole space must be open");

    for (std::size_t i = 0; i < opens.size(); ++i)
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            if (index[(opens[i] | opens[j]).bits] < 0)
                throw error(errc::not_closed_under_union,
                            ground.format(opens[i]) + " and " + ground.format(opens[j]),
                            {opens[i].bits, opens[j].bits});
            if (index[(opens[i] & opens[j]).bits] < 0)
                throw error(errc::not_closed_under_intersection,
                            ground.format(opens[i]) + " and " + ground.format(opens[j]),
                            {opens[i].bits, opens[j].bits});
        }

    Topology t;
    t.ground_ = std::move(ground);
    t.opens_ = std::move(opens);
    t.open_index_ = std::move(index);
    return t;
}

inline Topology validate_topology(PointSet ground, std::initializer_list<SubsetMask> family)
{
    return validate_topology(std::move(ground), std::span<const SubsetMask>(family.begin(), family.size()));
}

inline Topology discrete_topology(PointSet ground)
{
    std::vector<SubsetMask> all;
    for (std::uint32_t b = 0; b < ground.subset_count(); ++b)
        all.emplace_back(b);
    return validate_topology(std::move(ground), all);
}

inline Topology indiscrete_topology(PointSet ground)
{
    SubsetMask whole = ground.whole();
    return validate_topology(std::move(ground), {SubsetMask{}, whole});
}

/// Smallest closed superset of `a`.
inline SubsetMask closure(const Topology& top, SubsetMask a)
{
    SubsetMask result = top.ground().whole();
    for (auto v : top.opens()) {
        SubsetMask closed = top.ground().complement(v);
        if (a.subset_of(closed))
            result &= closed;
    }
    return result;
}

/// Largest open subset of `a`.
inline SubsetMask interior(const Topology& top, SubsetMask a)
{
    SubsetMask result;
    for (auto v : top.opens())
        if (v.subset_of(a))
            result |= v;
    return result;
}

inline std::vector<SubsetMask> open_nbds(const Topology& top, PointIndex x)
{
    top.ground().require_point(x);
    std::vector<SubsetMask> out;
    for (auto v : top.opens())
        if (v.contains(x))
            out.push_back(v);
    return out;
}

/// Every labelled topology on n points, ordered by their canonical open lists.
/// Built from the specialization preorders: the opens of a finite topology
/// are exactly the up-sets of a preorder on its points.
inline std::vector<Topology> enumerate_topologies(std::size_t n)
{
    if (n < 1 || n > max_enumerated_points)
        throw error(errc::size_too_large,
                    "exhaustive enumeration supports 1.." + std::to_string(max_enumerated_points) + " points");

    PointSet ground = PointSet::standard(n);
    const std::uint32_t subsets = ground.subset_count();

    std::vector<std::pair<std::size_t, std::size_t>> off_diagonal;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                off_diagonal.emplace_back(i, j);

    std::vector<std::vector<SubsetMask>> families;
    for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << off_diagonal.size()); ++rel) {
        // up[i] = { j : i <= j }
        std::vector<std::uint32_t> up(n);
        for (std::size_t i = 0; i < n; ++i)
            up[i] = std::uint32_t{1} << i;
        for (std::size_t k = 0; k < off_diagonal.size(); ++k)
            if ((rel >> k) & 1u)
                up[off_diagonal[k].first] |= std::uint32_t{1} << off_diagonal[k].second;

        bool transitive = true;
        for (std::size_t i = 0; i < n && transitive; ++i)
            for (std::size_t j = 0; j < n && transitive; ++j)
                if (((up[i] >> j) & 1u) && (up[j] & ~up[i]) != 0)
                    transitive = false;
        if (!transitive)
            continue;

        std::vector<SubsetMask> opens;
        for (std::uint32_t s = 0; s < subsets; ++s) {
            bool upset = true;
            for (std::size_t i = 0; i < n && upset; ++i)
                if (((s >> i) & 1u) && (up[i] & ~s) != 0)
                    upset = false;
            if (upset)
                opens.emplace_back(s);
        }
        families.push_back(std::move(opens));
    }

    std::sort(families.begin(), families.end());
    std::vector<Topology> out;
    out.reserve(families.size());
    for (const auto& f : families)
        out.push_back(validate_topology(ground, f));
    return out;
}

} // namespace gammatop
