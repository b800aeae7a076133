#pragma once

// The operation gamma on the opens of a topology, the gamma-interior and
// gamma-closure operators, and the regular/open structural predicates.

#include "gammatop/finspace.hpp"

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gammatop {

enum class Branch { identity, classical_closure, interior_closure };

enum class GammaKind { identity, classical_closure, interior_closure, pivot, table };

inline const char* to_string(Branch b)
{
    switch (b) {
    case Branch::identity: return "id";
    case Branch::classical_closure: return "cl";
    case Branch::interior_closure: return "intcl";
    }
    return "?";
}

inline SubsetMask apply_branch(const Topology& top, Branch b, SubsetMask v)
{
    switch (b) {
    case Branch::identity: return v;
    case Branch::classical_closure: return closure(top, v);
    case Branch::interior_closure: return interior(top, closure(top, v));
    }
    return v;
}

/// Description of gamma. Table entries map open sets to their gamma values.
struct GammaOperation {
    GammaKind kind = GammaKind::identity;
    PointIndex pivot = 0;
    Branch in_branch = Branch::identity;
    Branch out_branch = Branch::identity;
    std::vector<std::pair<SubsetMask, SubsetMask>> table;

    static GammaOperation identity() { return {}; }
    static GammaOperation classical_closure() { return {GammaKind::classical_closure}; }
    static GammaOperation interior_closure() { return {GammaKind::interior_closure}; }
    static GammaOperation make_pivot(PointIndex p, Branch in, Branch out)
    {
        return {GammaKind::pivot, p, in, out, {}};
    }
    static GammaOperation make_table(std::vector<std::pair<SubsetMask, SubsetMask>> entries)
    {
        return {GammaKind::table, 0, Branch::identity, Branch::identity, std::move(entries)};
    }

    std::string describe(const PointSet& ground) const
    {
        switch (kind) {
        case GammaKind::identity: return "identity";
        case GammaKind::classical_closure: return "closure";
        case GammaKind::interior_closure: return "int_closure";
        case GammaKind::pivot:
            return std::string("pivot(") + ground.label(pivot) + ", in=" + to_string(in_branch)
                + ", out=" + to_string(out_branch) + ")";
        case GammaKind::table: {
            std::string s = "table[";
            for (std::size_t i = 0; i < table.size(); ++i) {
                if (i)
                    s += " ";
                s += ground.format(table[i].first) + "->" + ground.format(table[i].second);
            }
            return s + "]";
        }
        }
        return "?";
    }
};

/// Ground set, topology and gamma. Gamma values are tabulated per open at
/// construction, after the expansiveness law V <= gamma(V) is checked.
class Space {
public:
    Space(Topology top, GammaOperation gamma) : top_(std::move(top)), gamma_(std::move(gamma))
    {
        const auto& opens = top_.opens();
        values_.resize(opens.size());
        if (gamma_.kind == GammaKind::pivot)
            top_.ground().require_point(gamma_.pivot);

        if (gamma_.kind == GammaKind::table) {
            std::vector<bool> seen(opens.size(), false);
            for (auto [open, value] : gamma_.table) {
                int idx = top_.index_of_open(open);
                if (idx < 0)
                    throw error(errc::table_domain_mismatch,
                                "table entry for non-open set " + top_.ground().format(open), {open.bits});
                if (seen[idx])
                    throw error(errc::table_domain_mismatch,
                                "duplicate table entry for " + top_.ground().format(open), {open.bits});
                if (!top_.ground().fits(value))
                    throw error(errc::mask_out_of_range, "table value outside the ground set", {value.bits});
                seen[idx] = true;
                values_[idx] = value;
            }
            for (std::size_t i = 0; i < opens.size(); ++i)
                if (!seen[i])
                    throw error(errc::table_domain_mismatch,
                                "no table entry for open set " + top_.ground().format(opens[i]),
                                {opens[i].bits});
        }
        else {
            for (std::size_t i = 0; i < opens.size(); ++i)
                values_[i] = evaluate(opens[i]);
        }

        for (std::size_t i = 0; i < opens.size(); ++i)
            if (!opens[i].subset_of(values_[i]))
                throw error(errc::gamma_not_expansive,
                            "gamma(" + top_.ground().format(opens[i]) + ") = "
                                + top_.ground().format(values_[i]) + " does not contain its argument",
                            {opens[i].bits});

        nbd_values_.resize(top_.size());
        for (std::size_t i = 0; i < opens.size(); ++i)
            for_each_point(opens[i], [&](PointIndex x) { nbd_values_[x].push_back(values_[i]); });
    }

    const Topology& topology() const { return top_; }
    const PointSet& ground() const { return top_.ground(); }
    std::size_t size() const { return top_.size(); }
    SubsetMask whole() const { return top_.ground().whole(); }
    SubsetMask complement(SubsetMask a) const { return top_.ground().complement(a); }
    const GammaOperation& gamma() const { return gamma_; }

    /// Gamma values aligned with topology().opens().
    const std::vector<SubsetMask>& values() const { return values_; }

    /// Gamma values of the open neighbourhoods of x, in canonical open order.
    const std::vector<SubsetMask>& nbd_values(PointIndex x) const { return nbd_values_[x]; }

    /// Same topology and same gamma value on every open.
    bool extensionally_equal(const Space& o) const { return top_ == o.top_ && values_ == o.values_; }

private:
    SubsetMask evaluate(SubsetMask v) const
    {
        switch (gamma_.kind) {
        case GammaKind::identity: return v;
        case GammaKind::classical_closure: return apply_branch(top_, Branch::classical_closure, v);
        case GammaKind::interior_closure: return apply_branch(top_, Branch::interior_closure, v);
        case GammaKind::pivot:
            return apply_branch(top_, v.contains(gamma_.pivot) ? gamma_.in_branch : gamma_.out_branch, v);
        case GammaKind::table: break;
        }
        return v;
    }

    Topology top_;
    GammaOperation gamma_;
    std::vector<SubsetMask> values_;
    std::vector<std::vector<SubsetMask>> nbd_values_;
};

inline SubsetMask apply_gamma(const Space& sp, SubsetMask v)
{
    int idx = sp.topology().index_of_open(v);
    if (idx < 0)
        throw error(errc::not_an_open_set, sp.ground().format(v) + " is not open", {v.bits});
    return sp.values()[idx];
}

/// { x in A : some open N containing x has gamma(N) inside A }
inline SubsetMask gamma_interior(const Space& sp, SubsetMask a)
{
    SubsetMask result;
    for_each_point(a, [&](PointIndex x) {
        for (auto gv : sp.nbd_values(x))
            if (gv.subset_of(a)) {
                result |= SubsetMask::singleton(x);
                break;
            }
    });
    return result;
}

/// { x : gamma(U) meets A for every open U containing x }
inline SubsetMask gamma_closure(const Space& sp, SubsetMask a)
{
    SubsetMask result;
    for (PointIndex x = 0; x < sp.size(); ++x) {
        bool all_meet = true;
        for (auto gv : sp.nbd_values(x))
            if (!gv.meets(a)) {
                all_meet = false;
                break;
            }
        if (all_meet)
            result |= SubsetMask::singleton(x);
    }
    return result;
}

inline bool is_regular_operation(const Space& sp)
{
    for (PointIndex x = 0; x < sp.size(); ++x) {
        const auto& gvs = sp.nbd_values(x);
        for (auto u : gvs)
            for (auto v : gvs) {
                bool found = false;
                for (auto w : gvs)
                    if (w.subset_of(u & v)) {
                        found = true;
                        break;
                    }
                if (!found)
                    return false;
            }
    }
    return true;
}

/// Every gamma-open subset, ascending.
inline std::vector<SubsetMask> gamma_open_sets(const Space& sp)
{
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
        if (gamma_interior(sp, SubsetMask{b}) == SubsetMask{b})
            out.emplace_back(b);
    return out;
}

inline bool is_open_operation(const Space& sp)
{
    const auto family = gamma_open_sets(sp);
    for (PointIndex x = 0; x < sp.size(); ++x)
        for (auto gv : sp.nbd_values(x)) {
            bool found = false;
            for (auto b : family)
                if (b.contains(x) && b.subset_of(gv)) {
                    found = true;
                    break;
                }
            if (!found)
                return false;
        }
    return true;
}

/// Which operation families to enumerate. Flags combine.
struct OperationMode {
    bool builtins = false;
    bool pivots = false;
    bool all_tables = false;

    static OperationMode parse(std::string_view text)
    {
        OperationMode m;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            if (tok == "builtins")
                m.builtins = true;
            else if (tok == "pivots")
                m.pivots = true;
            else if (tok == "all_tables")
                m.all_tables = true;
            else if (!tok.empty())
                throw error(errc::syntax_error, "unknown operation family '" + std::string(tok) + "'");
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
        if (!m.builtins && !m.pivots && !m.all_tables)
            throw error(errc::syntax_error, "no operation family selected");
        return m;
    }

    std::string to_string() const
    {
        std::string s;
        auto add = [&](bool on, const char* name) {
            if (!on)
                return;
            if (!s.empty())
                s += ",";
            s += name;
        };
        add(builtins, "builtins");
        add(pivots, "pivots");
        add(all_tables, "all_tables");
        return s;
    }
};

inline constexpr std::size_t max_table_points = 3;

/// Enumerated operations, deduplicated extensionally: builtins first, then
/// pivots by (pivot, in, out), then remaining tables in odometer order over
/// the opens (first open varies fastest).
inline std::vector<GammaOperation> enumerate_gamma_operations(const Topology& top, OperationMode mode)
{
    if (mode.all_tables && top.size() > max_table_points)
        throw error(errc::table_mode_too_large,
                    "all_tables requires at most " + std::to_string(max_table_points) + " points");

    std::vector<GammaOperation> out;
    std::set<std::vector<SubsetMask>> seen;
    auto offer = [&](GammaOperation op) {
        Space sp(top, op);
        if (seen.insert(sp.values()).second)
            out.push_back(std::move(op));
    };

    constexpr Branch branches[] = {Branch::identity, Branch::classical_closure, Branch::interior_closure};
    if (mode.builtins) {
        offer(GammaOperation::identity());
        offer(GammaOperation::classical_closure());
        offer(GammaOperation::interior_closure());
    }
    if (mode.pivots)
        for (PointIndex p = 0; p < top.size(); ++p)
            for (auto in : branches)
                for (auto outb : branches)
                    offer(GammaOperation::make_pivot(p, in, outb));
    if (mode.all_tables) {
        const auto& opens = top.opens();
        // Each digit is a submask of the complement of its open, stepped in
        // ascending numeric order.
        std::vector<SubsetMask> extra(opens.size());
        for (;;) {
            std::vector<std::pair<SubsetMask, SubsetMask>> entries;
            entries.reserve(opens.size());
            std::vector<SubsetMask> values;
            for (std::size_t i = 0; i < opens.size(); ++i) {
                entries.emplace_back(opens[i], opens[i] | extra[i]);
                values.push_back(opens[i] | extra[i]);
            }
            if (seen.insert(values).second)
                out.push_back(GammaOperation::make_table(std::move(entries)));

            std::size_t i = 0;
            for (; i < opens.size(); ++i) {
                std::uint32_t free = top.ground().complement(opens[i]).bits;
                // next submask of `free` in ascending order
                std::uint32_t next = ((extra[i].bits | ~free) + 1) & free;
                extra[i] = SubsetMask{next};
                if (next != 0)
                    break;
            }
            if (i == opens.size())
                break;
        }
    }
    return out;
}

} // namespace gammatop
