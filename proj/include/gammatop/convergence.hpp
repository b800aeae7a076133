#pragma once

// Filterbases, finite nets, gamma-R-convergence/accumulation and the five
// gamma-closed-space conditions.

#include "gammatop/gamma_sets.hpp"

#include <functional>

namespace gammatop {

/// Non-empty, downward-directed family of non-empty subsets. Members are
/// kept sorted and unique.
class Filterbase {
public:
    const std::vector<SubsetMask>& members() const { return members_; }

    /// Intersection of all members; itself a member on finite sets.
    SubsetMask core() const
    {
        SubsetMask m{~std::uint32_t{0}};
        for (auto f : members_)
            m &= f;
        return m;
    }

    bool operator==(const Filterbase&) const = default;
    auto operator<=>(const Filterbase&) const = default;

    friend Filterbase make_filterbase(std::vector<SubsetMask> members);

private:
    std::vector<SubsetMask> members_;
};

/// Checks non-emptiness and directedness; ground-free.
inline Filterbase make_filterbase(std::vector<SubsetMask> members)
{
    if (members.empty())
        throw error(errc::empty_member, "a filterbase needs at least one member");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto f : members)
        if (f.empty())
            throw error(errc::empty_member, "filterbase member is empty");
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const SubsetMask meet = members[i] & members[j];
            bool refined = false;
            for (auto g : members)
                if (g.subset_of(meet)) {
                    refined = true;
                    break;
                }
            if (!refined)
                throw error(errc::not_directed, "no member inside the intersection of two members",
                            {members[i].bits, members[j].bits});
        }
    Filterbase fb;
    fb.members_ = std::move(members);
    return fb;
}

inline Filterbase validate_filterbase(const PointSet& ground, std::vector<SubsetMask> members)
{
    for (auto m : members)
        if (!ground.fits(m))
            throw error(errc::mask_out_of_range, "member does not fit the ground set", {m.bits});
    return make_filterbase(std::move(members));
}

/// Every member of `coarse` contains some member of `fine`.
inline bool is_subordinate(const Filterbase& fine, const Filterbase& coarse)
{
    for (auto c : coarse.members()) {
        bool refined = false;
        for (auto f : fine.members())
            if (f.subset_of(c)) {
                refined = true;
                break;
            }
        if (!refined)
            return false;
    }
    return true;
}

/// The generated filter is an ultrafilter: on a finite ground set, some
/// singleton {x} is a member and every member contains x.
inline bool is_maximal_filterbase(const PointSet& ground, const Filterbase& fb)
{
    for (auto f : fb.members())
        if (!ground.fits(f))
            throw error(errc::mask_out_of_range, "member does not fit the ground set", {f.bits});
    for (auto f : fb.members()) {
        if (f.count() != 1)
            continue;
        bool all_contain = true;
        for (auto g : fb.members())
            if (!f.subset_of(g)) {
                all_contain = false;
                break;
            }
        if (all_contain)
            return true;
    }
    return false;
}

/// Every filter on the ground set, as the full family of supersets of its
/// non-empty core. Ordered by core.
inline std::vector<Filterbase> enumerate_filters(const PointSet& ground)
{
    std::vector<Filterbase> out;
    for (std::uint32_t core = 1; core < ground.subset_count(); ++core) {
        std::vector<SubsetMask> members;
        for (std::uint32_t g = core; g < ground.subset_count(); ++g)
            if ((g & core) == core)
                members.emplace_back(g);
        out.push_back(make_filterbase(std::move(members)));
    }
    return out;
}

namespace detail {
inline std::vector<SubsetMask> regular_open_nbds(const SpaceFacts& facts, PointIndex x)
{
    std::vector<SubsetMask> out;
    for (auto a : facts.regular_open)
        if (a.contains(x))
            out.push_back(a);
    return out;
}

inline bool fb_converges_against(const Filterbase& fb, std::span<const SubsetMask> tests)
{
    for (auto a : tests) {
        bool inside = false;
        for (auto f : fb.members())
            if (f.subset_of(a)) {
                inside = true;
                break;
            }
        if (!inside)
            return false;
    }
    return true;
}

inline bool fb_accumulates_against(const Filterbase& fb, std::span<const SubsetMask> tests)
{
    for (auto a : tests)
        for (auto f : fb.members())
            if (!f.meets(a))
                return false;
    return true;
}
} // namespace detail

inline bool fb_r_converges(const SpaceFacts& facts, const Filterbase& fb, PointIndex x)
{
    facts.sp->ground().require_point(x);
    return detail::fb_converges_against(fb, detail::regular_open_nbds(facts, x));
}

inline bool fb_r_accumulates(const SpaceFacts& facts, const Filterbase& fb, PointIndex x)
{
    facts.sp->ground().require_point(x);
    return detail::fb_accumulates_against(fb, detail::regular_open_nbds(facts, x));
}

inline bool fb_r_converges(const Space& sp, const Filterbase& fb, PointIndex x)
{
    return fb_r_converges(SpaceFacts(sp), fb, x);
}

inline bool fb_r_accumulates(const Space& sp, const Filterbase& fb, PointIndex x)
{
    return fb_r_accumulates(SpaceFacts(sp), fb, x);
}

/// A finite preordered index set in which every pair has an upper bound.
/// `above(i)` lists every j with i <= j.
class DirectedSet {
public:
    std::size_t size() const { return above_.size(); }
    const std::vector<std::size_t>& above(std::size_t i) const { return above_[i]; }
    bool leq(std::size_t i, std::size_t j) const
    {
        return std::find(above_[i].begin(), above_[i].end(), j) != above_[i].end();
    }

    bool operator==(const DirectedSet&) const = default;

    friend DirectedSet make_directed_set(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq);

private:
    std::vector<std::vector<std::size_t>> above_;
};

inline DirectedSet make_directed_set(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq)
{
    if (size == 0)
        throw error(errc::invalid_directed_set, "a directed set needs at least one element");
    for (std::size_t i = 0; i < size; ++i)
        if (!leq(i, i))
            throw error(errc::invalid_directed_set, "relation is not reflexive");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            for (std::size_t k = 0; k < size; ++k)
                if (leq(i, j) && leq(j, k) && !leq(i, k))
                    throw error(errc::invalid_directed_set, "relation is not transitive");
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i + 1; j < size; ++j) {
            bool bounded = false;
            for (std::size_t k = 0; k < size && !bounded; ++k)
                bounded = leq(i, k) && leq(j, k);
            if (!bounded)
                throw error(errc::invalid_directed_set, "two elements have no common upper bound");
        }
    DirectedSet d;
    d.above_.resize(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            if (leq(i, j))
                d.above_[i].push_back(j);
    return d;
}

/// 0 <= 1 <= ... <= size-1
inline DirectedSet chain(std::size_t size)
{
    return make_directed_set(size, [](std::size_t i, std::size_t j) { return i <= j; });
}

/// Every directed preorder on {0..k-1} for k = 1..max_size.
inline std::vector<DirectedSet> enumerate_directed_sets(std::size_t max_size)
{
    std::vector<DirectedSet> out;
    for (std::size_t k = 1; k <= max_size; ++k) {
        const std::size_t bits = k * (k - 1);
        for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << bits); ++rel) {
            auto leq = [&](std::size_t i, std::size_t j) {
                if (i == j)
                    return true;
                std::size_t pos = i * (k - 1) + (j < i ? j : j - 1);
                return ((rel >> pos) & 1u) != 0;
            };
            try {
                out.push_back(make_directed_set(k, leq));
            }
            catch (const error&) {
            }
        }
    }
    return out;
}

struct Net {
    DirectedSet dir;
    std::vector<PointIndex> at;

    bool operator==(const Net&) const = default;
};

inline Net make_net(DirectedSet dir, std::vector<PointIndex> at)
{
    if (at.size() != dir.size())
        throw error(errc::invalid_directed_set, "net must assign a point to every index");
    return {std::move(dir), std::move(at)};
}

/// Test sets for net convergence: either gamma-regular-open sets containing
/// x, or cl_gamma(U) for gamma-open U containing x.
enum class NetNbds { regular_open, gamma_open_closure };

/// `literal` requires every x_i inside each test set; `standard` asks for a
/// cofinal set of indices.
enum class Accumulation { standard, literal };

struct NetSemantics {
    NetNbds nbds = NetNbds::gamma_open_closure;
    Accumulation accumulation = Accumulation::standard;

    bool operator==(const NetSemantics&) const = default;
};

inline std::string to_string(NetSemantics s)
{
    return std::string(s.nbds == NetNbds::regular_open ? "regular_open" : "gamma_open_closure") + "/"
        + (s.accumulation == Accumulation::standard ? "standard" : "literal");
}

namespace detail {
inline std::vector<SubsetMask> net_targets(const SpaceFacts& facts, PointIndex x, NetNbds nbds)
{
    if (nbds == NetNbds::regular_open)
        return regular_open_nbds(facts, x);
    std::vector<SubsetMask> out;
    for (auto [u, cl_u] : facts.theta_tests)
        if (u.contains(x))
            out.push_back(cl_u);
    return out;
}

inline void require_net_points(const PointSet& ground, const Net& net)
{
    for (auto p : net.at)
        ground.require_point(p);
}
} // namespace detail

namespace detail {
inline bool net_converges_against(const Net& net, std::span<const SubsetMask> targets)
{
    for (auto t : targets) {
        bool eventually = false;
        for (std::size_t i0 = 0; i0 < net.dir.size() && !eventually; ++i0) {
            bool all = true;
            for (auto i : net.dir.above(i0))
                if (!t.contains(net.at[i])) {
                    all = false;
                    break;
                }
            eventually = all;
        }
        if (!eventually)
            return false;
    }
    return true;
}

inline bool net_accumulates_against(const Net& net, std::span<const SubsetMask> targets, Accumulation acc)
{
    for (auto t : targets)
        for (std::size_t i = 0; i < net.dir.size(); ++i) {
            if (acc == Accumulation::literal) {
                if (!t.contains(net.at[i]))
                    return false;
                continue;
            }
            bool cofinal = false;
            for (auto j : net.dir.above(i))
                if (t.contains(net.at[j])) {
                    cofinal = true;
                    break;
                }
            if (!cofinal)
                return false;
        }
    return true;
}
} // namespace detail

/// For every test set T some index i0 has x_i in T for all i >= i0.
inline bool net_r_converges(const SpaceFacts& facts, const Net& net, PointIndex x, NetSemantics sem = {})
{
    facts.sp->ground().require_point(x);
    detail::require_net_points(facts.sp->ground(), net);
    return detail::net_converges_against(net, detail::net_targets(facts, x, sem.nbds));
}

/// Standard reading: for every test set T and every i some j >= i has x_j
/// in T. Literal reading: every x_i lies in every T.
inline bool net_r_accumulates(const SpaceFacts& facts, const Net& net, PointIndex x, NetSemantics sem = {})
{
    facts.sp->ground().require_point(x);
    detail::require_net_points(facts.sp->ground(), net);
    return detail::net_accumulates_against(net, detail::net_targets(facts, x, sem.nbds), sem.accumulation);
}

inline bool net_r_converges(const Space& sp, const Net& net, PointIndex x, NetSemantics sem = {})
{
    return net_r_converges(SpaceFacts(sp), net, x, sem);
}

inline bool net_r_accumulates(const Space& sp, const Net& net, PointIndex x, NetSemantics sem = {})
{
    return net_r_accumulates(SpaceFacts(sp), net, x, sem);
}

/// Tails { x_i : j <= i }, one per index j.
inline Filterbase net_to_filterbase(const Net& net)
{
    std::vector<SubsetMask> tails;
    for (std::size_t j = 0; j < net.dir.size(); ++j) {
        SubsetMask tail;
        for (auto i : net.dir.above(j))
            tail |= SubsetMask::singleton(net.at[i]);
        tails.push_back(tail);
    }
    return make_filterbase(std::move(tails));
}

/// Indices are pairs (x, F) with x in F in fb, ordered by reverse inclusion
/// of F; the net picks x.
inline Net filterbase_to_net(const Filterbase& fb)
{
    std::vector<std::pair<PointIndex, SubsetMask>> elems;
    for (auto f : fb.members())
        for_each_point(f, [&](PointIndex x) { elems.emplace_back(x, f); });
    auto dir = make_directed_set(elems.size(), [&](std::size_t i, std::size_t j) {
        return elems[j].second.subset_of(elems[i].second);
    });
    std::vector<PointIndex> at;
    for (auto& e : elems)
        at.push_back(e.first);
    return make_net(std::move(dir), std::move(at));
}

/// Finite-space universality: the tail filterbase is maximal.
inline bool is_universal_net(const PointSet& ground, const Net& net)
{
    return is_maximal_filterbase(ground, net_to_filterbase(net));
}

/// Which sets count as gamma-closed in conditions (2) and (3).
enum class ClosedSets { dual, cl_fixed };

struct ClosedSpaceConditions {
    bool cover = false;              // (1) gamma-open covers
    bool closed_family = false;      // (2) finite subfamily with empty int-intersection
    bool closed_family_fip = false;  // (3) contrapositive form
    bool filterbase_accumulates = false;  // (4)
    bool maximal_converges = false;       // (5)

    bool all() const { return cover && closed_family && closed_family_fip && filterbase_accumulates && maximal_converges; }
    bool operator==(const ClosedSpaceConditions&) const = default;
};

namespace detail {
/// Visits every inclusion-minimal subfamily of `family` (by index) whose
/// accumulated value satisfies `done`. `step` folds a member into the
/// running value; a member is only added if it changes the value.
template <class Step, class Done, class Visit>
void minimal_subfamilies(std::span<const SubsetMask> family, SubsetMask start, Step step, Done done, Visit visit)
{
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, SubsetMask)> dfs = [&](std::size_t from, SubsetMask acc) {
        if (done(acc)) {
            for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
                SubsetMask without = start;
                for (std::size_t k = 0; k < chosen.size(); ++k)
                    if (k != skip)
                        without = step(without, family[chosen[k]]);
                if (done(without))
                    return;
            }
            visit(std::span<const std::size_t>(chosen));
            return;
        }
        for (std::size_t i = from; i < family.size(); ++i) {
            SubsetMask next = step(acc, family[i]);
            if (next == acc)
                continue;
            chosen.push_back(i);
            dfs(i + 1, next);
            chosen.pop_back();
        }
    };
    dfs(0, start);
}
} // namespace detail

inline std::vector<SubsetMask> gamma_closed_family(const SpaceFacts& facts, ClosedSets which)
{
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 0; b < facts.sp->ground().subset_count(); ++b) {
        SubsetMask a{b};
        bool closed = which == ClosedSets::dual ? facts.gamma_closed_set(a) : facts.closure(a).subset_of(a);
        if (closed)
            out.push_back(a);
    }
    return out;
}

/// Each condition is decided by its own exhaustive procedure.
inline ClosedSpaceConditions gamma_closed_space_conditions(const SpaceFacts& facts,
                                                           ClosedSets which = ClosedSets::dual)
{
    const Space& sp = *facts.sp;
    const SubsetMask whole = sp.whole();
    ClosedSpaceConditions c;

    // (1) A cover satisfies the condition whenever one of its minimal
    // subcovers does, so minimal covers are the only ones to inspect.
    c.cover = true;
    detail::minimal_subfamilies(
        std::span<const SubsetMask>(facts.gamma_open), SubsetMask{},
        [](SubsetMask acc, SubsetMask v) { return acc | v; }, [&](SubsetMask acc) { return acc == whole; },
        [&](std::span<const std::size_t> cover) {
            if (!c.cover)
                return;
            bool found = false;
            for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << cover.size()) && !found; ++pick) {
                SubsetMask u;
                for (std::size_t k = 0; k < cover.size(); ++k)
                    if ((pick >> k) & 1u)
                        u |= facts.closure(facts.gamma_open[cover[k]]);
                found = u == whole;
            }
            c.cover = found;
        });

    const auto closed = gamma_closed_family(facts, which);

    // (2) Likewise over minimal families with empty intersection.
    c.closed_family = true;
    detail::minimal_subfamilies(
        std::span<const SubsetMask>(closed), whole, [](SubsetMask acc, SubsetMask a) { return acc & a; },
        [](SubsetMask acc) { return acc.empty(); },
        [&](std::span<const std::size_t> fam) {
            if (!c.closed_family)
                return;
            bool found = false;
            for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << fam.size()) && !found; ++pick) {
                SubsetMask meet = whole;
                for (std::size_t k = 0; k < fam.size(); ++k)
                    if ((pick >> k) & 1u)
                        meet &= facts.interior(closed[fam[k]]);
                found = meet.empty();
            }
            c.closed_family = found;
        });

    // (3) Over every subfamily I, tracked as the reachable pairs
    // (meet of int_gamma, meet of members). Finite subfamilies of I have
    // meets of int_gamma containing I's own, so the hypothesis reduces to
    // I's meet being non-empty.
    {
        std::set<std::pair<SubsetMask, SubsetMask>> reach{{whole, whole}};
        for (auto a : closed) {
            std::vector<std::pair<SubsetMask, SubsetMask>> grown;
            for (auto [mi, ma] : reach)
                grown.emplace_back(mi & facts.interior(a), ma & a);
            reach.insert(grown.begin(), grown.end());
        }
        c.closed_family_fip = true;
        for (auto [mi, ma] : reach)
            if (!mi.empty() && ma.empty())
                c.closed_family_fip = false;
    }

    const auto filters = enumerate_filters(sp.ground());
    c.filterbase_accumulates = true;
    for (const auto& f : filters) {
        bool somewhere = false;
        for (PointIndex x = 0; x < sp.size() && !somewhere; ++x)
            somewhere = fb_r_accumulates(facts, f, x);
        if (!somewhere) {
            c.filterbase_accumulates = false;
            break;
        }
    }

    c.maximal_converges = true;
    for (const auto& f : filters) {
        if (!is_maximal_filterbase(sp.ground(), f))
            continue;
        bool somewhere = false;
        for (PointIndex x = 0; x < sp.size() && !somewhere; ++x)
            somewhere = fb_r_converges(facts, f, x);
        if (!somewhere) {
            c.maximal_converges = false;
            break;
        }
    }
    return c;
}

inline ClosedSpaceConditions gamma_closed_space_conditions(const Space& sp, ClosedSets which = ClosedSets::dual)
{
    return gamma_closed_space_conditions(SpaceFacts(sp), which);
}

} // namespace gammatop
