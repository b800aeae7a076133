#pragma once

// Claim catalog, per-space suite runner, exhaustive sweeps, witness miner
// and worked-example auditor.

#include "gammatop/convergence.hpp"
#include "gammatop/parallel.hpp"

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gammatop {

enum class ClaimId {
    ro_incl,
    p3_4_fwd,
    p3_4_conv,
    t3_6,
    t3_7,
    t3_8,
    t3_9_fwd,
    t3_9_conv,
    c3_10,
    p3_13_1,
    p3_13_2,
    t3_14,
    t3_15_a,
    t3_15_b,
    t3_15_c,
    chain_ro_to,
    chain_to_go,
    t4_3,
    t4_4,
    t4_5,
    p4_7_eq,
    p4_10,
    p4_11,
    t4_13,
};

inline constexpr std::size_t claim_count = 24;

struct Hypotheses {
    bool open_operation = false;
    bool extremally_disconnected = false;
};

struct ClaimInfo {
    ClaimId id;
    std::string_view name;
    Hypotheses hypotheses;
    std::string_view statement;
};

// clang-format off
inline constexpr std::array<ClaimInfo, claim_count> claim_catalog = {{
    {ClaimId::ro_incl,     "C-RO-INCL",     {false, false}, "gamma-regular-open sets are gamma-open, gamma-open sets are open"},
    {ClaimId::p3_4_fwd,    "C-P3.4-FWD",    {false, false}, "gamma-clopen implies gamma-regular-open"},
    {ClaimId::p3_4_conv,   "C-P3.4-CONV",   {false, true},  "gamma-regular-open implies gamma-clopen"},
    {ClaimId::t3_6,        "C-T3.6",        {false, false}, "clopen => A = cl(int A) => X-A regular-open"},
    {ClaimId::t3_7,        "C-T3.7",        {false, true},  "X-A regular-open => A regular-open => A clopen"},
    {ClaimId::t3_8,        "C-T3.8",        {false, true},  "clopen, A = cl(int A), X-A regular-open, A regular-open are equivalent"},
    {ClaimId::t3_9_fwd,    "C-T3.9-FWD",    {true,  false}, "cl(A) regular-open implies A gamma-open"},
    {ClaimId::t3_9_conv,   "C-T3.9-CONV",   {true,  true},  "A gamma-open implies cl(A) regular-open"},
    {ClaimId::c3_10,       "C-C3.10",       {false, true},  "cl(int A) is regular-open for every A"},
    {ClaimId::p3_13_1,     "C-P3.13-1",     {false, false}, "theta closure is monotone"},
    {ClaimId::p3_13_2,     "C-P3.13-2",     {false, false}, "intersections of theta-closed sets are theta-closed"},
    {ClaimId::t3_14,       "C-T3.14",       {true,  true},  "theta closure = meet of theta-closed supersets = meet of regular-open supersets"},
    {ClaimId::t3_15_a,     "C-T3.15-A",     {true,  true},  "x in theta closure iff every regular-open nbd of x meets A"},
    {ClaimId::t3_15_b,     "C-T3.15-B",     {true,  true},  "theta-open iff a union of regular-open sets"},
    {ClaimId::t3_15_c,     "C-T3.15-C",     {true,  true},  "regular-open iff theta-clopen"},
    {ClaimId::chain_ro_to, "C-CHAIN-RO-TO", {false, false}, "gamma-regular-open implies gamma-theta-open"},
    {ClaimId::chain_to_go, "C-CHAIN-TO-GO", {false, false}, "gamma-theta-open implies gamma-open"},
    {ClaimId::t4_3,        "C-T4.3",        {false, false}, "R-convergence implies R-accumulation"},
    {ClaimId::t4_4,        "C-T4.4",        {false, false}, "accumulation passes from a subordinate filterbase to the coarser one"},
    {ClaimId::t4_5,        "C-T4.5",        {false, false}, "for maximal filterbases accumulation and convergence coincide"},
    {ClaimId::p4_7_eq,     "C-P4.7-EQ",     {true,  false}, "the five gamma-closed-space conditions agree"},
    {ClaimId::p4_10,       "C-P4.10",       {false, false}, "a net and its tail filterbase share convergence and accumulation verdicts"},
    {ClaimId::p4_11,       "C-P4.11",       {false, false}, "a filterbase and its associated net share verdicts"},
    {ClaimId::t4_13,       "C-T4.13",       {false, false}, "gamma-closed iff every net accumulates iff every universal net converges"},
}};
// clang-format on

inline const ClaimInfo& info(ClaimId id) { return claim_catalog[static_cast<std::size_t>(id)]; }

inline std::string_view to_string(ClaimId id) { return info(id).name; }

inline std::optional<ClaimId> parse_claim(std::string_view name)
{
    for (const auto& c : claim_catalog)
        if (c.name == name)
            return c.id;
    return std::nullopt;
}

inline std::vector<ClaimId> all_claims()
{
    std::vector<ClaimId> out;
    for (const auto& c : claim_catalog)
        out.push_back(c.id);
    return out;
}

/// Claims expected to hold on every finite space.
inline std::vector<ClaimId> safe_claims()
{
    return {ClaimId::t3_6, ClaimId::p3_13_1, ClaimId::p3_13_2, ClaimId::t4_3,
            ClaimId::t4_4, ClaimId::t4_5,    ClaimId::ro_incl, ClaimId::p4_7_eq};
}

/// Claims qualified by "open operation" or "extremally disconnected".
inline std::vector<ClaimId> hypothesis_claims()
{
    return {ClaimId::p3_4_conv, ClaimId::t3_7,    ClaimId::t3_8,    ClaimId::t3_9_fwd, ClaimId::t3_9_conv,
            ClaimId::c3_10,     ClaimId::t3_14,   ClaimId::t3_15_a, ClaimId::t3_15_b,  ClaimId::t3_15_c};
}

inline bool is_safe_claim(ClaimId id)
{
    for (auto c : safe_claims())
        if (c == id)
            return true;
    return false;
}

/// The data realizing a failure. Which fields are populated depends on the
/// claim: subsets (A, or A and B, or a subfamily), points, filterbases
/// (one, or fine then coarse), or a net.
struct Witness {
    std::vector<SubsetMask> subsets;
    std::vector<PointIndex> points;
    std::vector<Filterbase> filterbases;
    std::optional<Net> net;
    std::string detail;

    bool operator==(const Witness&) const = default;
};

enum class Status { holds, fails, hypotheses_not_met };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::hypotheses_not_met: return "hypotheses_not_met";
    }
    return "?";
}

struct Verdict {
    ClaimId claim;
    Status status = Status::holds;
    std::optional<Witness> witness;
    std::vector<std::string> notes;

    bool operator==(const Verdict&) const = default;
};

struct SuiteOptions {
    NetSemantics net_semantics{};
    std::size_t max_net_index_size = 3;
    ClosedSets closed_sets = ClosedSets::dual;
};

/// Nets over every directed set up to a size, and every filter with its
/// associated net, for one ground-set size. Shared across spaces.
struct NetCatalog {
    std::vector<Net> nets;
    std::vector<Filterbase> net_tails;
    std::vector<bool> net_universal;
    std::vector<Filterbase> filters;
    std::vector<Net> filter_nets;
    std::vector<bool> filter_maximal;
};

inline constexpr std::size_t max_catalog_points = 6;

inline const NetCatalog& net_catalog(std::size_t points, std::size_t max_index_size)
{
    if (points > max_catalog_points)
        throw error(errc::size_too_large, "filterbase and net quantification supports at most "
                                              + std::to_string(max_catalog_points) + " points");
    static std::mutex lock;
    static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<NetCatalog>> cache;
    std::lock_guard guard(lock);
    auto& slot = cache[{points, max_index_size}];
    if (slot)
        return *slot;

    auto cat = std::make_unique<NetCatalog>();
    const PointSet ground = PointSet::standard(points);
    for (const auto& dir : enumerate_directed_sets(max_index_size)) {
        std::vector<PointIndex> at(dir.size(), 0);
        for (;;) {
            Net net = make_net(dir, at);
            cat->net_tails.push_back(net_to_filterbase(net));
            cat->net_universal.push_back(is_maximal_filterbase(ground, cat->net_tails.back()));
            cat->nets.push_back(std::move(net));
            std::size_t k = 0;
            for (; k < at.size(); ++k) {
                if (++at[k] < points)
                    break;
                at[k] = 0;
            }
            if (k == at.size())
                break;
        }
    }
    cat->filters = enumerate_filters(ground);
    for (const auto& f : cat->filters) {
        cat->filter_nets.push_back(filterbase_to_net(f));
        cat->filter_maximal.push_back(is_maximal_filterbase(ground, f));
    }
    slot = std::move(cat);
    return *slot;
}

/// Everything a claim needs about one space, computed once.
class ClaimContext {
public:
    ClaimContext(const Space& sp, SuiteOptions options = {})
        : space_(sp)
        , facts_(space_)
        , options_(options)
    {
        ro_nbds_.resize(sp.size());
        closure_targets_.resize(sp.size());
        for (PointIndex x = 0; x < sp.size(); ++x) {
            ro_nbds_[x] = detail::net_targets(facts_, x, NetNbds::regular_open);
            closure_targets_[x] = detail::net_targets(facts_, x, NetNbds::gamma_open_closure);
        }
    }

    ClaimContext(const ClaimContext&) = delete;
    ClaimContext& operator=(const ClaimContext&) = delete;

    const Space& space() const { return space_; }
    const SpaceFacts& facts() const { return facts_; }
    const SuiteOptions& options() const { return options_; }
    /// Built on first use; shared by every space with the same point count.
    const NetCatalog& catalog() const
    {
        if (!catalog_)
            catalog_ = &net_catalog(space_.size(), options_.max_net_index_size);
        return *catalog_;
    }

    std::span<const SubsetMask> ro_nbds(PointIndex x) const { return ro_nbds_[x]; }
    std::span<const SubsetMask> net_targets(PointIndex x, NetNbds nbds) const
    {
        return nbds == NetNbds::regular_open ? ro_nbds_[x] : closure_targets_[x];
    }

    bool fb_converges(const Filterbase& fb, PointIndex x) const { return detail::fb_converges_against(fb, ro_nbds(x)); }
    bool fb_accumulates(const Filterbase& fb, PointIndex x) const
    {
        return detail::fb_accumulates_against(fb, ro_nbds(x));
    }
    bool net_converges(const Net& net, PointIndex x, NetSemantics sem) const
    {
        return detail::net_converges_against(net, net_targets(x, sem.nbds));
    }
    bool net_accumulates(const Net& net, PointIndex x, NetSemantics sem) const
    {
        return detail::net_accumulates_against(net, net_targets(x, sem.nbds), sem.accumulation);
    }

    const ClosedSpaceConditions& conditions() const
    {
        if (!conditions_)
            conditions_ = gamma_closed_space_conditions(facts_, options_.closed_sets);
        return *conditions_;
    }

    bool hypotheses_met(const Hypotheses& h) const
    {
        return (!h.open_operation || facts_.open_operation)
            && (!h.extremally_disconnected || facts_.extremally_disconnected);
    }

private:
    Space space_;
    SpaceFacts facts_;
    SuiteOptions options_;
    mutable const NetCatalog* catalog_ = nullptr;
    std::vector<std::vector<SubsetMask>> ro_nbds_, closure_targets_;
    mutable std::optional<ClosedSpaceConditions> conditions_;
};

namespace detail {

inline bool implies(bool a, bool b) { return !a || b; }

inline SubsetMask meet_of_supersets(const SpaceFacts& f, std::span<const SubsetMask> family, SubsetMask a)
{
    SubsetMask m = f.sp->whole();
    for (auto v : family)
        if (a.subset_of(v))
            m &= v;
    return m;
}

inline SubsetMask union_of_subsets(std::span<const SubsetMask> family, SubsetMask a)
{
    SubsetMask u;
    for (auto v : family)
        if (v.subset_of(a))
            u |= v;
    return u;
}

inline bool subset_instance_holds(const ClaimContext& ctx, ClaimId id, SubsetMask a)
{
    const SpaceFacts& f = ctx.facts();
    const SubsetMask co = ctx.space().complement(a);
    switch (id) {
    case ClaimId::ro_incl:
        return implies(f.regular_open_set(a), f.gamma_open_set(a)) && implies(f.gamma_open_set(a), f.tau_open_set(a));
    case ClaimId::p3_4_fwd: return implies(f.clopen_set(a), f.regular_open_set(a));
    case ClaimId::p3_4_conv: return implies(f.regular_open_set(a), f.clopen_set(a));
    case ClaimId::t3_6: {
        const bool clopen = f.clopen_set(a);
        const bool reg_closed = f.closure(f.interior(a)) == a;
        const bool co_ro = f.regular_open_set(co);
        return implies(clopen, reg_closed) && implies(reg_closed, co_ro);
    }
    case ClaimId::t3_7: {
        const bool co_ro = f.regular_open_set(co);
        const bool ro = f.regular_open_set(a);
        return implies(co_ro, ro) && implies(ro, f.clopen_set(a));
    }
    case ClaimId::t3_8: {
        const bool v[] = {f.clopen_set(a), f.closure(f.interior(a)) == a, f.regular_open_set(co),
                          f.regular_open_set(a)};
        return v[0] == v[1] && v[1] == v[2] && v[2] == v[3];
    }
    case ClaimId::t3_9_fwd: return implies(f.regular_open_set(f.closure(a)), f.gamma_open_set(a));
    case ClaimId::t3_9_conv: return implies(f.gamma_open_set(a), f.regular_open_set(f.closure(a)));
    case ClaimId::c3_10: return f.regular_open_set(f.closure(f.interior(a)));
    case ClaimId::t3_14: {
        const SubsetMask theta = f.theta_closure(a);
        return theta == meet_of_supersets(f, f.theta_closed, a) && theta == meet_of_supersets(f, f.regular_open, a);
    }
    case ClaimId::t3_15_b: return f.theta_open_set(a) == (union_of_subsets(f.regular_open, a) == a);
    case ClaimId::t3_15_c: return f.regular_open_set(a) == (f.theta_open_set(a) && f.theta_closed_set(a));
    case ClaimId::chain_ro_to: return implies(f.regular_open_set(a), f.theta_open_set(a));
    case ClaimId::chain_to_go: return implies(f.theta_open_set(a), f.gamma_open_set(a));
    default: return true;
    }
}

inline std::string t3_14_detail(const ClaimContext& ctx, SubsetMask a)
{
    const SpaceFacts& f = ctx.facts();
    const PointSet& g = ctx.space().ground();
    return "theta closure " + g.format(f.theta_closure(a)) + ", meet of theta-closed supersets "
        + g.format(meet_of_supersets(f, f.theta_closed, a)) + ", meet of regular-open supersets "
        + g.format(meet_of_supersets(f, f.regular_open, a));
}

inline bool net_pair_holds(const ClaimContext& ctx, const Net& net, const Filterbase& fb, PointIndex x,
                           NetSemantics sem)
{
    return ctx.fb_converges(fb, x) == ctx.net_converges(net, x, sem)
        && ctx.fb_accumulates(fb, x) == ctx.net_accumulates(net, x, sem);
}

inline std::string net_pair_detail(const ClaimContext& ctx, const Net& net, const Filterbase& fb, PointIndex x,
                                   NetSemantics sem)
{
    auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    return "semantics " + to_string(sem) + ": filterbase converges " + yn(ctx.fb_converges(fb, x))
        + ", net converges " + yn(ctx.net_converges(net, x, sem)) + ", filterbase accumulates "
        + yn(ctx.fb_accumulates(fb, x)) + ", net accumulates " + yn(ctx.net_accumulates(net, x, sem));
}

struct T413Outcome {
    bool closed_space = false;
    bool nets_accumulate = false;
    bool universal_converge = false;
    std::optional<Net> failing_net;
};

inline T413Outcome evaluate_t4_13(const ClaimContext& ctx)
{
    T413Outcome o;
    o.closed_space = ctx.conditions().cover;
    const auto& cat = ctx.catalog();
    const auto sem = ctx.options().net_semantics;
    const std::size_t n = ctx.space().size();
    o.nets_accumulate = true;
    o.universal_converge = true;
    for (std::size_t k = 0; k < cat.nets.size(); ++k) {
        bool acc = false, conv = false;
        for (PointIndex x = 0; x < n; ++x) {
            acc = acc || ctx.net_accumulates(cat.nets[k], x, sem);
            conv = conv || ctx.net_converges(cat.nets[k], x, sem);
        }
        if (!acc && o.nets_accumulate) {
            o.nets_accumulate = false;
            if (!o.failing_net)
                o.failing_net = cat.nets[k];
        }
        if (cat.net_universal[k] && !conv && o.universal_converge) {
            o.universal_converge = false;
            if (!o.failing_net)
                o.failing_net = cat.nets[k];
        }
    }
    return o;
}

inline std::string conditions_detail(const ClosedSpaceConditions& c)
{
    auto b = [](bool v) { return v ? '1' : '0'; };
    return std::string("conditions (1)..(5) = ") + b(c.cover) + b(c.closed_family) + b(c.closed_family_fip)
        + b(c.filterbase_accumulates) + b(c.maximal_converges);
}

inline bool conditions_agree(const ClosedSpaceConditions& c)
{
    return c.cover == c.closed_family && c.closed_family == c.closed_family_fip
        && c.closed_family_fip == c.filterbase_accumulates && c.filterbase_accumulates == c.maximal_converges;
}

/// Subfamilies of `family` indexed by the value of their intersection;
/// each value keeps the first subfamily that produced it. The empty
/// subfamily has intersection `whole`.
inline std::map<SubsetMask, std::vector<SubsetMask>> reachable_meets(std::span<const SubsetMask> family,
                                                                     SubsetMask whole)
{
    std::map<SubsetMask, std::vector<SubsetMask>> reach{{whole, {}}};
    for (auto m : family) {
        std::vector<std::pair<SubsetMask, std::vector<SubsetMask>>> grown;
        for (const auto& [v, fam] : reach) {
            SubsetMask nv = v & m;
            if (!reach.contains(nv)) {
                auto f = fam;
                f.push_back(m);
                grown.emplace_back(nv, std::move(f));
            }
        }
        for (auto& [v, fam] : grown)
            reach.emplace(v, std::move(fam));
    }
    return reach;
}

} // namespace detail

/// Evaluates the claim at the instance stored in the witness. For claims
/// with no instance structure (C-P4.7-EQ, C-T4.13) the whole space is
/// re-evaluated.
inline bool instance_holds(const ClaimContext& ctx, ClaimId id, const Witness& w)
{
    const SpaceFacts& f = ctx.facts();
    const auto sem = ctx.options().net_semantics;
    switch (id) {
    case ClaimId::p3_13_1:
        return detail::implies(w.subsets.at(0).subset_of(w.subsets.at(1)),
                               f.theta_closure(w.subsets[0]).subset_of(f.theta_closure(w.subsets[1])));
    case ClaimId::p3_13_2: {
        SubsetMask meet = ctx.space().whole();
        for (auto a : w.subsets) {
            if (!f.theta_closed_set(a))
                return true;
            meet &= a;
        }
        return f.theta_closed_set(meet);
    }
    case ClaimId::t3_15_a: {
        const SubsetMask a = w.subsets.at(0);
        const PointIndex x = w.points.at(0);
        bool all_meet = true;
        for (auto v : ctx.ro_nbds(x))
            all_meet = all_meet && v.meets(a);
        return f.theta_closure(a).contains(x) == all_meet;
    }
    case ClaimId::t4_3: {
        const auto& fb = w.filterbases.at(0);
        const PointIndex x = w.points.at(0);
        return detail::implies(ctx.fb_converges(fb, x), ctx.fb_accumulates(fb, x));
    }
    case ClaimId::t4_4: {
        const auto& fine = w.filterbases.at(0);
        const auto& coarse = w.filterbases.at(1);
        const PointIndex x = w.points.at(0);
        return detail::implies(is_subordinate(fine, coarse) && ctx.fb_accumulates(fine, x),
                               ctx.fb_accumulates(coarse, x));
    }
    case ClaimId::t4_5: {
        const auto& fb = w.filterbases.at(0);
        const PointIndex x = w.points.at(0);
        return detail::implies(is_maximal_filterbase(ctx.space().ground(), fb),
                               ctx.fb_accumulates(fb, x) == ctx.fb_converges(fb, x));
    }
    case ClaimId::p4_10:
        return detail::net_pair_holds(ctx, w.net.value(), net_to_filterbase(*w.net), w.points.at(0), sem);
    case ClaimId::p4_11: {
        const auto& fb = w.filterbases.at(0);
        return detail::net_pair_holds(ctx, filterbase_to_net(fb), fb, w.points.at(0), sem);
    }
    case ClaimId::p4_7_eq: return detail::conditions_agree(ctx.conditions());
    case ClaimId::t4_13: {
        auto o = detail::evaluate_t4_13(ctx);
        return o.closed_space == o.nets_accumulate && o.nets_accumulate == o.universal_converge;
    }
    default: return detail::subset_instance_holds(ctx, id, w.subsets.at(0));
    }
}

/// First failing instance in canonical order (subset masks ascending,
/// then points, then filterbase/net enumeration order).
inline std::optional<Witness> find_counterexample(const ClaimContext& ctx, ClaimId id)
{
    const Space& sp = ctx.space();
    const SpaceFacts& f = ctx.facts();
    const std::uint32_t subsets = sp.ground().subset_count();
    const std::size_t n = sp.size();
    const auto& cat = ctx.catalog();
    const auto sem = ctx.options().net_semantics;

    switch (id) {
    case ClaimId::p3_13_1:
        for (std::uint32_t a = 0; a < subsets; ++a)
            for (std::uint32_t b = 0; b < subsets; ++b) {
                Witness w{{SubsetMask{a}, SubsetMask{b}}};
                if ((a & ~b) == 0 && !instance_holds(ctx, id, w))
                    return w;
            }
        return std::nullopt;
    case ClaimId::p3_13_2: {
        for (const auto& [meet, fam] : detail::reachable_meets(f.theta_closed, sp.whole()))
            if (!f.theta_closed_set(meet)) {
                Witness w{fam};
                w.detail = "intersection " + sp.ground().format(meet) + " is not theta-closed";
                return w;
            }
        return std::nullopt;
    }
    case ClaimId::t3_15_a:
        for (std::uint32_t a = 0; a < subsets; ++a)
            for (PointIndex x = 0; x < n; ++x) {
                Witness w{{SubsetMask{a}}, {x}};
                if (!instance_holds(ctx, id, w))
                    return w;
            }
        return std::nullopt;
    case ClaimId::t4_3:
    case ClaimId::t4_5:
        for (const auto& fb : cat.filters)
            for (PointIndex x = 0; x < n; ++x) {
                Witness w{{}, {x}, {fb}};
                if (!instance_holds(ctx, id, w))
                    return w;
            }
        return std::nullopt;
    case ClaimId::t4_4:
        for (const auto& fine : cat.filters)
            for (const auto& coarse : cat.filters) {
                if (!is_subordinate(fine, coarse))
                    continue;
                for (PointIndex x = 0; x < n; ++x)
                    if (ctx.fb_accumulates(fine, x) && !ctx.fb_accumulates(coarse, x))
                        return Witness{{}, {x}, {fine, coarse}};
            }
        return std::nullopt;
    case ClaimId::p4_10:
        for (std::size_t k = 0; k < cat.nets.size(); ++k)
            for (PointIndex x = 0; x < n; ++x)
                if (!detail::net_pair_holds(ctx, cat.nets[k], cat.net_tails[k], x, sem)) {
                    Witness w{{}, {x}};
                    w.net = cat.nets[k];
                    w.detail = detail::net_pair_detail(ctx, cat.nets[k], cat.net_tails[k], x, sem);
                    return w;
                }
        return std::nullopt;
    case ClaimId::p4_11:
        for (std::size_t k = 0; k < cat.filters.size(); ++k)
            for (PointIndex x = 0; x < n; ++x)
                if (!detail::net_pair_holds(ctx, cat.filter_nets[k], cat.filters[k], x, sem)) {
                    Witness w{{}, {x}, {cat.filters[k]}};
                    w.detail = detail::net_pair_detail(ctx, cat.filter_nets[k], cat.filters[k], x, sem);
                    return w;
                }
        return std::nullopt;
    case ClaimId::p4_7_eq:
        if (detail::conditions_agree(ctx.conditions()))
            return std::nullopt;
        return Witness{{}, {}, {}, std::nullopt, detail::conditions_detail(ctx.conditions())};
    case ClaimId::t4_13: {
        auto o = detail::evaluate_t4_13(ctx);
        if (o.closed_space == o.nets_accumulate && o.nets_accumulate == o.universal_converge)
            return std::nullopt;
        Witness w;
        w.net = o.failing_net;
        w.detail = std::string("gamma-closed ") + (o.closed_space ? "yes" : "no") + ", every net accumulates "
            + (o.nets_accumulate ? "yes" : "no") + ", every universal net converges "
            + (o.universal_converge ? "yes" : "no");
        return w;
    }
    default:
        for (std::uint32_t a = 0; a < subsets; ++a)
            if (!detail::subset_instance_holds(ctx, id, SubsetMask{a})) {
                Witness w{{SubsetMask{a}}};
                if (id == ClaimId::t3_14)
                    w.detail = detail::t3_14_detail(ctx, SubsetMask{a});
                return w;
            }
        return std::nullopt;
    }
}

/// First subset A with cl_gamma(cl_gamma(A)) != cl_gamma(A), if any.
inline std::optional<SubsetMask> closure_idempotence_failure(const SpaceFacts& f)
{
    for (std::uint32_t b = 0; b < f.sp->ground().subset_count(); ++b) {
        const SubsetMask c = f.closure(SubsetMask{b});
        if (f.closure(c) != c)
            return SubsetMask{b};
    }
    return std::nullopt;
}

inline std::vector<std::string> claim_notes(const ClaimContext& ctx, ClaimId id)
{
    std::vector<std::string> notes;
    switch (id) {
    case ClaimId::t3_9_fwd:
    case ClaimId::t3_9_conv:
        if (auto bad = closure_idempotence_failure(ctx.facts()))
            notes.push_back("cl_gamma is not idempotent on this space (first at "
                            + ctx.space().ground().format(*bad) + ")");
        else
            notes.push_back("cl_gamma is idempotent on this space");
        break;
    case ClaimId::p4_10:
        notes.push_back("tail filterbase uses tails {x_i : i >= j}, not the reversed i <= j");
        notes.push_back("net semantics " + to_string(ctx.options().net_semantics));
        break;
    case ClaimId::p4_11:
        notes.push_back("net semantics " + to_string(ctx.options().net_semantics));
        break;
    case ClaimId::p4_7_eq:
        notes.push_back(std::string("gamma-closed sets taken as ")
                        + (ctx.options().closed_sets == ClosedSets::dual ? "complements of gamma-open sets"
                                                                         : "cl_gamma fixed points"));
        notes.push_back(detail::conditions_detail(ctx.conditions()));
        break;
    case ClaimId::t4_13:
        notes.push_back("finite nets over directed sets of size <= "
                        + std::to_string(ctx.options().max_net_index_size)
                        + " only; universality via maximality of the tail filterbase");
        notes.push_back("net semantics " + to_string(ctx.options().net_semantics));
        break;
    default: break;
    }
    return notes;
}

inline Verdict check_claim(const ClaimContext& ctx, ClaimId id)
{
    Verdict v{id};
    v.notes = claim_notes(ctx, id);
    if (!ctx.hypotheses_met(info(id).hypotheses)) {
        v.status = Status::hypotheses_not_met;
        return v;
    }
    v.witness = find_counterexample(ctx, id);
    v.status = v.witness ? Status::fails : Status::holds;
    return v;
}

inline Verdict check_claim(const Space& sp, ClaimId id, SuiteOptions options = {})
{
    ClaimContext ctx(sp, options);
    return check_claim(ctx, id);
}

/// Rebuilds everything from the space and confirms the stored witness is a
/// failing instance. Says nothing about whether it is the first one.
inline bool confirm_failing_instance(const Space& sp, const Verdict& v, SuiteOptions options = {})
{
    if (v.status != Status::fails || !v.witness)
        return false;
    ClaimContext ctx(Space(sp.topology(), sp.gamma()), options);
    return ctx.hypotheses_met(info(v.claim).hypotheses) && !instance_holds(ctx, v.claim, *v.witness);
}

/// As above, and a fresh check must also reproduce the verdict exactly.
inline bool confirm_failure(const Space& sp, const Verdict& v, SuiteOptions options = {})
{
    if (!confirm_failing_instance(sp, v, options))
        return false;
    return check_claim(Space(sp.topology(), sp.gamma()), v.claim, options) == v;
}

struct SuiteReport {
    std::vector<Verdict> verdicts;
    bool open_operation = false;
    bool regular_operation = false;
    bool extremally_disconnected = false;
};

inline SuiteReport run_suite(const Space& sp, SuiteOptions options = {}, std::span<const ClaimId> claims = {})
{
    ClaimContext ctx(sp, options);
    SuiteReport r;
    r.open_operation = ctx.facts().open_operation;
    r.regular_operation = is_regular_operation(sp);
    r.extremally_disconnected = ctx.facts().extremally_disconnected;
    const auto every = all_claims();
    if (claims.empty())
        claims = every;
    for (auto id : claims)
        r.verdicts.push_back(check_claim(ctx, id));
    return r;
}

/// Structural invariants over one space, each a count of violating
/// instances, plus measured properties that are reported but not asserted.
struct InvariantTally {
    std::size_t duality = 0;
    std::size_t interior_extensive = 0;
    std::size_t closure_extensive = 0;
    std::size_t theta_extensive = 0;
    std::size_t interior_monotone = 0;
    std::size_t closure_monotone = 0;
    std::size_t theta_monotone = 0;
    std::size_t ro_in_gamma_open = 0;
    std::size_t gamma_open_in_tau = 0;
    std::size_t theta_open_in_gamma_open = 0;

    // measured
    std::size_t closure_not_idempotent_spaces = 0;
    std::size_t closed_notions_disagree = 0;
    std::size_t closure_not_in_theta_closure = 0;

    std::size_t violations() const
    {
        return duality + interior_extensive + closure_extensive + theta_extensive + interior_monotone
            + closure_monotone + theta_monotone + ro_in_gamma_open + gamma_open_in_tau + theta_open_in_gamma_open;
    }

    InvariantTally& operator+=(const InvariantTally& o)
    {
        duality += o.duality;
        interior_extensive += o.interior_extensive;
        closure_extensive += o.closure_extensive;
        theta_extensive += o.theta_extensive;
        interior_monotone += o.interior_monotone;
        closure_monotone += o.closure_monotone;
        theta_monotone += o.theta_monotone;
        ro_in_gamma_open += o.ro_in_gamma_open;
        gamma_open_in_tau += o.gamma_open_in_tau;
        theta_open_in_gamma_open += o.theta_open_in_gamma_open;
        closure_not_idempotent_spaces += o.closure_not_idempotent_spaces;
        closed_notions_disagree += o.closed_notions_disagree;
        closure_not_in_theta_closure += o.closure_not_in_theta_closure;
        return *this;
    }
};

inline InvariantTally check_invariants(const SpaceFacts& f)
{
    InvariantTally t;
    const Space& sp = *f.sp;
    const std::uint32_t count = sp.ground().subset_count();
    for (std::uint32_t b = 0; b < count; ++b) {
        const SubsetMask a{b};
        t.duality += f.interior(a) != sp.complement(f.closure(sp.complement(a)));
        t.interior_extensive += !f.interior(a).subset_of(a);
        t.closure_extensive += !a.subset_of(f.closure(a));
        t.theta_extensive += !a.subset_of(f.theta_closure(a));
        t.ro_in_gamma_open += f.regular_open_set(a) && !f.gamma_open_set(a);
        t.gamma_open_in_tau += f.gamma_open_set(a) && !f.tau_open_set(a);
        t.theta_open_in_gamma_open += f.theta_open_set(a) && !f.gamma_open_set(a);
        t.closed_notions_disagree += f.gamma_closed_set(a) != f.closure(a).subset_of(a);
        t.closure_not_in_theta_closure += !f.closure(a).subset_of(f.theta_closure(a));
        // every A <= B, B = b
        for (std::uint32_t s = b;; s = (s - 1) & b) {
            const SubsetMask lo{s};
            t.interior_monotone += !f.interior(lo).subset_of(f.interior(a));
            t.closure_monotone += !f.closure(lo).subset_of(f.closure(a));
            t.theta_monotone += !f.theta_closure(lo).subset_of(f.theta_closure(a));
            if (s == 0)
                break;
        }
    }
    t.closure_not_idempotent_spaces = closure_idempotence_failure(f).has_value();
    return t;
}

struct SpaceRef {
    std::size_t points = 0;
    std::size_t topology_index = 0;
    std::size_t operation_index = 0;

    auto operator<=>(const SpaceRef&) const = default;
};

struct ClaimTally {
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t hypotheses_not_met = 0;
};

struct FailureExample {
    SpaceRef ref;
    Space space;
    Verdict verdict;
};

struct SweepOptions {
    std::vector<std::size_t> sizes;
    OperationMode mode;
    SuiteOptions suite{};
    std::vector<ClaimId> claims;  // empty = all
    std::size_t max_examples = 3;
    bool check_invariants = true;
};

struct SweepReport {
    std::vector<std::size_t> sizes;
    std::string mode;
    std::vector<ClaimId> claims;
    std::size_t topologies = 0;
    std::size_t spaces = 0;
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> per_size;  // points -> (topologies, spaces)
    std::vector<ClaimTally> tallies;                                     // aligned with claims
    std::vector<FailureExample> examples;
    std::size_t failures_confirmed = 0;
    std::size_t failures_unconfirmed = 0;
    InvariantTally invariants;
    std::size_t open_operation_spaces = 0;
    std::size_t extremally_disconnected_spaces = 0;
    std::size_t open_and_ed_spaces = 0;

    std::size_t safe_claim_failures() const
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < claims.size(); ++i)
            if (is_safe_claim(claims[i]))
                total += tallies[i].fails;
        return total;
    }

    const ClaimTally& tally(ClaimId id) const
    {
        for (std::size_t i = 0; i < claims.size(); ++i)
            if (claims[i] == id)
                return tallies[i];
        throw std::out_of_range("claim not in sweep");
    }
};

namespace detail {
struct TopologyResult {
    std::size_t spaces = 0;
    std::vector<ClaimTally> tallies;
    std::vector<FailureExample> examples;
    std::size_t confirmed = 0, unconfirmed = 0;
    InvariantTally invariants;
    std::size_t open_ops = 0, ed = 0, open_and_ed = 0;
};
} // namespace detail

/// Runs the suite on every (topology, operation) pair for the given sizes.
/// Work is split per topology; results are merged in enumeration order.
inline SweepReport sweep(const SweepOptions& opt)
{
    SweepReport report;
    report.sizes = opt.sizes;
    report.mode = opt.mode.to_string();
    report.claims = opt.claims.empty() ? all_claims() : opt.claims;
    report.tallies.assign(report.claims.size(), {});

    for (auto n : opt.sizes) {
        const auto tops = enumerate_topologies(n);
        net_catalog(n, opt.suite.max_net_index_size);
        auto results = parallel_map(tops.size(), [&](std::size_t ti) {
            detail::TopologyResult r;
            r.tallies.assign(report.claims.size(), {});
            std::vector<std::size_t> kept(report.claims.size(), 0);
            const auto ops = enumerate_gamma_operations(tops[ti], opt.mode);
            for (std::size_t oi = 0; oi < ops.size(); ++oi) {
                Space sp(tops[ti], ops[oi]);
                ClaimContext ctx(sp, opt.suite);
                ++r.spaces;
                r.open_ops += ctx.facts().open_operation;
                r.ed += ctx.facts().extremally_disconnected;
                r.open_and_ed += ctx.facts().open_operation && ctx.facts().extremally_disconnected;
                if (opt.check_invariants)
                    r.invariants += check_invariants(ctx.facts());
                for (std::size_t ci = 0; ci < report.claims.size(); ++ci) {
                    Verdict v = check_claim(ctx, report.claims[ci]);
                    switch (v.status) {
                    case Status::holds: ++r.tallies[ci].holds; break;
                    case Status::hypotheses_not_met: ++r.tallies[ci].hypotheses_not_met; break;
                    case Status::fails:
                        ++r.tallies[ci].fails;
                        if (confirm_failure(sp, v, opt.suite))
                            ++r.confirmed;
                        else
                            ++r.unconfirmed;
                        if (kept[ci] < opt.max_examples) {
                            ++kept[ci];
                            r.examples.push_back({{n, ti, oi}, sp, std::move(v)});
                        }
                        break;
                    }
                }
            }
            return r;
        });

        std::size_t size_spaces = 0;
        std::vector<std::size_t> kept(report.claims.size(), 0);
        for (auto& r : results) {
            size_spaces += r.spaces;
            for (std::size_t ci = 0; ci < report.claims.size(); ++ci) {
                report.tallies[ci].holds += r.tallies[ci].holds;
                report.tallies[ci].fails += r.tallies[ci].fails;
                report.tallies[ci].hypotheses_not_met += r.tallies[ci].hypotheses_not_met;
            }
            for (auto& e : r.examples) {
                std::size_t ci = std::find(report.claims.begin(), report.claims.end(), e.verdict.claim)
                    - report.claims.begin();
                if (kept[ci] < opt.max_examples) {
                    ++kept[ci];
                    report.examples.push_back(std::move(e));
                }
            }
            report.failures_confirmed += r.confirmed;
            report.failures_unconfirmed += r.unconfirmed;
            report.invariants += r.invariants;
            report.open_operation_spaces += r.open_ops;
            report.extremally_disconnected_spaces += r.ed;
            report.open_and_ed_spaces += r.open_and_ed;
        }
        report.per_size[n] = {tops.size(), size_spaces};
        report.topologies += tops.size();
        report.spaces += size_spaces;
    }

    std::stable_sort(report.examples.begin(), report.examples.end(), [&](const auto& a, const auto& b) {
        auto ia = static_cast<std::size_t>(a.verdict.claim), ib = static_cast<std::size_t>(b.verdict.claim);
        if (ia != ib)
            return ia < ib;
        return a.ref < b.ref;
    });
    return report;
}

// ---------------------------------------------------------------------------
// Mining

enum class Separation {
    open_not_regular_open,
    theta_open_not_regular_open,
    open_not_theta_open,
    regular_open_not_clopen,
};

struct MinePredicate {
    std::string name;
    std::optional<Separation> separation;
    std::optional<ClaimId> claim;
};

inline constexpr std::array<std::pair<std::string_view, Separation>, 4> separation_names = {{
    {"open-not-regular-open", Separation::open_not_regular_open},
    {"theta-open-not-regular-open", Separation::theta_open_not_regular_open},
    {"open-not-theta-open", Separation::open_not_theta_open},
    {"regular-open-not-clopen", Separation::regular_open_not_clopen},
}};

/// A separation name, or a claim id (optionally prefixed "claim:") whose
/// failures are mined.
inline MinePredicate parse_predicate(std::string_view text)
{
    for (auto [name, sep] : separation_names)
        if (name == text)
            return {std::string(name), sep, std::nullopt};
    std::string_view id = text.starts_with("claim:") ? text.substr(6) : text;
    if (auto c = parse_claim(id))
        return {std::string(to_string(*c)), std::nullopt, c};
    throw error(errc::unknown_predicate, "unknown predicate '" + std::string(text) + "'");
}

inline bool separates(const SpaceFacts& f, Separation s, SubsetMask a)
{
    switch (s) {
    case Separation::open_not_regular_open: return f.gamma_open_set(a) && !f.regular_open_set(a);
    case Separation::theta_open_not_regular_open: return f.theta_open_set(a) && !f.regular_open_set(a);
    case Separation::open_not_theta_open: return f.gamma_open_set(a) && !f.theta_open_set(a);
    case Separation::regular_open_not_clopen: return f.regular_open_set(a) && !f.clopen_set(a);
    }
    return false;
}

struct MineHit {
    SpaceRef ref;
    Space space;
    Witness witness;
};

struct MineResult {
    std::string predicate;
    std::size_t points = 0;
    std::string mode;
    std::size_t topologies = 0;
    std::size_t spaces = 0;
    std::vector<MineHit> hits;
};

/// Every (space, witness) on n points satisfying the predicate, in
/// (topology, operation, subset) order.
inline MineResult mine(std::size_t n, OperationMode mode, const MinePredicate& pred, SuiteOptions suite = {})
{
    if (n < 1 || n > max_enumerated_points)
        throw error(errc::size_too_large, "mining supports 1.." + std::to_string(max_enumerated_points) + " points");
    if (mode.all_tables && n > max_table_points)
        throw error(errc::size_too_large, "all_tables mining supports at most 3 points");

    MineResult out{pred.name, n, mode.to_string()};
    const auto tops = enumerate_topologies(n);
    out.topologies = tops.size();
    auto per_top = parallel_map(tops.size(), [&](std::size_t ti) {
        std::pair<std::size_t, std::vector<MineHit>> r;
        const auto ops = enumerate_gamma_operations(tops[ti], mode);
        r.first = ops.size();
        for (std::size_t oi = 0; oi < ops.size(); ++oi) {
            Space sp(tops[ti], ops[oi]);
            if (pred.separation) {
                SpaceFacts f(sp);
                for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
                    if (separates(f, *pred.separation, SubsetMask{b}))
                        r.second.push_back({{n, ti, oi}, sp, Witness{{SubsetMask{b}}}});
            }
            else {
                ClaimContext ctx(sp, suite);
                Verdict v = check_claim(ctx, *pred.claim);
                if (v.status == Status::fails)
                    r.second.push_back({{n, ti, oi}, sp, *v.witness});
            }
        }
        return r;
    });
    for (auto& [count, hits] : per_top) {
        out.spaces += count;
        for (auto& h : hits)
            out.hits.push_back(std::move(h));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Worked examples

inline const std::vector<std::string>& example_ids()
{
    static const std::vector<std::string> ids = {"3.2", "3.5", "3.16", "3.17"};
    return ids;
}

/// X = {a,b,c} with tau = {0, X, {a}, {b}, {a,b}, {a,c}}.
inline Topology two_point_branching_topology()
{
    PointSet g = PointSet::standard(3);
    return validate_topology(g, {SubsetMask{}, g.whole(), g.mask_of({"a"}), g.mask_of({"b"}), g.mask_of({"a", "b"}),
                                 g.mask_of({"a", "c"})});
}

inline Space example_space(std::string_view id)
{
    const PointSet g = PointSet::standard(3);
    const PointIndex b = 1;
    if (id == "3.2" || id == "3.16")
        return Space(two_point_branching_topology(),
                     GammaOperation::make_pivot(b, Branch::identity, Branch::classical_closure));
    if (id == "3.17")
        return Space(two_point_branching_topology(),
                     GammaOperation::make_pivot(b, Branch::classical_closure, Branch::identity));
    if (id == "3.5")
        return Space(validate_topology(g, {SubsetMask{}, g.whole(), g.mask_of({"a"}), g.mask_of({"b"}),
                                           g.mask_of({"a", "b"})}),
                     GammaOperation::interior_closure());
    throw error(errc::unknown_example, "no worked example '" + std::string(id) + "'");
}

struct FamilyAudit {
    std::string name;
    std::vector<SubsetMask> printed;
    std::vector<SubsetMask> recomputed;
    std::vector<SubsetMask> missing;     // printed, not recomputed
    std::vector<SubsetMask> unexpected;  // recomputed, not printed
    bool matches() const { return missing.empty() && unexpected.empty(); }
};

struct QualitativeCheck {
    std::string statement;
    bool holds = false;
};

struct AuditReport {
    std::string example;
    Space space;
    std::vector<FamilyAudit> families;
    std::vector<QualitativeCheck> checks;
    std::vector<FamilyAudit> tau_open_comparison;
    std::optional<MineResult> miner;
    std::vector<std::string> notes;
};

namespace detail {
inline FamilyAudit diff_family(std::string name, std::vector<SubsetMask> printed, std::vector<SubsetMask> recomputed)
{
    std::sort(printed.begin(), printed.end());
    std::sort(recomputed.begin(), recomputed.end());
    FamilyAudit a{std::move(name), printed, recomputed};
    std::set_difference(printed.begin(), printed.end(), recomputed.begin(), recomputed.end(),
                        std::back_inserter(a.missing));
    std::set_difference(recomputed.begin(), recomputed.end(), printed.begin(), printed.end(),
                        std::back_inserter(a.unexpected));
    return a;
}
} // namespace detail

/// Recomputes every family an example prints, diffs against the printed
/// listing, and re-evaluates its qualitative claim from recomputed data.
inline AuditReport audit_example(std::string_view id)
{
    Space sp = example_space(id);
    const PointSet& g = sp.ground();
    const SpaceFacts f(sp);
    auto m = [&](std::initializer_list<std::string_view> names) { return g.mask_of(names); };
    const SubsetMask empty{}, whole = g.whole();
    AuditReport r{std::string(id), sp};

    auto exists = [&](auto pred) {
        for (std::uint32_t b = 0; b < g.subset_count(); ++b)
            if (pred(SubsetMask{b}))
                return true;
        return false;
    };

    if (id == "3.2") {
        r.families.push_back(detail::diff_family(
            "gamma_open", {m({"a", "b"}), m({"a", "c"}), m({"b"}), whole, empty}, f.gamma_open));
        r.families.push_back(
            detail::diff_family("gamma_regular_open", {m({"a", "c"}), m({"b"}), whole, empty}, f.regular_open));
        const SubsetMask ab = m({"a", "b"});
        r.checks.push_back({"{a,b} is gamma-open and not gamma-regular-open",
                            f.gamma_open_set(ab) && !f.regular_open_set(ab)});
    }
    else if (id == "3.5") {
        const std::vector<SubsetMask> printed = {m({"a"}), m({"a", "b"}), m({"b"}), whole, empty};
        r.families.push_back(detail::diff_family("gamma_open", printed, f.gamma_open));
        r.families.push_back(detail::diff_family("gamma_regular_open", printed, f.regular_open));
        const SubsetMask a = m({"a"});
        r.checks.push_back({"the space is not gamma-extremally disconnected", !f.extremally_disconnected});
        r.checks.push_back({"{a} is gamma-regular-open and not gamma-clopen",
                            f.regular_open_set(a) && !f.clopen_set(a)});
    }
    else if (id == "3.16") {
        const std::vector<SubsetMask> printed_open = {m({"a", "b"}), m({"a", "c"}), m({"b"}), whole, empty};
        r.families.push_back(detail::diff_family("gamma_open", printed_open, f.gamma_open));
        r.families.push_back(detail::diff_family("gamma_theta_open", printed_open, f.theta_open));
        r.families.push_back(
            detail::diff_family("gamma_regular_open", {m({"a", "c"}), m({"b"}), whole, empty}, f.regular_open));
        const SubsetMask ab = m({"a", "b"});
        r.checks.push_back({"{a,b} is gamma-theta-open and not gamma-regular-open",
                            f.theta_open_set(ab) && !f.regular_open_set(ab)});
        r.checks.push_back({"some subset of this space is gamma-theta-open and not gamma-regular-open",
                            exists([&](SubsetMask s) { return separates(f, Separation::theta_open_not_regular_open, s); })});
        r.tau_open_comparison.push_back(
            detail::diff_family("gamma_theta_open (tau-open nbds)", printed_open, theta_families(sp, ThetaNbds::tau_open).theta_open));
        OperationMode all;
        all.all_tables = true;
        r.miner = mine(3, all, parse_predicate("theta-open-not-regular-open"));
        r.checks.push_back({"gamma-theta-open and not gamma-regular-open is realizable on 3 points (all tables)",
                            !r.miner->hits.empty()});
    }
    else if (id == "3.17") {
        r.families.push_back(
            detail::diff_family("gamma_open", {empty, whole, m({"a"}), m({"a", "c"})}, f.gamma_open));
        r.families.push_back(detail::diff_family("gamma_theta_open", {empty, whole, m({"a", "c"})}, f.theta_open));
        const SubsetMask a = m({"a"});
        r.checks.push_back({"{a} is gamma-open and not gamma-theta-open", f.gamma_open_set(a) && !f.theta_open_set(a)});
        r.checks.push_back({"some subset of this space is gamma-open and not gamma-theta-open",
                            exists([&](SubsetMask s) { return separates(f, Separation::open_not_theta_open, s); })});
        r.tau_open_comparison.push_back(detail::diff_family(
            "gamma_theta_open (tau-open nbds)", {empty, whole, m({"a", "c"})}, theta_families(sp, ThetaNbds::tau_open).theta_open));
    }
    else {
        throw error(errc::unknown_example, "no worked example '" + std::string(id) + "'");
    }

    for (const auto& fam : r.families)
        if (!fam.matches())
            r.notes.push_back("printed " + fam.name + " family differs from the recomputed one");
    return r;
}

// ---------------------------------------------------------------------------
// Net/filterbase bridge under every pairing of definitions

struct BridgeStatement {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::optional<FailureExample> first_failure;
};

struct PairingResult {
    NetSemantics semantics;
    std::array<BridgeStatement, 4> statements;  // net->fb conv, net->fb acc, fb->net conv, fb->net acc
    bool satisfied() const
    {
        for (const auto& s : statements)
            if (s.failures)
                return false;
        return true;
    }
};

struct BridgeReport {
    std::vector<std::size_t> sizes;
    std::string mode;
    std::size_t max_net_index_size = 3;
    std::size_t spaces = 0;
    std::size_t nets_per_size_total = 0;
    std::vector<PairingResult> pairings;
};

inline std::vector<NetSemantics> all_pairings()
{
    return {{NetNbds::regular_open, Accumulation::standard},
            {NetNbds::regular_open, Accumulation::literal},
            {NetNbds::gamma_open_closure, Accumulation::standard},
            {NetNbds::gamma_open_closure, Accumulation::literal}};
}

/// Compares net verdicts with filterbase verdicts, nets to tails and
/// filterbases to their associated nets, for every pairing.
inline BridgeReport bridge_report(std::vector<std::size_t> sizes, OperationMode mode, std::size_t max_net_index_size = 3)
{
    BridgeReport report{sizes, mode.to_string(), max_net_index_size};
    const auto pairings = all_pairings();
    auto fresh = [&] {
        std::vector<PairingResult> out;
        for (auto sem : pairings) {
            PairingResult p{sem};
            p.statements[0].name = "net convergence matches tail filterbase";
            p.statements[1].name = "net accumulation matches tail filterbase";
            p.statements[2].name = "filterbase convergence matches associated net";
            p.statements[3].name = "filterbase accumulation matches associated net";
            out.push_back(std::move(p));
        }
        return out;
    };
    report.pairings = fresh();

    for (auto n : sizes) {
        const auto tops = enumerate_topologies(n);
        const auto& cat = net_catalog(n, max_net_index_size);
        report.nets_per_size_total += cat.nets.size();
        auto results = parallel_map(tops.size(), [&](std::size_t ti) {
            std::pair<std::size_t, std::vector<PairingResult>> r{0, fresh()};
            const auto ops = enumerate_gamma_operations(tops[ti], mode);
            for (std::size_t oi = 0; oi < ops.size(); ++oi) {
                Space sp(tops[ti], ops[oi]);
                SuiteOptions so;
                so.max_net_index_size = max_net_index_size;
                ClaimContext ctx(sp, so);
                ++r.first;
                for (std::size_t pi = 0; pi < pairings.size(); ++pi) {
                    const auto sem = pairings[pi];
                    auto& st = r.second[pi].statements;
                    auto record = [&](BridgeStatement& s, bool ok, Witness w) {
                        ++s.checked;
                        if (ok)
                            return;
                        ++s.failures;
                        if (!s.first_failure) {
                            Verdict v{w.net ? ClaimId::p4_10 : ClaimId::p4_11, Status::fails, std::move(w)};
                            v.notes.push_back("net semantics " + to_string(sem));
                            s.first_failure = FailureExample{{n, ti, oi}, sp, std::move(v)};
                        }
                    };
                    for (std::size_t k = 0; k < cat.nets.size(); ++k)
                        for (PointIndex x = 0; x < n; ++x) {
                            const bool conv = ctx.fb_converges(cat.net_tails[k], x) == ctx.net_converges(cat.nets[k], x, sem);
                            const bool acc = ctx.fb_accumulates(cat.net_tails[k], x) == ctx.net_accumulates(cat.nets[k], x, sem);
                            auto w = [&] {
                                Witness wit{{}, {x}};
                                wit.net = cat.nets[k];
                                wit.detail = detail::net_pair_detail(ctx, cat.nets[k], cat.net_tails[k], x, sem);
                                return wit;
                            };
                            record(st[0], conv, conv ? Witness{} : w());
                            record(st[1], acc, acc ? Witness{} : w());
                        }
                    for (std::size_t k = 0; k < cat.filters.size(); ++k)
                        for (PointIndex x = 0; x < n; ++x) {
                            const bool conv = ctx.fb_converges(cat.filters[k], x) == ctx.net_converges(cat.filter_nets[k], x, sem);
                            const bool acc = ctx.fb_accumulates(cat.filters[k], x) == ctx.net_accumulates(cat.filter_nets[k], x, sem);
                            auto w = [&] {
                                Witness wit{{}, {x}, {cat.filters[k]}};
                                wit.detail = detail::net_pair_detail(ctx, cat.filter_nets[k], cat.filters[k], x, sem);
                                return wit;
                            };
                            record(st[2], conv, conv ? Witness{} : w());
                            record(st[3], acc, acc ? Witness{} : w());
                        }
                }
            }
            return r;
        });
        for (auto& [count, partial] : results) {
            report.spaces += count;
            for (std::size_t pi = 0; pi < pairings.size(); ++pi)
                for (std::size_t s = 0; s < 4; ++s) {
                    auto& dst = report.pairings[pi].statements[s];
                    auto& src = partial[pi].statements[s];
                    dst.checked += src.checked;
                    dst.failures += src.failures;
                    if (!dst.first_failure && src.first_failure)
                        dst.first_failure = std::move(src.first_failure);
                }
        }
    }
    return report;
}

} // namespace gammatop
