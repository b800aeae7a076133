#pragma once

// Subset classifiers built on int_gamma and cl_gamma: gamma-open/closed,
// gamma-regular-open/closed, gamma-clopen, extremal disconnectedness and the
// gamma-theta closure.

#include "gammatop/gamma_core.hpp"

#include <array>
#include <optional>
#include <utility>

namespace gammatop {

inline bool is_gamma_open(const Space& sp, SubsetMask a) { return gamma_interior(sp, a) == a; }

inline bool is_gamma_closed_dual(const Space& sp, SubsetMask a) { return is_gamma_open(sp, sp.complement(a)); }

inline bool is_gamma_closed_cl(const Space& sp, SubsetMask a) { return gamma_closure(sp, a).subset_of(a); }

inline std::vector<SubsetMask> gamma_open_family(const Space& sp) { return gamma_open_sets(sp); }

inline bool is_gamma_regular_open(const Space& sp, SubsetMask a)
{
    return gamma_interior(sp, gamma_closure(sp, a)) == a;
}

inline bool is_gamma_regular_closed(const Space& sp, SubsetMask a)
{
    return gamma_closure(sp, gamma_interior(sp, a)) == a;
}

inline std::vector<SubsetMask> regular_open_family(const Space& sp)
{
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
        if (is_gamma_regular_open(sp, SubsetMask{b}))
            out.emplace_back(b);
    return out;
}

/// Fixed point of both int_gamma and cl_gamma.
inline bool is_gamma_clopen(const Space& sp, SubsetMask a)
{
    return gamma_interior(sp, a) == a && gamma_closure(sp, a) == a;
}

inline bool is_extremally_disconnected(const Space& sp)
{
    for (auto u : gamma_open_family(sp))
        if (!is_gamma_open(sp, gamma_closure(sp, u)))
            return false;
    return true;
}

/// Which neighbourhoods the theta closure quantifies over. `gamma_open` is
/// the definition; `tau_open` exists only for discrepancy analysis.
enum class ThetaNbds { gamma_open, tau_open };

/// (U, cl_gamma(U)) for every test neighbourhood U of the chosen kind.
inline std::vector<std::pair<SubsetMask, SubsetMask>> theta_test_sets(const Space& sp,
                                                                      ThetaNbds nbds = ThetaNbds::gamma_open)
{
    std::vector<std::pair<SubsetMask, SubsetMask>> out;
    const auto family = nbds == ThetaNbds::gamma_open ? gamma_open_family(sp) : sp.topology().opens();
    for (auto u : family)
        out.emplace_back(u, gamma_closure(sp, u));
    return out;
}

inline SubsetMask gamma_theta_closure(const Space& sp,
                                      std::span<const std::pair<SubsetMask, SubsetMask>> tests, SubsetMask a)
{
    SubsetMask result;
    for (PointIndex x = 0; x < sp.size(); ++x) {
        bool cluster = true;
        for (auto [u, cl_u] : tests)
            if (u.contains(x) && !cl_u.meets(a)) {
                cluster = false;
                break;
            }
        if (cluster)
            result |= SubsetMask::singleton(x);
    }
    return result;
}

/// { x : cl_gamma(U) meets A for every gamma-open U containing x }
inline SubsetMask gamma_theta_closure(const Space& sp, SubsetMask a, ThetaNbds nbds = ThetaNbds::gamma_open)
{
    return gamma_theta_closure(sp, theta_test_sets(sp, nbds), a);
}

struct ThetaFamilies {
    std::vector<SubsetMask> theta_closed;
    std::vector<SubsetMask> theta_open;
};

inline ThetaFamilies theta_families(const Space& sp, ThetaNbds nbds = ThetaNbds::gamma_open)
{
    const auto tests = theta_test_sets(sp, nbds);
    ThetaFamilies f;
    for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
        if (gamma_theta_closure(sp, tests, SubsetMask{b}) == SubsetMask{b})
            f.theta_closed.emplace_back(b);
    for (auto c : f.theta_closed)
        f.theta_open.push_back(sp.complement(c));
    std::sort(f.theta_open.begin(), f.theta_open.end());
    return f;
}

enum class Flag : std::size_t {
    open_tau,
    gamma_open,
    gamma_closed_dual,
    gamma_closed_cl,
    gamma_regular_open,
    gamma_regular_closed,
    gamma_clopen,
    theta_open,
    theta_closed,
};

inline constexpr std::size_t flag_count = 9;

inline const char* to_string(Flag f)
{
    constexpr std::array<const char*, flag_count> names = {
        "open_tau", "gamma_open", "gamma_closed_dual", "gamma_closed_cl", "gamma_regular_open",
        "gamma_regular_closed", "gamma_clopen", "theta_open", "theta_closed"};
    return names[static_cast<std::size_t>(f)];
}

struct SubsetClassification {
    SubsetMask subset;
    std::array<bool, flag_count> flags{};
    /// Smallest failing point for each false flag.
    std::array<std::optional<PointIndex>, flag_count> witnesses{};

    bool operator[](Flag f) const { return flags[static_cast<std::size_t>(f)]; }
};

namespace detail {
inline std::optional<PointIndex> lowest_point(SubsetMask m)
{
    if (m.empty())
        return std::nullopt;
    return static_cast<PointIndex>(std::countr_zero(m.bits));
}
} // namespace detail

inline SubsetClassification classify_subset(const Space& sp,
                                            std::span<const std::pair<SubsetMask, SubsetMask>> theta_tests,
                                            SubsetMask a)
{
    SubsetClassification c;
    c.subset = a;
    const SubsetMask co = sp.complement(a);
    const SubsetMask int_a = gamma_interior(sp, a);
    const SubsetMask cl_a = gamma_closure(sp, a);
    const SubsetMask int_co = gamma_interior(sp, co);
    const SubsetMask reg_open = gamma_interior(sp, cl_a);
    const SubsetMask reg_closed = gamma_closure(sp, int_a);
    const SubsetMask theta_a = gamma_theta_closure(sp, theta_tests, a);
    const SubsetMask theta_co = gamma_theta_closure(sp, theta_tests, co);
    const SubsetMask tau_int = interior(sp.topology(), a);

    auto set = [&](Flag f, SubsetMask failing) {
        auto i = static_cast<std::size_t>(f);
        c.flags[i] = failing.empty();
        c.witnesses[i] = detail::lowest_point(failing);
    };
    auto diff = [](SubsetMask x, SubsetMask y) { return SubsetMask{x.bits ^ y.bits}; };

    set(Flag::open_tau, diff(a, tau_int));
    set(Flag::gamma_open, diff(a, int_a));
    set(Flag::gamma_closed_dual, diff(co, int_co));
    set(Flag::gamma_closed_cl, cl_a & co);
    set(Flag::gamma_regular_open, diff(a, reg_open));
    set(Flag::gamma_regular_closed, diff(a, reg_closed));
    set(Flag::gamma_clopen, diff(a, int_a) | diff(a, cl_a));
    set(Flag::theta_open, theta_co & a);
    set(Flag::theta_closed, theta_a & co);
    return c;
}

inline SubsetClassification classify_subset(const Space& sp, SubsetMask a)
{
    return classify_subset(sp, theta_test_sets(sp), a);
}

/// Per-space tables of every operator over all 2^n subsets, for the
/// exhaustive checkers.
struct SpaceFacts {
    explicit SpaceFacts(const Space& s) : sp(&s)
    {
        const std::uint32_t count = s.ground().subset_count();
        int_g.resize(count);
        cl_g.resize(count);
        theta_cl.resize(count);
        is_gopen.assign(count, false);
        is_ro.assign(count, false);
        is_theta_closed.assign(count, false);
        is_theta_open.assign(count, false);
        is_tau_open.assign(count, false);

        for (std::uint32_t b = 0; b < count; ++b) {
            int_g[b] = gamma_interior(s, SubsetMask{b});
            cl_g[b] = gamma_closure(s, SubsetMask{b});
            is_tau_open[b] = s.topology().is_open(SubsetMask{b});
            if (int_g[b].bits == b) {
                is_gopen[b] = true;
                gamma_open.emplace_back(b);
            }
        }
        for (std::uint32_t b = 0; b < count; ++b)
            if (int_g[cl_g[b].bits].bits == b) {
                is_ro[b] = true;
                regular_open.emplace_back(b);
            }
        for (auto u : gamma_open)
            theta_tests.emplace_back(u, cl_g[u.bits]);
        for (std::uint32_t b = 0; b < count; ++b) {
            theta_cl[b] = gamma_theta_closure(s, theta_tests, SubsetMask{b});
            if (theta_cl[b].bits == b) {
                is_theta_closed[b] = true;
                theta_closed.emplace_back(b);
                is_theta_open[s.complement(SubsetMask{b}).bits] = true;
            }
        }
        for (std::uint32_t b = 0; b < count; ++b)
            if (is_theta_open[b])
                theta_open.emplace_back(b);

        open_operation = is_open_operation(s);
        extremally_disconnected = true;
        for (auto u : gamma_open)
            if (!is_gopen[cl_g[u.bits].bits]) {
                extremally_disconnected = false;
                break;
            }
    }

    SubsetMask interior(SubsetMask a) const { return int_g[a.bits]; }
    SubsetMask closure(SubsetMask a) const { return cl_g[a.bits]; }
    SubsetMask theta_closure(SubsetMask a) const { return theta_cl[a.bits]; }
    bool gamma_open_set(SubsetMask a) const { return is_gopen[a.bits]; }
    bool gamma_closed_set(SubsetMask a) const { return is_gopen[sp->complement(a).bits]; }
    bool regular_open_set(SubsetMask a) const { return is_ro[a.bits]; }
    bool clopen_set(SubsetMask a) const { return int_g[a.bits] == a && cl_g[a.bits] == a; }
    bool theta_open_set(SubsetMask a) const { return is_theta_open[a.bits]; }
    bool theta_closed_set(SubsetMask a) const { return is_theta_closed[a.bits]; }
    bool tau_open_set(SubsetMask a) const { return is_tau_open[a.bits]; }

    const Space* sp;
    std::vector<SubsetMask> int_g, cl_g, theta_cl;
    std::vector<bool> is_gopen, is_ro, is_theta_closed, is_theta_open, is_tau_open;
    std::vector<SubsetMask> gamma_open, regular_open, theta_closed, theta_open;
    std::vector<std::pair<SubsetMask, SubsetMask>> theta_tests;
    bool open_operation = false;
    bool extremally_disconnected = false;
};

} // namespace gammatop
