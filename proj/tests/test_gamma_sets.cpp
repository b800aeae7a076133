#include "gammatop/gamma_sets.hpp"

#include <gtest/gtest.h>

using namespace gammatop;

namespace {

Topology tau_3_2()
{
    PointSet x = PointSet::standard(3);
    return validate_topology(x, {x.mask_of({}), x.mask_of({"a"}), x.mask_of({"b"}), x.mask_of({"a", "b"}),
                                 x.mask_of({"a", "c"}), x.whole()});
}

Space space_3_2() { return Space(tau_3_2(), GammaOperation::make_pivot(1, Branch::identity, Branch::classical_closure)); }
Space space_3_17() { return Space(tau_3_2(), GammaOperation::make_pivot(1, Branch::classical_closure, Branch::identity)); }

Space space_3_5()
{
    PointSet x = PointSet::standard(3);
    return Space(validate_topology(x, {x.mask_of({}), x.mask_of({"a"}), x.mask_of({"b"}), x.mask_of({"a", "b"}), x.whole()}),
                 GammaOperation::interior_closure());
}

template <class Fn>
void for_each_space(std::size_t max_n, const char* ops, Fn fn)
{
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& t : enumerate_topologies(n))
            for (const auto& op : enumerate_gamma_operations(t, OperationMode::parse(ops)))
                fn(Space(t, op));
}

// theta closure straight from the definition: x is in it iff for every
// gamma-open U containing x, cl_gamma(U) meets A.
SubsetMask theta_oracle(const Space& sp, SubsetMask a)
{
    SubsetMask r;
    for (PointIndex x = 0; x < sp.size(); ++x) {
        bool in = true;
        for (std::uint32_t u = 0; u < sp.ground().subset_count(); ++u)
            if (gamma_interior(sp, SubsetMask{u}) == SubsetMask{u} && SubsetMask{u}.contains(x)
                && !gamma_closure(sp, SubsetMask{u}).meets(a))
                in = false;
        if (in)
            r |= SubsetMask::singleton(x);
    }
    return r;
}

std::vector<SubsetMask> masks(const PointSet& x, std::initializer_list<std::initializer_list<std::string_view>> sets)
{
    std::vector<SubsetMask> out;
    for (auto s : sets)
        out.push_back(x.mask_of(s));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(GammaOpen, Example32Family)
{
    Space sp = space_3_2();
    const PointSet& x = sp.ground();
    EXPECT_TRUE(is_gamma_open(sp, x.mask_of({"a", "b"})));
    EXPECT_FALSE(is_gamma_open(sp, x.mask_of({"a"})));
    EXPECT_TRUE(is_gamma_open(sp, SubsetMask{}));
    EXPECT_EQ(gamma_open_family(sp), masks(x, {{}, {"b"}, {"a", "b"}, {"a", "c"}, {"a", "b", "c"}}));
}

TEST(GammaClosed, Example32)
{
    Space sp = space_3_2();
    const PointSet& x = sp.ground();
    EXPECT_TRUE(is_gamma_closed_dual(sp, x.mask_of({"c"})));
    EXPECT_TRUE(is_gamma_closed_dual(sp, x.whole()));
    EXPECT_FALSE(is_gamma_closed_dual(sp, x.mask_of({"b", "c"})));
    EXPECT_TRUE(is_gamma_closed_cl(sp, x.mask_of({"b"})));
    EXPECT_FALSE(is_gamma_closed_cl(sp, x.mask_of({"a", "b"})));
}

TEST(RegularOpen, Example32)
{
    Space sp = space_3_2();
    const PointSet& x = sp.ground();
    EXPECT_FALSE(is_gamma_regular_open(sp, x.mask_of({"a", "b"})));
    EXPECT_TRUE(is_gamma_regular_open(sp, x.mask_of({"b"})));
    EXPECT_EQ(regular_open_family(sp), masks(x, {{}, {"b"}, {"a", "c"}, {"a", "b", "c"}}));
    EXPECT_TRUE(is_gamma_clopen(sp, x.mask_of({"b"})));
}

TEST(RegularOpen, Example35RecomputedFamily)
{
    // gamma = int cl gives gamma({a,b}) = X, so cl_gamma({a,b}) = X and
    // int_gamma(X) = X: {a,b} is gamma-open but not gamma-regular-open.
    Space sp = space_3_5();
    const PointSet& x = sp.ground();
    EXPECT_EQ(gamma_open_family(sp), masks(x, {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}}));
    EXPECT_EQ(gamma_closure(sp, x.mask_of({"a", "b"})), x.whole());
    EXPECT_EQ(regular_open_family(sp), masks(x, {{}, {"a"}, {"b"}, {"a", "b", "c"}}));
    EXPECT_TRUE(is_gamma_regular_open(sp, x.mask_of({"a"})));
    EXPECT_FALSE(is_gamma_clopen(sp, x.mask_of({"a"})));
    EXPECT_FALSE(is_extremally_disconnected(sp));
}

TEST(RegularOpen, TrivialCases)
{
    PointSet x = PointSet::standard(3);
    Space disc(discrete_topology(x), GammaOperation::identity());
    EXPECT_EQ(regular_open_family(disc).size(), 8u);
    for_each_space(3, "builtins,pivots", [](const Space& sp) { EXPECT_TRUE(is_gamma_regular_open(sp, SubsetMask{})); });
}

TEST(ExtremallyDisconnected, IndiscreteIdentity)
{
    Space sp(indiscrete_topology(PointSet::standard(3)), GammaOperation::identity());
    EXPECT_TRUE(is_extremally_disconnected(sp));
}

TEST(ThetaClosure, Example317)
{
    Space sp = space_3_17();
    const PointSet& x = sp.ground();
    const SubsetMask bc = x.mask_of({"b", "c"});
    const SubsetMask th = gamma_theta_closure(sp, bc);
    EXPECT_TRUE(bc.subset_of(th));
    EXPECT_NE(th, bc);
    EXPECT_EQ(th, x.whole());
    // recomputed families: every open set is gamma-open, and {b} is theta-open
    EXPECT_EQ(gamma_open_family(sp), tau_3_2().opens());
    EXPECT_EQ(theta_families(sp).theta_open, masks(x, {{}, {"b"}, {"a", "c"}, {"a", "b", "c"}}));
}

TEST(ThetaClosure, Example316RecomputedFamily)
{
    Space sp = space_3_2();
    const PointSet& x = sp.ground();
    EXPECT_EQ(theta_families(sp).theta_open, masks(x, {{}, {"b"}, {"a", "c"}, {"a", "b", "c"}}));
    EXPECT_FALSE(classify_subset(sp, x.mask_of({"a", "b"}))[Flag::theta_open]);
}

TEST(ThetaClosure, Bounds)
{
    for_each_space(3, "builtins,pivots", [](const Space& sp) {
        EXPECT_EQ(gamma_theta_closure(sp, sp.whole()), sp.whole());
        EXPECT_EQ(gamma_theta_closure(sp, SubsetMask{}), SubsetMask{});
    });
    Space disc(discrete_topology(PointSet::standard(3)), GammaOperation::identity());
    EXPECT_EQ(theta_families(disc).theta_open.size(), 8u);
}

TEST(ThetaClosure, MatchesDefinitionalOracle)
{
    for_each_space(3, "all_tables", [](const Space& sp) {
        for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
            ASSERT_EQ(gamma_theta_closure(sp, SubsetMask{b}), theta_oracle(sp, SubsetMask{b}));
    });
}

TEST(Classification, Example32AndEmptySet)
{
    Space sp = space_3_2();
    const PointSet& x = sp.ground();
    auto ab = classify_subset(sp, x.mask_of({"a", "b"}));
    EXPECT_TRUE(ab[Flag::gamma_open]);
    EXPECT_FALSE(ab[Flag::gamma_regular_open]);
    EXPECT_TRUE(ab.witnesses[static_cast<std::size_t>(Flag::gamma_regular_open)].has_value());

    auto empty = classify_subset(sp, SubsetMask{});
    for (auto f : {Flag::open_tau, Flag::gamma_open, Flag::gamma_regular_open, Flag::theta_open})
        EXPECT_TRUE(empty[f]) << to_string(f);

    auto a = classify_subset(space_3_5(), x.mask_of({"a"}));
    EXPECT_TRUE(a[Flag::gamma_regular_open]);
    EXPECT_FALSE(a[Flag::gamma_clopen]);
}

TEST(Classification, FlagsAgreeWithPredicatesEverywhere)
{
    for_each_space(3, "all_tables", [](const Space& sp) {
        const auto theta = theta_families(sp);
        for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b) {
            const SubsetMask a{b};
            const auto c = classify_subset(sp, a);
            ASSERT_EQ(c[Flag::open_tau], sp.topology().is_open(a));
            ASSERT_EQ(c[Flag::gamma_open], is_gamma_open(sp, a));
            ASSERT_EQ(c[Flag::gamma_closed_dual], is_gamma_closed_dual(sp, a));
            ASSERT_EQ(c[Flag::gamma_closed_cl], is_gamma_closed_cl(sp, a));
            ASSERT_EQ(c[Flag::gamma_regular_open], is_gamma_regular_open(sp, a));
            ASSERT_EQ(c[Flag::gamma_regular_closed], is_gamma_regular_closed(sp, a));
            ASSERT_EQ(c[Flag::gamma_clopen], is_gamma_clopen(sp, a));
            ASSERT_EQ(c[Flag::theta_open], std::binary_search(theta.theta_open.begin(), theta.theta_open.end(), a));
            ASSERT_EQ(c[Flag::theta_closed],
                      std::binary_search(theta.theta_closed.begin(), theta.theta_closed.end(), a));
            for (std::size_t i = 0; i < flag_count; ++i)
                ASSERT_EQ(c.flags[i], !c.witnesses[i].has_value());
        }
    });
}

TEST(SpaceFactsTables, AgreeWithDirectOperators)
{
    for_each_space(3, "builtins,pivots", [](const Space& sp) {
        SpaceFacts f(sp);
        EXPECT_EQ(f.gamma_open, gamma_open_family(sp));
        EXPECT_EQ(f.regular_open, regular_open_family(sp));
        EXPECT_EQ(f.theta_open, theta_families(sp).theta_open);
        EXPECT_EQ(f.extremally_disconnected, is_extremally_disconnected(sp));
    });
}

// Properties over every space on up to three points with every table.

TEST(Properties, DualityExtensivenessMonotonicity)
{
    for_each_space(3, "all_tables", [](const Space& sp) {
        SpaceFacts f(sp);
        const std::uint32_t count = sp.ground().subset_count();
        for (std::uint32_t b = 0; b < count; ++b) {
            const SubsetMask a{b};
            ASSERT_EQ(f.interior(a), sp.complement(f.closure(sp.complement(a))));
            ASSERT_TRUE(f.interior(a).subset_of(a));
            ASSERT_TRUE(a.subset_of(f.closure(a)));
            ASSERT_TRUE(a.subset_of(f.theta_closure(a)));
            for (std::uint32_t c = 0; c < count; ++c)
                if (a.subset_of(SubsetMask{c})) {
                    ASSERT_TRUE(f.interior(a).subset_of(f.interior(SubsetMask{c})));
                    ASSERT_TRUE(f.closure(a).subset_of(f.closure(SubsetMask{c})));
                    ASSERT_TRUE(f.theta_closure(a).subset_of(f.theta_closure(SubsetMask{c})));
                }
        }
    });
}

TEST(Properties, GammaOpenInsideTauAndThetaOpenInsideGammaOpen)
{
    for_each_space(3, "all_tables", [](const Space& sp) {
        SpaceFacts f(sp);
        for (auto u : f.gamma_open)
            ASSERT_TRUE(sp.topology().is_open(u));
        for (auto u : f.theta_open)
            ASSERT_TRUE(f.gamma_open_set(u));
        // cl_gamma sits inside the theta closure
        for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
            ASSERT_TRUE(f.closure(SubsetMask{b}).subset_of(f.theta_closure(SubsetMask{b})));
    });
}

TEST(Properties, GammaOpenFamilyIsClosedUnderUnion)
{
    for_each_space(3, "all_tables", [](const Space& sp) {
        const auto fam = gamma_open_family(sp);
        for (auto u : fam)
            for (auto v : fam)
                ASSERT_TRUE(is_gamma_open(sp, u | v));
    });
}

TEST(Properties, RegularOpenInsideGammaOpenWhenGammaIsOpen)
{
    std::size_t open_spaces = 0;
    for_each_space(3, "all_tables", [&](const Space& sp) {
        SpaceFacts f(sp);
        if (!f.open_operation)
            return;
        ++open_spaces;
        for (auto u : f.regular_open)
            ASSERT_TRUE(f.gamma_open_set(u));
    });
    EXPECT_GT(open_spaces, 0u);
}

TEST(Properties, RegularOpenNotAlwaysGammaOpen)
{
    // discrete tau on {a,b,c}; gamma({b}) = {a,b}, gamma({c}) = {c},
    // gamma({b,c}) = {b,c}, gamma(V) = X for the other nbds of a.
    // cl_gamma({b}) = {a,b} and int_gamma({a,b}) = {b}, while int_gamma({b}) = {}.
    PointSet x = PointSet::standard(3);
    Topology t = discrete_topology(x);
    std::vector<std::pair<SubsetMask, SubsetMask>> table;
    for (auto v : t.opens()) {
        SubsetMask val = v;
        if (v == x.mask_of({"b"}))
            val = x.mask_of({"a", "b"});
        else if (v.contains(0))
            val = x.whole();
        table.emplace_back(v, val);
    }
    Space sp(t, GammaOperation::make_table(table));
    const SubsetMask b = x.mask_of({"b"});
    EXPECT_EQ(gamma_closure(sp, b), x.mask_of({"a", "b"}));
    EXPECT_TRUE(is_gamma_regular_open(sp, b));
    EXPECT_FALSE(is_gamma_open(sp, b));
    EXPECT_FALSE(is_open_operation(sp));
}

TEST(Properties, ClosedNotionsAgreeOnEveryEnumeratedSpace)
{
    for_each_space(3, "all_tables", [](const Space& sp) {
        for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
            ASSERT_EQ(is_gamma_closed_dual(sp, SubsetMask{b}), is_gamma_closed_cl(sp, SubsetMask{b}));
    });
}
