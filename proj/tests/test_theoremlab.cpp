#include "gammatop/document.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace gammatop;

namespace {

std::vector<std::uint32_t> value_bits(const Space& sp)
{
    std::vector<std::uint32_t> v;
    for (auto m : sp.values())
        v.push_back(m.bits);
    return v;
}

// (topology index, gamma values, witness subsets) identifies a hit
// independently of the operation index, which shifts between modes.
using HitKey = std::tuple<std::size_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

std::set<HitKey> hit_keys(const MineResult& r)
{
    std::set<HitKey> out;
    for (const auto& h : r.hits) {
        std::vector<std::uint32_t> w;
        for (auto s : h.witness.subsets)
            w.push_back(s.bits);
        out.emplace(h.ref.topology_index, value_bits(h.space), w);
    }
    return out;
}

bool contains_hit(const MineResult& r, const Space& sp, SubsetMask a)
{
    for (const auto& h : r.hits)
        if (h.space.extensionally_equal(sp) && h.witness.subsets == std::vector<SubsetMask>{a})
            return true;
    return false;
}

struct ThreadEnv {
    explicit ThreadEnv(const char* v) { setenv("GAMMA_TOP_THREADS", v, 1); }
    ~ThreadEnv() { unsetenv("GAMMA_TOP_THREADS"); }
};

} // namespace

TEST(Catalog, TwentyFourUniqueClaims)
{
    const auto all = all_claims();
    ASSERT_EQ(all.size(), 24u);
    std::set<std::string> names;
    for (auto id : all) {
        names.insert(std::string(to_string(id)));
        EXPECT_EQ(parse_claim(to_string(id)), id);
    }
    EXPECT_EQ(names.size(), 24u);
    EXPECT_FALSE(parse_claim("C-NOPE").has_value());
    EXPECT_EQ(safe_claims().size(), 8u);
    EXPECT_EQ(safe_claims().size() + hypothesis_claims().size(), 24u - 6u);
}

TEST(Catalog, HypothesesOfConditionedClaims)
{
    EXPECT_TRUE(info(ClaimId::t3_7).hypotheses.extremally_disconnected);
    EXPECT_TRUE(info(ClaimId::t3_9_fwd).hypotheses.open_operation);
    EXPECT_FALSE(info(ClaimId::t3_9_fwd).hypotheses.extremally_disconnected);
    EXPECT_TRUE(info(ClaimId::t3_14).hypotheses.open_operation && info(ClaimId::t3_14).hypotheses.extremally_disconnected);
    for (auto id : safe_claims())
        EXPECT_TRUE(is_safe_claim(id));
}

TEST(Suite, Example32HasTwentyFourVerdicts)
{
    const Space sp = example_space("3.2");
    const auto r = run_suite(sp);
    EXPECT_EQ(r.verdicts.size(), 24u);
    EXPECT_EQ(check_claim(sp, ClaimId::ro_incl).status, Status::holds);
}

TEST(Suite, Example35HypothesesNotMet)
{
    const Space sp = example_space("3.5");
    EXPECT_EQ(check_claim(sp, ClaimId::p3_4_conv).status, Status::hypotheses_not_met);
    EXPECT_EQ(check_claim(sp, ClaimId::t3_8).status, Status::hypotheses_not_met);
}

TEST(Suite, IdentityGammaSatisfiesT36)
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n))
            EXPECT_EQ(check_claim(Space(t, GammaOperation::identity()), ClaimId::t3_6).status, Status::holds);
}

TEST(Suite, IndiscreteIdentityFailsOnlyT39Fwd)
{
    // cl({a}) = X is regular-open yet {a} is not open: the forward half of
    // T3.9 cannot hold for arbitrary A.
    const Space sp(indiscrete_topology(PointSet::standard(3)), GammaOperation::identity());
    for (const auto& v : run_suite(sp).verdicts) {
        if (v.claim == ClaimId::t3_9_fwd) {
            ASSERT_EQ(v.status, Status::fails);
            EXPECT_TRUE(confirm_failure(sp, v));
        }
        else
            EXPECT_NE(v.status, Status::fails) << to_string(v.claim);
    }
}

TEST(Suite, VerdictsAreReproducible)
{
    const Space sp = example_space("3.17");
    EXPECT_TRUE(run_suite(sp).verdicts == run_suite(sp).verdicts);
}

TEST(Witnesses, EveryFailureIsRecomputable)
{
    SweepOptions opt;
    opt.sizes = {1, 2, 3};
    opt.mode = OperationMode::parse("builtins,pivots");
    opt.max_examples = 1000000;
    opt.check_invariants = false;
    const auto r = sweep(opt);
    EXPECT_EQ(r.failures_unconfirmed, 0u);
    std::size_t failures = 0;
    for (const auto& t : r.tallies)
        failures += t.fails;
    ASSERT_EQ(r.examples.size(), failures);
    for (const auto& e : r.examples) {
        ASSERT_TRUE(e.verdict.witness.has_value());
        ClaimContext ctx(e.space);
        EXPECT_FALSE(instance_holds(ctx, e.verdict.claim, *e.verdict.witness)) << to_string(e.verdict.claim);
        EXPECT_TRUE(confirm_failure(e.space, e.verdict));
        // rebuilt from its serialized document, the space gives the same verdict
        const Space again = parse_space(serialize_space(e.space));
        EXPECT_TRUE(check_claim(again, e.verdict.claim) == e.verdict);
    }
}

TEST(Witnesses, TamperedWitnessIsRejected)
{
    Verdict v = check_claim(example_space("3.2"), ClaimId::ro_incl);
    ASSERT_EQ(v.status, Status::holds);
    v.status = Status::fails;
    v.witness = Witness{{SubsetMask{0b010}}};
    EXPECT_FALSE(confirm_failure(example_space("3.2"), v));
}

TEST(Sweep, DeterministicAcrossWorkerCounts)
{
    SweepOptions opt;
    opt.sizes = {1, 2, 3};
    opt.mode = OperationMode::parse("builtins,pivots");
    std::string one, four;
    {
        ThreadEnv env("1");
        one = sweep_json(sweep(opt)).dump();
    }
    {
        ThreadEnv env("4");
        four = sweep_json(sweep(opt)).dump();
    }
    EXPECT_EQ(one, four);
}

TEST(Sweep, StructuralInvariantsAndConditionalInclusion)
{
    SweepOptions opt;
    opt.sizes = {1, 2, 3};
    opt.mode = OperationMode::parse("all_tables");
    const auto r = sweep(opt);
    EXPECT_EQ(r.spaces, 9086u);
    const auto& t = r.invariants;
    EXPECT_EQ(t.duality + t.interior_extensive + t.closure_extensive + t.theta_extensive, 0u);
    EXPECT_EQ(t.interior_monotone + t.closure_monotone + t.theta_monotone, 0u);
    EXPECT_EQ(t.gamma_open_in_tau + t.theta_open_in_gamma_open, 0u);
    EXPECT_EQ(t.closed_notions_disagree, 0u);
    EXPECT_EQ(t.closure_not_in_theta_closure, 0u);
    // The regular-open inclusion is the one invariant that needs more than
    // expansiveness; every violating space has a non-open gamma.
    EXPECT_GT(t.ro_in_gamma_open, 0u);
    EXPECT_EQ(r.tally(ClaimId::ro_incl).fails, 576u);
    EXPECT_EQ(r.failures_unconfirmed, 0u);
    for (auto id : {ClaimId::t3_6, ClaimId::p3_13_1, ClaimId::p3_13_2, ClaimId::t4_3, ClaimId::t4_4, ClaimId::t4_5,
                    ClaimId::p4_7_eq})
        EXPECT_EQ(r.tally(id).fails, 0u) << to_string(id);
}

TEST(Sweep, RegularOpenInclusionHoldsForOpenOperations)
{
    std::size_t open_spaces = 0;
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_topologies(n))
            for (const auto& op : enumerate_gamma_operations(t, OperationMode::parse("all_tables"))) {
                const Space sp(t, op);
                ClaimContext ctx(sp);
                if (!ctx.facts().open_operation)
                    continue;
                ++open_spaces;
                ASSERT_EQ(check_claim(ctx, ClaimId::ro_incl).status, Status::holds);
            }
    EXPECT_GT(open_spaces, 0u);
}

TEST(Mine, Example32SeparationIsFound)
{
    const auto r = mine(3, OperationMode::parse("builtins,pivots"), parse_predicate("open-not-regular-open"));
    const Space sp = example_space("3.2");
    EXPECT_TRUE(contains_hit(r, sp, sp.ground().mask_of({"a", "b"})));
}

TEST(Mine, Example35SeparationIsFound)
{
    const auto r = mine(3, OperationMode::parse("builtins"), parse_predicate("regular-open-not-clopen"));
    const Space sp = example_space("3.5");
    EXPECT_TRUE(contains_hit(r, sp, sp.ground().mask_of({"a"})));
}

TEST(Mine, ThetaOpenNotRegularOpenIsRealizableOnThreePoints)
{
    const auto r = mine(3, OperationMode::parse("all_tables"), parse_predicate("theta-open-not-regular-open"));
    EXPECT_EQ(r.spaces, 9048u);
    ASSERT_FALSE(r.hits.empty());
    for (const auto& h : r.hits) {
        SpaceFacts f(h.space);
        ASSERT_TRUE(separates(f, Separation::theta_open_not_regular_open, h.witness.subsets.front()));
    }
}

TEST(Mine, SupersetStable)
{
    for (const char* pred : {"open-not-regular-open", "open-not-theta-open", "C-T3.7", "C-RO-INCL"}) {
        const auto p = parse_predicate(pred);
        const auto small = hit_keys(mine(3, OperationMode::parse("builtins"), p));
        const auto mid = hit_keys(mine(3, OperationMode::parse("builtins,pivots"), p));
        const auto big = hit_keys(mine(3, OperationMode::parse("builtins,pivots,all_tables"), p));
        EXPECT_TRUE(std::includes(mid.begin(), mid.end(), small.begin(), small.end())) << pred;
        EXPECT_TRUE(std::includes(big.begin(), big.end(), mid.begin(), mid.end())) << pred;
    }
}

TEST(Mine, Errors)
{
    try {
        parse_predicate("nonsense");
        FAIL();
    }
    catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unknown_predicate);
    }
    EXPECT_EQ(parse_predicate("claim:C-T3.6").claim, ClaimId::t3_6);
    EXPECT_THROW(mine(5, OperationMode::parse("builtins"), parse_predicate("C-T3.6")), error);
    EXPECT_THROW(mine(4, OperationMode::parse("all_tables"), parse_predicate("C-T3.6")), error);
}

TEST(Audit, Example32MatchesExactly)
{
    const auto r = audit_example("3.2");
    for (const auto& f : r.families)
        EXPECT_TRUE(f.matches()) << f.name;
    for (const auto& c : r.checks)
        EXPECT_TRUE(c.holds) << c.statement;
}

TEST(Audit, Example35RegularOpenFamilyDiffers)
{
    const auto r = audit_example("3.5");
    ASSERT_EQ(r.families.size(), 2u);
    EXPECT_TRUE(r.families[0].matches());
    EXPECT_FALSE(r.families[1].matches());
    EXPECT_EQ(r.families[1].missing, std::vector<SubsetMask>{r.space.ground().mask_of({"a", "b"})});
    for (const auto& c : r.checks)
        EXPECT_TRUE(c.holds) << c.statement;
}

TEST(Audit, Example317SeparationHoldsOnRecomputedFamilies)
{
    const auto r = audit_example("3.17");
    EXPECT_FALSE(r.families[0].matches());
    EXPECT_TRUE(r.checks.at(0).holds);
    EXPECT_TRUE(r.checks.at(1).holds);
}

TEST(Audit, Example316MinerGivesDefinitiveVerdict)
{
    const auto r = audit_example("3.16");
    ASSERT_TRUE(r.miner.has_value());
    EXPECT_EQ(r.miner->spaces, 9048u);
    EXPECT_FALSE(r.miner->hits.empty());
    EXPECT_THROW(audit_example("3.99"), error);
}

TEST(Bridge, DeterministicAndCoversFourPairings)
{
    const auto a = bridge_report({1, 2}, OperationMode::parse("builtins,pivots"), 3);
    const auto b = bridge_report({1, 2}, OperationMode::parse("builtins,pivots"), 3);
    ASSERT_EQ(a.pairings.size(), 4u);
    EXPECT_EQ(bridge_json(a).dump(), bridge_json(b).dump());
    for (const auto& p : a.pairings)
        for (const auto& s : p.statements) {
            EXPECT_GT(s.checked, 0u);
            EXPECT_EQ(s.failures > 0, s.first_failure.has_value());
        }
}

TEST(Bridge, FailureWitnessesAreFailingInstances)
{
    const auto r = bridge_report({1, 2}, OperationMode::parse("all_tables"), 3);
    std::size_t seen = 0;
    for (const auto& p : r.pairings)
        for (const auto& s : p.statements)
            if (s.first_failure) {
                ++seen;
                EXPECT_TRUE(confirm_failing_instance(s.first_failure->space, s.first_failure->verdict,
                                                     SuiteOptions{p.semantics, r.max_net_index_size}))
                    << to_string(p.semantics) << " " << s.name;
            }
    EXPECT_GT(seen, 0u);
}
