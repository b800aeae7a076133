#pragma once

// Space documents (JSON) and report serialization, both machine-readable
// and as human text tables.

#include "gammatop/theoremlab.hpp"

#include <json.hpp>

#include <sstream>

namespace gammatop {

using json = nlohmann::json;

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline const json& require(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw error(errc::syntax_error, where + ": missing key '" + key + "'");
    return obj.at(key);
}

inline std::string require_string(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw error(errc::syntax_error, where + ": expected a string");
    return j.get<std::string>();
}

inline SubsetMask parse_mask(const PointSet& ground, const json& j, const std::string& where)
{
    if (!j.is_array())
        throw error(errc::syntax_error, where + ": expected a list of labels");
    SubsetMask m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string label = require_string(j[i], where + "/" + std::to_string(i));
        try {
            m |= SubsetMask::singleton(ground.index_of(label));
        }
        catch (const error&) {
            throw error(errc::unknown_label, where + "/" + std::to_string(i) + ": unknown label '" + label + "'");
        }
    }
    return m;
}

inline Branch parse_branch(const json& j, const std::string& where)
{
    const std::string s = require_string(j, where);
    if (s == "id")
        return Branch::identity;
    if (s == "cl")
        return Branch::classical_closure;
    if (s == "intcl")
        return Branch::interior_closure;
    throw error(errc::syntax_error, where + ": branch must be one of id, cl, intcl");
}

} // namespace detail

inline json mask_json(const PointSet& ground, SubsetMask m) { return ground.labels_of(m); }

inline json masks_json(const PointSet& ground, std::span<const SubsetMask> ms)
{
    json out = json::array();
    for (auto m : ms)
        out.push_back(mask_json(ground, m));
    return out;
}

/// Parses the JSON space format: points, opens, gamma.
inline Space parse_space(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e) {
        const std::size_t line = detail::line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
        throw error(errc::syntax_error, "line " + std::to_string(line) + ": " + e.what(), {}, line);
    }
    if (!doc.is_object())
        throw error(errc::syntax_error, "document must be a JSON object", {}, 1);

    const json& points = detail::require(doc, "points", "/");
    if (!points.is_array())
        throw error(errc::syntax_error, "/points: expected a list of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points.size(); ++i)
        labels.push_back(detail::require_string(points[i], "/points/" + std::to_string(i)));
    PointSet ground = [&] {
        try {
            return PointSet(labels);
        }
        catch (const error& e) {
            throw error(errc::syntax_error, std::string("/points: ") + e.what());
        }
    }();

    const json& opens = detail::require(doc, "opens", "/");
    if (!opens.is_array())
        throw error(errc::syntax_error, "/opens: expected a list of open sets");
    std::vector<SubsetMask> family;
    for (std::size_t i = 0; i < opens.size(); ++i)
        family.push_back(detail::parse_mask(ground, opens[i], "/opens/" + std::to_string(i)));

    Topology top = [&] {
        try {
            return validate_topology(ground, family);
        }
        catch (const error& e) {
            throw error(errc::topology_invalid, e.what(), e.witness());
        }
    }();

    const json& gamma = detail::require(doc, "gamma", "/");
    const std::string kind = detail::require_string(detail::require(gamma, "kind", "/gamma"), "/gamma/kind");
    GammaOperation op;
    if (kind == "identity")
        op = GammaOperation::identity();
    else if (kind == "closure")
        op = GammaOperation::classical_closure();
    else if (kind == "int_closure")
        op = GammaOperation::interior_closure();
    else if (kind == "pivot") {
        const std::string pivot = detail::require_string(detail::require(gamma, "pivot", "/gamma"), "/gamma/pivot");
        PointIndex p;
        try {
            p = ground.index_of(pivot);
        }
        catch (const error&) {
            throw error(errc::unknown_label, "/gamma/pivot: unknown label '" + pivot + "'");
        }
        op = GammaOperation::make_pivot(p, detail::parse_branch(detail::require(gamma, "in", "/gamma"), "/gamma/in"),
                                        detail::parse_branch(detail::require(gamma, "out", "/gamma"), "/gamma/out"));
    }
    else if (kind == "table") {
        const json& entries = detail::require(gamma, "entries", "/gamma");
        if (!entries.is_array())
            throw error(errc::syntax_error, "/gamma/entries: expected a list");
        std::vector<std::pair<SubsetMask, SubsetMask>> table;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string where = "/gamma/entries/" + std::to_string(i);
            table.emplace_back(detail::parse_mask(ground, detail::require(entries[i], "open", where), where + "/open"),
                               detail::parse_mask(ground, detail::require(entries[i], "value", where), where + "/value"));
        }
        op = GammaOperation::make_table(std::move(table));
    }
    else {
        throw error(errc::syntax_error,
                    "/gamma/kind: expected identity, closure, int_closure, pivot or table, got '" + kind + "'");
    }
    try {
        return Space(std::move(top), std::move(op));
    }
    catch (const error& e) {
        if (e.code() == errc::table_domain_mismatch)
            throw error(errc::syntax_error, std::string("/gamma/entries: ") + e.what(), e.witness());
        throw;
    }
}

inline json space_json(const Space& sp)
{
    const PointSet& g = sp.ground();
    json gamma;
    const auto& op = sp.gamma();
    switch (op.kind) {
    case GammaKind::identity: gamma["kind"] = "identity"; break;
    case GammaKind::classical_closure: gamma["kind"] = "closure"; break;
    case GammaKind::interior_closure: gamma["kind"] = "int_closure"; break;
    case GammaKind::pivot:
        gamma["kind"] = "pivot";
        gamma["pivot"] = g.label(op.pivot);
        gamma["in"] = to_string(op.in_branch);
        gamma["out"] = to_string(op.out_branch);
        break;
    case GammaKind::table: {
        gamma["kind"] = "table";
        json entries = json::array();
        for (std::size_t i = 0; i < sp.topology().opens().size(); ++i)
            entries.push_back({{"open", mask_json(g, sp.topology().opens()[i])}, {"value", mask_json(g, sp.values()[i])}});
        gamma["entries"] = entries;
        break;
    }
    }
    return {{"points", g.labels()}, {"opens", masks_json(g, sp.topology().opens())}, {"gamma", gamma}};
}

inline std::string serialize_space(const Space& sp) { return space_json(sp).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Reports

inline json filterbase_json(const PointSet& g, const Filterbase& fb) { return masks_json(g, fb.members()); }

inline json net_json(const PointSet& g, const Net& net)
{
    json above = json::array();
    json at = json::array();
    for (std::size_t i = 0; i < net.dir.size(); ++i) {
        above.push_back(net.dir.above(i));
        at.push_back(g.label(net.at[i]));
    }
    return {{"above", above}, {"at", at}};
}

inline json witness_json(const PointSet& g, const Witness& w)
{
    json j = json::object();
    if (!w.subsets.empty())
        j["subsets"] = masks_json(g, w.subsets);
    if (!w.points.empty()) {
        json pts = json::array();
        for (auto p : w.points)
            pts.push_back(g.label(p));
        j["points"] = pts;
    }
    if (!w.filterbases.empty()) {
        json fbs = json::array();
        for (const auto& fb : w.filterbases)
            fbs.push_back(filterbase_json(g, fb));
        j["filterbases"] = fbs;
    }
    if (w.net)
        j["net"] = net_json(g, *w.net);
    if (!w.detail.empty())
        j["detail"] = w.detail;
    return j;
}

inline json verdict_json(const PointSet& g, const Verdict& v)
{
    json j = {{"claim", std::string(to_string(v.claim))}, {"status", to_string(v.status)}, {"notes", v.notes}};
    if (v.witness)
        j["witness"] = witness_json(g, *v.witness);
    return j;
}

inline json ref_json(const SpaceRef& r)
{
    return {{"points", r.points}, {"topology_index", r.topology_index}, {"operation_index", r.operation_index}};
}

inline json suite_json(const Space& sp, const SuiteReport& r)
{
    json verdicts = json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(verdict_json(sp.ground(), v));
    return {{"space", space_json(sp)},
            {"open_operation", r.open_operation},
            {"regular_operation", r.regular_operation},
            {"extremally_disconnected", r.extremally_disconnected},
            {"verdicts", verdicts}};
}

inline json invariants_json(const InvariantTally& t)
{
    return {{"violations",
             {{"duality", t.duality},
              {"interior_extensive", t.interior_extensive},
              {"closure_extensive", t.closure_extensive},
              {"theta_extensive", t.theta_extensive},
              {"interior_monotone", t.interior_monotone},
              {"closure_monotone", t.closure_monotone},
              {"theta_monotone", t.theta_monotone},
              {"regular_open_in_gamma_open", t.ro_in_gamma_open},
              {"gamma_open_in_tau", t.gamma_open_in_tau},
              {"theta_open_in_gamma_open", t.theta_open_in_gamma_open}}},
            {"measured",
             {{"closure_not_idempotent_spaces", t.closure_not_idempotent_spaces},
              {"closed_notions_disagree_subsets", t.closed_notions_disagree},
              {"closure_not_in_theta_closure_subsets", t.closure_not_in_theta_closure}}}};
}

inline json sweep_json(const SweepReport& r)
{
    json tallies = json::object();
    for (std::size_t i = 0; i < r.claims.size(); ++i)
        tallies[std::string(to_string(r.claims[i]))] = {{"holds", r.tallies[i].holds},
                                                        {"fails", r.tallies[i].fails},
                                                        {"hypotheses_not_met", r.tallies[i].hypotheses_not_met},
                                                        {"safe", is_safe_claim(r.claims[i])}};
    json per_size = json::object();
    for (auto [n, c] : r.per_size)
        per_size[std::to_string(n)] = {{"topologies", c.first}, {"spaces", c.second}};
    json examples = json::array();
    for (const auto& e : r.examples)
        examples.push_back({{"ref", ref_json(e.ref)},
                            {"space", space_json(e.space)},
                            {"verdict", verdict_json(e.space.ground(), e.verdict)}});
    return {{"sizes", r.sizes},
            {"mode", r.mode},
            {"topologies", r.topologies},
            {"spaces", r.spaces},
            {"per_size", per_size},
            {"tallies", tallies},
            {"examples", examples},
            {"failures_confirmed", r.failures_confirmed},
            {"failures_unconfirmed", r.failures_unconfirmed},
            {"safe_claim_failures", r.safe_claim_failures()},
            {"open_operation_spaces", r.open_operation_spaces},
            {"extremally_disconnected_spaces", r.extremally_disconnected_spaces},
            {"open_and_extremally_disconnected_spaces", r.open_and_ed_spaces},
            {"invariants", invariants_json(r.invariants)}};
}

inline json mine_json(const MineResult& m)
{
    json hits = json::array();
    for (const auto& h : m.hits)
        hits.push_back({{"ref", ref_json(h.ref)},
                        {"space", space_json(h.space)},
                        {"witness", witness_json(h.space.ground(), h.witness)}});
    return {{"predicate", m.predicate}, {"points", m.points},  {"mode", m.mode},
            {"topologies", m.topologies}, {"spaces", m.spaces}, {"hit_count", m.hits.size()},
            {"hits", hits}};
}

inline json family_audit_json(const PointSet& g, const FamilyAudit& f)
{
    return {{"family", f.name},
            {"printed", masks_json(g, f.printed)},
            {"recomputed", masks_json(g, f.recomputed)},
            {"missing_from_recomputed", masks_json(g, f.missing)},
            {"not_printed", masks_json(g, f.unexpected)},
            {"matches", f.matches()}};
}

inline json audit_json(const AuditReport& r)
{
    const PointSet& g = r.space.ground();
    json fams = json::array(), tau = json::array(), checks = json::array();
    for (const auto& f : r.families)
        fams.push_back(family_audit_json(g, f));
    for (const auto& f : r.tau_open_comparison)
        tau.push_back(family_audit_json(g, f));
    for (const auto& c : r.checks)
        checks.push_back({{"statement", c.statement}, {"holds", c.holds}});
    json j = {{"example", r.example}, {"space", space_json(r.space)}, {"families", fams},
              {"checks", checks},     {"tau_open_comparison", tau},   {"notes", r.notes}};
    if (r.miner) {
        json m = {{"predicate", r.miner->predicate}, {"points", r.miner->points}, {"mode", r.miner->mode},
                  {"spaces", r.miner->spaces},       {"hit_count", r.miner->hits.size()}};
        if (r.miner->hits.empty())
            m["verdict"] = "certified absent";
        else {
            const auto& h = r.miner->hits.front();
            m["verdict"] = "realizable";
            m["first_witness"] = {{"ref", ref_json(h.ref)},
                                  {"space", space_json(h.space)},
                                  {"witness", witness_json(h.space.ground(), h.witness)}};
        }
        j["miner"] = m;
    }
    return j;
}

inline json bridge_json(const BridgeReport& r)
{
    json pairings = json::array();
    json satisfying = json::array();
    for (const auto& p : r.pairings) {
        json sts = json::array();
        for (const auto& s : p.statements) {
            json sj = {{"statement", s.name}, {"checked", s.checked}, {"failures", s.failures}};
            if (s.first_failure)
                sj["first_failure"] = {{"ref", ref_json(s.first_failure->ref)},
                                       {"space", space_json(s.first_failure->space)},
                                       {"verdict", verdict_json(s.first_failure->space.ground(), s.first_failure->verdict)}};
            sts.push_back(sj);
        }
        pairings.push_back({{"semantics", to_string(p.semantics)}, {"satisfied", p.satisfied()}, {"statements", sts}});
        if (p.satisfied())
            satisfying.push_back(to_string(p.semantics));
    }
    return {{"sizes", r.sizes},
            {"mode", r.mode},
            {"max_net_index_size", r.max_net_index_size},
            {"spaces", r.spaces},
            {"pairings", pairings},
            {"satisfying_pairings", satisfying},
            {"tail_convention", "tails {x_i : i >= j}"}};
}

struct AnalysisReport {
    Space space;
    std::vector<SubsetMask> opens, gamma_open, regular_open, theta_open, theta_closed;
    bool extremally_disconnected = false;
    bool regular_operation = false;
    bool open_operation = false;
    std::optional<SubsetMask> closure_not_idempotent_at;
    std::vector<SubsetClassification> classifications;
};

inline AnalysisReport analyze(const Space& sp)
{
    SpaceFacts f(sp);
    AnalysisReport r{sp, sp.topology().opens(), f.gamma_open, f.regular_open, f.theta_open, f.theta_closed};
    r.extremally_disconnected = f.extremally_disconnected;
    r.regular_operation = is_regular_operation(sp);
    r.open_operation = f.open_operation;
    r.closure_not_idempotent_at = closure_idempotence_failure(f);
    for (std::uint32_t b = 0; b < sp.ground().subset_count(); ++b)
        r.classifications.push_back(classify_subset(sp, f.theta_tests, SubsetMask{b}));
    return r;
}

inline json analysis_json(const AnalysisReport& r)
{
    const PointSet& g = r.space.ground();
    json table = json::array();
    for (const auto& c : r.classifications) {
        json flags = json::object(), witnesses = json::object();
        for (std::size_t i = 0; i < flag_count; ++i) {
            flags[to_string(static_cast<Flag>(i))] = c.flags[i];
            if (c.witnesses[i])
                witnesses[to_string(static_cast<Flag>(i))] = g.label(*c.witnesses[i]);
        }
        table.push_back({{"subset", mask_json(g, c.subset)}, {"flags", flags}, {"witnesses", witnesses}});
    }
    json j = {{"space", space_json(r.space)},
              {"opens", masks_json(g, r.opens)},
              {"gamma_open", masks_json(g, r.gamma_open)},
              {"gamma_regular_open", masks_json(g, r.regular_open)},
              {"theta_open", masks_json(g, r.theta_open)},
              {"theta_closed", masks_json(g, r.theta_closed)},
              {"extremally_disconnected", r.extremally_disconnected},
              {"regular_operation", r.regular_operation},
              {"open_operation", r.open_operation},
              {"closure_idempotent", !r.closure_not_idempotent_at.has_value()},
              {"classification", table}};
    if (r.closure_not_idempotent_at)
        j["closure_not_idempotent_at"] = mask_json(g, *r.closure_not_idempotent_at);
    return j;
}

// ---------------------------------------------------------------------------
// Human text

namespace detail {
inline std::string family_text(const PointSet& g, std::span<const SubsetMask> ms)
{
    std::string s = "{";
    for (std::size_t i = 0; i < ms.size(); ++i)
        s += (i ? ", " : "") + g.format(ms[i]);
    return s + "}";
}
} // namespace detail

inline std::string analysis_text(const AnalysisReport& r)
{
    const PointSet& g = r.space.ground();
    std::ostringstream out;
    out << "gamma                    " << r.space.gamma().describe(g) << "\n";
    out << "opens                    " << detail::family_text(g, r.opens) << "\n";
    out << "gamma-open               " << detail::family_text(g, r.gamma_open) << "\n";
    out << "gamma-regular-open       " << detail::family_text(g, r.regular_open) << "\n";
    out << "gamma-theta-open         " << detail::family_text(g, r.theta_open) << "\n";
    out << "gamma-theta-closed       " << detail::family_text(g, r.theta_closed) << "\n";
    out << "extremally disconnected  " << (r.extremally_disconnected ? "yes" : "no") << "\n";
    out << "regular operation        " << (r.regular_operation ? "yes" : "no") << "\n";
    out << "open operation           " << (r.open_operation ? "yes" : "no") << "\n";
    out << "cl_gamma idempotent      "
        << (r.closure_not_idempotent_at ? "no (at " + g.format(*r.closure_not_idempotent_at) + ")" : std::string("yes"))
        << "\n\n";
    out << "subset";
    std::size_t width = 2 * g.size() + 4;
    out << std::string(width > 6 ? width - 6 : 1, ' ');
    for (std::size_t i = 0; i < flag_count; ++i)
        out << " " << to_string(static_cast<Flag>(i));
    out << "\n";
    for (const auto& c : r.classifications) {
        std::string name = g.format(c.subset);
        out << name << std::string(width > name.size() ? width - name.size() : 1, ' ');
        for (std::size_t i = 0; i < flag_count; ++i) {
            std::string cell = c.flags[i] ? "y" : "-";
            std::string head = to_string(static_cast<Flag>(i));
            out << " " << cell << std::string(head.size() - 1, ' ');
        }
        out << "\n";
    }
    return out.str();
}

inline std::string witness_text(const PointSet& g, const Witness& w)
{
    std::string s;
    if (!w.subsets.empty())
        s += "subsets " + detail::family_text(g, w.subsets);
    if (!w.points.empty()) {
        s += s.empty() ? "" : "; ";
        s += "points";
        for (auto p : w.points)
            s += " " + g.label(p);
    }
    for (const auto& fb : w.filterbases)
        s += (s.empty() ? "" : "; ") + std::string("filterbase ") + detail::family_text(g, fb.members());
    if (w.net) {
        s += s.empty() ? "" : "; ";
        s += "net";
        for (auto p : w.net->at)
            s += " " + g.label(p);
    }
    if (!w.detail.empty())
        s += (s.empty() ? "" : "; ") + w.detail;
    return s;
}

inline std::string suite_text(const Space& sp, const SuiteReport& r)
{
    std::ostringstream out;
    out << "gamma " << sp.gamma().describe(sp.ground()) << "; open operation " << (r.open_operation ? "yes" : "no")
        << "; regular operation " << (r.regular_operation ? "yes" : "no") << "; extremally disconnected "
        << (r.extremally_disconnected ? "yes" : "no") << "\n";
    for (const auto& v : r.verdicts) {
        std::string name(to_string(v.claim));
        out << name << std::string(16 - std::min<std::size_t>(15, name.size()), ' ') << to_string(v.status);
        if (v.witness)
            out << "  [" << witness_text(sp.ground(), *v.witness) << "]";
        out << "\n";
        for (const auto& n : v.notes)
            out << "                  note: " << n << "\n";
    }
    return out.str();
}

inline std::string sweep_text(const SweepReport& r)
{
    std::ostringstream out;
    out << "sizes";
    for (auto n : r.sizes)
        out << " " << n;
    out << "; operations " << r.mode << "; " << r.topologies << " topologies, " << r.spaces << " spaces\n";
    out << "claim            holds    fails    hyp-unmet  safe\n";
    for (std::size_t i = 0; i < r.claims.size(); ++i) {
        std::string name(to_string(r.claims[i]));
        char line[128];
        std::snprintf(line, sizeof line, "%-16s %-8zu %-8zu %-10zu %s\n", name.c_str(), r.tallies[i].holds,
                      r.tallies[i].fails, r.tallies[i].hypotheses_not_met, is_safe_claim(r.claims[i]) ? "yes" : "");
        out << line;
    }
    out << "safe-claim failures: " << r.safe_claim_failures() << "\n";
    out << "failures with confirmed witnesses: " << r.failures_confirmed << " (unconfirmed " << r.failures_unconfirmed
        << ")\n";
    const auto& t = r.invariants;
    out << "structural invariant violations: " << t.violations() << " (regular-open not gamma-open: "
        << t.ro_in_gamma_open << ", theta-open not gamma-open: " << t.theta_open_in_gamma_open << ")\n";
    out << "cl_gamma not idempotent on " << t.closure_not_idempotent_spaces << " spaces\n";
    for (const auto& e : r.examples) {
        out << "  " << to_string(e.verdict.claim) << " fails on n=" << e.ref.points << " topology #"
            << e.ref.topology_index << " op #" << e.ref.operation_index << " ("
            << e.space.gamma().describe(e.space.ground()) << "): "
            << witness_text(e.space.ground(), *e.verdict.witness) << "\n";
    }
    return out.str();
}

inline std::string mine_text(const MineResult& m)
{
    std::ostringstream out;
    out << m.predicate << " on " << m.points << " points, operations " << m.mode << ": " << m.hits.size()
        << " hits over " << m.spaces << " spaces\n";
    for (const auto& h : m.hits) {
        const PointSet& g = h.space.ground();
        out << "  topology #" << h.ref.topology_index << " " << detail::family_text(g, h.space.topology().opens())
            << " op #" << h.ref.operation_index << " " << h.space.gamma().describe(g) << ": "
            << witness_text(g, h.witness) << "\n";
    }
    return out.str();
}

inline std::string audit_text(const AuditReport& r)
{
    const PointSet& g = r.space.ground();
    std::ostringstream out;
    out << "example " << r.example << ": gamma " << r.space.gamma().describe(g) << ", opens "
        << detail::family_text(g, r.space.topology().opens()) << "\n";
    auto fam = [&](const FamilyAudit& f) {
        out << "  " << f.name << (f.matches() ? "  matches" : "  DIFFERS") << "\n";
        out << "    printed     " << detail::family_text(g, f.printed) << "\n";
        out << "    recomputed  " << detail::family_text(g, f.recomputed) << "\n";
        if (!f.missing.empty())
            out << "    printed but not recomputed  " << detail::family_text(g, f.missing) << "\n";
        if (!f.unexpected.empty())
            out << "    recomputed but not printed  " << detail::family_text(g, f.unexpected) << "\n";
    };
    for (const auto& f : r.families)
        fam(f);
    for (const auto& c : r.checks)
        out << "  " << (c.holds ? "[holds] " : "[fails] ") << c.statement << "\n";
    if (!r.tau_open_comparison.empty()) {
        out << "  comparison with tau-open theta neighbourhoods:\n";
        for (const auto& f : r.tau_open_comparison)
            fam(f);
    }
    if (r.miner) {
        out << "  miner " << r.miner->predicate << " (" << r.miner->points << " points, " << r.miner->mode << "): ";
        if (r.miner->hits.empty())
            out << "certified absent over " << r.miner->spaces << " spaces\n";
        else {
            const auto& h = r.miner->hits.front();
            out << r.miner->hits.size() << " witnesses over " << r.miner->spaces << " spaces; first: "
                << detail::family_text(h.space.ground(), h.space.topology().opens()) << " "
                << h.space.gamma().describe(h.space.ground()) << " " << witness_text(h.space.ground(), h.witness)
                << "\n";
        }
    }
    return out.str();
}

inline std::string bridge_text(const BridgeReport& r)
{
    std::ostringstream out;
    out << "net/filterbase bridge over " << r.spaces << " spaces, nets on directed sets of size <= "
        << r.max_net_index_size << ", tails {x_i : i >= j}\n";
    for (const auto& p : r.pairings) {
        out << "  " << to_string(p.semantics) << (p.satisfied() ? "  satisfied" : "  fails") << "\n";
        for (const auto& s : p.statements) {
            out << "    " << s.name << ": " << s.failures << "/" << s.checked << " failures\n";
            if (s.first_failure)
                out << "      first: "
                    << witness_text(s.first_failure->space.ground(), *s.first_failure->verdict.witness) << "\n";
        }
    }
    return out.str();
}

} // namespace gammatop
