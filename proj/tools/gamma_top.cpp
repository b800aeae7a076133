// gamma-top: analyze, verify, mine and audit finite gamma-spaces.

#include "gammatop/document.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace gammatop;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_input = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw error(errc::syntax_error, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Space load_space(const std::string& path)
{
    try {
        return parse_space(read_file(path));
    }
    catch (const error& e) {
        throw error(e.code(), path + ": " + e.what(), e.witness(), e.line());
    }
}

void emit(const std::string& format, const json& machine, const std::string& text)
{
    if (format == "machine")
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<ClaimId> parse_claims(const std::string& list)
{
    std::vector<ClaimId> out;
    std::stringstream s(list);
    for (std::string item; std::getline(s, item, ',');) {
        if (item.empty())
            continue;
        auto id = parse_claim(item);
        if (!id)
            throw error(errc::unknown_predicate, "unknown claim '" + item + "'");
        out.push_back(*id);
    }
    return out;
}

struct SemanticsFlags {
    std::string nbds = "gamma_open_closure";
    std::string accumulation = "standard";
    std::string closed_sets = "dual";

    void add(CLI::App* cmd)
    {
        cmd->add_option("--net-nbds", nbds, "net neighbourhoods")
            ->check(CLI::IsMember({"regular_open", "gamma_open_closure"}));
        cmd->add_option("--accumulation", accumulation, "net accumulation")
            ->check(CLI::IsMember({"standard", "literal"}));
        cmd->add_option("--closed-sets", closed_sets, "gamma-closed notion for the closed-space conditions")
            ->check(CLI::IsMember({"dual", "cl_fixed"}));
    }

    SuiteOptions options() const
    {
        SuiteOptions o;
        o.net_semantics.nbds = nbds == "regular_open" ? NetNbds::regular_open : NetNbds::gamma_open_closure;
        o.net_semantics.accumulation = accumulation == "literal" ? Accumulation::literal : Accumulation::standard;
        o.closed_sets = closed_sets == "cl_fixed" ? ClosedSets::cl_fixed : ClosedSets::dual;
        return o;
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite gamma-space analysis"};
    app.require_subcommand(1);
    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text or machine (key-sorted JSON)")
            ->check(CLI::IsMember({"text", "machine"}));
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "families, flags and subset classification of one space");
    std::string analyze_file;
    analyze_cmd->add_option("file", analyze_file, "space document")->required();
    add_format(analyze_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run the claim suite on one space or an enumeration");
    std::string verify_file;
    std::size_t enumerate_n = 0;
    std::string verify_ops = "builtins,pivots";
    std::string claims_list;
    std::size_t max_examples = 3;
    SemanticsFlags verify_sem;
    auto* file_opt = verify_cmd->add_option("file", verify_file, "space document");
    auto* enum_opt = verify_cmd->add_option("--enumerate", enumerate_n, "every space on 1..N points");
    file_opt->excludes(enum_opt);
    verify_cmd->add_option("--ops", verify_ops, "builtins,pivots,all_tables");
    verify_cmd->add_option("--claims", claims_list, "comma-separated claim ids (default: all)");
    verify_cmd->add_option("--examples", max_examples, "failure examples kept per claim");
    verify_sem.add(verify_cmd);
    add_format(verify_cmd);

    auto* mine_cmd = app.add_subcommand("mine", "search every space on n points for witnesses");
    std::size_t mine_n = 0;
    std::string mine_ops;
    std::string predicate;
    SemanticsFlags mine_sem;
    mine_cmd->add_option("--n", mine_n, "number of points")->required();
    mine_cmd->add_option("--ops", mine_ops, "builtins,pivots,all_tables")->required();
    mine_cmd->add_option("--predicate", predicate, "separation name or claim id")->required();
    mine_sem.add(mine_cmd);
    add_format(mine_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "recompute a worked example and diff it");
    std::string example;
    audit_cmd->add_option("--example", example, "3.2, 3.5, 3.16 or 3.17")->required();
    add_format(audit_cmd);

    auto* bridge_cmd = app.add_subcommand("bridge", "net/filterbase convergence under every definitional pairing");
    std::size_t bridge_n = 3;
    std::string bridge_ops = "all_tables";
    std::size_t bridge_index = 3;
    bridge_cmd->add_option("--n", bridge_n, "every space on 1..N points");
    bridge_cmd->add_option("--ops", bridge_ops, "builtins,pivots,all_tables");
    bridge_cmd->add_option("--max-index", bridge_index, "largest directed set");
    add_format(bridge_cmd);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    auto sizes_upto = [](std::size_t n) {
        std::vector<std::size_t> s;
        for (std::size_t i = 1; i <= n; ++i)
            s.push_back(i);
        return s;
    };

    try {
        if (*analyze_cmd) {
            const auto r = analyze(load_space(analyze_file));
            emit(format, analysis_json(r), analysis_text(r));
            return exit_ok;
        }
        if (*verify_cmd) {
            const auto claims = parse_claims(claims_list);
            const SuiteOptions options = verify_sem.options();
            if (enumerate_n == 0) {
                if (verify_file.empty())
                    throw error(errc::syntax_error, "verify needs a space document or --enumerate N");
                const Space sp = load_space(verify_file);
                const auto r = run_suite(sp, options, claims);
                emit(format, suite_json(sp, r), suite_text(sp, r));
                for (const auto& v : r.verdicts)
                    if (is_safe_claim(v.claim) && v.status == Status::fails)
                        return exit_counterexample;
                return exit_ok;
            }
            if (enumerate_n > max_enumerated_points)
                throw error(errc::size_too_large, "--enumerate is limited to " + std::to_string(max_enumerated_points)
                                                      + " points");
            SweepOptions opt;
            opt.sizes = sizes_upto(enumerate_n);
            opt.mode = OperationMode::parse(verify_ops);
            opt.suite = options;
            opt.claims = claims;
            opt.max_examples = max_examples;
            const auto r = sweep(opt);
            emit(format, sweep_json(r), sweep_text(r));
            return r.safe_claim_failures() ? exit_counterexample : exit_ok;
        }
        if (*mine_cmd) {
            const auto r = mine(mine_n, OperationMode::parse(mine_ops), parse_predicate(predicate), mine_sem.options());
            emit(format, mine_json(r), mine_text(r));
            return exit_ok;
        }
        if (*audit_cmd) {
            const auto r = audit_example(example);
            emit(format, audit_json(r), audit_text(r));
            return exit_ok;
        }
        if (*bridge_cmd) {
            if (bridge_n == 0 || bridge_n > max_enumerated_points)
                throw error(errc::size_too_large, "--n must be between 1 and " + std::to_string(max_enumerated_points));
            const auto r = bridge_report(sizes_upto(bridge_n), OperationMode::parse(bridge_ops), bridge_index);
            emit(format, bridge_json(r), bridge_text(r));
            return exit_ok;
        }
    }
    catch (const error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
