#include <json.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Invocation {
    int status = -1;
    std::string out;
};

Invocation gamma_top(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + GAMMA_TOP_EXE + std::string(" ") + args + " 2>/dev/null";
    Invocation r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf;
    for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;)
        r.out.append(buf.data(), n);
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const char* name) { return std::string(GAMMATOP_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST(Cli, AnalyzeMachineOutput)
{
    const Invocation r = gamma_top("analyze " + data("example3_2.json") + " --format machine");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["gamma_open"], nlohmann::json::parse(R"([[],["b"],["a","b"],["a","c"],["a","b","c"]])"));
    EXPECT_EQ(j["gamma_regular_open"], nlohmann::json::parse(R"([[],["b"],["a","c"],["a","b","c"]])"));
}

TEST(Cli, AnalyzeTextIsStable)
{
    const Invocation a = gamma_top("analyze " + data("example3_5.json"));
    const Invocation b = gamma_top("analyze " + data("example3_5.json"));
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("extremally disconnected  no"), std::string::npos);
}

TEST(Cli, InputErrorsExitWithTwo)
{
    EXPECT_EQ(gamma_top("analyze /nonexistent/space.json").status, 2);
    EXPECT_EQ(gamma_top("analyze " + temp_file("gamma_top_bad.json", "{\"points\": [")).status, 2);
    EXPECT_EQ(gamma_top("analyze " + temp_file("gamma_top_topo.json",
                                               R"({"points":["a","b"],"opens":[[],["a"]],"gamma":{"kind":"identity"}})"))
                  .status,
              2);
    EXPECT_EQ(gamma_top("").status, 2);
    EXPECT_EQ(gamma_top("frobnicate").status, 2);
    EXPECT_EQ(gamma_top("analyze " + data("example3_2.json") + " --format xml").status, 2);
}

TEST(Cli, VerifySingleSpace)
{
    const Invocation r = gamma_top("verify " + data("example3_2.json") + " --format machine");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["verdicts"].size(), 24u);

    const Invocation some = gamma_top("verify " + data("example3_2.json") + " --claims C-T3.6,C-RO-INCL --format machine");
    ASSERT_EQ(some.status, 0);
    EXPECT_EQ(nlohmann::json::parse(some.out)["verdicts"].size(), 2u);
    EXPECT_EQ(gamma_top("verify " + data("example3_2.json") + " --claims C-BOGUS").status, 2);
}

TEST(Cli, VerifyEnumerationExitCodeTracksSafeClaimFailures)
{
    const Invocation r = gamma_top("verify --enumerate 3 --ops all_tables --format machine");
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["spaces"], 9086);
    EXPECT_EQ(r.status, j["safe_claim_failures"].get<int>() > 0 ? 1 : 0);

    const Invocation safe = gamma_top("verify --enumerate 3 --ops all_tables --claims C-T3.6,C-T4.5 --format machine");
    EXPECT_EQ(safe.status, 0);
    EXPECT_EQ(gamma_top("verify --enumerate 5").status, 2);
    EXPECT_EQ(gamma_top("verify --enumerate 4 --ops all_tables").status, 2);
}

TEST(Cli, VerifyIsDeterministicAcrossThreadCounts)
{
    const std::string args = "verify --enumerate 4 --ops pivots,builtins --format machine";
    const Invocation one = gamma_top(args, "GAMMA_TOP_THREADS=1");
    const Invocation three = gamma_top(args, "GAMMA_TOP_THREADS=3");
    EXPECT_EQ(one.out, three.out);
    EXPECT_EQ(one.status, three.status);
    EXPECT_EQ(nlohmann::json::parse(one.out)["per_size"]["4"]["topologies"], 355);
}

TEST(Cli, Mine)
{
    const Invocation r = gamma_top("mine --n 3 --ops builtins --predicate regular-open-not-clopen --format machine");
    ASSERT_EQ(r.status, 0);
    EXPECT_GT(nlohmann::json::parse(r.out)["hit_count"].get<int>(), 0);
    EXPECT_EQ(gamma_top("mine --n 3 --ops builtins --predicate nonsense").status, 2);
    EXPECT_EQ(gamma_top("mine --n 9 --ops builtins --predicate C-T3.6").status, 2);
    EXPECT_EQ(gamma_top("mine --n 3 --predicate C-T3.6").status, 2);
}

TEST(Cli, Audit)
{
    const Invocation r = gamma_top("audit --example 3.17 --format machine");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["example"], "3.17");
    EXPECT_FALSE(j["families"].empty());
    EXPECT_EQ(gamma_top("audit --example 3.9").status, 2);
}

TEST(Cli, Bridge)
{
    const Invocation r = gamma_top("bridge --n 2 --ops builtins,pivots --format machine");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["pairings"].size(), 4u);
}
