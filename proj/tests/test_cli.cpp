#include "nnfc/calculus.hpp"
#include "nnfc/cli.hpp"
#include "nnfc/decision.hpp"

#include "support/golden.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

using namespace nnfc;

namespace {

RunResult run_with(Command c, const std::string& input, bool json = false, bool oracle = false)
{
    RunConfig cfg;
    cfg.command = c;
    cfg.json = json;
    cfg.oracle = oracle;
    cfg.emit_certificate = true;
    return run(cfg, input);
}

} // namespace

TEST(Cli, CommandNames)
{
    EXPECT_EQ(parse_command("decide"), Command::Decide);
    EXPECT_EQ(parse_command("pipeline-dump"), Command::PipelineDump);
    EXPECT_FALSE(parse_command("frobnicate"));
}

TEST(Cli, DecideExitCodes)
{
    auto r = run_with(Command::Decide, golden::kSplitInput);
    EXPECT_EQ(r.code, exit_code::contradictory);
    EXPECT_EQ(r.out.rfind("CONTRADICTORY", 0), 0u);
    EXPECT_EQ(run_with(Command::Decide, golden::kNoOptimalPrenex).code, exit_code::satisfiable);
}

TEST(Cli, AcceptsNonNormalInputAndComments)
{
    auto r = run_with(Command::Decide, "# comment\n~(A v (F(v) | ~G(v)))\n");
    EXPECT_EQ(r.code, exit_code::satisfiable);
    r = run_with(Command::Decide, "~(E v (F(v) | ~F(v)))");
    EXPECT_EQ(r.code, exit_code::contradictory);
    r = run_with(Command::Decide, "E w ~(~F(w) | F(w))");
    EXPECT_EQ(r.code, exit_code::contradictory);
}

TEST(Cli, ParseErrorIsUsageError)
{
    auto r = run_with(Command::Decide, "A x1 (F(x1) &");
    EXPECT_EQ(r.code, exit_code::usage);
    EXPECT_NE(r.out.find("parse error at "), std::string::npos);
}

TEST(Cli, JsonSchema)
{
    auto r = run_with(Command::Decide, golden::kTwoPairs, true);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["status"], "CONTRADICTORY");
    ASSERT_EQ(j["disjuncts"].size(), 1u);
    const auto& d = j["disjuncts"][0];
    EXPECT_EQ(d["pairs"].size(), 2u);
    EXPECT_FALSE(d["certificate"].is_null());
    EXPECT_FALSE(d["sigma"].is_null());
}

TEST(Cli, OracleAgrees)
{
    EXPECT_EQ(run_with(Command::Decide, golden::kSplitInput, false, true).code, exit_code::contradictory);
    auto r = run_with(Command::OracleCheck, golden::kNoOptimalPrenex);
    EXPECT_EQ(r.code, exit_code::ok);
    EXPECT_NE(r.out.find("oracle: all checks agree"), std::string::npos);
}

TEST(Cli, VerifyRoundTrip)
{
    Decision d = decide_psi(parse(golden::kSplitInput));
    std::string text = certificate_to_text(*d.certificate);
    auto ok = run_with(Command::Verify, text);
    EXPECT_EQ(ok.code, exit_code::ok);
    EXPECT_NE(ok.out.find("VERIFIED"), std::string::npos);

    Certificate bad = *d.certificate;
    bad.steps.erase(bad.steps.begin());
    auto rejected = run_with(Command::Verify, certificate_to_text(bad));
    EXPECT_EQ(rejected.code, exit_code::usage);
    EXPECT_NE(rejected.out.find("REJECTED step"), std::string::npos);

    auto via_json = run_with(Command::Verify, certificate_to_json(*d.certificate).dump());
    EXPECT_EQ(via_json.code, exit_code::ok);
}

TEST(Cli, PruneAndDump)
{
    auto p = run_with(Command::Prune, golden::kTwoPairs);
    EXPECT_EQ(p.code, exit_code::ok);
    EXPECT_NE(p.out.find(golden::kTwoPairsPruned), std::string::npos);
    auto dump = run_with(Command::PipelineDump, golden::kSplitInput);
    EXPECT_EQ(dump.code, exit_code::ok);
    EXPECT_NE(dump.out.find("sigma"), std::string::npos);
}
