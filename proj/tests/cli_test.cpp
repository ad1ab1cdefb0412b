#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hahn/text.hpp"
#include "test_util.hpp"

using namespace hahn;
using namespace hahn::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

const char* kNfText =
    "# seeded normal form over (Z^2, Q(sqrt 2))\n"
    "rho = conj\n"
    "tau = [[1, -2], [0, 1]]\n"
    "x   = [(1+1r), 1/3]\n"
    "u   = [\"1 + 2*t^[1,-1]\", \"1 - t^[1,3] + t^[2,0]\"]\n";

}  // namespace

TEST(Cli, SessionDefaults) {
  const SessionConfig s = make_session("qsqrt:2", "z:2", "", 4, "kv");
  EXPECT_EQ(s.field, FieldDescriptor::quadratic(2));
  EXPECT_EQ(s.group, GroupDescriptor::integers(2));
  EXPECT_EQ(s.cutoff, (Exponent{8, 0}));
  EXPECT_EQ(s.format, OutputFormat::KeyValue);
  EXPECT_HAHN_ERROR(make_session("q", "z:1", "0", 1, "text"), InvalidArgument);
  EXPECT_EQ(parse_group_flag("q:1:6"), GroupDescriptor::rationals(1, 6));
}

TEST(Cli, EmptyConfigIsIdentity) {
  const SessionConfig s = make_session("q", "z:1", "", 1, "text");
  EXPECT_TRUE(parse_aut_config("# nothing\n", s).nf.is_identity());
  EXPECT_HAHN_ERROR(parse_aut_config("x = [1, 2]\n", s), DimensionError);
}

TEST(Cli, ConfigMatchesHandBuiltNormalForm) {
  const SessionConfig s = make_session("qsqrt:2", "z:2", "", 1, "text");
  const AutConfig c = parse_aut_config(kNfText, s);
  EXPECT_EQ(c.nf.rho, FieldAut::Conjugation);
  EXPECT_EQ(c.nf.x.values[1], FieldElement(Rational(1, 3)));
  EXPECT_EQ(format_series(c.nf.u.values[0]), "1 + 2*t^[1,-1] + O(t^[8,0])");
  EXPECT_FALSE(c.images.has_value());
}

TEST(Cli, DecomposeRoundTrip) {
  const std::string path = write_temp("nf.aut", kNfText);
  const CliRun r = run({"--field", "qsqrt:2", "--group", "z:2", "decompose", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("rho = conj"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: OK"), std::string::npos);
}

TEST(Cli, DecomposeSubstitution) {
  const std::string path = write_temp("sub.aut", "images = [\"2*t + 2*t^2\"]\n");
  const CliRun r = run({"--format", "kv", "--cutoff", "6", "decompose", path});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("x.0=2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("u.0=1 + t + O(t^6)\n"), std::string::npos) << r.out;
}

TEST(Cli, RejectsNonValuationPreservingImages) {
  const std::string path = write_temp("bad.aut", "images = [\"1 + t\"]\n");
  const CliRun r = run({"decompose", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("NotValuationPreserving"), std::string::npos) << r.err;
}

TEST(Cli, EvalAndInvert) {
  const std::string path = write_temp("u.aut", "u = [\"1 + t\"]\n");
  EXPECT_EQ(run({"eval", path, "t"}).out, "t + t^2 + O(t^8)\n");
  const CliRun inv = run({"--cutoff", "4", "--format", "kv", "invert", path});
  EXPECT_NE(inv.out.find("u.0=1 - t + 2*t^2 - 5*t^3 + O(t^4)"), std::string::npos) << inv.out;
}

TEST(Cli, LaurentAndMoebius) {
  EXPECT_EQ(run({"laurent", "xs", "1 + t", "1 + t"}).out, "1 + 2*t + 2*t^2 + t^3 + O(t^8)\n");
  EXPECT_EQ(run({"moebius", "classify", "[[1,0],[1,1]]"}).out, "OneAut\n");
  EXPECT_EQ(run({"moebius", "classify", "[[1,1],[0,1]]"}).out, "Other\n");
  EXPECT_EQ(run({"--cutoff", "4", "moebius", "expand", "[[1,0],[1,1]]"}).out, "t - t^2 + t^3 + O(t^4)\n");
}

TEST(Cli, PuiseuxPower) {
  const CliRun r = run({"--cutoff", "3", "puiseux", "pow", "1 + t", "1/2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "1 + 1/2*t - 1/8*t^2 + O(t^3)\n");
}

TEST(Cli, Verify) {
  EXPECT_EQ(run({"verify", "schilling", "--seed", "7"}).code, kExitOk);
  const CliRun kappa = run({"--format", "kv", "verify", "rayner-kappa-finite"});
  EXPECT_EQ(kappa.code, kExitOk);
  EXPECT_NE(kappa.out.find("note.R3=fail"), std::string::npos);
  EXPECT_EQ(run({"verify", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"--seed", "3", "--format", "kv", "verify", "moebius"}).out,
            run({"--seed", "3", "--format", "kv", "verify", "moebius"}).out);
}

TEST(Cli, RaynerCheck) {
  EXPECT_EQ(run({"rayner", "check", "--family", "puiseux"}).code, kExitOk);
  EXPECT_EQ(run({"rayner", "check", "--family", "kappa:3"}).code, kExitPropertyFailure);
}

TEST(Cli, UsageAndSyntaxErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  const CliRun bad = run({"laurent", "xs", "t^^2", "1"});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("SyntaxError"), std::string::npos) << bad.err;
}
