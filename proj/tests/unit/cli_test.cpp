#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "pratio/digraph.hpp"
#include "pratio/extremal.hpp"

namespace pratio {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliParseRational, Forms) {
  EXPECT_EQ(cli::parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(cli::parse_rational("7"), 7);
  EXPECT_EQ(cli::parse_rational("-2"), -2);
  EXPECT_EQ(cli::parse_rational("0.25"), make_rational(1, 4));
  EXPECT_EQ(cli::parse_rational("1.5"), make_rational(3, 2));
  EXPECT_THROW(cli::parse_rational("abc"), std::runtime_error);
  EXPECT_THROW(cli::parse_rational("1/0"), std::runtime_error);
  EXPECT_THROW(cli::parse_rational(""), std::runtime_error);
}

TEST(CliExitCodes, Usage) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ratio", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"enumerate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"construct", "d1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"construct", "nonsense", "--n", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"ratio", "--exact", "--float"}, serialize_edge_list(directed_cycle(3))).code, cli::kExitUsage);
  EXPECT_EQ(run({"bound", "check", "--a", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(CliExitCodes, DomainErrors) {
  auto r = run({"ratio"}, "2 1\n0 1\n");
  EXPECT_EQ(r.code, cli::kExitDomainError);
  EXPECT_NE(r.err.find("not strongly connected"), std::string::npos);
  EXPECT_EQ(run({"ratio"}, "3 1\n0 1\n").code, cli::kExitDomainError);
  EXPECT_EQ(run({"ratio"}, "2 2\n0 1\n1 1\n").code, cli::kExitDomainError);
  EXPECT_EQ(run({"ratio", "--graph", "/nonexistent/graph.txt"}).code, cli::kExitDomainError);
  EXPECT_EQ(run({"profile", "--steps", "3"}, serialize_edge_list(directed_cycle(4))).code, cli::kExitDomainError);
  EXPECT_EQ(run({"transform", "add"}, serialize_edge_list(construct_extremal(6, ExtremalVariant::d1))).code,
            cli::kExitDomainError);
  EXPECT_EQ(run({"verify", "d1-closed-form", "--n", "3"}).code, cli::kExitDomainError);
}

TEST(CliSolve, ExactOutputInLowestTerms) {
  auto r = run({"solve"}, serialize_edge_list(construct_extremal(5, ExtremalVariant::d1)));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 17/56\n1 11/28\n2 3/14\n3 1/14\n4 1/56\nratio 22\n");
}

TEST(CliSolve, LargeGraphsNeedExplicitMode) {
  auto big = serialize_edge_list(construct_extremal(13, ExtremalVariant::d1));
  EXPECT_EQ(run({"ratio"}, big).code, cli::kExitUsage);
  auto exact = run({"ratio", "--exact"}, big);
  EXPECT_EQ(exact.code, 0);
  std::ostringstream expected;
  expected << format(gamma_formula(13)) << '\n';
  EXPECT_EQ(exact.out, expected.str());
  EXPECT_EQ(run({"ratio", "--float"}, big).code, 0);
}

TEST(CliSolve, FloatAndJson) {
  auto g = serialize_edge_list(construct_extremal(4, ExtremalVariant::d1));
  auto f = run({"ratio", "--float"}, g);
  EXPECT_EQ(f.code, 0);
  EXPECT_NEAR(std::stod(f.out), 6.0, 1e-9);
  auto j = run({"solve", "--json"}, g);
  EXPECT_EQ(j.out, "{\"mode\":\"exact\",\"phi\":[\"1/3\",\"2/5\",\"1/5\",\"1/15\"],\"ratio\":\"6\"}\n");
}

TEST(CliPipes, ConstructFeedsRatio) {
  for (const char* kind : {"d1", "d2", "d3"}) {
    auto built = run({"construct", kind, "--n", "6"});
    ASSERT_EQ(built.code, 0);
    auto r = run({"ratio"}, built.out);
    EXPECT_EQ(r.out, format(gamma_formula(6)) + "\n");
  }
  auto ce = run({"construct", "degree-ce", "--n", "5"});
  EXPECT_EQ(run({"ratio"}, ce.out).out, "6\n");
  auto disc = run({"construct", "disc-ce", "--m", "6", "--k", "8"});
  EXPECT_EQ(disc.code, 0);
  EXPECT_EQ(parse_edge_list(disc.out), construct_discrepancy_counterexample(6, 8));
}

TEST(CliPipes, OutputIsByteIdentical) {
  auto g = serialize_edge_list(construct_extremal(7, ExtremalVariant::d3));
  EXPECT_EQ(run({"solve"}, g).out, run({"solve"}, g).out);
  EXPECT_EQ(run({"bound", "structure"}, g).out, run({"bound", "structure"}, g).out);
  EXPECT_EQ(run({"enumerate", "--n", "4", "--jobs", "1"}).out, run({"enumerate", "--n", "4", "--jobs", "3"}).out);
}

TEST(CliConstruct, Dot) {
  auto r = run({"construct", "cycle", "--n", "3", "--dot"});
  EXPECT_EQ(r.out, "digraph cycle {\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
}

TEST(CliTransform, RuleOnlyAddsSelectedEdge) {
  auto g = construct_extremal(6, ExtremalVariant::d1);
  auto r = run({"transform", "add", "--rule-only"}, serialize_edge_list(g));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_edge_list(r.out), g.with_edge(5, 4));
}

TEST(CliBound, CheckCompleteGraph) {
  auto r = run({"bound", "check", "--a", "1", "--b", "1", "--c", "1/6", "--d", "1/6", "--eps", "1/6"},
               serialize_edge_list(complete_digraph(6)));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C 5/196\n"), std::string::npos);
  EXPECT_NE(r.out.find("ratio_bound 196/5\n"), std::string::npos);
  EXPECT_NE(r.out.find("bound_holds yes\n"), std::string::npos);
  auto vacuous = run({"bound", "check", "--a", "1", "--b", "1", "--c", "1/6", "--d", "1/6", "--eps", "1/4"},
                     serialize_edge_list(complete_digraph(6)));
  EXPECT_EQ(vacuous.code, cli::kExitDomainError);
}

TEST(CliVerify, ExhaustiveAndClosedForm) {
  auto t = run({"verify", "theorem2", "--n", "4"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("OK"), std::string::npos);
  EXPECT_EQ(run({"verify", "d1-closed-form", "--n", "6"}).code, 0);
}

TEST(CliEnumerate, EmitsWitnesses) {
  auto dir = std::filesystem::temp_directory_path() / "pratio_cli_test_witnesses";
  std::filesystem::remove_all(dir);
  auto r = run({"enumerate", "--n", "3", "--emit-witnesses", dir.string()});
  EXPECT_EQ(r.code, 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    (void)entry;
    ++files;
  }
  EXPECT_EQ(files, 15u);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run({"enumerate", "--n", "6"}).code, cli::kExitDomainError);
}

TEST(CliProfile, CompleteGraph) {
  auto r = run({"profile", "--steps", "2"}, serialize_edge_list(complete_digraph(4)));
  EXPECT_EQ(r.code, 0);
  EXPECT_FALSE(r.out.empty());
}

}  // namespace
}  // namespace pratio
