#include <gtest/gtest.h>

#include "dicut/errors.hpp"
#include "dicut/explore.hpp"
#include "dicut/generators.hpp"
#include "dicut/report.hpp"
#include "support.hpp"

using namespace dicut;
using namespace dicut::testing;

TEST(Report, MethodNames) {
  for (const char* name : {"d11", "d11c", "acyclic", "d22", "oracle"}) {
    const auto m = parse_cut_method(name);
    ASSERT_TRUE(m);
    EXPECT_EQ(method_name(*m), name);
  }
  EXPECT_FALSE(parse_cut_method("greedy"));
}

TEST(Report, GuaranteedBounds) {
  const Digraph e1 = gen_example1(1);
  EXPECT_EQ(guaranteed_bound(e1, CutMethod::D11Connected), Rational(77, 20));
  // t = 2 on gen_example1(1).
  EXPECT_EQ(guaranteed_bound(e1, CutMethod::D11), Rational(4));
  const Digraph t5 = gen_regular_tournament(2);
  EXPECT_EQ(guaranteed_bound(t5, CutMethod::D22), Rational(3));
  EXPECT_EQ(guaranteed_bound(t5, CutMethod::Oracle), Rational(5, 2));
  EXPECT_EQ(guaranteed_bound(gen_transitive_tournament(5), CutMethod::Acyclic), Rational(3));
}

TEST(Report, CutOnExample1) {
  const VerificationReport r = verify_method("e1", gen_example1(1), CutMethod::D11Connected, false);
  EXPECT_GE(r.size, 4);
  EXPECT_EQ(r.bound, Rational(77, 20));
  EXPECT_FALSE(r.oracle);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(format_report(r), "e1\td11c\t9\t11\t4\t77/20\t-\tpass");
}

TEST(Report, VerifyTournamentWithD22) {
  const VerificationReport r = verify_method("t5", gen_regular_tournament(2), CutMethod::D22, true);
  EXPECT_EQ(r.size, 3);
  EXPECT_EQ(r.bound, Rational(3));
  ASSERT_TRUE(r.oracle);
  EXPECT_EQ(*r.oracle, 3);
  EXPECT_TRUE(r.certificate_ok);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.ratio(), Rational(3, 10));
  EXPECT_EQ(format_report(r), "t5\td22\t5\t10\t3\t3/1\t3\tpass");
  EXPECT_EQ(report_header(), "instance\tmethod\tn\tm\tsize\tbound\toracle\tpass");
}

TEST(Report, PreconditionsPropagate) {
  EXPECT_THROW(verify_method("t5", gen_regular_tournament(2), CutMethod::D11, false), PreconditionError);
  EXPECT_THROW(verify_method("c3", gen_regular_tournament(1), CutMethod::Acyclic, false), PreconditionError);
}

TEST(Explore, OutOfScopeProblem) {
  ExploreParams p;
  p.problem = 4;
  const ExploreResult r = explore(p);
  EXPECT_FALSE(r.in_scope);
  EXPECT_FALSE(r.violated);
}

TEST(Explore, SmallestCmaxStaysAboveSevenTwentieths) {
  ExploreParams p;
  p.problem = 1;
  p.max_n = 9;
  p.budget = 60;
  const ExploreResult r = explore(p);
  EXPECT_FALSE(r.violated);
  EXPECT_GT(r.lines.size(), 1U);
}

TEST(Explore, SourceSinkSharpeningFailsOnTwoArcPath) {
  ExploreParams p;
  p.problem = 2;
  p.max_n = 3;
  p.exhaustive = true;
  const ExploreResult r = explore(p);
  EXPECT_TRUE(r.violated);
}

TEST(Explore, ExhaustiveTightTriangleFree) {
  ExploreParams p;
  p.problem = 3;
  p.max_n = 5;
  p.exhaustive = true;
  const ExploreResult r = explore(p);
  EXPECT_FALSE(r.violated);
  EXPECT_NE(r.lines.back().find("checked"), std::string::npos);
}

TEST(Explore, D22SamplesHoldOpenBounds) {
  for (int problem : {5, 6, 7, 8}) {
    ExploreParams p;
    p.problem = problem;
    p.max_n = 7;
    p.budget = 25;
    p.k = 2;
    EXPECT_FALSE(explore(p).violated) << problem;
  }
}

TEST(Explore, BadParameters) {
  ExploreParams p;
  p.problem = 9;
  EXPECT_THROW(explore(p), InputError);
  p.problem = 1;
  p.max_n = 8;
  p.exhaustive = true;
  EXPECT_THROW(explore(p), ResourceError);
}
