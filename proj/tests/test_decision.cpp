#include <gtest/gtest.h>

#include "support.hpp"

using namespace otype;
using otype::testing::pw;
using otype::testing::sw;
using otype::testing::two;

namespace {

const Decider& b3() {
  static const Decider d(two("b a^2 b"));
  return d;
}

const PositivePresentation& b3p() { return b3().presentation(); }

}  // namespace

TEST(Decision, B3IsCertified) {
  EXPECT_TRUE(b3().sign_certified());
  EXPECT_TRUE(b3().word_problem_certified());
}

TEST(Decision, SignExamples) {
  auto s = order_sign(b3(), sw(b3p(), "b^-1 a"));
  EXPECT_EQ(s.value, Sign::Positive);
  EXPECT_EQ(s.witness, pw(b3p(), "a^2 b"));
  EXPECT_EQ(s.level, Certification::Certified);
  EXPECT_EQ(order_sign(b3(), SignedWord{}).value, Sign::Zero);
  auto t = order_sign(b3(), sw(b3p(), "a b^-1"));
  EXPECT_EQ(t.value, Sign::Positive);
  EXPECT_EQ(t.witness, pw(b3p(), "b a^2"));
  auto n = order_sign(b3(), sw(b3p(), "a^-1 b"));
  EXPECT_EQ(n.value, Sign::Negative);
  EXPECT_EQ(n.witness, pw(b3p(), "a^2 b"));
  EXPECT_STREQ(to_string(Sign::Positive), "> 1");
  EXPECT_STREQ(to_string(Sign::Zero), "= 1");
  EXPECT_STREQ(to_string(Sign::Negative), "< 1");
}

TEST(Decision, WordProblemExamples) {
  EXPECT_EQ(word_problem(b3(), sw(b3p(), "a^-1 b a^2 b")).answer, WordProblemAnswer::Equal1);
  EXPECT_EQ(word_problem(b3(), sw(b3p(), "a^-1 b")).answer, WordProblemAnswer::NotEqual1);
  EXPECT_EQ(word_problem(b3(), SignedWord{}).answer, WordProblemAnswer::Equal1);
  Decider klein(two("b a b"));
  EXPECT_EQ(word_problem(klein, sw(klein.presentation(), "a^-1 b a b")).answer, WordProblemAnswer::Equal1);
  EXPECT_EQ(word_problem(klein, sw(klein.presentation(), "a^-2 b a^2 b^-1")).answer, WordProblemAnswer::Equal1);
}

TEST(Decision, FractionExamples) {
  auto f = fraction_normal_form(b3(), sw(b3p(), "b^-1 a"));
  EXPECT_EQ(f.numerator, pw(b3p(), "a^2 b"));
  EXPECT_TRUE(f.denominator.empty());
  auto g = fraction_normal_form(b3(), sw(b3p(), "a^-1 b"));
  EXPECT_TRUE(g.numerator.empty());
  EXPECT_EQ(g.denominator, pw(b3p(), "a^2 b"));
  auto e = fraction_normal_form(b3(), SignedWord{});
  EXPECT_TRUE(e.numerator.empty() && e.denominator.empty());
  EXPECT_EQ(f.word(), sw(b3p(), "a^2 b"));
}

TEST(Decision, FractionRepresentsTheSameElement) {
  for (const char* w : {"a b^-1 a^-1 b a", "b^-2 a^3 b^-1", "a^-1 b^-1 a b a^-1"}) {
    SignedWord x = sw(b3p(), w);
    Fraction f = fraction_normal_form(b3(), x);
    EXPECT_EQ(word_problem(b3(), invert(f.word()) * x).answer, WordProblemAnswer::Equal1) << w;
  }
}

TEST(Decision, UncertifiedSidesThrow) {
  Decider bs(two("b a b^2"));
  EXPECT_TRUE(bs.word_problem_certified());
  EXPECT_FALSE(bs.sign_certified());
  EXPECT_THROW((void)order_sign(bs, sw(bs.presentation(), "b^-1 a")), PreconditionUnverified);
  EXPECT_NO_THROW((void)word_problem(bs, sw(bs.presentation(), "a^-1 b a b^2")));

  Decider forced(two("b a b^2"), true);
  EXPECT_EQ(forced.word_problem(sw(forced.presentation(), "a^-1 b a b^2")).level, Certification::Forced);

  Decider bad(two("b^2 a b^2"));
  EXPECT_THROW((void)word_problem(bad, sw(bad.presentation(), "a^-1 b")), PreconditionUnverified);
}

TEST(Decision, NotTriangularIsRejected) {
  EXPECT_THROW(Decider(otype::testing::pres("gens: a b c\nrel: c = a b\nrel: c = b a\n")), PreconditionUnverified);
}

TEST(Decision, BudgetExhaustionIsReported) {
  Decider bs(two("b a b^2"), false, {}, Budget{50, 50});
  try {
    (void)word_problem(bs, sw(bs.presentation(), "a^-8 b a^8"));
    FAIL() << "expected BudgetExhausted";
  } catch (const BudgetExhausted& e) {
    EXPECT_TRUE(is_budget(e.outcome()));
  }
}

TEST(Decision, ReusedVerdicts) {
  auto P = two("b a b");
  Decider d(P, analyze_otype(P));
  EXPECT_TRUE(d.sign_certified());
  EXPECT_EQ(order_sign(d, sw(P, "b^-1 a")).value, Sign::Positive);
}
