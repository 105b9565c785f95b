#include <gtest/gtest.h>

#include "support.hpp"

using namespace otype;
using otype::testing::pres;
using otype::testing::pw;
using otype::testing::right_table;
using otype::testing::left_table;
using otype::testing::sw;
using otype::testing::two;

namespace {

// a = bab, b = cbc, whose completion adds a = cbcab
PositivePresentation three_letter_cycle() { return pres("gens: a b c\nrel: a = b a b\nrel: b = c b c\n"); }

}  // namespace

TEST(Reversing, SingleSteps) {
  auto P = three_letter_cycle();
  RelationTable T = right_table(P);
  SignedWord w = sw(P, "a^-1 c^-1 a");
  SignedWord w1 = reverse_step(w, T, 1);
  EXPECT_EQ(w1, sw(P, "a^-1 b c a b"));
  EXPECT_EQ(reverse_step(w1, T, 0), sw(P, "b^-1 a^-1 c a b"));
  EXPECT_EQ(reverse_step(sw(P, "b a^-1 a c"), T, 1), sw(P, "b c"));
}

TEST(Reversing, StepRejectsNonJunction) {
  auto P = three_letter_cycle();
  RelationTable T = right_table(P);
  EXPECT_THROW((void)reverse_step(sw(P, "a b"), T, 0), ReversingError);
  EXPECT_THROW((void)reverse_step(sw(P, "a^-1"), T, 0), ReversingError);
}

TEST(Reversing, NeverEndingExampleIsACycle) {
  auto P = three_letter_cycle();
  RelationTable T = right_table(P);
  ReversingOutcome o = right_reverse(sw(P, "a^-1 c^-1 a"), T, Budget{100, 100});
  ASSERT_TRUE(is_cycle(o));
  const Cycle& c = std::get<Cycle>(o);
  EXPECT_EQ(c.earlier_step, 0u);
  EXPECT_FALSE(c.flank_left.empty());
  EXPECT_EQ(c.flank_left, c.flank_right);
  for (Letter l : c.flank_left) EXPECT_EQ(l, Letter{1});
  EXPECT_EQ(c.flank_left.size() % 2, 0u);
}

TEST(Reversing, TerminatesOnARelation) {
  auto P = two("b a^2 b");
  RelationTable T = right_table(P);
  ReversingTrace trace;
  ReversingOutcome o = right_reverse(sw(P, "a^-1 b a^2 b"), T, {}, &trace);
  ASSERT_TRUE(is_terminated(o));
  const auto& t = std::get<Terminated>(o);
  EXPECT_TRUE(t.numerator.empty());
  EXPECT_TRUE(t.denominator.empty());
  ASSERT_FALSE(trace.steps.empty());
  EXPECT_EQ(trace.steps.front().word, sw(P, "b^-1 a^-2 a^2 b"));
  EXPECT_EQ(trace.steps.size(), steps_of(o));
}

TEST(Reversing, StuckWithoutARelation) {
  auto P = pres("gens: a b c d\nrel: a = b b\nrel: c = d d\n");
  ReversingOutcome o = right_reverse(sw(P, "b^-1 d"), right_table(P));
  ASSERT_TRUE(is_stuck(o));
  const auto& s = std::get<Stuck>(o);
  EXPECT_EQ(s.s, Letter{1});
  EXPECT_EQ(s.t, Letter{3});
  EXPECT_TRUE(proves_no_common_multiple(o));
}

TEST(Reversing, EmptyWordTerminatesAtOnce) {
  auto P = two("b a b");
  ReversingOutcome o = right_reverse(SignedWord{}, right_table(P));
  ASSERT_TRUE(is_terminated(o));
  EXPECT_EQ(steps_of(o), 0u);
  ReversingOutcome l = left_reverse(SignedWord{}, left_table(P));
  ASSERT_TRUE(is_terminated(l));
  EXPECT_EQ(steps_of(l), 0u);
}

TEST(Reversing, LeftReversingSingleStep) {
  auto P = two("b a^2 b");
  ReversingOutcome o = left_reverse(sw(P, "a b^-1"), left_table(P));
  ASSERT_TRUE(is_terminated(o));
  const auto& t = std::get<Terminated>(o);
  // a·b⁻¹ becomes ε⁻¹·(b a²): numerator b a², denominator ε
  EXPECT_EQ(t.numerator, pw(P, "b a^2"));
  EXPECT_TRUE(t.denominator.empty());
  EXPECT_EQ(steps_of(o), 1u);
}

TEST(Reversing, BudgetExceededKeepsTheLastWord) {
  auto P = two("b a b^2");
  ReversingOutcome o = right_reverse(sw(P, "a^-6 b a^6"), right_table(P), Budget{20, 1000});
  ASSERT_TRUE(is_budget(o));
  const auto& b = std::get<BudgetExceeded>(o);
  EXPECT_EQ(b.steps, 20u);
  EXPECT_FALSE(b.last_word.empty());
}

TEST(Reversing, LengthBudget) {
  auto P = two("b a b^2");
  ReversingOutcome o = right_reverse(sw(P, "a^-8 b a^8"), right_table(P), Budget{1'000'000, 40});
  ASSERT_TRUE(is_budget(o));
  EXPECT_GT(std::get<BudgetExceeded>(o).max_word_length_seen, 40u);
}

TEST(Reversing, Divisibility) {
  auto P = two("b a b");
  RelationTable T = right_table(P);
  auto d = compare_divisibility(pw(P, "b"), pw(P, "a"), T);
  EXPECT_EQ(d.kind, DivisibilityKind::ULeftDividesV);
  EXPECT_EQ(d.quotient, pw(P, "a b"));
  d = compare_divisibility(pw(P, "a"), pw(P, "b"), T);
  EXPECT_EQ(d.kind, DivisibilityKind::VLeftDividesU);
  EXPECT_EQ(d.quotient, pw(P, "a b"));
  d = compare_divisibility(pw(P, "b a"), pw(P, "a a"), T);
  EXPECT_EQ(d.kind, DivisibilityKind::ULeftDividesV);
  EXPECT_EQ(d.quotient, pw(P, "b a"));
  EXPECT_EQ(compare_divisibility(pw(P, "a b"), pw(P, "a b"), T).kind, DivisibilityKind::Equal);
  EXPECT_EQ(left_divides(pw(P, "b"), pw(P, "a"), T), std::optional<bool>(true));
  EXPECT_EQ(left_divides(pw(P, "a"), pw(P, "b"), T), std::optional<bool>(false));
}

TEST(Reversing, CommonMultiples) {
  auto P = two("b a b");
  RelationTable T = right_table(P);
  auto cm = common_right_multiple(pw(P, "b"), pw(P, "a"), T);
  ASSERT_EQ(cm.status, MultipleStatus::Found);
  EXPECT_EQ(cm.cm_left, pw(P, "b a b"));
  EXPECT_EQ(cm.cm_right, pw(P, "a"));
  cm = common_right_multiple(pw(P, "a"), pw(P, "a"), T);
  ASSERT_EQ(cm.status, MultipleStatus::Found);
  EXPECT_EQ(cm.cm_left, pw(P, "a"));
  EXPECT_EQ(cm.cm_right, pw(P, "a"));

  auto Q = two("b^2 a b^2");
  cm = common_right_multiple(pw(Q, "a"), pw(Q, "b a a"), right_table(Q));
  EXPECT_EQ(cm.status, MultipleStatus::None);
}

TEST(Reversing, ExponentialGrowth) {
  auto P = two("b a b^2");
  RelationTable T = right_table(P);
  std::size_t previous = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    ReversingOutcome o = right_reverse(negative_positive(pw(P, "a").power(n), pw(P, "b") * pw(P, "a").power(n)), T);
    ASSERT_TRUE(is_terminated(o));
    const auto& t = std::get<Terminated>(o);
    // b^{2^n} for even n and its inverse for odd n
    const PositiveWord expected = pw(P, "b").power(std::size_t{1} << n);
    EXPECT_EQ(n % 2 ? t.denominator : t.numerator, expected);
    EXPECT_TRUE((n % 2 ? t.numerator : t.denominator).empty());
    EXPECT_GT(t.steps, previous);
    previous = t.steps;
  }
}

TEST(Reversing, NaiveStrategiesAgreeOnTermination) {
  auto P = two("b a^2 b");
  RelationTable T = right_table(P);
  SignedWord w = sw(P, "a^-2 b a b^-1 a^3");
  auto lead = right_reverse(w, T);
  ASSERT_TRUE(is_terminated(lead));
  for (auto s : {Strategy::Leftmost, Strategy::Rightmost, Strategy::Random}) {
    auto o = reverse_naive(w, T, s, 10'000, 3);
    ASSERT_TRUE(is_terminated(o));
    EXPECT_EQ(std::get<Terminated>(o).numerator, std::get<Terminated>(lead).numerator);
    EXPECT_EQ(std::get<Terminated>(o).denominator, std::get<Terminated>(lead).denominator);
    EXPECT_EQ(steps_of(o), steps_of(lead));
  }
}

TEST(Reversing, TraceReplaysStepByStep) {
  auto P = two("b a^2 b^3 a^2 b");
  RelationTable T = right_table(P);
  ReversingTrace trace;
  ReversingOutcome o = right_reverse(sw(P, "a^-2 b a^2 b a"), T, {}, &trace);
  ASSERT_TRUE(is_cycle(o));
  SignedWord w = trace.start;
  for (const auto& st : trace.steps) {
    w = reverse_step(w, T, st.position);
    ASSERT_EQ(w, st.word);
  }
}

TEST(Reversing, NonDeterministicTableIsRejected) {
  RelationTable T(3);
  T.add(Letter{1}, Letter{0}, PositiveWord{Letter{2}}, {});
  EXPECT_THROW(T.add(Letter{1}, Letter{0}, PositiveWord{Letter{1}}, {}), NonDeterministicTable);
  EXPECT_THROW(T.add(Letter{0}, Letter{1}, PositiveWord{Letter{1}}, {}), NonDeterministicTable);
}
