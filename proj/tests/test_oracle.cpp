#include <gtest/gtest.h>

#include "support.hpp"

using namespace otype;
using otype::testing::all_words;
using otype::testing::CongruenceOracle;
using otype::testing::two;

namespace {

// Compares the word problem with the bounded congruence closure on every pair
// of positive words up to `max_len`.  Both directions must agree.
void compare_with_oracle(const char* rhs, std::size_t max_len, std::size_t bound) {
  PositivePresentation P = two(rhs);
  Decider d(P);
  ASSERT_TRUE(d.word_problem_certified());
  CongruenceOracle oracle(P, bound);
  auto words = all_words(2, max_len);
  std::size_t equal_pairs = 0;
  for (const auto& u : words)
    for (const auto& v : words) {
      const bool decided = d.word_problem(negative_positive(u, v)).answer == WordProblemAnswer::Equal1;
      const bool closure = oracle.equal(u, v);
      ASSERT_EQ(decided, closure) << rhs << ": " << format(P.alphabet(), u) << " vs " << format(P.alphabet(), v);
      equal_pairs += decided;
    }
  EXPECT_GT(equal_pairs, words.size());
}

}  // namespace

TEST(Oracle, KleinBottle) { compare_with_oracle("b a b", 5, 13); }

TEST(Oracle, BraidGroupB3) { compare_with_oracle("b a^2 b", 5, 13); }

TEST(Oracle, TorusKnotLonger) { compare_with_oracle("b a^2 b a^2 b", 4, 12); }
