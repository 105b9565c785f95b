#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "otype/analysis.hpp"
#include "otype/presentation.hpp"
#include "otype/reversing.hpp"
#include "otype/words.hpp"

namespace otype {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

[[nodiscard]] inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

[[nodiscard]] inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative:
      return "< 1";
    case Sign::Zero:
      return "= 1";
    default:
      return "> 1";
  }
}

/// Certified: the verdicts required by the procedure were proved.  Forced: the
/// caller asked to run anyway, so termination and correctness are not guaranteed.
enum class Certification { Certified, Forced };

[[nodiscard]] inline const char* to_string(Certification c) {
  return c == Certification::Certified ? "certified" : "forced";
}

struct OrderSign {
  Sign value = Sign::Zero;
  /// The non-empty side of the final fraction, or ε for Zero.
  PositiveWord witness;
  Certification level = Certification::Certified;
};

enum class Orientation { Right, Left };

/// Right orientation reads numerator·denominator⁻¹, left orientation
/// denominator⁻¹·numerator.
struct Fraction {
  PositiveWord numerator;
  PositiveWord denominator;
  Orientation orientation = Orientation::Left;
  Certification level = Certification::Certified;

  [[nodiscard]] SignedWord word() const {
    return orientation == Orientation::Left ? negative_positive(denominator, numerator)
                                            : positive_negative(numerator, denominator);
  }
};

enum class WordProblemAnswer { Equal1, NotEqual1 };

struct WordProblemResult {
  WordProblemAnswer answer = WordProblemAnswer::NotEqual1;
  /// The fraction v′·u′⁻¹ of the second reversing.
  PositiveWord numerator;
  PositiveWord denominator;
  Certification level = Certification::Certified;
};

/// A reversing that should terminate did not within the budget (or stopped on
/// a cycle or a missing relation, which only happens for uncertified input).
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(const std::string& what, ReversingOutcome outcome)
      : std::runtime_error(what), outcome_(std::move(outcome)) {}
  [[nodiscard]] const ReversingOutcome& outcome() const { return outcome_; }

 private:
  ReversingOutcome outcome_;
};

class PreconditionUnverified : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The ordering and word problem procedures for a fixed presentation.  The
/// constructor runs the analyzer on both sides unless `force` is set; the right
/// table always requires a right-triangular presentation, the left phase of
/// sign computations a left-triangular one.
class Decider {
 public:
  explicit Decider(PositivePresentation P, bool force = false, const AnalysisOptions& opt = {},
                   const Budget& budget = {})
      : P_(std::move(P)), force_(force), budget_(budget) {
    auto right = detect_right_triangular(P_);
    if (!right) throw PreconditionUnverified("presentation is not right-triangular");
    right_table_ = complete(*right);
    PositivePresentation opp = opposite(P_);
    if (auto left = detect_right_triangular(opp)) left_table_ = complete(*left);
    if (!force_) {
      verdicts_ = analyze_otype(P_, opt);
    }
  }

  /// Uses verdicts computed elsewhere instead of re-running the analyzer.
  Decider(PositivePresentation P, OTypeVerdict verdicts, const Budget& budget = {})
      : Decider(std::move(P), true, {}, budget) {
    force_ = false;
    verdicts_ = std::move(verdicts);
  }

  [[nodiscard]] const PositivePresentation& presentation() const { return P_; }
  [[nodiscard]] const std::optional<OTypeVerdict>& verdicts() const { return verdicts_; }

  [[nodiscard]] bool sign_certified() const { return verdicts_ && verdicts_->otype(); }
  [[nodiscard]] bool word_problem_certified() const {
    return verdicts_ && verdicts_->right.status == Status::RightOType;
  }

  /// Right reversing w into v·u⁻¹, then left reversing that into u′⁻¹·v′.
  [[nodiscard]] Fraction fraction_normal_form(const SignedWord& w) const {
    const Certification level = require(sign_certified(), "sign computation needs O-type verdicts on both sides");
    if (!left_table_) throw PreconditionUnverified("presentation is not left-triangular");
    const Terminated first = terminate(right_reverse(w, right_table_, budget_), "right reversing");
    const SignedWord vu = positive_negative(first.numerator, first.denominator);
    const Terminated second = terminate(left_reverse(vu, *left_table_, budget_), "left reversing");
    return Fraction{second.numerator, second.denominator, Orientation::Left, level};
  }

  [[nodiscard]] OrderSign order_sign(const SignedWord& w) const {
    Fraction f = fraction_normal_form(w);
    if (f.numerator.empty() && f.denominator.empty()) return OrderSign{Sign::Zero, {}, f.level};
    if (f.denominator.empty()) return OrderSign{Sign::Positive, f.numerator, f.level};
    if (f.numerator.empty()) return OrderSign{Sign::Negative, f.denominator, f.level};
    throw BudgetExhausted("left reversing ended with both sides non-empty; the ordering is not total here",
                          Terminated{f.numerator, f.denominator, 0});
  }

  /// Right reversing w into v·u⁻¹, then u⁻¹·v into v′·u′⁻¹; [w] = 1 iff both
  /// final words are empty.
  [[nodiscard]] WordProblemResult word_problem(const SignedWord& w) const {
    const Certification level = require(word_problem_certified(), "word problem needs a right-O-type verdict");
    const Terminated first = terminate(right_reverse(w, right_table_, budget_), "right reversing");
    const Terminated second = terminate(
        right_reverse(negative_positive(first.denominator, first.numerator), right_table_, budget_),
        "second right reversing");
    const bool equal = second.numerator.empty() && second.denominator.empty();
    return WordProblemResult{equal ? WordProblemAnswer::Equal1 : WordProblemAnswer::NotEqual1, second.numerator,
                             second.denominator, level};
  }

 private:
  Certification require(bool certified, const char* what) const {
    if (certified) return Certification::Certified;
    if (force_) return Certification::Forced;
    throw PreconditionUnverified(what);
  }

  static Terminated terminate(ReversingOutcome o, const char* phase) {
    if (auto t = std::get_if<Terminated>(&o)) return *t;
    std::string why = std::holds_alternative<BudgetExceeded>(o) ? "budget exhausted"
                      : std::holds_alternative<Cycle>(o)        ? "reversing cycles"
                                                                : "no relation for a junction";
    throw BudgetExhausted(std::string(phase) + ": " + why, std::move(o));
  }

  PositivePresentation P_;
  bool force_;
  Budget budget_;
  RelationTable right_table_;
  std::optional<RelationTable> left_table_;
  std::optional<OTypeVerdict> verdicts_;
};

[[nodiscard]] inline OrderSign order_sign(const Decider& d, const SignedWord& w) { return d.order_sign(w); }

[[nodiscard]] inline WordProblemResult word_problem(const Decider& d, const SignedWord& w) {
  return d.word_problem(w);
}

[[nodiscard]] inline Fraction fraction_normal_form(const Decider& d, const SignedWord& w) {
  return d.fraction_normal_form(w);
}

}  // namespace otype
