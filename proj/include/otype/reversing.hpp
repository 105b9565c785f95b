#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "otype/presentation.hpp"
#include "otype/words.hpp"

namespace otype {

struct Budget {
  std::size_t max_steps = 100'000;
  std::size_t max_length = 100'000;
  /// Number of earlier words kept for cycle detection; 0 disables detection.
  std::size_t history_window = 4096;
  /// Words longer than this are neither stored nor checked for recurrence.
  std::size_t history_max_word = 16'384;
  /// Also look for recurrences of a factor N·F·Q → N·x⁻¹·F·y·Q.
  bool factor_cycles = true;
};

/// One reversing step: deletion of s⁻¹s, or use of the table entry (s, t).
struct ReversingRule {
  bool deletion = false;
  Letter s;
  Letter t;
};

struct TraceStep {
  SignedWord word;       ///< word after the step
  ReversingRule rule;
  std::size_t position;  ///< index of s⁻¹ in the word before the step
};

struct ReversingTrace {
  SignedWord start;
  std::vector<TraceStep> steps;
};

/// Final word numerator·denominator⁻¹ (right reversing) or
/// denominator⁻¹·numerator (left reversing).
struct Terminated {
  PositiveWord numerator;
  PositiveWord denominator;
  std::size_t steps = 0;
};

/// A junction s⁻¹t without table entry.
struct Stuck {
  SignedWord word;
  std::size_t position = 0;
  Letter s;
  Letter t;
  std::size_t steps = 0;
};

/// Certified non-termination.  The word reached at earlier_step splits as
/// N·F·Q with N negative (context_left letters) and Q positive (context_right
/// letters), and F reverses in `period` steps to x⁻¹·F·y with x = flank_left,
/// y = flank_right, not both empty.  The sub-diagram of F then replays forever.
/// When both contexts are empty, F is the whole word and the recurrence was
/// seen at detected_step = earlier_step + period.
///
/// After left reversing the roles are mirrored: the word splits as Q·F·N and F
/// left-reverses to x·F·y⁻¹.
struct Cycle {
  std::size_t earlier_step = 0;
  std::size_t detected_step = 0;
  std::size_t context_left = 0;
  std::size_t context_right = 0;
  std::size_t period = 0;
  PositiveWord flank_left;
  PositiveWord flank_right;
  [[nodiscard]] std::size_t period_steps() const { return period; }
};

struct BudgetExceeded {
  SignedWord last_word;
  std::size_t steps = 0;
  std::size_t max_word_length_seen = 0;
};

using ReversingOutcome = std::variant<Terminated, Stuck, Cycle, BudgetExceeded>;

class ReversingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Compact code sequence helpers shared by the engine and its replays.
namespace detail {

inline std::vector<std::int16_t> codes_of(const SignedWord& w) {
  std::vector<std::int16_t> c;
  c.reserve(w.size());
  for (SignedLetter s : w) c.push_back(s.code());
  return c;
}

template <typename It>
SignedWord word_of(It first, It last) {
  std::vector<SignedLetter> out;
  out.reserve(static_cast<std::size_t>(std::distance(first, last)));
  for (; first != last; ++first) out.push_back(SignedLetter::from_code(*first));
  return SignedWord(std::move(out));
}

inline Letter letter_of(std::int16_t code) { return SignedLetter::from_code(code).letter(); }

/// Splits a positive–negative code sequence into (numerator, denominator).
inline Terminated terminated_from(const std::vector<std::int16_t>& w, std::size_t steps) {
  std::size_t k = 0;
  while (k < w.size() && w[k] > 0) ++k;
  std::vector<Letter> num, den;
  for (std::size_t i = 0; i < k; ++i) num.push_back(letter_of(w[i]));
  for (std::size_t i = w.size(); i-- > k;) den.push_back(letter_of(w[i]));
  return Terminated{PositiveWord(std::move(num)), PositiveWord(std::move(den)), steps};
}

/// Earlier words stored for the recurrence test.  A word splits as N·K·P with
/// N its maximal negative prefix and P its maximal positive suffix; c = x⁻¹·w·y
/// with x⁻¹ negative and y positive forces K(c) = K(w), N(w) a suffix of N(c)
/// and P(w) a prefix of P(c).  The factor pattern A·B·K·C·D → A·X·B·K·C·Y·D
/// also keeps K, so entries are bucketed by the core K.
class History {
 public:
  explicit History(std::size_t window) : window_(window) {}

  struct Match {
    std::size_t step;
    std::size_t cut_left;   // |x|
    std::size_t cut_right;  // |y|
  };

  struct FactorCandidate {
    std::size_t step;
    std::size_t context_left;   // |A|
    std::size_t context_right;  // |D|
    std::u16string factor;      // B·K·C
  };

  void prepare(const std::u16string& c) {
    const std::size_t L = c.size();
    a_ = 0;
    while (a_ < L && static_cast<std::int16_t>(c[a_]) < 0) ++a_;
    b_ = 0;
    while (b_ < L - a_ && static_cast<std::int16_t>(c[L - 1 - b_]) > 0) ++b_;
    hash_ = std::hash<std::u16string_view>{}(std::u16string_view(c.data() + a_, L - a_ - b_));
  }

  /// Whole-word recurrence c = x⁻¹·w·y; the earliest such w wins.
  std::optional<Match> find(const std::u16string& c) {
    std::optional<Match> best;
    auto it = buckets_.find(hash_);
    if (it == buckets_.end()) return best;
    auto& ids = it->second;
    std::erase_if(ids, [&](std::size_t id) { return id < first_id_; });
    for (std::size_t id : ids) {
      const Entry& e = entries_[id - first_id_];
      if (e.neg > a_ || e.pos > b_) continue;
      std::size_t i = a_ - e.neg, j = b_ - e.pos;
      if (i + j == 0) continue;
      if (std::u16string_view(c).substr(i, e.word.size()) != e.word) continue;
      if (!best || e.step < best->step) best = Match{e.step, i, j};
    }
    return best;
  }

  /// Earlier words A·B·K·C·D with c = A·X·B·K·C·Y·D (X, Y inserted, not both
  /// empty, A or D non-empty).  B and C are taken as short as possible.
  std::vector<FactorCandidate> factor_candidates(const std::u16string& c, std::size_t limit) {
    std::vector<FactorCandidate> out;
    auto it = buckets_.find(hash_);
    if (it == buckets_.end()) return out;
    const std::size_t L = c.size();
    const auto& ids = it->second;
    std::size_t seen = 0;
    for (auto rit = ids.rbegin(); rit != ids.rend() && seen < limit; ++rit, ++seen) {
      if (*rit < first_id_) break;
      const Entry& e = entries_[*rit - first_id_];
      if (e.neg > a_ || e.pos > b_ || (e.neg == a_ && e.pos == b_)) continue;
      const std::u16string& w = e.word;
      const std::size_t Lw = w.size();
      // negative prefixes: w[0, e.neg) against c[0, a_)
      std::size_t lcp = 0;
      while (lcp < e.neg && w[lcp] == c[lcp]) ++lcp;
      std::size_t lcs = 0;
      while (lcs < e.neg && w[e.neg - 1 - lcs] == c[a_ - 1 - lcs]) ++lcs;
      if (lcp + lcs < e.neg) continue;
      // positive suffixes: w[Lw-e.pos, Lw) against c[L-b_, L)
      std::size_t plcp = 0;
      while (plcp < e.pos && w[Lw - e.pos + plcp] == c[L - b_ + plcp]) ++plcp;
      std::size_t plcs = 0;
      while (plcs < e.pos && w[Lw - 1 - plcs] == c[L - 1 - plcs]) ++plcs;
      if (plcp + plcs < e.pos) continue;
      const std::size_t A = lcp;
      const std::size_t D = plcs;
      if (A == 0 && D == 0) continue;
      if (A + D >= Lw) continue;
      out.push_back(FactorCandidate{e.step, A, D, w.substr(A, Lw - A - D)});
    }
    return out;
  }

  void store(const std::u16string& c, std::size_t step) {
    entries_.push_back(Entry{c, a_, b_, step});
    buckets_[hash_].push_back(first_id_ + entries_.size() - 1);
    while (entries_.size() > window_) {
      entries_.pop_front();
      ++first_id_;
    }
  }

 private:
  struct Entry {
    std::u16string word;
    std::size_t neg;
    std::size_t pos;
    std::size_t step;
  };
  std::size_t window_;
  std::size_t first_id_ = 0;
  std::deque<Entry> entries_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
  std::size_t a_ = 0, b_ = 0, hash_ = 0;
};

}  // namespace detail

/// One step at the junction (pos, pos+1), which must read s⁻¹t.
[[nodiscard]] inline SignedWord reverse_step(const SignedWord& w, const RelationTable& T, std::size_t pos,
                                             ReversingRule* applied = nullptr) {
  if (pos + 1 >= w.size() || !w[pos].negative() || !w[pos + 1].positive())
    throw ReversingError("no negative-positive junction at position " + std::to_string(pos));
  Letter s = w[pos].letter(), t = w[pos + 1].letter();
  std::vector<SignedLetter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  if (s != t) {
    const TableEntry* e = T.find(s, t);
    if (!e) throw ReversingError("no relation for the junction at position " + std::to_string(pos));
    for (Letter l : e->left) out.emplace_back(l);
    for (auto it = e->right.letters().rbegin(); it != e->right.letters().rend(); ++it) out.emplace_back(*it, true);
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
  if (applied) *applied = ReversingRule{s == t, s, t};
  return SignedWord(std::move(out));
}

/// Right reversing with the leftmost-junction strategy.
///
/// The word is kept as a junction-free prefix plus a stack holding the rest,
/// so each step costs the length of the inserted complement.  Materializing the
/// whole word (for the trace and the recurrence test) costs its length.
[[nodiscard]] inline ReversingOutcome right_reverse(const SignedWord& w, const RelationTable& T,
                                                    const Budget& budget = {}, ReversingTrace* trace = nullptr) {
  std::vector<std::int16_t> left;
  std::vector<std::int16_t> right;
  left.reserve(w.size() * 2);
  right.reserve(w.size() * 2);
  for (auto it = w.entries().rbegin(); it != w.entries().rend(); ++it) right.push_back(it->code());
  if (trace) *trace = ReversingTrace{w, {}};

  const bool detect = budget.history_window > 0;
  detail::History history(budget.history_window);
  std::u16string current;
  auto materialize = [&] {
    current.clear();
    for (auto c : left) current.push_back(static_cast<char16_t>(c));
    for (auto it = right.rbegin(); it != right.rend(); ++it) current.push_back(static_cast<char16_t>(*it));
  };
  auto current_word = [&] {
    std::vector<std::int16_t> all(left);
    all.insert(all.end(), right.rbegin(), right.rend());
    return detail::word_of(all.begin(), all.end());
  };
  if (detect && w.size() <= budget.history_max_word) {
    materialize();
    history.prepare(current);
    history.store(current, 0);
  }
  std::unordered_map<std::size_t, bool> factor_verdicts;


  std::size_t steps = 0;
  std::size_t max_len = w.size();
  for (;;) {
    while (!right.empty() && !(!left.empty() && left.back() < 0 && right.back() > 0)) {
      left.push_back(right.back());
      right.pop_back();
    }
    if (right.empty()) return detail::terminated_from(left, steps);
    if (steps >= budget.max_steps) return BudgetExceeded{current_word(), steps, max_len};

    const std::size_t pos = left.size() - 1;
    const Letter s = detail::letter_of(left.back());
    const Letter t = detail::letter_of(right.back());
    if (s == t) {
      left.pop_back();
      right.pop_back();
    } else {
      const TableEntry* e = T.find(s, t);
      if (!e) return Stuck{current_word(), pos, s, t, steps};
      left.pop_back();
      right.pop_back();
      right.insert(right.end(), e->push_codes.begin(), e->push_codes.end());
    }
    ++steps;
    const std::size_t len = left.size() + right.size();
    max_len = std::max(max_len, len);
    if (trace) trace->steps.push_back(TraceStep{current_word(), ReversingRule{s == t, s, t}, pos});
    if (len > budget.max_length) return BudgetExceeded{current_word(), steps, max_len};
    if (detect && len <= budget.history_max_word) {
      materialize();
      history.prepare(current);
      if (auto m = history.find(current)) {
        std::vector<Letter> x, y;
        for (std::size_t i = m->cut_left; i-- > 0;) x.push_back(detail::letter_of(static_cast<std::int16_t>(current[i])));
        for (std::size_t i = current.size() - m->cut_right; i < current.size(); ++i)
          y.push_back(detail::letter_of(static_cast<std::int16_t>(current[i])));
        return Cycle{m->step, steps, 0, 0, steps - m->step, PositiveWord(std::move(x)), PositiveWord(std::move(y))};
      }
      if (budget.factor_cycles) {
        for (auto& cand : history.factor_candidates(current, 64)) {
          const std::size_t key = std::hash<std::u16string>{}(cand.factor) ^ (cand.factor.size() * 0x9e3779b97f4a7c15ULL);
          auto known = factor_verdicts.find(key);
          if (known != factor_verdicts.end() && !known->second) continue;
          Budget inner;
          inner.max_steps = 4 * (steps - cand.step) + 64;
          inner.max_length = budget.max_length;
          inner.history_window = std::max<std::size_t>(inner.max_steps + 1, 64);
          inner.history_max_word = budget.history_max_word;
          inner.factor_cycles = false;
          std::vector<SignedLetter> f;
          for (char16_t c : cand.factor) f.push_back(SignedLetter::from_code(static_cast<std::int16_t>(c)));
          ReversingOutcome o = right_reverse(SignedWord(std::move(f)), T, inner);
          const Cycle* c = std::get_if<Cycle>(&o);
          const bool ok = c && c->earlier_step == 0 && c->context_left == 0 && c->context_right == 0;
          factor_verdicts[key] = ok;
          if (ok)
            return Cycle{cand.step, steps, cand.context_left, cand.context_right, c->period, c->flank_left,
                         c->flank_right};
        }
      }
      history.store(current, steps);
    }
  }
}

/// Left reversing (s′s⁻¹ ↶ v⁻¹v′ for v·s′ = v′·s), computed as the mirror of
/// right reversing over the completed table of the opposite presentation.
[[nodiscard]] inline ReversingOutcome left_reverse(const SignedWord& w, const RelationTable& T_opposite,
                                                   const Budget& budget = {}, ReversingTrace* trace = nullptr) {
  ReversingTrace mirrored;
  ReversingOutcome o = right_reverse(mirror(w), T_opposite, budget, trace ? &mirrored : nullptr);
  if (trace) {
    *trace = ReversingTrace{w, {}};
    for (auto& st : mirrored.steps) {
      // In the mirrored word the junction occupies (p, p+1); before the step
      // the mirrored word had length |after| - delta, so recover it from the
      // previous word length.
      std::size_t prev_len = trace->steps.empty() ? w.size() : trace->steps.back().word.size();
      trace->steps.push_back(TraceStep{mirror(st.word), st.rule, prev_len - 2 - st.position});
    }
  }
  return std::visit(
      [](auto&& v) -> ReversingOutcome {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Terminated>) {
          return Terminated{v.numerator.mirror(), v.denominator.mirror(), v.steps};
        } else if constexpr (std::is_same_v<V, Stuck>) {
          return Stuck{mirror(v.word), v.word.size() - 2 - v.position, v.s, v.t, v.steps};
        } else if constexpr (std::is_same_v<V, Cycle>) {
          // mirror(N·x⁻¹·F·y·Q) = Q̃·ỹ·F̃·x̃⁻¹·Ñ
          return Cycle{v.earlier_step,  v.detected_step,         v.context_right,         v.context_left,
                       v.period,        v.flank_right.mirror(), v.flank_left.mirror()};
        } else {
          return BudgetExceeded{mirror(v.last_word), v.steps, v.max_word_length_seen};
        }
      },
      o);
}

enum class Strategy { Leftmost, Rightmost, Random };

/// Straightforward reversing with an arbitrary junction choice and no recurrence
/// test; used as a reference implementation.
[[nodiscard]] inline ReversingOutcome reverse_naive(SignedWord w, const RelationTable& T, Strategy strategy,
                                                    std::size_t max_steps = 100'000, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  std::size_t steps = 0, max_len = w.size();
  for (;;) {
    std::vector<std::size_t> junctions;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].negative() && w[i + 1].positive()) junctions.push_back(i);
    if (junctions.empty()) return detail::terminated_from(detail::codes_of(w), steps);
    if (steps >= max_steps) return BudgetExceeded{w, steps, max_len};
    std::size_t pos = junctions.front();
    if (strategy == Strategy::Rightmost) pos = junctions.back();
    if (strategy == Strategy::Random)
      pos = junctions[std::uniform_int_distribution<std::size_t>(0, junctions.size() - 1)(rng)];
    Letter s = w[pos].letter(), t = w[pos + 1].letter();
    if (s != t && !T.find(s, t)) return Stuck{w, pos, s, t, steps};
    w = reverse_step(w, T, pos);
    ++steps;
    max_len = std::max(max_len, w.size());
  }
}

[[nodiscard]] inline bool is_terminated(const ReversingOutcome& o) { return std::holds_alternative<Terminated>(o); }
[[nodiscard]] inline bool is_cycle(const ReversingOutcome& o) { return std::holds_alternative<Cycle>(o); }
[[nodiscard]] inline bool is_stuck(const ReversingOutcome& o) { return std::holds_alternative<Stuck>(o); }
[[nodiscard]] inline bool is_budget(const ReversingOutcome& o) { return std::holds_alternative<BudgetExceeded>(o); }

[[nodiscard]] inline std::size_t steps_of(const ReversingOutcome& o) {
  return std::visit(
      [](auto&& v) -> std::size_t {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Cycle>)
          return v.detected_step;
        else
          return v.steps;
      },
      o);
}

/// True when the outcome shows that no terminating reversing exists.
[[nodiscard]] inline bool proves_no_common_multiple(const ReversingOutcome& o) { return is_cycle(o) || is_stuck(o); }

/// Positive result of reversing: Terminated with empty denominator.
[[nodiscard]] inline std::optional<PositiveWord> positive_result(const ReversingOutcome& o) {
  if (auto t = std::get_if<Terminated>(&o); t && t->denominator.empty()) return t->numerator;
  return std::nullopt;
}

class TableNotTriangular : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class DivisibilityKind { Equal, ULeftDividesV, VLeftDividesU, NoCommonRightMultiple, Unknown };

struct Divisibility {
  DivisibilityKind kind = DivisibilityKind::Unknown;
  /// v′ for ULeftDividesV (u·v′ ≡ v), u′ for VLeftDividesU (v·u′ ≡ u).
  PositiveWord quotient;
  ReversingOutcome evidence;
};

/// Compares u and v for left divisibility by right reversing u⁻¹v.
[[nodiscard]] inline Divisibility compare_divisibility(const PositiveWord& u, const PositiveWord& v,
                                                       const RelationTable& T, const Budget& budget = {}) {
  ReversingOutcome o = right_reverse(negative_positive(u, v), T, budget);
  Divisibility d;
  if (auto t = std::get_if<Terminated>(&o)) {
    if (t->denominator.empty() && t->numerator.empty()) {
      d.kind = DivisibilityKind::Equal;
    } else if (t->denominator.empty()) {
      d.kind = DivisibilityKind::ULeftDividesV;
      d.quotient = t->numerator;
    } else if (t->numerator.empty()) {
      d.kind = DivisibilityKind::VLeftDividesU;
      d.quotient = t->denominator;
    } else {
      throw TableNotTriangular("reversing u⁻¹v ended with both sides non-empty");
    }
  } else if (proves_no_common_multiple(o)) {
    d.kind = DivisibilityKind::NoCommonRightMultiple;
  }
  d.evidence = std::move(o);
  return d;
}

/// u ≼ v (u left-divides v, possibly with empty quotient).
[[nodiscard]] inline std::optional<bool> left_divides(const PositiveWord& u, const PositiveWord& v,
                                                      const RelationTable& T, const Budget& budget = {}) {
  auto d = compare_divisibility(u, v, T, budget);
  switch (d.kind) {
    case DivisibilityKind::Equal:
    case DivisibilityKind::ULeftDividesV:
      return true;
    case DivisibilityKind::VLeftDividesU:
    case DivisibilityKind::NoCommonRightMultiple:
      return false;
    default:
      return std::nullopt;
  }
}

enum class MultipleStatus { Found, None, Unknown };

struct CommonMultiple {
  MultipleStatus status = MultipleStatus::Unknown;
  PositiveWord cm_left;   ///< u·v′
  PositiveWord cm_right;  ///< v·u′
  ReversingOutcome outcome;
};

[[nodiscard]] inline CommonMultiple common_right_multiple(const PositiveWord& u, const PositiveWord& v,
                                                          const RelationTable& T, const Budget& budget = {}) {
  CommonMultiple cm;
  cm.outcome = right_reverse(negative_positive(u, v), T, budget);
  if (auto t = std::get_if<Terminated>(&cm.outcome)) {
    cm.status = MultipleStatus::Found;
    cm.cm_left = u * t->numerator;
    cm.cm_right = v * t->denominator;
  } else if (proves_no_common_multiple(cm.outcome)) {
    cm.status = MultipleStatus::None;
  }
  return cm;
}

}  // namespace otype
