#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "otype/presentation.hpp"
#include "otype/reversing.hpp"
#include "otype/words.hpp"

namespace otype {

/// A completed relation top = W whose W ends with top (|W| > 1): the monoid is
/// not right-cancellative.
struct TailDiscard {
  std::size_t relation_index = 0;
  Letter top;
  PositiveWord rhs;
};

enum class PatternReason { EmptyV, FactorsOfRelation, Reversing };

/// A completed relation top = W with W beginning with (uv)^r·u·top, r ≥ 1,
/// u ≠ ε, and v⁻¹·top reversing to top·w₂.  Then top and u·top have no common
/// right-multiple.
struct PatternDiscard {
  std::size_t relation_index = 0;
  Letter top;
  PositiveWord rhs;
  PositiveWord u;
  PositiveWord v;
  std::size_t r = 1;
  PatternReason reason = PatternReason::EmptyV;
};

/// Reversing left_element⁻¹·right_element never terminates: the word at
/// earlier_step is N·F·Q (N negative with context_left letters, Q positive with
/// context_right letters) and F reverses in `period` steps to
/// flank_left⁻¹·F·flank_right.
struct CycleWitness {
  PositiveWord left_element;
  PositiveWord right_element;
  std::size_t earlier_step = 0;
  std::size_t detected_step = 0;
  std::size_t context_left = 0;
  std::size_t context_right = 0;
  std::size_t period = 0;
  PositiveWord flank_left;
  PositiveWord flank_right;
  [[nodiscard]] SignedWord start_word() const { return negative_positive(left_element, right_element); }
  [[nodiscard]] std::size_t period_steps() const { return period; }
};

/// Two letters from different chains: no relation s… = t… exists.
struct MultiChain {
  Letter s;
  Letter t;
};

/// w is right-quasi-central with s ≼ [w]: for every generator s, w⁻¹·s·w
/// reverses to the positive word image(s), so s·w ≡ w·image(s).
struct QuasiCentral {
  PositiveWord w;
  std::vector<std::pair<Letter, PositiveWord>> images;
};

/// δ dominates every generator, proved by a finite closure.  For each atom w,
/// δ⁻¹·w·δ reverses to a positive word T(w) that factors into atoms, so
/// δⁿ ≼ x·δⁿ for every product x of atoms and every n.  For each generator g,
/// g⁻¹·δ reverses to a positive product h of atoms, so g·δⁿ ≼ g·h·δⁿ = δⁿ⁺¹.
struct DominationClosure {
  PositiveWord delta;
  std::vector<PositiveWord> atoms;
  /// images[i] lists the atoms whose product is T(atoms[i]).
  std::vector<std::vector<std::size_t>> images;
  /// Factorization of the quotient δ / g for every generator g.
  std::vector<std::pair<Letter, std::vector<std::size_t>>> quotients;
};

/// Bounded check g·δⁿ ≼ δⁿ⁺¹ for n ≤ checked_up_to and every g listed.  Not a proof.
struct DominationBounded {
  PositiveWord delta;
  std::size_t checked_up_to = 0;
  std::vector<Letter> generators;
};

using Certificate = std::variant<TailDiscard, PatternDiscard, CycleWitness, MultiChain, QuasiCentral,
                                 DominationClosure, DominationBounded>;

[[nodiscard]] inline std::string certificate_kind(const Certificate& c) {
  static const char* names[] = {"TailDiscard",  "PatternDiscard",    "CycleWitness",     "MultiChain",
                                "QuasiCentral", "DominationClosure", "DominationBounded"};
  return names[c.index()];
}

enum class Status { RightOType, NotRightOType, Unknown };

[[nodiscard]] inline const char* to_string(Status s) {
  switch (s) {
    case Status::RightOType:
      return "RightOType";
    case Status::NotRightOType:
      return "NotRightOType";
    default:
      return "Unknown";
  }
}

struct AnalysisOptions {
  Budget budget{50'000, 50'000, 4096};
  std::size_t ceiling_length = 24;
  /// Largest k tried for a₁^k.
  std::size_t qc_max_power = 12;
  /// Largest ceiling period considered, and the number of its powers tried.
  std::size_t period_max = 8;
  std::size_t period_powers = 4;
  /// Extra quasi-central candidates: powers r^k of every word r of length
  /// 2..root_max_length, with |r^k| ≤ root_total_length.  0 disables.
  std::size_t root_max_length = 5;
  std::size_t root_total_length = 24;
  /// Step budget for the v-condition of a pattern discard.
  std::size_t pattern_steps = 2000;
  /// Step budget for each quasi-central candidate reversing.
  std::size_t candidate_steps = 20'000;
  /// Domination closures are searched over the quasi-central candidates, each
  /// with at most this many atoms and reversing steps.  0 atoms disables.
  std::size_t domination_atoms = 48;
  std::size_t domination_steps = 200'000;
  /// Range of the bounded domination evidence attached to Unknown verdicts.
  std::size_t domination_n = 6;
};

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Certificate> certificate;
  /// s₁, s₂, … of the computed ceiling prefix (s₁ = a₁).
  std::vector<Letter> ceiling;
  /// Explanation for Unknown verdicts.
  std::string reason;
  /// Attached to Unknown verdicts when the bounded check held.
  std::optional<DominationBounded> evidence;
  /// Total reversing steps spent.
  std::size_t steps = 0;
};

// ---------------------------------------------------------------------------
// Syntactic discards

namespace detail {

/// v = u₁⋯u_m where every u_k·top is a prefix of W.
inline bool factors_of_relation(const PositiveWord& v, const PositiveWord& W, Letter top) {
  std::vector<bool> reach(v.size() + 1, false);
  reach[0] = true;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!reach[j]) continue;
    for (std::size_t k = j + 1; k <= v.size() && k - j + 1 <= W.size(); ++k) {
      bool ok = W[k - j] == top;
      for (std::size_t i = j; ok && i < k; ++i) ok = W[i - j] == v[i];
      if (ok) reach[k] = true;
    }
  }
  return reach[v.size()];
}

/// v⁻¹·top reverses to a positive word beginning with top.
inline bool reverses_to_top(const PositiveWord& v, Letter top, const RelationTable& table, std::size_t steps,
                            std::size_t* used = nullptr) {
  Budget b{steps, std::max<std::size_t>(steps, 1000), 512};
  ReversingOutcome o = right_reverse(negative_positive(v, PositiveWord{top}), table, b);
  if (used) *used += steps_of(o);
  auto p = positive_result(o);
  return p && !p->empty() && p->front() == top;
}

/// W[0..len) has period p.
inline bool has_period(const PositiveWord& W, std::size_t p, std::size_t len) {
  for (std::size_t i = p; i < len; ++i)
    if (W[i] != W[i - p]) return false;
  return true;
}

}  // namespace detail

/// First syntactic discard over the relations of R̂: tail discards first, then
/// (uv)^r·u·top patterns by increasing |u|, |v|, r.
[[nodiscard]] inline std::optional<Certificate> discard_syntactic(const RelationTable& table,
                                                                  std::size_t pattern_steps = 2000,
                                                                  std::size_t* steps_used = nullptr) {
  const auto& rels = table.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    PositiveWord W = rels[i].rhs();
    if (W.size() > 1 && W.back() == rels[i].top) return TailDiscard{i, rels[i].top, W};
  }
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const Letter top = rels[i].top;
    const PositiveWord W = rels[i].rhs();
    const std::size_t n = W.size();
    for (std::size_t lu = 1; 2 * lu + 1 <= n; ++lu) {
      for (std::size_t lv = 0; 2 * lu + lv + 1 <= n; ++lv) {
        const std::size_t p = lu + lv;
        for (std::size_t r = 1; r * p + lu + 1 <= n; ++r) {
          const std::size_t len = r * p + lu;
          if (!detail::has_period(W, p, len)) break;
          if (W[len] != top) continue;
          PositiveWord u = W.sub(0, lu), v = W.sub(lu, lv);
          PatternReason reason;
          if (v.empty()) {
            reason = PatternReason::EmptyV;
          } else if (detail::factors_of_relation(v, W, top)) {
            reason = PatternReason::FactorsOfRelation;
          } else if (detail::reverses_to_top(v, top, table, pattern_steps, steps_used)) {
            reason = PatternReason::Reversing;
          } else {
            continue;
          }
          return PatternDiscard{i, top, W, std::move(u), std::move(v), r, reason};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Ceiling

struct CeilingResult {
  enum class Kind { Prefix, Refuted, Unknown, Ambiguous };
  Kind kind = Kind::Prefix;
  /// s₁, s₂, …, s_n.
  std::vector<Letter> letters;
  std::optional<CycleWitness> witness;
  /// For Ambiguous: the two letters giving equal elements.
  std::optional<std::pair<Letter, Letter>> tie;
  std::size_t steps = 0;
};

namespace detail {

inline std::optional<CycleWitness> witness_from(const PositiveWord& u, const PositiveWord& v,
                                                const ReversingOutcome& o) {
  if (auto c = std::get_if<Cycle>(&o))
    return CycleWitness{u,
                        v,
                        c->earlier_step,
                        c->detected_step,
                        c->context_left,
                        c->context_right,
                        c->period,
                        c->flank_left,
                        c->flank_right};
  return std::nullopt;
}

}  // namespace detail

/// Builds s₁ = a₁, s₂, … where s_n is the generator g maximizing g·s_{n−1}⋯s₁
/// for left divisibility.  `reverse_order` scans the
/// candidates bottom-up instead of top-down.
[[nodiscard]] inline CeilingResult ceiling_prefix(const TriangularStructure& T, const RelationTable& table,
                                                  std::size_t target_length, const Budget& budget = {},
                                                  bool reverse_order = false) {
  CeilingResult res;
  if (!T.single_chain()) {
    res.kind = CeilingResult::Kind::Unknown;
    return res;
  }
  std::vector<Letter> order = T.chain_order();
  if (reverse_order) std::reverse(order.begin(), order.end());
  res.letters.push_back(T.top());
  PositiveWord suffix{T.top()};  // s_{n−1}⋯s₁
  while (res.letters.size() < target_length) {
    auto cmp = [&](Letter x, Letter y) {
      PositiveWord u = PositiveWord{x} * suffix, v = PositiveWord{y} * suffix;
      Divisibility d = compare_divisibility(u, v, table, budget);
      res.steps += steps_of(d.evidence);
      return std::tuple{d, u, v};
    };
    Letter best = order.front();
    std::vector<bool> checked(order.size(), false);
    std::size_t best_idx = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
      auto [d, u, v] = cmp(best, order[i]);
      switch (d.kind) {
        case DivisibilityKind::ULeftDividesV:
          best = order[i];
          best_idx = i;
          std::fill(checked.begin(), checked.end(), false);
          break;
        case DivisibilityKind::VLeftDividesU:
          checked[i] = true;
          break;
        case DivisibilityKind::Equal:
          res.kind = CeilingResult::Kind::Ambiguous;
          res.tie = std::pair{best, order[i]};
          return res;
        case DivisibilityKind::NoCommonRightMultiple:
          res.kind = CeilingResult::Kind::Refuted;
          res.witness = detail::witness_from(u, v, d.evidence);
          if (!res.witness) res.kind = CeilingResult::Kind::Unknown;
          return res;
        case DivisibilityKind::Unknown:
          res.kind = CeilingResult::Kind::Unknown;
          return res;
      }
    }
    // Letters compared only against an earlier leader are re-checked.
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == best_idx || checked[i]) continue;
      auto [d, u, v] = cmp(best, order[i]);
      if (d.kind == DivisibilityKind::VLeftDividesU) continue;
      if (d.kind == DivisibilityKind::NoCommonRightMultiple) {
        res.kind = CeilingResult::Kind::Refuted;
        res.witness = detail::witness_from(u, v, d.evidence);
        if (!res.witness) res.kind = CeilingResult::Kind::Unknown;
      } else if (d.kind == DivisibilityKind::Equal) {
        res.kind = CeilingResult::Kind::Ambiguous;
        res.tie = std::pair{best, order[i]};
      } else {
        res.kind = CeilingResult::Kind::Unknown;
      }
      return res;
    }
    res.letters.push_back(best);
    suffix = PositiveWord{best} * suffix;
  }
  return res;
}

/// Smallest p ≤ max_period such that s₁…s_n is p-periodic and n ≥ 3p; the
/// returned word is s_p⋯s₁.
[[nodiscard]] inline std::optional<PositiveWord> ceiling_period(const std::vector<Letter>& letters,
                                                                std::size_t max_period = 8) {
  for (std::size_t p = 1; p <= max_period && 3 * p <= letters.size(); ++p) {
    bool ok = true;
    for (std::size_t i = p; ok && i < letters.size(); ++i) ok = letters[i] == letters[i - p];
    if (ok) return PositiveWord(std::vector<Letter>(letters.rend() - static_cast<std::ptrdiff_t>(p), letters.rend()));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Quasi-central elements and domination

struct QuasiCentralCheck {
  std::optional<QuasiCentral> certificate;
  /// Generator whose test failed (or a₁ for the divisibility precondition).
  std::optional<Letter> failed_at;
  std::size_t steps = 0;
};

/// Checks a₁ ≼ [w] and w ≼ s·w for every generator s; the
/// a₁ test is syntactic when w starts with a₁, and the commutation with a₁ is
/// skipped when w is a power of a₁.
[[nodiscard]] inline QuasiCentralCheck verify_quasi_central(const TriangularStructure& T, const RelationTable& table,
                                                            const PositiveWord& w, const Budget& budget = {}) {
  QuasiCentralCheck out;
  if (w.empty() || !T.single_chain()) return out;
  const Letter a1 = T.top();
  if (w.front() != a1) {
    Divisibility d = compare_divisibility(PositiveWord{a1}, w, table, budget);
    out.steps += steps_of(d.evidence);
    if (d.kind != DivisibilityKind::Equal && d.kind != DivisibilityKind::ULeftDividesV) {
      out.failed_at = a1;
      return out;
    }
  }
  const bool power_of_top = std::all_of(w.begin(), w.end(), [&](Letter l) { return l == a1; });
  QuasiCentral qc{w, {}};
  for (Letter s : T.chain_order()) {
    if (s == a1 && power_of_top) {
      qc.images.emplace_back(s, PositiveWord{a1});
      continue;
    }
    SignedWord test = invert(w) * SignedWord(PositiveWord{s} * w);
    ReversingOutcome o = right_reverse(test, table, budget);
    out.steps += steps_of(o);
    auto img = positive_result(o);
    if (!img) {
      out.failed_at = s;
      return out;
    }
    qc.images.emplace_back(s, std::move(*img));
  }
  std::sort(qc.images.begin(), qc.images.end(), [](auto& x, auto& y) { return x.first < y.first; });
  out.certificate = std::move(qc);
  return out;
}

struct DominationCheck {
  enum class Kind { AllHold, FailsAt, Unknown };
  Kind kind = Kind::AllHold;
  std::size_t n = 0;
  std::size_t steps = 0;
};

/// Checks g·δⁿ ≼ δⁿ⁺¹ for n = 0…n_max; with progression m > 1 only
/// n ≡ m−1 (mod m) are checked.
[[nodiscard]] inline DominationCheck check_domination_bounded(const RelationTable& table, const PositiveWord& delta,
                                                              const PositiveWord& g, std::size_t n_max,
                                                              const Budget& budget = {}, std::size_t progression = 1) {
  DominationCheck out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (progression > 1 && n % progression != progression - 1) continue;
    Divisibility d = compare_divisibility(g * delta.power(n), delta.power(n + 1), table, budget);
    out.steps += steps_of(d.evidence);
    if (d.kind == DivisibilityKind::Equal || d.kind == DivisibilityKind::ULeftDividesV) continue;
    out.kind = d.kind == DivisibilityKind::Unknown ? DominationCheck::Kind::Unknown : DominationCheck::Kind::FailsAt;
    out.n = n;
    return out;
  }
  out.n = n_max;
  return out;
}

class QuasiCentralMissing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Proof that δ dominates g: δ^m is right-quasi-central and g·δ^{m−1} ≼ δ.
struct DominationProof {
  PositiveWord delta;
  std::size_t m = 1;
  PositiveWord g;
  PositiveWord quotient;  ///< g·δ^{m−1}·quotient ≡ δ
  QuasiCentral quasi_central;
};

[[nodiscard]] inline std::optional<DominationProof> verify_domination_certified(const RelationTable& table,
                                                                               const PositiveWord& delta,
                                                                               std::size_t m, const PositiveWord& g,
                                                                               const std::optional<QuasiCentral>& qc,
                                                                               const Budget& budget = {}) {
  if (m == 0 || !qc || qc->w != delta.power(m))
    throw QuasiCentralMissing("no quasi-central certificate for the requested power of delta");
  Divisibility d = compare_divisibility(g * delta.power(m - 1), delta, table, budget);
  if (d.kind == DivisibilityKind::Equal || d.kind == DivisibilityKind::ULeftDividesV)
    return DominationProof{delta, m, g, d.quotient, *qc};
  return std::nullopt;
}

namespace detail {

/// Builds a DominationClosure for δ: every word still to be closed is split
/// into the fewest new atoms (pieces with a positive image), reusing known
/// atoms where possible.
class ClosureBuilder {
 public:
  ClosureBuilder(const RelationTable& table, PositiveWord delta, const Budget& budget, std::size_t max_atoms,
                 std::size_t max_piece, std::size_t max_steps)
      : table_(table),
        delta_(std::move(delta)),
        budget_(budget),
        max_atoms_(max_atoms),
        max_piece_(max_piece),
        max_steps_(max_steps) {}

  std::optional<DominationClosure> run(const std::vector<Letter>& generators) {
    DominationClosure out{delta_, {}, {}, {}};
    for (Letter g : generators) {
      Divisibility d = compare_divisibility(PositiveWord{g}, delta_, table_, budget_);
      steps_ += steps_of(d.evidence);
      if (d.kind != DivisibilityKind::Equal && d.kind != DivisibilityKind::ULeftDividesV) return std::nullopt;
      auto f = factorize(d.quotient);
      if (!f) return std::nullopt;
      out.quotients.emplace_back(g, std::move(*f));
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      const PositiveWord image = *image_of(atoms_[i]);
      auto f = factorize(image);
      if (!f) return std::nullopt;
      images_.resize(atoms_.size());
      images_[i] = std::move(*f);
    }
    out.atoms = atoms_;
    out.images = images_;
    return out;
  }

  [[nodiscard]] std::size_t steps() const { return steps_; }

 private:
  const std::optional<PositiveWord>& image_of(const PositiveWord& w) {
    static const std::optional<PositiveWord> none;
    auto it = images_cache_.find(w);
    if (it != images_cache_.end()) return it->second;
    if (steps_ > max_steps_) return none;
    ReversingOutcome o = right_reverse(invert(delta_) * SignedWord(w * delta_), table_, budget_);
    steps_ += steps_of(o);
    return images_cache_.emplace(w, positive_result(o)).first->second;
  }

  std::optional<std::vector<std::size_t>> factorize(const PositiveWord& x) {
    const std::size_t L = x.size();
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    // cost = (new atoms, pieces), compared lexicographically
    std::vector<std::pair<std::size_t, std::size_t>> cost(L + 1, {inf, inf});
    std::vector<std::size_t> from(L + 1, 0);
    cost[0] = {0, 0};
    for (std::size_t i = 0; i < L; ++i) {
      if (cost[i].first == inf) continue;
      for (std::size_t j = i + 1; j <= L && j - i <= max_piece_; ++j) {
        PositiveWord piece = x.sub(i, j - i);
        std::size_t extra;
        if (index_.count(piece)) {
          extra = 0;
        } else if (image_of(piece)) {
          extra = 1;
        } else {
          continue;
        }
        std::pair<std::size_t, std::size_t> c{cost[i].first + extra, cost[i].second + 1};
        if (c < cost[j]) {
          cost[j] = c;
          from[j] = i;
        }
      }
    }
    if (cost[L].first == inf) return std::nullopt;
    std::vector<std::size_t> pieces;
    for (std::size_t j = L; j > 0; j = from[j]) {
      PositiveWord piece = x.sub(from[j], j - from[j]);
      auto it = index_.find(piece);
      if (it == index_.end()) {
        if (atoms_.size() >= max_atoms_) return std::nullopt;
        it = index_.emplace(piece, atoms_.size()).first;
        atoms_.push_back(piece);
      }
      pieces.push_back(it->second);
    }
    std::reverse(pieces.begin(), pieces.end());
    return pieces;
  }

  const RelationTable& table_;
  PositiveWord delta_;
  Budget budget_;
  std::size_t max_atoms_;
  std::size_t max_piece_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::vector<PositiveWord> atoms_;
  std::vector<std::vector<std::size_t>> images_;
  std::map<PositiveWord, std::size_t> index_;
  std::map<PositiveWord, std::optional<PositiveWord>> images_cache_;
};

inline PositiveWord product(const std::vector<PositiveWord>& atoms, const std::vector<std::size_t>& ids) {
  PositiveWord out;
  for (std::size_t i : ids) out = out * atoms.at(i);
  return out;
}

}  // namespace detail

struct DominationSearch {
  std::optional<DominationClosure> certificate;
  std::size_t steps = 0;
};

/// Looks for a finite closure proving that δ dominates every generator.
[[nodiscard]] inline DominationSearch find_domination_closure(const TriangularStructure& T, const RelationTable& table,
                                                              const PositiveWord& delta, const Budget& budget = {},
                                                              std::size_t max_atoms = 48, std::size_t max_piece = 24,
                                                              std::size_t max_steps = 200'000) {
  detail::ClosureBuilder b(table, delta, budget, max_atoms, max_piece, max_steps);
  DominationSearch out;
  out.certificate = b.run(T.chain_order());
  out.steps = b.steps();
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline

namespace detail {

/// Words r of length 2..max_len that are not proper powers, in shortlex order.
inline std::vector<PositiveWord> primitive_roots(std::size_t alphabet_size, std::size_t max_len) {
  std::vector<PositiveWord> out;
  for (std::size_t len = 2; len <= max_len; ++len) {
    std::vector<Letter> w(len, Letter{0});
    for (;;) {
      bool primitive = true;
      for (std::size_t p = 1; p < len && primitive; ++p)
        if (len % p == 0 && has_period(PositiveWord(w), p, len)) primitive = false;
      if (primitive) out.emplace_back(w);
      std::size_t k = len;
      while (k > 0 && w[k - 1].id + 1u == alphabet_size) w[--k] = Letter{0};
      if (k == 0) break;
      ++w[k - 1].id;
    }
  }
  return out;
}

}  // namespace detail

/// Quasi-central candidates in the order they are tried: shorter words first;
/// at equal length, powers of a₁, then powers of the ceiling period, then
/// powers of other short words.
[[nodiscard]] inline std::vector<PositiveWord> quasi_central_candidates(const TriangularStructure& T,
                                                                        const std::optional<PositiveWord>& period,
                                                                        const AnalysisOptions& opt) {
  struct Cand {
    PositiveWord w;
    int group;
  };
  std::vector<Cand> all;
  const Letter a1 = T.top();
  for (std::size_t k = 1; k <= opt.qc_max_power; ++k) all.push_back({PositiveWord{a1}.power(k), 0});
  if (period)
    for (std::size_t j = 1; j <= opt.period_powers; ++j) all.push_back({period->power(j), 1});
  if (opt.root_max_length >= 2)
    for (auto& r : detail::primitive_roots(T.alphabet_size, opt.root_max_length))
      for (std::size_t k = 1; k * r.size() <= opt.root_total_length; ++k) all.push_back({r.power(k), 2});
  std::stable_sort(all.begin(), all.end(), [](const Cand& x, const Cand& y) {
    if (x.w.size() != y.w.size()) return x.w.size() < y.w.size();
    return x.group < y.group;
  });
  std::vector<PositiveWord> out;
  for (auto& c : all)
    if (std::find(out.begin(), out.end(), c.w) == out.end()) out.push_back(std::move(c.w));
  return out;
}

/// The generic program: triangularity, chains, syntactic discards, ceiling
/// cycles, then the quasi-central search.
[[nodiscard]] inline Verdict analyze(const PositivePresentation& P, const AnalysisOptions& opt = {}) {
  Verdict v;
  auto T = detect_right_triangular(P);
  if (!T) {
    v.reason = "not right-triangular";
    return v;
  }
  RelationTable table = complete(*T);
  if (!T->single_chain()) {
    v.status = Status::NotRightOType;
    v.certificate = MultiChain{T->chains[0].front(), T->chains[1].front()};
    return v;
  }
  if (auto c = discard_syntactic(table, opt.pattern_steps, &v.steps)) {
    v.status = Status::NotRightOType;
    v.certificate = std::move(*c);
    return v;
  }
  CeilingResult ceiling = ceiling_prefix(*T, table, opt.ceiling_length, opt.budget);
  v.steps += ceiling.steps;
  v.ceiling = ceiling.letters;
  if (ceiling.kind == CeilingResult::Kind::Refuted) {
    v.status = Status::NotRightOType;
    v.certificate = *ceiling.witness;
    return v;
  }
  std::optional<PositiveWord> period;
  if (ceiling.kind == CeilingResult::Kind::Prefix) period = ceiling_period(ceiling.letters, opt.period_max);
  Budget cand_budget = opt.budget;
  cand_budget.max_steps = std::min(cand_budget.max_steps, opt.candidate_steps);
  for (const PositiveWord& w : quasi_central_candidates(*T, period, opt)) {
    QuasiCentralCheck q = verify_quasi_central(*T, table, w, cand_budget);
    v.steps += q.steps;
    if (q.certificate) {
      v.status = Status::RightOType;
      v.certificate = std::move(*q.certificate);
      return v;
    }
  }
  if (opt.domination_atoms > 0) {
    for (const PositiveWord& w : quasi_central_candidates(*T, period, opt)) {
      DominationSearch d =
          find_domination_closure(*T, table, w, cand_budget, opt.domination_atoms, 24, opt.domination_steps);
      v.steps += d.steps;
      if (d.certificate) {
        v.status = Status::RightOType;
        v.certificate = std::move(*d.certificate);
        return v;
      }
    }
  }
  v.reason = "no quasi-central candidate verified";
  if (ceiling.kind == CeilingResult::Kind::Unknown) v.reason += "; ceiling budget exhausted";
  if (ceiling.kind == CeilingResult::Kind::Ambiguous) v.reason += "; ceiling tie between distinct letters";
  if (opt.domination_n > 0) {
    PositiveWord delta = period.value_or(PositiveWord{T->top()});
    DominationBounded ev{delta, opt.domination_n, {}};
    bool all = true;
    for (Letter g : T->chain_order()) {
      DominationCheck d = check_domination_bounded(table, delta, PositiveWord{g}, opt.domination_n, opt.budget);
      v.steps += d.steps;
      if (d.kind != DominationCheck::Kind::AllHold) {
        all = false;
        break;
      }
      ev.generators.push_back(g);
    }
    if (all) {
      v.evidence = ev;
      v.reason += "; likely right-O-type (bounded domination holds)";
    }
  }
  return v;
}

struct OTypeVerdict {
  Verdict right;
  Verdict left;  ///< verdict for the opposite presentation
  [[nodiscard]] bool otype() const {
    return right.status == Status::RightOType && left.status == Status::RightOType;
  }
};

[[nodiscard]] inline OTypeVerdict analyze_otype(const PositivePresentation& P, const AnalysisOptions& opt = {}) {
  return OTypeVerdict{analyze(P, opt), analyze(opposite(P), opt)};
}

// ---------------------------------------------------------------------------
// Independent certificate replay

namespace detail {

/// Leftmost-strategy replay by single steps; returns the words at the given
/// step indices, or nothing if the sequence stops early.
inline std::optional<std::vector<SignedWord>> replay_words(SignedWord w, const RelationTable& table,
                                                           std::vector<std::size_t> at) {
  std::vector<SignedWord> out(at.size());
  std::size_t last = at.empty() ? 0 : *std::max_element(at.begin(), at.end());
  for (std::size_t step = 0;; ++step) {
    for (std::size_t k = 0; k < at.size(); ++k)
      if (at[k] == step) out[k] = w;
    if (step == last) return out;
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].negative() && w[i + 1].positive()) {
        pos = i;
        break;
      }
    if (pos == w.size()) return std::nullopt;
    try {
      w = reverse_step(w, table, pos);
    } catch (const ReversingError&) {
      return std::nullopt;
    }
  }
}

}  // namespace detail

/// Re-checks a certificate against the presentation from scratch.  Discards and
/// cycles are checked for the presentation itself (right side).
[[nodiscard]] inline bool verify_certificate(const PositivePresentation& P, const Certificate& cert,
                                             const Budget& budget = {}) {
  auto T = detect_right_triangular(P);
  if (!T) return false;
  RelationTable table = complete(*T);
  const auto& rels = table.relations();
  return std::visit(
      [&](auto&& c) -> bool {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, TailDiscard>) {
          return c.relation_index < rels.size() && rels[c.relation_index].top == c.top &&
                 rels[c.relation_index].rhs() == c.rhs && c.rhs.size() > 1 && c.rhs.back() == c.top;
        } else if constexpr (std::is_same_v<C, PatternDiscard>) {
          if (c.relation_index >= rels.size() || rels[c.relation_index].top != c.top ||
              rels[c.relation_index].rhs() != c.rhs || c.u.empty() || c.r < 1)
            return false;
          PositiveWord prefix = (c.u * c.v).power(c.r) * c.u * PositiveWord{c.top};
          if (!c.rhs.starts_with(prefix)) return false;
          if (c.v.empty()) return true;
          // a decomposition into factors u_k with u_k·top a prefix of the relation
          // also makes v⁻¹·top reverse to top·(…), so reversing decides both cases
          return detail::factors_of_relation(c.v, c.rhs, c.top) ||
                 detail::reverses_to_top(c.v, c.top, table, budget.max_steps);
        } else if constexpr (std::is_same_v<C, CycleWitness>) {
          if (c.flank_left.empty() && c.flank_right.empty()) return false;
          if (c.period == 0) return false;
          auto at = detail::replay_words(c.start_word(), table, {c.earlier_step});
          if (!at) return false;
          const SignedWord& w = (*at)[0];
          if (c.context_left + c.context_right >= w.size()) return false;
          for (std::size_t i = 0; i < c.context_left; ++i)
            if (!w[i].negative()) return false;
          for (std::size_t i = w.size() - c.context_right; i < w.size(); ++i)
            if (!w[i].positive()) return false;
          SignedWord f(std::vector<SignedLetter>(w.begin() + static_cast<std::ptrdiff_t>(c.context_left),
                                                 w.end() - static_cast<std::ptrdiff_t>(c.context_right)));
          auto later = detail::replay_words(f, table, {c.period});
          if (!later) return false;
          return (*later)[0] == invert(c.flank_left) * f * SignedWord(c.flank_right);
        } else if constexpr (std::is_same_v<C, MultiChain>) {
          if (c.s == c.t || table.find(c.s, c.t)) return false;
          return is_stuck(reverse_naive(negative_positive(PositiveWord{c.s}, PositiveWord{c.t}), table,
                                        Strategy::Leftmost, 1));
        } else if constexpr (std::is_same_v<C, QuasiCentral>) {
          if (!T->single_chain() || c.w.empty()) return false;
          const Letter a1 = T->top();
          if (c.w.front() != a1 && !left_divides(PositiveWord{a1}, c.w, table, budget).value_or(false)) return false;
          const bool power_of_top = std::all_of(c.w.begin(), c.w.end(), [&](Letter l) { return l == a1; });
          for (std::size_t s = 0; s < P.alphabet().size(); ++s) {
            Letter l{static_cast<std::uint16_t>(s)};
            auto it = std::find_if(c.images.begin(), c.images.end(), [&](auto& e) { return e.first == l; });
            if (it == c.images.end()) return false;
            if (l == a1 && power_of_top) {
              if (it->second != PositiveWord{a1}) return false;
              continue;
            }
            auto img = positive_result(
                reverse_naive(invert(c.w) * SignedWord(PositiveWord{l} * c.w), table, Strategy::Rightmost,
                              budget.max_steps));
            if (!img || *img != it->second) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<C, DominationClosure>) {
          if (!T->single_chain() || c.delta.empty() || c.images.size() != c.atoms.size()) return false;
          for (std::size_t i = 0; i < c.atoms.size(); ++i) {
            if (c.atoms[i].empty()) return false;
            for (std::size_t k : c.images[i])
              if (k >= c.atoms.size()) return false;
            auto img = positive_result(reverse_naive(invert(c.delta) * SignedWord(c.atoms[i] * c.delta), table,
                                                     Strategy::Rightmost, budget.max_steps));
            if (!img || *img != detail::product(c.atoms, c.images[i])) return false;
          }
          for (std::size_t s = 0; s < P.alphabet().size(); ++s) {
            Letter l{static_cast<std::uint16_t>(s)};
            auto it = std::find_if(c.quotients.begin(), c.quotients.end(), [&](auto& e) { return e.first == l; });
            if (it == c.quotients.end()) return false;
            for (std::size_t k : it->second)
              if (k >= c.atoms.size()) return false;
            auto h = positive_result(
                reverse_naive(negative_positive(PositiveWord{l}, c.delta), table, Strategy::Rightmost, budget.max_steps));
            if (!h || *h != detail::product(c.atoms, it->second)) return false;
          }
          return true;
        } else {
          for (Letter g : c.generators)
            if (check_domination_bounded(table, c.delta, PositiveWord{g}, c.checked_up_to, budget).kind !=
                DominationCheck::Kind::AllHold)
              return false;
          return true;
        }
      },
      cert);
}

}  // namespace otype
