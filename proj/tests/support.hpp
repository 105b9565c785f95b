#pragma once

// Shared helpers for the test binaries: parsing shorthands, random words and
// an independent congruence oracle that never reverses anything.

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "otype/analysis.hpp"
#include "otype/decision.hpp"
#include "otype/families.hpp"
#include "otype/presentation.hpp"
#include "otype/reversing.hpp"
#include "otype/words.hpp"

namespace otype::testing {

inline PositivePresentation pres(std::string_view text) { return parse_presentation(text); }

/// "gens: a b\nrel: a = <rhs>"
inline PositivePresentation two(std::string_view rhs) {
  return parse_presentation("gens: a b\nrel: a = " + std::string(rhs) + "\n");
}

inline SignedWord sw(const PositivePresentation& P, std::string_view text) {
  return parse_signed_word(P.alphabet(), text);
}

inline PositiveWord pw(const PositivePresentation& P, std::string_view text) {
  return parse_positive_word(P.alphabet(), text);
}

inline RelationTable right_table(const PositivePresentation& P) { return complete(*detect_right_triangular(P)); }

inline RelationTable left_table(const PositivePresentation& P) {
  return complete(*detect_right_triangular(opposite(P)));
}

inline PositiveWord random_positive(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint16_t> letter(0, static_cast<std::uint16_t>(alphabet - 1));
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = Letter{letter(rng)};
  return PositiveWord(std::move(out));
}

inline SignedWord random_signed(std::mt19937_64& rng, std::size_t alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint16_t> letter(0, static_cast<std::uint16_t>(alphabet - 1));
  std::bernoulli_distribution neg(0.5);
  std::vector<SignedLetter> out(len(rng));
  for (auto& l : out) l = SignedLetter(Letter{letter(rng)}, neg(rng));
  return SignedWord(std::move(out));
}

/// The congruence generated by the relations, restricted to positive words of
/// length at most `bound`: words are joined whenever one relation application
/// (in either direction, at any position) turns one into the other without
/// leaving the bound.  Joined words are equal in the monoid; unjoined words
/// may still be equal through longer intermediate words.
class CongruenceOracle {
 public:
  CongruenceOracle(const PositivePresentation& P, std::size_t bound)
      : n_(P.alphabet().size()), bound_(bound) {
    std::size_t total = 0, layer = 1;
    for (std::size_t len = 0; len <= bound; ++len, layer *= n_) {
      offset_.push_back(total);
      total += layer;
    }
    parent_.resize(total);
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    std::vector<std::pair<std::vector<std::uint16_t>, std::vector<std::uint16_t>>> rules;
    for (const auto& r : P.relations()) rules.push_back({codes(r.lhs), codes(r.rhs)});
    std::vector<std::uint16_t> w;
    for (std::size_t len = 0; len <= bound; ++len) {
      w.assign(len, 0);
      for (;;) {
        for (const auto& [l, r] : rules) {
          apply(w, l, r);
          apply(w, r, l);
        }
        std::size_t k = len;
        while (k > 0 && w[k - 1] + 1u == n_) w[--k] = 0;
        if (k == 0) break;
        ++w[k - 1];
      }
    }
  }

  [[nodiscard]] bool equal(const PositiveWord& u, const PositiveWord& v) {
    return find(index(codes(u))) == find(index(codes(v)));
  }

 private:
  static std::vector<std::uint16_t> codes(const PositiveWord& w) {
    std::vector<std::uint16_t> out;
    for (Letter l : w) out.push_back(l.id);
    return out;
  }

  std::size_t index(const std::vector<std::uint16_t>& w) const {
    std::size_t i = 0;
    for (auto c : w) i = i * n_ + c;
    return offset_[w.size()] + i;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void apply(const std::vector<std::uint16_t>& w, const std::vector<std::uint16_t>& from,
             const std::vector<std::uint16_t>& to) {
    if (w.size() < from.size() || w.size() - from.size() + to.size() > bound_) return;
    for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
      if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
      std::vector<std::uint16_t> x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      x.insert(x.end(), to.begin(), to.end());
      x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(i + from.size()), w.end());
      std::size_t a = find(index(w)), b = find(index(x));
      if (a != b) parent_[a] = b;
    }
  }

  std::size_t n_;
  std::size_t bound_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> parent_;
};

/// All positive words of length at most max_len, shortlex.
inline std::vector<PositiveWord> all_words(std::size_t alphabet, std::size_t max_len) {
  std::vector<PositiveWord> out;
  std::vector<Letter> w;
  for (std::size_t len = 0; len <= max_len; ++len) {
    w.assign(len, Letter{0});
    for (;;) {
      out.emplace_back(w);
      std::size_t k = len;
      while (k > 0 && w[k - 1].id + 1u == alphabet) w[--k] = Letter{0};
      if (k == 0) break;
      ++w[k - 1].id;
    }
  }
  return out;
}

/// Checks the expected Δ of a fixture directly: quasi-centrality by
/// reversing, centrality and the listed φ images through the word problem,
/// domination by the bounded test.  Returns an empty string when all hold.
inline std::string check_expected_delta(const FamilyInstance& f, std::size_t domination_n = 4) {
  if (!f.expected.delta) return {};
  const PositivePresentation& P = f.presentation;
  auto T = detect_right_triangular(P);
  if (!T) return "not right-triangular";
  RelationTable table = complete(*T);
  const PositiveWord& delta = *f.expected.delta;
  const std::string shown = format(P.alphabet(), delta);
  if (f.expected.delta_kind == DeltaKind::Dominating) {
    for (std::size_t s = 0; s < P.alphabet().size(); ++s)
      if (check_domination_bounded(table, delta, PositiveWord{Letter{static_cast<std::uint16_t>(s)}}, domination_n)
              .kind != DominationCheck::Kind::AllHold)
        return shown + " does not dominate " + P.alphabet().names()[s];
    return {};
  }
  auto qc = verify_quasi_central(*T, table, delta, Budget{1'000'000, 1'000'000});
  if (!qc.certificate) return shown + " is not quasi-central";
  Decider d(P, true);
  auto same = [&](const PositiveWord& x, const PositiveWord& y) {
    return d.word_problem(negative_positive(x, y)).answer == WordProblemAnswer::Equal1;
  };
  for (const auto& [s, img] : qc.certificate->images) {
    if (f.expected.delta_kind == DeltaKind::Central && !same(img, PositiveWord{s}))
      return shown + " is not central at " + P.alphabet().name(s);
    for (const auto& [t, want] : f.expected.phi)
      if (t == s && !same(img, want)) return "phi(" + P.alphabet().name(s) + ") differs for " + shown;
  }
  return {};
}

}  // namespace otype::testing
