#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "otype/analysis.hpp"
#include "otype/presentation.hpp"
#include "otype/words.hpp"

namespace otype {

enum class Side { Right, Left };

enum class DeltaKind { Central, QuasiCentral, Dominating };

/// A known non-terminating reversing: u reverses in `steps` steps to
/// v⁻¹·u·v (right side) or v·u·v⁻¹ (left side).
struct ExpectedCycle {
  Side side = Side::Right;
  SignedWord u;
  PositiveWord v;
  std::size_t steps = 0;
};

/// A known discard: the relation reads top = (u·v)^r·u·top… (or its mirror).
struct ExpectedDiscard {
  Side side = Side::Right;
  PositiveWord u;
  PositiveWord v;
};

/// Expected results.  Unset verdicts mean nothing is claimed.
struct Expected {
  std::optional<Status> right;
  std::optional<Status> left;
  std::optional<PositiveWord> delta;
  DeltaKind delta_kind = DeltaKind::QuasiCentral;
  /// Right endomorphism images φ(s) with s·Δ = Δ·φ(s).
  std::vector<std::pair<Letter, PositiveWord>> phi;
  std::optional<ExpectedDiscard> discard;
  std::optional<ExpectedCycle> cycle;
  /// Period of the right ceiling, written s_k⋯s₁ as in ^∞(s_k⋯s₁).
  std::optional<PositiveWord> ceiling_period;
  bool right_triangular = true;
  std::string note;
};

struct FamilyInstance {
  std::string family;
  std::string name;
  std::vector<std::pair<std::string, long>> parameters;
  PositivePresentation presentation;
  Expected expected;
};

class FamilyParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline PositiveWord letters(std::initializer_list<std::uint16_t> ids) {
  std::vector<Letter> out;
  for (auto i : ids) out.push_back(Letter{i});
  return PositiveWord(std::move(out));
}

inline PositiveWord pw(const PositivePresentation& P, std::string_view text) {
  return parse_positive_word(P.alphabet(), text);
}

inline void require(bool ok, const char* what) {
  if (!ok) throw FamilyParameterError(what);
}

inline std::vector<std::string> letter_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

inline FamilyInstance from_text(std::string family, std::string name, std::string_view text) {
  return FamilyInstance{std::move(family), std::move(name), {}, parse_presentation(text), {}};
}

}  // namespace detail

/// (a, b; a = b·(a^p·b^r)^q): a^{p+1} is right-quasi-central; central, and the
/// monoid of O-type, when r = 1.
[[nodiscard]] inline FamilyInstance torus_knot(long p, long q, long r) {
  detail::require(p >= 1 && q >= 1 && r >= 1, "torus_knot needs p, q, r >= 1");
  const Letter a{0}, b{1};
  PositiveWord unit = PositiveWord{a}.power(p) * PositiveWord{b}.power(r);
  PositivePresentation P(Alphabet{"a", "b"}, {{PositiveWord{a}, PositiveWord{b} * unit.power(q)}});
  FamilyInstance f{"torus_knot", "", {{"p", p}, {"q", q}, {"r", r}}, P, {}};
  f.name = "torus_knot(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  f.expected.right = Status::RightOType;
  if (r == 1) f.expected.left = Status::RightOType;
  f.expected.delta = PositiveWord{a}.power(p + 1);
  f.expected.delta_kind = r == 1 ? DeltaKind::Central : DeltaKind::QuasiCentral;
  if (r == 1) f.expected.phi = {{a, PositiveWord{a}}, {b, PositiveWord{b}}};
  if (p == 2 && q == 1 && r == 2)
    f.expected.phi = {{a, PositiveWord{a}}, {b, PositiveWord{b}.power(2) * PositiveWord{a} * PositiveWord{b}.power(2)}};
  return f;
}

/// Least m such that Δ = a₁^m is a power of every w_i: (m₂+1)⋯(m_i+1) must
/// divide m·(n₂+1)⋯(n_{i−1}+1) for i = 2…ℓ.
[[nodiscard]] inline long chain_family_exponent(const std::vector<long>& m, const std::vector<long>& n) {
  for (long e = 1;; ++e) {
    bool ok = true;
    long num = e, den = 1;
    for (std::size_t i = 0; i < m.size() && ok; ++i) {
      den *= m[i] + 1;
      if (num % den != 0) ok = false;
      num *= n[i] + 1;
    }
    if (ok) return e;
  }
}

/// ℓ generators a₁…a_ℓ with a_{i−1} = a_i·w_i^{n_i}, where w₁ = a₁ and
/// w_i = w_{i−1}^{m_i}⋯w₂^{m₃}·w₁^{m₂}·a_i.  m and n hold m₂…m_ℓ and n₂…n_ℓ.
[[nodiscard]] inline FamilyInstance chain_family(std::size_t ell, const std::vector<long>& m,
                                                 const std::vector<long>& n) {
  detail::require(ell >= 2 && ell <= 26, "chain_family needs 2 <= l <= 26");
  detail::require(m.size() == ell - 1 && n.size() == ell - 1, "chain_family needs l-1 values of m and n");
  for (std::size_t i = 0; i + 1 < ell; ++i) detail::require(m[i] >= 1 && n[i] >= 1, "chain_family needs m, n >= 1");
  std::vector<PositiveWord> w{PositiveWord{Letter{0}}};
  std::vector<Relation> rels;
  for (std::size_t i = 1; i < ell; ++i) {
    PositiveWord wi;
    for (std::size_t k = i; k-- > 0;) wi = wi * w[k].power(static_cast<std::size_t>(m[k]));
    wi = wi * PositiveWord{Letter{static_cast<std::uint16_t>(i)}};
    w.push_back(wi);
    rels.push_back({PositiveWord{Letter{static_cast<std::uint16_t>(i - 1)}},
                    PositiveWord{Letter{static_cast<std::uint16_t>(i)}} * wi.power(static_cast<std::size_t>(n[i - 1]))});
  }
  FamilyInstance f{"chain_family", "chain_family(" + std::to_string(ell), {{"l", static_cast<long>(ell)}},
                   PositivePresentation(Alphabet(detail::letter_names(ell)), std::move(rels)), {}};
  for (std::size_t i = 0; i + 1 < ell; ++i) {
    f.parameters.emplace_back("m" + std::to_string(i + 2), m[i]);
    f.parameters.emplace_back("n" + std::to_string(i + 2), n[i]);
    f.name += ";" + std::to_string(m[i]) + "," + std::to_string(n[i]);
  }
  f.name += ")";
  f.expected.right = Status::RightOType;
  f.expected.left = Status::RightOType;
  f.expected.delta = PositiveWord{Letter{0}}.power(static_cast<std::size_t>(chain_family_exponent(m, n)));
  f.expected.delta_kind = DeltaKind::Central;
  return f;
}

/// The words w₂…w_ℓ of chain_family, for structural checks.
[[nodiscard]] inline std::vector<PositiveWord> chain_family_words(std::size_t ell, const std::vector<long>& m) {
  std::vector<PositiveWord> w{PositiveWord{Letter{0}}};
  for (std::size_t i = 1; i < ell; ++i) {
    PositiveWord wi;
    for (std::size_t k = i; k-- > 0;) wi = wi * w[k].power(static_cast<std::size_t>(m[k]));
    w.push_back(wi * PositiveWord{Letter{static_cast<std::uint16_t>(i)}});
  }
  return w;
}

/// (a, b, c; a = b·(a^p·b)^q, b = c·(a^r·c)^s).  a dominates when r ≥ p or
/// q = 0; for r < p and q ≥ 1 the completed relation a = (c·a^r)^{s+1}·a…
/// discards it, unless s = 0 where b = c and the second chain link vanishes.
[[nodiscard]] inline FamilyInstance three_gen(long p, long q, long r, long s) {
  detail::require(p >= 0 && q >= 0 && r >= 0 && s >= 0, "three_gen needs p, q, r, s >= 0");
  const Letter a{0}, b{1}, c{2};
  PositiveWord A{a}, B{b}, C{c};
  PositivePresentation P(Alphabet{"a", "b", "c"},
                         {{A, B * (A.power(p) * B).power(q)}, {B, C * (A.power(r) * C).power(s)}});
  FamilyInstance f{"three_gen",
                   "three_gen(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
                       std::to_string(s) + ")",
                   {{"p", p}, {"q", q}, {"r", r}, {"s", s}},
                   P,
                   {}};
  if (r >= p || q == 0 || s == 0) {
    f.expected.right = Status::RightOType;
    f.expected.left = Status::RightOType;
    f.expected.delta = A;
    f.expected.delta_kind = DeltaKind::Dominating;
    if (r < p && q >= 1) f.expected.note = "s = 0 makes b = c; the discard pattern c·a^r·c… does not occur";
  } else {
    f.expected.right = Status::NotRightOType;
    f.expected.discard = ExpectedDiscard{Side::Right, C * A.power(r), {}};
  }
  return f;
}

/// (a, b, c; a = b·a^{p+2}·(b·a^p·b·a^{p+2})^q·c, b = c·(b·a^{p+2})^r·b·a); for
/// r ≤ 1, Δ = (a^{p+2}·b)^{2q+r+3} is central.
[[nodiscard]] inline FamilyInstance split_family(long p, long q, long r) {
  detail::require(p >= 0 && q >= 0 && r >= 0, "split_family needs p, q, r >= 0");
  const Letter a{0}, b{1}, c{2};
  PositiveWord A{a}, B{b}, C{c};
  PositiveWord ap2 = A.power(p + 2);
  PositivePresentation P(Alphabet{"a", "b", "c"},
                         {{A, B * ap2 * (B * A.power(p) * B * ap2).power(q) * C}, {B, C * (B * ap2).power(r) * B * A}});
  FamilyInstance f{"split_family",
                   "split_family(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")",
                   {{"p", p}, {"q", q}, {"r", r}},
                   P,
                   {}};
  if (r <= 1) {
    f.expected.right = Status::RightOType;
    f.expected.left = Status::RightOType;
    f.expected.delta = (ap2 * B).power(2 * q + r + 3);
    f.expected.delta_kind = DeltaKind::Central;
  } else {
    f.expected.note = "open for r >= 2";
  }
  return f;
}

/// The cycling presentation a_i = a_{i+1}⋯a_n·a₁⋯a_{i−1}, i = 1…n−1.
[[nodiscard]] inline FamilyInstance cycling(std::size_t n) {
  detail::require(n >= 3 && n <= 26, "cycling needs 3 <= n <= 26");
  std::vector<Relation> rels;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Letter> rhs;
    for (std::size_t k = 1; k < n; ++k) rhs.push_back(Letter{static_cast<std::uint16_t>((i + k) % n)});
    rels.push_back({PositiveWord{Letter{static_cast<std::uint16_t>(i)}}, PositiveWord(std::move(rhs))});
  }
  FamilyInstance f{"cycling", "cycling(" + std::to_string(n) + ")", {{"n", static_cast<long>(n)}},
                   PositivePresentation(Alphabet(detail::letter_names(n)), std::move(rels)), {}};
  f.expected.right = Status::RightOType;
  f.expected.delta = PositiveWord{Letter{0}}.power(2);
  f.expected.delta_kind = DeltaKind::Central;
  std::vector<Letter> period;
  for (std::size_t k = n - 1; k-- > 0;) period.push_back(Letter{static_cast<std::uint16_t>(k)});
  f.expected.ceiling_period = PositiveWord(std::move(period));
  return f;
}

/// Reference presentations with known verdicts, grouped by shape.
[[nodiscard]] inline std::vector<FamilyInstance> fixture_catalog() {
  using detail::pw;
  std::vector<FamilyInstance> out;
  const Letter a{0}, b{1}, c{2};
  auto two = [](const char* rhs) { return std::string("gens: a b\nrel: a = ") + rhs + "\n"; };
  const Status yes = Status::RightOType, no = Status::NotRightOType;

  // Two generators, one relation, both sides decided.
  {
    auto f = detail::from_text("two_generator", "a = bababab", two("b a b a b a b"));
    f.expected.right = yes;
    f.expected.left = yes;
    f.expected.delta = PositiveWord{a}.power(2);
    f.expected.delta_kind = DeltaKind::Central;
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = ba^2babab", two("b a^2 b a b a b"));
    f.expected.right = yes;
    f.expected.left = no;
    f.expected.delta = PositiveWord{a}.power(3);
    f.expected.phi = {{a, PositiveWord{a}}, {b, pw(f.presentation, "b a b a b").power(3)}};
    f.expected.discard = ExpectedDiscard{Side::Left, pw(f.presentation, "a b"), {}};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = baba^2bab", two("b a b a^2 b a b"));
    f.expected.right = no;
    f.expected.left = no;
    f.expected.discard = ExpectedDiscard{Side::Right, pw(f.presentation, "b a"), {}};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = ba^3babab", two("b a^3 b a b a b"));
    f.expected.right = yes;
    f.expected.left = no;
    f.expected.delta = PositiveWord{a}.power(4);
    f.expected.phi = {{a, PositiveWord{a}}, {b, PositiveWord{b} * pw(f.presentation, "a b").power(8)}};
    f.expected.discard = ExpectedDiscard{Side::Left, pw(f.presentation, "a b"), {}};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = bab^3ab", two("b a b^3 a b"));
    f.expected.right = yes;
    f.expected.left = yes;
    f.expected.delta = pw(f.presentation, "a b").power(3);
    f.expected.delta_kind = DeltaKind::Central;
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = ba^2baba^2b", two("b a^2 b a b a^2 b"));
    f.expected.right = yes;
    f.expected.left = yes;
    f.expected.delta = pw(f.presentation, "a^2 b").power(2);
    f.expected.phi = {{a, PositiveWord{a} * pw(f.presentation, "b a^2 b").power(2)}, {b, PositiveWord{b}}};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = ba^2b^3a^2b", two("b a^2 b^3 a^2 b"));
    f.expected.right = no;
    f.expected.left = no;
    f.expected.cycle = ExpectedCycle{Side::Right, parse_signed_word(f.presentation.alphabet(), "a^-2 b a^2 b a"),
                                     pw(f.presentation, "b a^2 b^3"), 10};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = ba^2bab^2a^2b", two("b a^2 b a b^2 a^2 b"));
    f.expected.right = yes;
    f.expected.left = no;
    f.expected.delta = pw(f.presentation, "a^2 b").power(2);
    f.expected.phi = {{a, pw(f.presentation, "a b^2 a").power(2) * pw(f.presentation, "a b")},
                      {b, pw(f.presentation, "b a^2 b^2").power(2)}};
    f.expected.cycle =
        ExpectedCycle{Side::Left, parse_signed_word(f.presentation.alphabet(), "a^2 b^2 a^2 b a b^3 a^2 b a^-1"),
                      PositiveWord{b}, 26};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("two_generator", "a = ba^2b^4a^2b", two("b a^2 b^4 a^2 b"));
    f.expected.right = no;
    f.expected.left = no;
    f.expected.cycle = ExpectedCycle{Side::Right, parse_signed_word(f.presentation.alphabet(), "b^-1 a^-2 b a^2 b a"),
                                     pw(f.presentation, "b^4 a^2 b a b^4 a^2 b"), 12};
    out.push_back(std::move(f));
  }

  // Parametrized O-type families, one or two parameter choices each.
  auto table3 = [&](std::string name, std::string text, std::vector<std::pair<std::string, long>> params) {
    auto f = detail::from_text("o_type_family", std::move(name), text);
    f.parameters = std::move(params);
    f.expected.right = yes;
    f.expected.left = yes;
    return f;
  };
  for (long p : {1L, 2L, 3L}) {
    // a = b·(a·b^p)^q·a·b, Δ = (a·b^{p−1})^2
    const long q = 1;
    PositivePresentation P(Alphabet{"a", "b"},
                           {{PositiveWord{a}, PositiveWord{b} * (PositiveWord{a} * PositiveWord{b}.power(p)).power(q) *
                                                  PositiveWord{a} * PositiveWord{b}}});
    auto f = table3("a = b(ab^p)^q ab p=" + std::to_string(p) + " q=1", serialize(P), {{"p", p}, {"q", q}});
    f.expected.delta = (PositiveWord{a} * PositiveWord{b}.power(p - 1)).power(2);
    f.expected.delta_kind = DeltaKind::Central;
    out.push_back(std::move(f));
  }
  for (auto [p, r] : {std::pair{1L, 2L}, std::pair{2L, 3L}}) {
    // a = b·a^r·b·a^p·b·a^r·b with p+1 | r
    PositiveWord A{a}, B{b};
    PositivePresentation P(Alphabet{"a", "b"}, {{A, B * A.power(r) * B * A.power(p) * B * A.power(r) * B}});
    auto f = table3("a = ba^r ba^p ba^r b p=" + std::to_string(p) + " r=" + std::to_string(r), serialize(P), {{"p", p}, {"r", r}});
    f.expected.delta = (A.power(r) * B).power(2);
    f.expected.phi = {{a, A.power(p) * (B * A.power(r) * B).power(2)}, {b, B}};
    out.push_back(std::move(f));
  }
  auto three = [&](long p, long r, bool row4) {
    PositiveWord A{a}, B{b}, C{c};
    PositivePresentation P(Alphabet{"a", "b", "c"}, {{A, B * A.power(p) * B}, {B, C * B * A.power(r) * C}});
    auto f = table3(std::string(row4 ? "a = ba^pb, b = cba^rc delta a^rb^2" : "a = ba^pb, b = cba^rc delta a^k") + " p=" + std::to_string(p) + " r=" + std::to_string(r),
                    serialize(P), {{"p", p}, {"r", r}});
    if (row4) {
      f.expected.delta = A.power(r) * B.power(2);
      f.expected.phi = {{a, A.power(p) * B * A.power(p - 1) * B.power(3)}, {b, B}, {c, C}};
    } else {
      // The least central power of a is a^{(p+1)(r−p+1)}; the exponent
      // p(r−p)+1 gives a itself for p = r = 1, which is not quasi-central.
      f.expected.delta = A.power((p + 1) * (r - p + 1));
      f.expected.delta_kind = DeltaKind::Central;
      f.expected.note = "least central power of a";
    }
    return f;
  };
  out.push_back(three(1, 1, false));
  out.push_back(three(1, 3, false));
  out.push_back(three(1, 2, true));
  out.push_back(three(2, 3, true));
  for (auto [p, r] : {std::pair{1L, 1L}, std::pair{1L, 3L}}) {
    // a = b·(a·b)^p, b = c·b·(a^r·b)^p·c with r odd
    PositiveWord A{a}, B{b}, C{c};
    PositivePresentation P(Alphabet{"a", "b", "c"},
                           {{A, B * (A * B).power(p)}, {B, C * B * (A.power(r) * B).power(p) * C}});
    auto f = table3("a = b(ab)^p, b = cb(a^rb)^pc p=" + std::to_string(p) + " r=" + std::to_string(r), serialize(P), {{"p", p}, {"r", r}});
    f.expected.delta = A.power(p * (p + 1) * (r - 1) + 2);
    f.expected.delta_kind = DeltaKind::Central;
    out.push_back(std::move(f));
  }
  for (auto [p, q, r] : {std::tuple{0L, 0L, 0L}, std::tuple{1L, 0L, 1L}}) {
    // a = b·a^{p+1}·(b·a^p·b·a^{p+1})^q·c, b = c·(b·a^{p+1})^r·b·a
    PositiveWord A{a}, B{b}, C{c};
    PositiveWord ap1 = A.power(p + 1);
    PositivePresentation P(Alphabet{"a", "b", "c"}, {{A, B * ap1 * (B * A.power(p) * B * ap1).power(q) * C},
                                                     {B, C * (B * ap1).power(r) * B * A}});
    auto f = table3("a = ba^(p+1)(ba^pba^(p+1))^qc, b = c(ba^(p+1))^rba p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(r),
                    serialize(P), {{"p", p}, {"q", q}, {"r", r}});
    f.expected.delta = (ap1 * B).power(r + 3);
    f.expected.delta_kind = DeltaKind::Central;
    out.push_back(std::move(f));
  }

  // Torus knot and related groups.
  for (auto [p, q] : {std::pair{2L, 1L}, std::pair{1L, 2L}}) {
    auto f = torus_knot(p, q, 1);
    f.family = "knot_like";
    f.name = "torus knot p=" + std::to_string(p) + " q=" + std::to_string(q);
    out.push_back(std::move(f));
  }
  for (auto [p, q, r, s] : {std::tuple{1L, 1L, 1L, 1L}, std::tuple{2L, 1L, 1L, 1L}}) {
    auto f = chain_family(3, {p, r}, {q, s});
    f.family = "knot_like";
    f.name = "three-letter chain p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
             " s=" + std::to_string(s);
    f.parameters = {{"p", p}, {"q", q}, {"r", r}, {"s", s}};
    f.expected.delta = PositiveWord{a}.power((p + 1) * (r + 1));
    out.push_back(std::move(f));
  }
  for (auto [p, q, r, s] : {std::tuple{1L, 1L, 1L, 1L}, std::tuple{1L, 1L, 2L, 1L}}) {
    // a = b·(a^r·b)^s·(a^p·b·(a^r·b)^s)^q with r ≥ p
    PositiveWord A{a}, B{b};
    PositiveWord tail = (A.power(r) * B).power(s);
    PositivePresentation P(Alphabet{"a", "b"}, {{A, B * tail * (A.power(p) * B * tail).power(q)}});
    auto f = table3("", serialize(P), {{"p", p}, {"q", q}, {"r", r}, {"s", s}});
    f.family = "knot_like";
    f.name = "a = b(a^rb)^s(a^pb(a^rb)^s)^q p=" + std::to_string(p) + " q=" + std::to_string(q) + " r=" + std::to_string(r) +
             " s=" + std::to_string(s);
    f.expected.delta = A;
    f.expected.delta_kind = DeltaKind::Dominating;
    out.push_back(std::move(f));
  }
  for (auto [q, r] : {std::pair{0L, 0L}, std::pair{1L, 1L}}) {
    auto f = split_family(0, q, r);
    f.family = "knot_like";
    f.name = "split q=" + std::to_string(q) + " r=" + std::to_string(r);
    f.expected.delta = (PositiveWord{b} * PositiveWord{a}.power(2)).power(2 * q + r + 3);
    out.push_back(std::move(f));
  }

  // Assorted presentations.
  {
    auto f = detail::from_text("named", "Klein bottle a = bab", two("b a b"));
    f.expected.right = yes;
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "a = b^2ab^2", two("b^2 a b^2"));
    f.expected.right = no;
    f.expected.discard = ExpectedDiscard{Side::Right, PositiveWord{b}, {}};
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "non-triangular three relations",
                               "gens: a b c\nrel: a = b^2 a^2 b a b^2 b^2\nrel: b = c b^2 c\nrel: a b c = c a b\n");
    f.expected.right_triangular = false;
    f.expected.note = "third relation has no single-letter side";
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "dominating top, two generators", two("b a b a b^2 a b^2 a b a b"));
    f.expected.right = yes;
    f.expected.left = yes;
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "dominating b^2, three generators",
                               "gens: a b c\nrel: a = b c a c b\nrel: b = c a c a c\n");
    f.expected.right = yes;
    f.expected.left = yes;
    f.expected.delta = PositiveWord{b}.power(2);
    f.expected.delta_kind = DeltaKind::Dominating;
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "periodic ceiling a = bac, b = cba", "gens: a b c\nrel: a = b a c\nrel: b = c b a\n");
    f.expected.right = yes;
    f.expected.left = yes;
    f.expected.delta = pw(f.presentation, "b^2 a^2");
    f.expected.phi = {{a, pw(f.presentation, "a b a^2 c a c^3")}, {b, pw(f.presentation, "b a^2 c^2")}, {c, PositiveWord{c}}};
    f.expected.ceiling_period = pw(f.presentation, "b^2 a^2");
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "a = bcb, b = cbabc", "gens: a b c\nrel: a = b c b\nrel: b = c b a b c\n");
    f.expected.right = yes;
    f.expected.left = yes;
    f.expected.delta = PositiveWord{a}.power(3);
    f.expected.delta_kind = DeltaKind::Central;
    out.push_back(std::move(f));
  }
  {
    auto f = three_gen(2, 1, 3, 1);
    f.family = "named";
    f.name = "no quasi-central power p=2 q=1 r=3 s=1";
    f.expected.note = "no power of a is quasi-central";
    out.push_back(std::move(f));
  }
  for (long r : {1L, 2L}) {
    PositiveWord A{a}, B{b};
    PositivePresentation P(Alphabet{"a", "b"}, {{A, B * A * B.power(r + 1)}});
    FamilyInstance f{"named", "exponential reversing a = bab^(r+1) r=" + std::to_string(r), {{"r", r}}, P, {}};
    f.expected.right = yes;
    f.expected.left = no;
    f.expected.note = "a^-n b a^n reverses to b^((r+1)^n)";
    out.push_back(std::move(f));
  }
  {
    auto f = detail::from_text("named", "a = bacb, b = cac", "gens: a b c\nrel: a = b a c b\nrel: b = c a c\n");
    f.expected.right = yes;
    f.expected.left = no;
    f.expected.delta = PositiveWord{a}.power(2);
    f.expected.phi = {{c, pw(f.presentation, "c b c b")}};
    // Known as the right reversing of u = b⁻¹c²ab, v = c² for the opposite presentation.
    f.expected.cycle = ExpectedCycle{Side::Left, parse_signed_word(f.presentation.alphabet(), "b a c^2 b^-1"),
                                     pw(f.presentation, "c^2"), 12};
    out.push_back(std::move(f));
  }
  for (std::size_t n : {3u, 4u, 5u}) {
    auto f = cycling(n);
    f.family = "named";
    f.name = "cycling n=" + std::to_string(n);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace otype
