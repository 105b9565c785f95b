#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "otype/words.hpp"

namespace otype {

struct Relation {
  PositiveWord lhs;
  PositiveWord rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite alphabet plus relations u = v with both sides non-empty.
class PositivePresentation {
 public:
  PositivePresentation() = default;
  PositivePresentation(Alphabet alphabet, std::vector<Relation> relations)
      : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
    for (const auto& r : relations_) {
      if (r.lhs.empty() || r.rhs.empty()) throw std::invalid_argument("relation with an empty side");
      for (const auto* side : {&r.lhs, &r.rhs})
        for (Letter l : *side)
          if (l.id >= alphabet_.size()) throw std::invalid_argument("relation uses a letter outside the alphabet");
    }
  }

  [[nodiscard]] const Alphabet& alphabet() const { return alphabet_; }
  [[nodiscard]] const std::vector<Relation>& relations() const { return relations_; }

  friend bool operator==(const PositivePresentation& x, const PositivePresentation& y) {
    return x.alphabet_ == y.alphabet_ && x.relations_ == y.relations_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Relation> relations_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Reads the line format
///   gens: a b c
///   rel: a = b a c
/// with '#' comments.  Words follow parse_signed_word, minus inverses and "eps".
[[nodiscard]] inline PositivePresentation parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Relation> relations;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    auto col_of = [&](std::size_t offset_in_line) { return offset_in_line + 1; };
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'gens:' or 'rel:'", line_no, col_of(first));
    std::string_view keyword = line.substr(first, colon - first);
    while (!keyword.empty() && (keyword.back() == ' ' || keyword.back() == '\t')) keyword.remove_suffix(1);
    std::string_view body = line.substr(colon + 1);
    const std::size_t body_off = colon + 1;
    if (keyword == "gens") {
      if (alphabet) throw ParseError("duplicate 'gens:' line", line_no, col_of(first));
      std::vector<std::string> names;
      std::istringstream in{std::string(body)};
      for (std::string tok; in >> tok;) names.push_back(tok);
      try {
        alphabet.emplace(std::move(names));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, col_of(body_off));
      }
    } else if (keyword == "rel") {
      if (!alphabet) throw ParseError("'rel:' before 'gens:'", line_no, col_of(first));
      std::size_t eq = body.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected '='", line_no, col_of(body_off + body.size()));
      if (body.find('=', eq + 1) != std::string_view::npos)
        throw ParseError("more than one '='", line_no, col_of(body_off + body.find('=', eq + 1)));
      auto side = [&](std::string_view s, std::size_t off) {
        if (s.find_first_not_of(" \t") == std::string_view::npos)
          throw ParseError("empty relation side", line_no, col_of(off + s.size()));
        std::istringstream in{std::string(s)};
        for (std::string tok; in >> tok;)
          if (tok == "eps" || tok.rfind("eps^", 0) == 0)
            throw ParseError("'eps' is not allowed in relations", line_no, col_of(off + s.find("eps")));
        try {
          SignedWord w = parse_signed_word(*alphabet, s);
          if (!w.is_positive()) throw ParseError("inverse letter in a relation", line_no, col_of(off + s.find('-')));
          if (w.empty()) throw ParseError("empty relation side", line_no, col_of(off));
          return to_positive(w);
        } catch (const WordSyntaxError& e) {
          throw ParseError(e.what(), line_no, col_of(off + e.column() - 1));
        }
      };
      PositiveWord lhs = side(body.substr(0, eq), body_off);
      PositiveWord rhs = side(body.substr(eq + 1), body_off + eq + 1);
      relations.push_back({std::move(lhs), std::move(rhs)});
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword) + "'", line_no, col_of(first));
    }
    if (eol == text.size()) break;
  }
  if (!alphabet) throw ParseError("missing 'gens:' line", line_no == 0 ? 1 : line_no, 1);
  return PositivePresentation(std::move(*alphabet), std::move(relations));
}

/// Canonical text: single spaces, no powers.
[[nodiscard]] inline std::string serialize(const PositivePresentation& P) {
  std::string out = "gens:";
  for (const auto& n : P.alphabet().names()) out += " " + n;
  out += '\n';
  for (const auto& r : P.relations())
    out += "rel: " + format(P.alphabet(), r.lhs, WordStyle::Spaced) + " = " +
           format(P.alphabet(), r.rhs, WordStyle::Spaced) + '\n';
  return out;
}

/// Same generators, every relation side mirrored.
[[nodiscard]] inline PositivePresentation opposite(const PositivePresentation& P) {
  std::vector<Relation> rels;
  rels.reserve(P.relations().size());
  for (const auto& r : P.relations()) rels.push_back({r.lhs.mirror(), r.rhs.mirror()});
  return PositivePresentation(P.alphabet(), std::move(rels));
}

/// Right-triangular shape: every relation reads N(s) = s·C(s), N injective
/// without fixpoint or cycle.
struct TriangularStructure {
  std::size_t alphabet_size = 0;
  /// next[s] = N(s) for s in the domain.
  std::vector<std::optional<Letter>> next;
  /// complement[s] = C(s); empty outside the domain.
  std::vector<PositiveWord> complement;
  /// Index of the presentation relation that defines N(s).
  std::vector<std::size_t> source_relation;
  /// Chains listed top first (the top carries no relation).
  std::vector<std::vector<Letter>> chains;

  [[nodiscard]] bool single_chain() const { return chains.size() == 1; }
  /// a_1, a_2, ... ; meaningful for a single chain.
  [[nodiscard]] const std::vector<Letter>& chain_order() const { return chains.front(); }
  [[nodiscard]] Letter top() const { return chains.front().front(); }
  [[nodiscard]] bool in_domain(Letter s) const { return next[s.id].has_value(); }
};

namespace detail {

inline std::optional<TriangularStructure> build_triangular(const PositivePresentation& P) {
  const std::size_t n = P.alphabet().size();
  TriangularStructure T;
  T.alphabet_size = n;
  T.next.assign(n, std::nullopt);
  T.complement.assign(n, PositiveWord{});
  T.source_relation.assign(n, 0);
  std::vector<bool> is_image(n, false);
  for (std::size_t i = 0; i < P.relations().size(); ++i) {
    const auto& r = P.relations()[i];
    Letter top, base;
    PositiveWord comp;
    if (r.lhs.size() == 1 && r.rhs.front() != r.lhs.front()) {
      top = r.lhs.front();
      base = r.rhs.front();
      comp = r.rhs.sub(1);
    } else if (r.rhs.size() == 1 && r.lhs.front() != r.rhs.front()) {
      top = r.rhs.front();
      base = r.lhs.front();
      comp = r.lhs.sub(1);
    } else {
      return std::nullopt;
    }
    if (T.next[base.id] || is_image[top.id]) return std::nullopt;
    T.next[base.id] = top;
    T.complement[base.id] = std::move(comp);
    T.source_relation[base.id] = i;
    is_image[top.id] = true;
  }
  // Reject cycles of N: following N from any letter must leave the domain.
  for (std::size_t s = 0; s < n; ++s) {
    Letter cur{static_cast<std::uint16_t>(s)};
    for (std::size_t k = 0; k <= n; ++k) {
      if (!T.next[cur.id]) break;
      cur = *T.next[cur.id];
      if (k == n) return std::nullopt;
    }
  }
  std::vector<Letter> preimage(n);
  std::vector<bool> has_pre(n, false);
  for (std::size_t s = 0; s < n; ++s)
    if (T.next[s]) {
      preimage[T.next[s]->id] = Letter{static_cast<std::uint16_t>(s)};
      has_pre[T.next[s]->id] = true;
    }
  for (std::size_t s = 0; s < n; ++s) {
    if (T.next[s]) continue;
    std::vector<Letter> chain{Letter{static_cast<std::uint16_t>(s)}};
    while (has_pre[chain.back().id]) chain.push_back(preimage[chain.back().id]);
    T.chains.push_back(std::move(chain));
  }
  return T;
}

}  // namespace detail

[[nodiscard]] inline std::optional<TriangularStructure> detect_right_triangular(const PositivePresentation& P) {
  return detail::build_triangular(P);
}

/// Left-triangular shape Ñ(s) = C̃(s)·s; complements are given in reading order.
[[nodiscard]] inline std::optional<TriangularStructure> detect_left_triangular(const PositivePresentation& P) {
  auto T = detail::build_triangular(opposite(P));
  if (!T) return std::nullopt;
  for (auto& c : T->complement) c = c.mirror();
  return T;
}

/// Oriented relation N^i(base) = base·C^i(base) of the completion R̂.
struct CompletedRelation {
  Letter top;
  Letter base;
  unsigned exponent = 1;
  PositiveWord complement;
  /// The right-hand side base·complement.
  [[nodiscard]] PositiveWord rhs() const { return PositiveWord{base} * complement; }
};

/// Entry for the ordered pair (s, s′): s·left = s′·right in R̂.
struct TableEntry {
  PositiveWord left;
  PositiveWord right;
  std::size_t relation = 0;
  /// Letters pushed by the engine for s⁻¹s′ ↷ left·right⁻¹, in stack order.
  std::vector<std::int16_t> push_codes;
};

class NonDeterministicTable : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Complement table of a positive presentation; at most one entry per ordered pair.
class RelationTable {
 public:
  RelationTable() = default;
  explicit RelationTable(std::size_t alphabet_size)
      : n_(alphabet_size), index_(alphabet_size * alphabet_size, -1) {}

  [[nodiscard]] std::size_t alphabet_size() const { return n_; }

  /// Registers the relation s·left = s′·right under (s, s′) and its mirror under (s′, s).
  void add(Letter s, Letter t, PositiveWord left, PositiveWord right, std::optional<CompletedRelation> origin = {}) {
    if (s == t) throw std::invalid_argument("table entries need distinct letters");
    if (index_[s.id * n_ + t.id] >= 0 || index_[t.id * n_ + s.id] >= 0)
      throw NonDeterministicTable("two relations for the same letter pair");
    std::size_t rel = relations_.size();
    relations_.push_back(origin.value_or(CompletedRelation{t, s, 0, left}));
    put(s, t, left, right, rel);
    put(t, s, std::move(right), std::move(left), rel);
  }

  [[nodiscard]] const TableEntry* find(Letter s, Letter t) const {
    int k = index_[s.id * n_ + t.id];
    return k < 0 ? nullptr : &entries_[static_cast<std::size_t>(k)];
  }

  [[nodiscard]] const std::vector<CompletedRelation>& relations() const { return relations_; }

 private:
  void put(Letter s, Letter t, PositiveWord left, PositiveWord right, std::size_t rel) {
    TableEntry e{std::move(left), std::move(right), rel, {}};
    // Stack order: v⁻¹ pushed first (as letters of v, negated), then v′ reversed.
    for (Letter l : e.right) e.push_codes.push_back(SignedLetter(l, true).code());
    for (auto it = e.left.letters().rbegin(); it != e.left.letters().rend(); ++it)
      e.push_codes.push_back(SignedLetter(*it).code());
    index_[s.id * n_ + t.id] = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
  }

  std::size_t n_ = 0;
  std::vector<int> index_;
  std::vector<TableEntry> entries_;
  std::vector<CompletedRelation> relations_;
};

/// Builds R̂: N^i(s) = s·C^i(s) for all s and i ≥ 1.
[[nodiscard]] inline RelationTable complete(const TriangularStructure& T) {
  RelationTable table(T.alphabet_size);
  for (std::size_t s = 0; s < T.alphabet_size; ++s) {
    if (!T.next[s]) continue;
    Letter base{static_cast<std::uint16_t>(s)};
    Letter top = *T.next[s];
    PositiveWord acc = T.complement[s];
    for (unsigned i = 1;; ++i) {
      table.add(base, top, acc, PositiveWord{}, CompletedRelation{top, base, i, acc});
      if (!T.next[top.id]) break;
      acc = acc * T.complement[top.id];
      top = *T.next[top.id];
    }
  }
  return table;
}

/// A presentation together with its triangular data, ready for reversing.
struct Prepared {
  PositivePresentation presentation;
  TriangularStructure structure;
  RelationTable table;
};

[[nodiscard]] inline std::optional<Prepared> prepare(const PositivePresentation& P) {
  auto T = detect_right_triangular(P);
  if (!T) return std::nullopt;
  RelationTable table = complete(*T);
  return Prepared{P, std::move(*T), std::move(table)};
}

}  // namespace otype
