#pragma once

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "otype/analysis.hpp"
#include "otype/decision.hpp"
#include "otype/families.hpp"
#include "otype/words.hpp"

// JSON forms of verdicts, certificates and fixture expectations.  Words are
// strings in the spaced word syntax, so they parse back with the same alphabet.

namespace otype {

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string wstr(const Alphabet& A, const PositiveWord& w) { return format(A, w, WordStyle::Spaced); }
inline std::string wstr(const Alphabet& A, const SignedWord& w) { return format(A, w, WordStyle::Spaced); }

inline PositiveWord pword(const Alphabet& A, const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw SchemaError(std::string("missing word field ") + key);
  return parse_positive_word(A, j[key].get<std::string>());
}

inline Letter letter_field(const Alphabet& A, const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw SchemaError(std::string("missing letter field ") + key);
  return A[j[key].get<std::string>()];
}

inline json images_json(const Alphabet& A, const std::vector<std::pair<Letter, PositiveWord>>& images) {
  json out = json::object();
  for (auto& [l, w] : images) out[A.name(l)] = wstr(A, w);
  return out;
}

inline std::vector<std::pair<Letter, PositiveWord>> images_from(const Alphabet& A, const json& j) {
  std::vector<std::pair<Letter, PositiveWord>> out;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const std::string& name = A.name(A.letter(i));
    if (j.contains(name)) out.emplace_back(A.letter(i), parse_positive_word(A, j[name].get<std::string>()));
  }
  return out;
}

inline const char* reason_name(PatternReason r) {
  switch (r) {
    case PatternReason::EmptyV:
      return "empty_v";
    case PatternReason::FactorsOfRelation:
      return "factors_of_relation";
    default:
      return "reversing";
  }
}

}  // namespace detail

[[nodiscard]] inline json to_json(const Alphabet& A, const Certificate& cert) {
  using detail::wstr;
  json j;
  j["kind"] = certificate_kind(cert);
  std::visit(
      [&](auto&& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, TailDiscard>) {
          j["relation"] = c.relation_index;
          j["top"] = A.name(c.top);
          j["rhs"] = wstr(A, c.rhs);
        } else if constexpr (std::is_same_v<C, PatternDiscard>) {
          j["relation"] = c.relation_index;
          j["top"] = A.name(c.top);
          j["rhs"] = wstr(A, c.rhs);
          j["u"] = wstr(A, c.u);
          j["v"] = wstr(A, c.v);
          j["r"] = c.r;
          j["reason"] = detail::reason_name(c.reason);
        } else if constexpr (std::is_same_v<C, CycleWitness>) {
          j["left"] = wstr(A, c.left_element);
          j["right"] = wstr(A, c.right_element);
          j["earlier_step"] = c.earlier_step;
          j["detected_step"] = c.detected_step;
          j["context_left"] = c.context_left;
          j["context_right"] = c.context_right;
          j["period"] = c.period;
          j["flank_left"] = wstr(A, c.flank_left);
          j["flank_right"] = wstr(A, c.flank_right);
        } else if constexpr (std::is_same_v<C, MultiChain>) {
          j["s"] = A.name(c.s);
          j["t"] = A.name(c.t);
        } else if constexpr (std::is_same_v<C, QuasiCentral>) {
          j["delta"] = wstr(A, c.w);
          j["images"] = detail::images_json(A, c.images);
        } else if constexpr (std::is_same_v<C, DominationClosure>) {
          j["delta"] = wstr(A, c.delta);
          j["atoms"] = json::array();
          for (auto& a : c.atoms) j["atoms"].push_back(wstr(A, a));
          j["images"] = c.images;
          j["quotients"] = json::object();
          for (auto& [g, ids] : c.quotients) j["quotients"][A.name(g)] = ids;
        } else {
          j["delta"] = wstr(A, c.delta);
          j["checked_up_to"] = c.checked_up_to;
          j["generators"] = json::array();
          for (Letter g : c.generators) j["generators"].push_back(A.name(g));
        }
      },
      cert);
  return j;
}

[[nodiscard]] inline Certificate certificate_from_json(const Alphabet& A, const json& j) {
  using detail::letter_field;
  using detail::pword;
  const std::string kind = j.value("kind", "");
  if (kind == "TailDiscard")
    return TailDiscard{j.at("relation").get<std::size_t>(), letter_field(A, j, "top"), pword(A, j, "rhs")};
  if (kind == "PatternDiscard") {
    PatternDiscard c{j.at("relation").get<std::size_t>(), letter_field(A, j, "top"), pword(A, j, "rhs"),
                     pword(A, j, "u"), pword(A, j, "v"), j.at("r").get<std::size_t>(), PatternReason::Reversing};
    const std::string r = j.value("reason", "");
    if (r == "empty_v") c.reason = PatternReason::EmptyV;
    if (r == "factors_of_relation") c.reason = PatternReason::FactorsOfRelation;
    return c;
  }
  if (kind == "CycleWitness")
    return CycleWitness{pword(A, j, "left"),
                        pword(A, j, "right"),
                        j.at("earlier_step").get<std::size_t>(),
                        j.at("detected_step").get<std::size_t>(),
                        j.at("context_left").get<std::size_t>(),
                        j.at("context_right").get<std::size_t>(),
                        j.at("period").get<std::size_t>(),
                        pword(A, j, "flank_left"),
                        pword(A, j, "flank_right")};
  if (kind == "MultiChain") return MultiChain{letter_field(A, j, "s"), letter_field(A, j, "t")};
  if (kind == "QuasiCentral") return QuasiCentral{pword(A, j, "delta"), detail::images_from(A, j.at("images"))};
  if (kind == "DominationClosure") {
    DominationClosure c{pword(A, j, "delta"), {}, j.at("images").get<std::vector<std::vector<std::size_t>>>(), {}};
    for (auto& a : j.at("atoms")) c.atoms.push_back(parse_positive_word(A, a.get<std::string>()));
    for (auto& [name, ids] : j.at("quotients").items()) c.quotients.emplace_back(A[name], ids.get<std::vector<std::size_t>>());
    return c;
  }
  if (kind == "DominationBounded") {
    DominationBounded c{pword(A, j, "delta"), j.at("checked_up_to").get<std::size_t>(), {}};
    for (auto& g : j.at("generators")) c.generators.push_back(A[g.get<std::string>()]);
    return c;
  }
  throw SchemaError("unknown certificate kind '" + kind + "'");
}

[[nodiscard]] inline Status status_from_string(const std::string& s) {
  if (s == "RightOType") return Status::RightOType;
  if (s == "NotRightOType") return Status::NotRightOType;
  if (s == "Unknown") return Status::Unknown;
  throw SchemaError("unknown status '" + s + "'");
}

/// `A` is the alphabet of the presentation the verdict was computed for.
[[nodiscard]] inline json to_json(const Alphabet& A, const Verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["certificate"] = v.certificate ? to_json(A, *v.certificate) : json(nullptr);
  j["ceiling"] = detail::wstr(A, PositiveWord(std::vector<Letter>(v.ceiling.begin(), v.ceiling.end())));
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.evidence) j["evidence"] = to_json(A, Certificate{*v.evidence});
  j["steps"] = v.steps;
  return j;
}

[[nodiscard]] inline Verdict verdict_from_json(const Alphabet& A, const json& j) {
  Verdict v;
  v.status = status_from_string(j.at("status").get<std::string>());
  if (!j.at("certificate").is_null()) v.certificate = certificate_from_json(A, j["certificate"]);
  for (const Letter l : parse_positive_word(A, j.value("ceiling", ""))) v.ceiling.push_back(l);
  v.reason = j.value("reason", "");
  if (j.contains("evidence")) {
    Certificate c = certificate_from_json(A, j["evidence"]);
    if (auto* d = std::get_if<DominationBounded>(&c)) v.evidence = *d;
  }
  v.steps = j.value("steps", std::size_t{0});
  return v;
}

/// The left verdict is written with the same letter names; it concerns the
/// opposite presentation.
[[nodiscard]] inline json to_json(const Alphabet& A, const OTypeVerdict& v) {
  return json{{"right", to_json(A, v.right)}, {"left", to_json(A, v.left)}, {"otype", v.otype()}};
}

[[nodiscard]] inline OTypeVerdict otype_verdict_from_json(const Alphabet& A, const json& j) {
  return OTypeVerdict{verdict_from_json(A, j.at("right")), verdict_from_json(A, j.at("left"))};
}

[[nodiscard]] inline json to_json(const Alphabet& A, const ReversingOutcome& o) {
  using detail::wstr;
  return std::visit(
      [&](auto&& v) -> json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Terminated>)
          return {{"outcome", "Terminated"},
                  {"numerator", wstr(A, v.numerator)},
                  {"denominator", wstr(A, v.denominator)},
                  {"steps", v.steps}};
        else if constexpr (std::is_same_v<V, Stuck>)
          return {{"outcome", "Stuck"},
                  {"word", wstr(A, v.word)},
                  {"position", v.position},
                  {"s", A.name(v.s)},
                  {"t", A.name(v.t)},
                  {"steps", v.steps}};
        else if constexpr (std::is_same_v<V, Cycle>)
          return {{"outcome", "Cycle"},
                  {"earlier_step", v.earlier_step},
                  {"detected_step", v.detected_step},
                  {"context_left", v.context_left},
                  {"context_right", v.context_right},
                  {"period", v.period},
                  {"flank_left", wstr(A, v.flank_left)},
                  {"flank_right", wstr(A, v.flank_right)}};
        else
          return {{"outcome", "BudgetExceeded"},
                  {"steps", v.steps},
                  {"last_length", v.last_word.size()},
                  {"max_length_seen", v.max_word_length_seen}};
      },
      o);
}

[[nodiscard]] inline json to_json(const Alphabet& A, const Fraction& f) {
  return {{"numerator", detail::wstr(A, f.numerator)},
          {"denominator", detail::wstr(A, f.denominator)},
          {"orientation", f.orientation == Orientation::Left ? "left" : "right"},
          {"word", detail::wstr(A, f.word())},
          {"level", to_string(f.level)}};
}

[[nodiscard]] inline json to_json(const Alphabet& A, const OrderSign& s) {
  return {{"sign", static_cast<int>(s.value)},
          {"relation", to_string(s.value)},
          {"witness", detail::wstr(A, s.witness)},
          {"level", to_string(s.level)}};
}

[[nodiscard]] inline json to_json(const Alphabet& A, const WordProblemResult& r) {
  return {{"equal", r.answer == WordProblemAnswer::Equal1},
          {"numerator", detail::wstr(A, r.numerator)},
          {"denominator", detail::wstr(A, r.denominator)},
          {"level", to_string(r.level)}};
}

[[nodiscard]] inline const char* to_string(Side s) { return s == Side::Right ? "right" : "left"; }

[[nodiscard]] inline const char* to_string(DeltaKind k) {
  switch (k) {
    case DeltaKind::Central:
      return "central";
    case DeltaKind::QuasiCentral:
      return "quasi-central";
    default:
      return "dominating";
  }
}

/// Sidecar of a fixture: its presentation text plus the expected results.
[[nodiscard]] inline json to_json(const FamilyInstance& f) {
  using detail::wstr;
  const Alphabet& A = f.presentation.alphabet();
  const Expected& e = f.expected;
  json j;
  j["family"] = f.family;
  j["name"] = f.name;
  j["parameters"] = json::object();
  for (auto& [k, v] : f.parameters) j["parameters"][k] = v;
  j["presentation"] = serialize(f.presentation);
  j["right"] = e.right ? json(to_string(*e.right)) : json(nullptr);
  j["left"] = e.left ? json(to_string(*e.left)) : json(nullptr);
  if (e.delta) {
    j["delta"] = wstr(A, *e.delta);
    j["delta_kind"] = to_string(e.delta_kind);
  }
  if (!e.phi.empty()) j["phi"] = detail::images_json(A, e.phi);
  if (e.discard)
    j["discard"] = {{"side", to_string(e.discard->side)}, {"u", wstr(A, e.discard->u)}, {"v", wstr(A, e.discard->v)}};
  if (e.cycle)
    j["cycle"] = {{"side", to_string(e.cycle->side)},
                  {"u", wstr(A, e.cycle->u)},
                  {"v", wstr(A, e.cycle->v)},
                  {"steps", e.cycle->steps}};
  if (e.ceiling_period) j["ceiling_period"] = wstr(A, *e.ceiling_period);
  j["right_triangular"] = e.right_triangular;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

}  // namespace otype
