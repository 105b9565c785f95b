#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "otype/analysis.hpp"
#include "otype/serialize.hpp"

// Classification of the two-generator presentations (a, b; a = b·w).

namespace otype::census {

enum class Classification { Lemma72Discard, CyclicReversing, QuasiCentralFound, Unknown };

[[nodiscard]] inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Lemma72Discard:
      return "Lemma72Discard";
    case Classification::CyclicReversing:
      return "CyclicReversing";
    case Classification::QuasiCentralFound:
      return "QuasiCentralFound";
    default:
      return "Unknown";
  }
}

[[nodiscard]] inline Classification classification_from_string(const std::string& s) {
  for (auto c : {Classification::Lemma72Discard, Classification::CyclicReversing, Classification::QuasiCentralFound,
                 Classification::Unknown})
    if (s == to_string(c)) return c;
  throw SchemaError("unknown census class '" + s + "'");
}

/// Syntactic discards come first in the pipeline, so a presentation open to
/// both a discard and a cycle is counted as a discard.
[[nodiscard]] inline Classification classify(const Verdict& v) {
  if (!v.certificate) return Classification::Unknown;
  return std::visit(
      [](auto&& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, TailDiscard> || std::is_same_v<C, PatternDiscard>)
          return Classification::Lemma72Discard;
        else if constexpr (std::is_same_v<C, CycleWitness>)
          return Classification::CyclicReversing;
        else if constexpr (std::is_same_v<C, QuasiCentral> || std::is_same_v<C, DominationClosure>)
          return Classification::QuasiCentralFound;
        else
          return Classification::Unknown;
      },
      *v.certificate);
}

[[nodiscard]] inline const Alphabet& alphabet() {
  static const Alphabet A{"a", "b"};
  return A;
}

/// The index-th word of {a, b}* in shortlex order (ε, a, b, aa, ab, …).
[[nodiscard]] inline PositiveWord word_at(std::size_t index) {
  std::size_t len = 0;
  while (index >= (std::size_t{1} << len)) {
    index -= std::size_t{1} << len;
    ++len;
  }
  std::vector<Letter> out;
  for (std::size_t i = len; i-- > 0;) out.push_back(Letter{static_cast<std::uint16_t>((index >> i) & 1U)});
  return PositiveWord(std::move(out));
}

[[nodiscard]] inline std::size_t total(std::size_t max_length) { return (std::size_t{1} << (max_length + 1)) - 1; }

[[nodiscard]] inline PositivePresentation presentation_for(const PositiveWord& w) {
  return PositivePresentation(alphabet(), {{PositiveWord{Letter{0}}, PositiveWord{Letter{1}} * w}});
}

/// All (a, b; a = b·w) with |w| ≤ max_length, shortlex in w.
[[nodiscard]] inline std::vector<PositivePresentation> enumerate(std::size_t max_length) {
  std::vector<PositivePresentation> out;
  for (std::size_t i = 0; i < total(max_length); ++i) out.push_back(presentation_for(word_at(i)));
  return out;
}

struct CensusRecord {
  std::size_t index = 0;
  PositiveWord w;
  Classification classification = Classification::Unknown;
  Verdict right;
  /// Verdict for the opposite presentation; computed when the right side is certified.
  std::optional<Verdict> left;

  [[nodiscard]] std::optional<Classification> left_classification() const {
    if (!left) return std::nullopt;
    return classify(*left);
  }
  [[nodiscard]] bool otype() const {
    return classification == Classification::QuasiCentralFound && left &&
           classify(*left) == Classification::QuasiCentralFound;
  }
};

struct CensusOptions {
  std::size_t max_length = 9;
  AnalysisOptions analysis = [] {
    AnalysisOptions o;
    o.domination_n = 0;
    return o;
  }();
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t workers = 0;
  /// Records of an earlier partial run; their indices are not recomputed.
  std::vector<CensusRecord> prior;
};

struct CensusReport {
  std::size_t max_length = 0;
  std::array<std::size_t, 4> counts{};
  std::size_t otype = 0;
  std::vector<CensusRecord> records;

  [[nodiscard]] std::size_t count(Classification c) const { return counts[static_cast<std::size_t>(c)]; }
  [[nodiscard]] std::size_t size() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
  /// "854 / 3 / 166 (O-type: 33)", plus the Unknown count when non-zero.
  [[nodiscard]] std::string summary_line() const {
    std::string s = std::to_string(counts[0]) + " / " + std::to_string(counts[1]) + " / " + std::to_string(counts[2]) +
                    " (O-type: " + std::to_string(otype) + ")";
    if (counts[3] > 0) s += " unknown: " + std::to_string(counts[3]);
    return s;
  }
};

[[nodiscard]] inline CensusRecord classify_one(std::size_t index, const AnalysisOptions& opt) {
  CensusRecord r;
  r.index = index;
  r.w = word_at(index);
  PositivePresentation P = presentation_for(r.w);
  r.right = analyze(P, opt);
  r.classification = classify(r.right);
  if (r.classification == Classification::QuasiCentralFound) r.left = analyze(opposite(P), opt);
  return r;
}

/// Classifies every presentation up to opt.max_length on a worker pool.
/// `on_record` runs under a lock as records complete, in completion order;
/// the returned report is sorted by index.
[[nodiscard]] inline CensusReport run(const CensusOptions& opt,
                                      const std::function<void(const CensusRecord&)>& on_record = {}) {
  const std::size_t n = total(opt.max_length);
  std::size_t workers = opt.workers ? opt.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  CensusReport report;
  report.max_length = opt.max_length;
  std::set<std::size_t> skip;
  for (const auto& r : opt.prior)
    if (r.index < n && skip.insert(r.index).second) report.records.push_back(r);
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      if (skip.count(i)) continue;
      CensusRecord r = classify_one(i, opt.analysis);
      std::lock_guard lock(mu);
      if (on_record) on_record(r);
      report.records.push_back(std::move(r));
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < workers; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(report.records.begin(), report.records.end(),
            [](const CensusRecord& x, const CensusRecord& y) { return x.index < y.index; });
  for (const auto& r : report.records) {
    ++report.counts[static_cast<std::size_t>(r.classification)];
    if (r.otype()) ++report.otype;
  }
  return report;
}

/// One JSON-lines record: w, class, left_class, delta, steps, plus the
/// certificates so each classification can be replayed.
[[nodiscard]] inline nlohmann::json to_json(const CensusRecord& r) {
  const Alphabet& A = alphabet();
  nlohmann::json j;
  j["index"] = r.index;
  j["w"] = format(A, r.w);
  j["class"] = to_string(r.classification);
  auto lc = r.left_classification();
  j["left_class"] = lc ? nlohmann::json(to_string(*lc)) : nlohmann::json(nullptr);
  j["delta"] = nullptr;
  if (r.right.certificate) {
    if (auto q = std::get_if<QuasiCentral>(&*r.right.certificate)) j["delta"] = format(A, q->w);
    if (auto d = std::get_if<DominationClosure>(&*r.right.certificate)) j["delta"] = format(A, d->delta);
  }
  j["steps"] = r.right.steps + (r.left ? r.left->steps : 0);
  j["certificate"] = r.right.certificate ? otype::to_json(A, *r.right.certificate) : nlohmann::json(nullptr);
  if (r.left && r.left->certificate) j["left_certificate"] = otype::to_json(A, *r.left->certificate);
  if (!r.right.reason.empty()) j["reason"] = r.right.reason;
  return j;
}

/// Reads a record back; the verdicts carry status and certificate only.
[[nodiscard]] inline CensusRecord record_from_json(const nlohmann::json& j) {
  const Alphabet& A = alphabet();
  CensusRecord r;
  r.w = parse_positive_word(A, j.at("w").get<std::string>());
  r.index = j.contains("index") ? j["index"].get<std::size_t>() : (std::size_t{1} << r.w.size()) - 1;
  if (!j.contains("index"))
    for (std::size_t i = 0; i < r.w.size(); ++i) r.index += static_cast<std::size_t>(r.w[r.w.size() - 1 - i].id) << i;
  r.classification = classification_from_string(j.at("class").get<std::string>());
  auto status_of = [](Classification c) {
    return c == Classification::QuasiCentralFound ? Status::RightOType
           : c == Classification::Unknown        ? Status::Unknown
                                                 : Status::NotRightOType;
  };
  r.right.status = status_of(r.classification);
  if (j.contains("certificate") && !j["certificate"].is_null())
    r.right.certificate = certificate_from_json(A, j["certificate"]);
  r.right.reason = j.value("reason", "");
  r.right.steps = j.value("steps", std::size_t{0});
  if (j.contains("left_class") && !j["left_class"].is_null()) {
    Verdict l;
    l.status = status_of(classification_from_string(j["left_class"].get<std::string>()));
    if (j.contains("left_certificate")) l.certificate = certificate_from_json(A, j["left_certificate"]);
    r.left = std::move(l);
  }
  return r;
}

[[nodiscard]] inline nlohmann::json summary_json(const CensusReport& rep, const CensusOptions& opt) {
  nlohmann::json j;
  j["max_length"] = rep.max_length;
  j["total"] = rep.size();
  j["counts"] = {{"Lemma72Discard", rep.count(Classification::Lemma72Discard)},
                 {"CyclicReversing", rep.count(Classification::CyclicReversing)},
                 {"QuasiCentralFound", rep.count(Classification::QuasiCentralFound)},
                 {"Unknown", rep.count(Classification::Unknown)}};
  j["otype"] = rep.otype;
  const AnalysisOptions& a = opt.analysis;
  j["budgets"] = {{"max_steps", a.budget.max_steps},       {"max_length", a.budget.max_length},
                  {"ceiling_length", a.ceiling_length},    {"qc_max_power", a.qc_max_power},
                  {"root_max_length", a.root_max_length},  {"root_total_length", a.root_total_length},
                  {"candidate_steps", a.candidate_steps},  {"domination_atoms", a.domination_atoms},
                  {"domination_steps", a.domination_steps}};
  return j;
}

[[nodiscard]] inline std::string summary_csv(const CensusReport& rep) {
  return "max_length,total,Lemma72Discard,CyclicReversing,QuasiCentralFound,Unknown,otype\n" +
         std::to_string(rep.max_length) + "," + std::to_string(rep.size()) + "," +
         std::to_string(rep.count(Classification::Lemma72Discard)) + "," +
         std::to_string(rep.count(Classification::CyclicReversing)) + "," +
         std::to_string(rep.count(Classification::QuasiCentralFound)) + "," +
         std::to_string(rep.count(Classification::Unknown)) + "," + std::to_string(rep.otype) + "\n";
}

}  // namespace otype::census
