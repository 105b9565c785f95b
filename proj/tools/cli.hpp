#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "otype/census.hpp"
#include "otype/decision.hpp"
#include "otype/families.hpp"
#include "otype/render.hpp"
#include "otype/serialize.hpp"

namespace otype::cli {

enum ExitStatus : int { Ok = 0, Undecided = 1, UsageError = 2 };

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  std::string pres;
  std::string word;
  bool json = false;
  bool trace = false;
  bool grid = false;
  bool force = false;
  bool left = false;
  std::size_t max_steps = 0;
  std::size_t max_length = 0;
  std::size_t ceiling_len = 0;
  std::size_t qc_max_power = 0;

  [[nodiscard]] PositivePresentation presentation() const {
    if (file.empty() == pres.empty()) throw UsageFailure("give exactly one of -f FILE or --pres TEXT");
    if (!pres.empty()) {
      std::string text = pres;
      std::replace(text.begin(), text.end(), ';', '\n');
      return parse_presentation(text);
    }
    std::ifstream in(file);
    if (!in) throw UsageFailure("cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  [[nodiscard]] SignedWord signed_word(const Alphabet& A) const { return parse_signed_word(A, word); }

  [[nodiscard]] AnalysisOptions analysis() const {
    AnalysisOptions o;
    if (max_steps) o.budget.max_steps = max_steps;
    if (max_length) o.budget.max_length = max_length;
    if (ceiling_len) o.ceiling_length = ceiling_len;
    if (qc_max_power) o.qc_max_power = qc_max_power;
    return o;
  }

  [[nodiscard]] Budget budget() const {
    Budget b;
    if (max_steps) b.max_steps = max_steps;
    if (max_length) b.max_length = max_length;
    return b;
  }
};

inline void add_input(CLI::App* app, Common& c, bool word) {
  app->add_option("-f,--file", c.file, "presentation file");
  app->add_option("--pres", c.pres, "presentation text, e.g. \"gens: a b; rel: a = b a b\"");
  if (word) app->add_option("-w,--word", c.word, "signed word, e.g. \"b^-1 a\"")->required();
  app->add_flag("--json", c.json, "machine-readable output");
}

inline void add_budgets(CLI::App* app, Common& c) {
  app->add_option("--max-steps", c.max_steps, "reversing step budget")->envname("OTYPE_MAX_STEPS");
  app->add_option("--max-length", c.max_length, "reversing word length budget")->envname("OTYPE_MAX_LENGTH");
  app->add_option("--ceiling-len", c.ceiling_len, "ceiling prefix length")->envname("OTYPE_CEILING_LEN");
  app->add_option("--qc-max-power", c.qc_max_power, "largest power of the top letter tried")
      ->envname("OTYPE_QC_MAX_POWER");
}

[[nodiscard]] inline std::string describe(const Alphabet& A, const Certificate& cert) {
  auto f = [&](const PositiveWord& w) { return w.empty() ? std::string("eps") : format(A, w); };
  return std::visit(
      [&](auto&& c) -> std::string {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, TailDiscard>) {
          return "relation " + A.name(c.top) + " = " + f(c.rhs) + " ends with " + A.name(c.top);
        } else if constexpr (std::is_same_v<C, PatternDiscard>) {
          return "relation " + A.name(c.top) + " = " + f(c.rhs) + " repeats u = " + f(c.u) + ", v = " + f(c.v) +
                 " (" + std::to_string(c.r) + " times)";
        } else if constexpr (std::is_same_v<C, CycleWitness>) {
          return "reversing " + format(A, c.start_word()) + " cycles with period " + std::to_string(c.period) +
                 ", flanks " + f(c.flank_left) + " / " + f(c.flank_right);
        } else if constexpr (std::is_same_v<C, MultiChain>) {
          return "letters " + A.name(c.s) + " and " + A.name(c.t) + " lie in different chains";
        } else if constexpr (std::is_same_v<C, QuasiCentral>) {
          bool central = true;
          std::string phi;
          for (auto& [s, img] : c.images) {
            central = central && img == PositiveWord{s};
            phi += " phi(" + A.name(s) + ") = " + f(img) + ";";
          }
          if (central) return "delta = " + f(c.w) + " central";
          phi.pop_back();
          return "delta = " + f(c.w) + " quasi-central," + phi;
        } else if constexpr (std::is_same_v<C, DominationClosure>) {
          return "delta = " + f(c.delta) + " dominating (closure of " + std::to_string(c.atoms.size()) + " atoms)";
        } else {
          return "bounded domination of " + f(c.delta) + " up to n = " + std::to_string(c.checked_up_to);
        }
      },
      cert);
}

inline void print_verdict(std::ostream& out, const char* side, const Alphabet& A, const Verdict& v) {
  out << side << to_string(v.status);
  if (v.certificate) out << " [" << certificate_kind(*v.certificate) << "] " << describe(A, *v.certificate);
  if (!v.reason.empty()) out << " (" << v.reason << ")";
  out << "\n";
}

inline int cmd_parse(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  auto T = detect_right_triangular(P);
  auto L = detect_left_triangular(P);
  if (c.json) {
    json j{{"presentation", serialize(P)}, {"right_triangular", T.has_value()}, {"left_triangular", L.has_value()}};
    if (T) {
      json chains = json::array();
      for (auto& ch : T->chains) chains.push_back(detail::wstr(P.alphabet(), PositiveWord(ch)));
      j["chains"] = chains;
      json completed = json::array();
      const RelationTable table = complete(*T);
      for (auto& r : table.relations())
        completed.push_back(P.alphabet().name(r.top) + " = " + detail::wstr(P.alphabet(), r.rhs()));
      j["completed"] = completed;
    }
    out << j.dump(2) << "\n";
    return Ok;
  }
  out << serialize(P);
  out << "right-triangular: " << (T ? "yes" : "no") << "\nleft-triangular: " << (L ? "yes" : "no") << "\n";
  if (T) {
    for (auto& ch : T->chains) out << "chain: " << format(P.alphabet(), PositiveWord(ch), WordStyle::Spaced) << "\n";
    const RelationTable table = complete(*T);
    for (auto& r : table.relations())
      out << "completed: " << P.alphabet().name(r.top) << " = " << format(P.alphabet(), r.rhs(), WordStyle::Spaced)
          << "\n";
  }
  return Ok;
}

inline int cmd_analyze(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  OTypeVerdict v = analyze_otype(P, c.analysis());
  const bool decided = v.right.status != Status::Unknown && v.left.status != Status::Unknown;
  if (c.json) {
    out << to_json(P.alphabet(), v).dump(2) << "\n";
  } else {
    print_verdict(out, "right: ", P.alphabet(), v.right);
    print_verdict(out, "left:  ", P.alphabet(), v.left);
    out << "O-type: " << (v.otype() ? "yes" : decided ? "no" : "unknown") << "\n";
  }
  return decided ? Ok : Undecided;
}

inline int cmd_reverse(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  const Alphabet& A = P.alphabet();
  SignedWord w = c.signed_word(A);
  auto T = detect_right_triangular(c.left ? opposite(P) : P);
  if (!T) throw UsageFailure(c.left ? "presentation is not left-triangular" : "presentation is not right-triangular");
  RelationTable table = complete(*T);
  ReversingTrace trace;
  ReversingTrace* tp = c.trace || c.grid ? &trace : nullptr;
  ReversingOutcome o = c.left ? left_reverse(w, table, c.budget(), tp) : right_reverse(w, table, c.budget(), tp);
  if (c.json) {
    json j = to_json(A, o);
    if (tp) {
      j["trace"] = json::array();
      for (auto& st : trace.steps) j["trace"].push_back({{"word", detail::wstr(A, st.word)}, {"position", st.position}});
    }
    out << j.dump(2) << "\n";
  } else {
    if (tp) {
      RenderOptions ro;
      ro.grid = c.grid;
      ro.left = c.left;
      if (auto cy = std::get_if<Cycle>(&o)) ro.cycle = *cy;
      out << render_trace(A, trace, ro);
    }
    std::visit(
        [&](auto&& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, Terminated>) {
            SignedWord fin = c.left ? negative_positive(v.denominator, v.numerator)
                                    : positive_negative(v.numerator, v.denominator);
            out << "terminated after " << v.steps << " steps: " << (fin.empty() ? "eps" : format(A, fin)) << "\n";
          } else if constexpr (std::is_same_v<V, Stuck>) {
            out << "stuck after " << v.steps << " steps at " << A.name(v.s) << ", " << A.name(v.t) << "\n";
          } else if constexpr (std::is_same_v<V, Cycle>) {
            out << "cycle: period " << v.period << " from step " << v.earlier_step << ", flanks "
                << format(A, v.flank_left) << " / " << format(A, v.flank_right) << "\n";
          } else {
            out << "budget exhausted after " << v.steps << " steps (word length " << v.last_word.size() << ")\n";
          }
        },
        o);
  }
  return std::holds_alternative<BudgetExceeded>(o) ? Undecided : Ok;
}

inline Decider make_decider(const Common& c, const PositivePresentation& P) {
  return Decider(P, c.force, c.analysis(), c.budget());
}

inline int cmd_sign(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  Decider d = make_decider(c, P);
  OrderSign s = d.order_sign(c.signed_word(P.alphabet()));
  if (c.json)
    out << to_json(P.alphabet(), s).dump(2) << "\n";
  else
    out << to_string(s.value) << (s.witness.empty() ? "" : " " + format(P.alphabet(), s.witness))
        << (s.level == Certification::Forced ? " (forced)" : "") << "\n";
  return Ok;
}

inline int cmd_wp(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  Decider d = make_decider(c, P);
  WordProblemResult r = d.word_problem(c.signed_word(P.alphabet()));
  if (c.json)
    out << to_json(P.alphabet(), r).dump(2) << "\n";
  else
    out << (r.answer == WordProblemAnswer::Equal1 ? "= 1" : "!= 1")
        << (r.level == Certification::Forced ? " (forced)" : "") << "\n";
  return Ok;
}

inline int cmd_fraction(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  Decider d = make_decider(c, P);
  Fraction f = d.fraction_normal_form(c.signed_word(P.alphabet()));
  if (c.json)
    out << to_json(P.alphabet(), f).dump(2) << "\n";
  else
    out << (f.word().empty() ? "eps" : format(P.alphabet(), f.word(), WordStyle::Spaced))
        << (f.level == Certification::Forced ? " (forced)" : "") << "\n";
  return Ok;
}

inline int cmd_ceiling(const Common& c, std::ostream& out) {
  PositivePresentation P = c.presentation();
  auto T = detect_right_triangular(P);
  if (!T) throw UsageFailure("presentation is not right-triangular");
  AnalysisOptions o = c.analysis();
  CeilingResult r = ceiling_prefix(*T, complete(*T), o.ceiling_length, o.budget);
  const Alphabet& A = P.alphabet();
  // Printed as s_n⋯s₁, the way the ceiling ^∞(…) is written.
  PositiveWord shown(std::vector<Letter>(r.letters.rbegin(), r.letters.rend()));
  std::optional<PositiveWord> period;
  if (r.kind == CeilingResult::Kind::Prefix) period = ceiling_period(r.letters, o.period_max);
  static const char* kinds[] = {"prefix", "refuted", "unknown", "ambiguous"};
  if (c.json) {
    json j{{"kind", kinds[static_cast<int>(r.kind)]}, {"prefix", detail::wstr(A, shown)}, {"steps", r.steps}};
    j["period"] = period ? json(detail::wstr(A, *period)) : json(nullptr);
    if (r.witness) j["witness"] = to_json(A, Certificate{*r.witness});
    out << j.dump(2) << "\n";
  } else {
    out << "ceiling (" << kinds[static_cast<int>(r.kind)] << "): ..." << format(A, shown) << "\n";
    if (period) out << "period: " << format(A, *period) << "\n";
    if (r.witness) out << "witness: " << describe(A, Certificate{*r.witness}) << "\n";
  }
  return r.kind == CeilingResult::Kind::Unknown ? Undecided : Ok;
}

[[nodiscard]] inline std::string file_stem(const std::string& name) {
  std::string s;
  for (char ch : name) s += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
  return s;
}

/// Runs the analyzer on a fixture and reports whether it matches the
/// expected verdicts.
inline bool check_fixture(const FamilyInstance& f, const AnalysisOptions& o, std::ostream& out) {
  if (!f.expected.right_triangular) {
    bool ok = !detect_right_triangular(f.presentation);
    out << (ok ? "ok   " : "FAIL ") << f.name << ": not right-triangular\n";
    return ok;
  }
  OTypeVerdict v = analyze_otype(f.presentation, o);
  bool ok = (!f.expected.right || *f.expected.right == v.right.status) &&
            (!f.expected.left || *f.expected.left == v.left.status);
  out << (ok ? "ok   " : "FAIL ") << f.name << ": right " << to_string(v.right.status) << ", left "
      << to_string(v.left.status) << "\n";
  return ok;
}

inline int cmd_family(const Common& c, const std::string& name, const std::vector<long>& params,
                      const std::string& out_dir, bool check, std::ostream& out) {
  std::vector<FamilyInstance> chosen;
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw UsageFailure(name + " takes " + std::to_string(k) + " parameters");
  };
  if (name == "catalog") {
    chosen = fixture_catalog();
  } else if (name == "torus_knot") {
    need(3);
    chosen.push_back(torus_knot(params[0], params[1], params[2]));
  } else if (name == "three_gen") {
    need(4);
    chosen.push_back(three_gen(params[0], params[1], params[2], params[3]));
  } else if (name == "split_family") {
    need(3);
    chosen.push_back(split_family(params[0], params[1], params[2]));
  } else if (name == "cycling") {
    need(1);
    chosen.push_back(cycling(static_cast<std::size_t>(params[0])));
  } else if (name == "chain_family") {
    if (params.empty() || params[0] < 2 || params.size() != static_cast<std::size_t>(2 * params[0] - 1))
      throw UsageFailure("chain_family takes l, then m2..ml, then n2..nl");
    const auto ell = static_cast<std::size_t>(params[0]);
    std::vector<long> m(params.begin() + 1, params.begin() + static_cast<long>(ell)),
        n(params.begin() + static_cast<long>(ell), params.end());
    chosen.push_back(chain_family(ell, m, n));
  } else {
    throw UsageFailure("unknown family '" + name +
                       "' (catalog, torus_knot, chain_family, three_gen, split_family, cycling)");
  }
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (auto& f : chosen) {
      const std::string stem = (std::filesystem::path(out_dir) / file_stem(f.name)).string();
      std::ofstream(stem + ".pres") << serialize(f.presentation);
      std::ofstream(stem + ".json") << to_json(f).dump(2) << "\n";
    }
    out << "wrote " << chosen.size() << " fixtures to " << out_dir << "\n";
  }
  if (check) {
    bool all = true;
    for (auto& f : chosen) all = check_fixture(f, c.analysis(), out) && all;
    return all ? Ok : Undecided;
  }
  if (out_dir.empty()) {
    if (c.json) {
      json j = json::array();
      for (auto& f : chosen) j.push_back(to_json(f));
      out << (chosen.size() == 1 ? j[0] : j).dump(2) << "\n";
    } else {
      for (auto& f : chosen) out << "# " << f.name << "\n" << serialize(f.presentation);
    }
  }
  return Ok;
}

struct CensusArgs {
  std::size_t max_len = 9;
  std::size_t workers = 0;
  std::string out_path;
  std::string summary_path;
  std::string csv_path;
  bool resume = false;
};

inline int cmd_census(const Common& c, const CensusArgs& a, std::ostream& out) {
  census::CensusOptions opt;
  opt.max_length = a.max_len;
  opt.workers = a.workers;
  if (c.max_steps) opt.analysis.budget.max_steps = c.max_steps;
  if (c.max_length) opt.analysis.budget.max_length = c.max_length;
  if (c.ceiling_len) opt.analysis.ceiling_length = c.ceiling_len;
  if (c.qc_max_power) opt.analysis.qc_max_power = c.qc_max_power;
  if (a.resume && !a.out_path.empty()) {
    std::ifstream in(a.out_path);
    for (std::string line; std::getline(in, line);)
      if (!line.empty()) opt.prior.push_back(census::record_from_json(json::parse(line)));
  }
  std::ofstream stream;
  if (!a.out_path.empty()) stream.open(a.out_path, a.resume ? std::ios::app : std::ios::trunc);
  census::CensusReport rep = census::run(opt, [&](const census::CensusRecord& r) {
    if (stream) stream << census::to_json(r).dump() << "\n" << std::flush;
  });
  if (stream) {
    // Rewrite sorted now that every record is known.
    stream.close();
    std::ofstream sorted(a.out_path, std::ios::trunc);
    for (auto& r : rep.records) sorted << census::to_json(r).dump() << "\n";
  }
  json summary = census::summary_json(rep, opt);
  if (!a.summary_path.empty()) std::ofstream(a.summary_path) << summary.dump(2) << "\n";
  if (!a.csv_path.empty()) std::ofstream(a.csv_path) << census::summary_csv(rep);
  if (c.json)
    out << summary.dump(2) << "\n";
  else
    out << rep.summary_line() << "\n";
  return rep.count(census::Classification::Unknown) == 0 ? Ok : Undecided;
}

/// Runs one subcommand.  Exit codes: 0 decided, 1 unknown or budget
/// exhausted, 2 usage or parse error.
[[nodiscard]] inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subword reversing and O-type analysis of triangular presentations", "otype"};
  app.require_subcommand(1);
  Common c;
  CensusArgs ca;
  std::string family_name, family_out;
  std::vector<long> family_params;
  bool family_check = false;

  auto* parse = app.add_subcommand("parse", "parse a presentation and show its triangular structure");
  add_input(parse, c, false);
  auto* analyze_cmd = app.add_subcommand("analyze", "right and left O-type verdicts with certificates");
  add_input(analyze_cmd, c, false);
  add_budgets(analyze_cmd, c);
  auto* reverse = app.add_subcommand("reverse", "reverse a signed word");
  add_input(reverse, c, true);
  add_budgets(reverse, c);
  reverse->add_flag("--trace", c.trace, "print every step");
  reverse->add_flag("--grid", c.grid, "also draw each step on a grid");
  reverse->add_flag("--left", c.left, "left reversing instead of right reversing");
  std::vector<CLI::App*> deciders;
  for (auto [n, d] : {std::pair{"sign", "sign of a signed word in the ordering"},
                      std::pair{"wp", "decide whether a signed word represents 1"},
                      std::pair{"fraction", "left fraction normal form of a signed word"}}) {
    auto* sub = app.add_subcommand(n, d);
    add_input(sub, c, true);
    add_budgets(sub, c);
    sub->add_flag("--force", c.force, "skip the O-type precondition (results are not certified)");
    deciders.push_back(sub);
  }
  auto* ceiling = app.add_subcommand("ceiling", "right ceiling prefix and its period");
  add_input(ceiling, c, false);
  add_budgets(ceiling, c);
  auto* family = app.add_subcommand("family", "print, export or check family instances and the fixture catalog");
  family->add_option("name", family_name, "catalog, torus_knot, chain_family, three_gen, split_family or cycling")
      ->required();
  family->add_option("params", family_params, "integer parameters");
  family->add_option("--out", family_out, "write NAME.pres and NAME.json into this directory");
  family->add_flag("--check", family_check, "run the analyzer and compare with the expected verdicts");
  family->add_flag("--json", c.json, "print the expectation sidecar");
  add_budgets(family, c);
  auto* census_cmd = app.add_subcommand("census", "classify all (a, b; a = b w) with |w| <= max-len");
  census_cmd->add_option("--max-len", ca.max_len, "largest |w|")->envname("OTYPE_MAX_LEN");
  census_cmd->add_option("--workers", ca.workers, "worker threads (0: all cores)")->envname("OTYPE_WORKERS");
  census_cmd->add_option("--out", ca.out_path, "JSON-lines record file");
  census_cmd->add_option("--summary", ca.summary_path, "summary JSON file");
  census_cmd->add_option("--csv", ca.csv_path, "summary CSV file");
  census_cmd->add_flag("--resume", ca.resume, "keep the records already in --out");
  census_cmd->add_flag("--json", c.json, "print the summary as JSON");
  add_budgets(census_cmd, c);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return UsageError;
  }

  try {
    if (parse->parsed()) return cmd_parse(c, out);
    if (analyze_cmd->parsed()) return cmd_analyze(c, out);
    if (reverse->parsed()) return cmd_reverse(c, out);
    if (deciders[0]->parsed()) return cmd_sign(c, out);
    if (deciders[1]->parsed()) return cmd_wp(c, out);
    if (deciders[2]->parsed()) return cmd_fraction(c, out);
    if (ceiling->parsed()) return cmd_ceiling(c, out);
    if (family->parsed()) return cmd_family(c, family_name, family_params, family_out, family_check, out);
    if (census_cmd->parsed()) return cmd_census(c, ca, out);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return UsageError;
  } catch (const WordSyntaxError& e) {
    err << "word syntax error: " << e.what() << "\n";
    return UsageError;
  } catch (const FamilyParameterError& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const PreconditionUnverified& e) {
    err << "not certified: " << e.what() << " (use --force to run anyway)\n";
    return Undecided;
  } catch (const BudgetExhausted& e) {
    err << "undecided: " << e.what() << "\n";
    return Undecided;
  }
  return UsageError;
}

}  // namespace otype::cli
