#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>

#include "otype/reversing.hpp"
#include "otype/words.hpp"

namespace otype {

struct RenderOptions {
  /// Also draw each word on a fixed-width grid with a marker under the junction.
  bool grid = false;
  /// When the trace ended on a cycle, describe the recurring factor.
  std::optional<Cycle> cycle;
  /// The trace comes from left reversing, so the factor becomes x·F·y⁻¹.
  bool left = false;
};

namespace detail {

inline std::string bracketed(const Alphabet& A, const SignedWord& w, std::size_t pos) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    if (i == pos) out += '[';
    out += A.name(w[i].letter());
    if (w[i].negative()) out += "^-1";
    if (i == pos + 1) out += ']';
  }
  return out;
}

inline std::string grid_rows(const Alphabet& A, const SignedWord& w, std::size_t pos, std::size_t cell) {
  std::string top, mark;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::string tok = A.name(w[i].letter()) + (w[i].negative() ? "'" : "");
    tok.resize(cell, ' ');
    top += tok;
    mark += std::string(cell, (i == pos || i == pos + 1) ? '^' : ' ');
  }
  while (!mark.empty() && mark.back() == ' ') mark.pop_back();
  while (!top.empty() && top.back() == ' ') top.pop_back();
  return "      " + top + "\n      " + mark + "\n";
}

}  // namespace detail

/// One line per step: the word before the step with the reversed subword
/// s⁻¹t in brackets, then the rule used.  Grid rows write s⁻¹ as s'.
[[nodiscard]] inline std::string render_trace(const Alphabet& A, const ReversingTrace& trace,
                                              const RenderOptions& opt = {}) {
  std::ostringstream out;
  out << "start: " << format(A, trace.start, WordStyle::Spaced) << "  (" << trace.steps.size() << " steps)\n";
  std::size_t cell = 2;
  for (std::size_t i = 0; i < A.size(); ++i) cell = std::max(cell, A.name(A.letter(i)).size() + 2);
  SignedWord before = trace.start;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& st = trace.steps[k];
    out << (k + 1) << ": " << detail::bracketed(A, before, st.position) << "  -> ";
    if (st.rule.deletion)
      out << "delete " << A.name(st.rule.s) << "^-1 " << A.name(st.rule.t) << "\n";
    else
      out << "relation (" << A.name(st.rule.s) << ", " << A.name(st.rule.t) << ")\n";
    if (opt.grid) out << detail::grid_rows(A, before, st.position, cell);
    before = st.word;
  }
  if (!trace.steps.empty()) out << "end: " << format(A, before, WordStyle::Spaced) << "\n";
  if (opt.cycle) {
    const Cycle& c = *opt.cycle;
    out << "cycle: the factor at step " << c.earlier_step << " (context " << c.context_left << " + "
        << c.context_right << " letters) reverses in " << c.period << (opt.left ? " steps to x F y^-1" : " steps to x^-1 F y") << " with x = "
        << format(A, c.flank_left, WordStyle::Spaced) << ", y = " << format(A, c.flank_right, WordStyle::Spaced)
        << "\n";
  }
  return out.str();
}

}  // namespace otype
