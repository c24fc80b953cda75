#pragma once

#include <map>
#include <regex>
#include <string>
#include <vector>

#include "rigid/rigidtab.hpp"

namespace published {

struct Table {
  std::string preset;
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> entries;  // published entries, "q" or "q0".."q2"
  std::string default_q;                          // Q variable standing for a bare "q"
  std::map<std::string, std::string> identify;    // applied to computed entries first
};

inline const std::vector<Table>& tables() {
  static const std::vector<Table> t = {
      {"sl2",
       {"T0", "T1", "1"},
       {"St", "pi+", "i_{}(1)"},
       {{"-1", "-1", "q-1"}, {"-1", "q", "q-1"}, {"1", "1", "2"}},
       "Q1",
       {{"Q0", "Q1"}}},
      {"pgl2",
       {"T1", "tau", "1"},
       {"St-", "St+", "i_{}(1)"},
       {{"-1", "-1", "q-1"}, {"1", "-1", "0"}, {"1", "1", "2"}},
       "Q1",
       {}},
      {"c2-aff",
       {"T1T2", "(T1T2)^2", "T0T2", "T0T1", "(T0T1)^2", "T0", "T1", "T2", "1"},
       {"2x0", "11x0", "0x2", "0x11", "1x1", "i_{1}(St)", "i_{2}(St)", "i_{2}(pi+)", "i_{}(1)"},
       {{"q1*q2", "-q2", "-q1", "1", "0", "1-q2", "1-q1", "q2*(q1-1)", "(q1-1)*(q2-1)"},
        {"(q1*q2)^2", "q2^2", "q1^2", "1", "-2*q1*q2", "q2^2-2*q1*q2+1", "q1^2-2*q1*q2+1",
         "q1^2*q2^2+q2^2-2*q1*q2", "q1^2*q2^2+q2^2+q1^2+1-4*q1*q2"},
        {"-q2", "-q2", "1", "1", "1-q2", "(q0-1)*(q2-1)", "2-q0-q2", "q0*q2+1-2*q2", "2*(q0-1)*(q2-1)"},
        {"-q1", "1", "-q1", "1", "1-q1", "1-q0", "1-q1", "1-q1", "(q0-1)*(q1-1)"},
        {"q1^2", "1", "q1^2", "1", "q1^2+1", "q0^2-2*q0*q1+1", "q1^2-2*q0*q1+1", "q1^2-2*q0*q1+1",
         "q0^2*q1^2+q1^2+q0^2+1-4*q0*q1"},
        {"-1", "-1", "-1", "-1", "-2", "2*q0-2", "q0-3", "q0-3", "4*q0-4"},
        {"q1", "-1", "q1", "-1", "q1-1", "q1-3", "2*q1-2", "2*q1-2", "4*q1-4"},
        {"q2", "q2", "-1", "-1", "q2-1", "2*q2-2", "q2-3", "3*q2-1", "4*q2-4"},
        {"1", "1", "1", "1", "2", "4", "4", "4", "8"}},
       "",
       {}},
  };
  return t;
}

/// Published entry rewritten in the Q variables of `qt`: "q" -> default_q, "qN" -> "QN".
inline rigid::LaurentPoly expected_entry(const Table& t, std::size_t r, std::size_t c, const rigid::VarTablePtr& qt) {
  static const std::regex var("q([0-9]*)");
  const std::string& text = t.entries[r][c];
  std::string out;
  auto last = text.cbegin();
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it) {
    out.append(last, text.cbegin() + it->position());
    out += (*it)[1].length() == 0 ? t.default_q : "Q" + (*it)[1].str();
    last = text.cbegin() + it->position() + it->length();
  }
  out.append(last, text.cend());
  return rigid::parse_poly(out, qt);
}

inline rigid::VarTablePtr q_vars(const rigid::RigidTable& table) {
  return table.modules.at(0)->algebra().vars()->q_table();
}

/// Computed entry after the identifications used for the comparison.
inline rigid::LaurentPoly computed_entry(const Table& t, const rigid::RigidTable& table, std::size_t r, std::size_t c) {
  const auto qt = q_vars(table);
  const rigid::LaurentPoly p = table.q_entries(r, c).vars() ? table.q_entries(r, c) : table.q_entries(r, c).with_vars(qt);
  std::vector<rigid::LaurentPoly> images;
  for (std::size_t i = 0; i < qt->size(); ++i) {
    auto it = t.identify.find((*qt)[i].name);
    images.push_back(rigid::LaurentPoly::variable(qt, it == t.identify.end() ? i : *qt->find(it->second)));
  }
  return rigid::substitute(p, images, qt);
}

/// Number of entries differing from the published table; `first` receives the first mismatch.
inline std::size_t mismatches(const Table& t, const rigid::RigidTable& table, std::string* first = nullptr) {
  if (table.row_labels != t.rows || table.col_labels != t.cols) {
    if (first) *first = "row or column labels differ";
    return t.rows.size() * t.cols.size();
  }
  const auto qt = q_vars(table);
  std::size_t bad = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
      const rigid::LaurentPoly want = expected_entry(t, r, c, qt);
      const rigid::LaurentPoly got = computed_entry(t, table, r, c);
      if (!(got == want)) {
        if (bad == 0 && first) {
          *first = t.rows[r] + ", " + t.cols[c] + ": " + rigid::to_compact_string(got) + " vs " + t.entries[r][c];
        }
        ++bad;
      }
    }
  }
  return bad;
}

}  // namespace published
