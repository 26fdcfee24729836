#include "boolecert/monomial_study.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace boolecert {

namespace {

constexpr std::array<std::string_view, 12> flag_columns{
    "t1m_table_better",   "t1M_table_better",   "t2m_table_better",   "t2M_table_better",
    "t3m_table_better",   "t3M_table_better",   "t1m_theorem_better", "t1M_theorem_better",
    "t2m_theorem_better", "t2M_theorem_better", "t3m_theorem_better", "t3M_theorem_better"};

std::string decimal15(const Rational& value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.15g", to_double(value));
  return buffer;
}

const char* flag_text(bool flag) { return flag ? "true" : "false"; }

void write_thresholds_line(std::ostream& out, const std::array<int, 6>& thresholds) {
  for (std::size_t i = 0; i < 6; ++i)
    out << (i == 0 ? "" : ",") << to_string(all_estimates[i]) << '=' << thresholds[i];
}

}  // namespace

StudyRow make_study_row(int k, const Rational& b) {
  StudyRow row;
  row.k = k;
  row.classical = classical_monomial_bound(k, b);
  for (std::size_t i = 0; i < all_estimates.size(); ++i) {
    const MonomialBoundValue value = monomial_bound_value(all_estimates[i], k, b);
    row.table_values[i] = value.table_value;
    row.theorem_values[i] = value.theorem_value;
    row.table_better[i] = value.table_value < row.classical;
    row.theorem_better[i] = value.theorem_value < row.classical;
  }
  return row;
}

std::vector<StudyRow> study_rows(int kmax, const Rational& b) {
  if (kmax < 6) throw std::invalid_argument("study needs kmax >= 6");
  std::vector<StudyRow> rows;
  rows.reserve(static_cast<std::size_t>(kmax - 5));
  for (int k = 6; k <= kmax; ++k) rows.push_back(make_study_row(k, b));
  return rows;
}

StudyThresholds study_thresholds(const Rational& b) {
  StudyThresholds out;
  for (std::size_t i = 0; i < all_estimates.size(); ++i) {
    out.table[i] = crossover_threshold(all_estimates[i], b, BoundReading::table);
    out.theorem[i] = crossover_threshold(all_estimates[i], b, BoundReading::theorem);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<StudyRow>& rows,
               const StudyThresholds& thresholds) {
  out << "k,t1m_table,t1m_theorem,t1M_table,t1M_theorem,t2m,t2M,t3m,t3M,classical";
  for (const auto& column : flag_columns) out << ',' << column;
  out << '\n';
  for (const StudyRow& row : rows) {
    out << row.k << ',' << to_string(row.table_values[0]) << ',' << to_string(row.theorem_values[0])
        << ',' << to_string(row.table_values[1]) << ',' << to_string(row.theorem_values[1]);
    for (std::size_t i = 2; i < 6; ++i) out << ',' << to_string(row.theorem_values[i]);
    out << ',' << to_string(row.classical);
    for (bool flag : row.table_better) out << ',' << flag_text(flag);
    for (bool flag : row.theorem_better) out << ',' << flag_text(flag);
    out << '\n';
  }
  out << "# crossover thresholds (table reading): ";
  write_thresholds_line(out, thresholds.table);
  out << "\n# crossover thresholds (theorem reading): ";
  write_thresholds_line(out, thresholds.theorem);
  out << '\n';
}

void write_markdown(std::ostream& out, const std::vector<StudyRow>& rows,
                    const StudyThresholds& thresholds) {
  out << "| k | t1m_table | t1m_theorem | t1M_table | t1M_theorem | t2m | t2M | t3m | t3M | "
         "classical |";
  for (const auto& column : flag_columns) out << ' ' << column << " |";
  out << "\n|";
  for (int i = 0; i < 22; ++i) out << " ---: |";
  out << '\n';
  for (const StudyRow& row : rows) {
    out << "| " << row.k << " | " << decimal15(row.table_values[0]) << " | "
        << decimal15(row.theorem_values[0]) << " | " << decimal15(row.table_values[1]) << " | "
        << decimal15(row.theorem_values[1]);
    for (std::size_t i = 2; i < 6; ++i) out << " | " << decimal15(row.theorem_values[i]);
    out << " | " << decimal15(row.classical);
    for (bool flag : row.table_better) out << " | " << flag_text(flag);
    for (bool flag : row.theorem_better) out << " | " << flag_text(flag);
    out << " |\n";
  }
  out << "\nCrossover thresholds (table reading): ";
  write_thresholds_line(out, thresholds.table);
  out << "\n\nCrossover thresholds (theorem reading): ";
  write_thresholds_line(out, thresholds.theorem);
  out << '\n';
}

}  // namespace boolecert
