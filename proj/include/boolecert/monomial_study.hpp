#pragma once

#include "boolecert/bounds.hpp"

#include <iosfwd>
#include <vector>

namespace boolecert {

// One row of the monomial comparison for t^k on [0, b]: all six
// estimates under both readings, the classical bound, and exact
// strictly-below comparisons against it. Arrays are indexed by
// EstimateId order (t1m, t1M, t2m, t2M, t3m, t3M).
struct StudyRow {
  int k = 0;
  std::array<Rational, 6> table_values;
  std::array<Rational, 6> theorem_values;
  Rational classical;
  std::array<bool, 6> table_better{};
  std::array<bool, 6> theorem_better{};
};

StudyRow make_study_row(int k, const Rational& b);

// Rows for k = 6..kmax inclusive. Requires kmax >= 6 and b > 0.
std::vector<StudyRow> study_rows(int kmax, const Rational& b);

struct StudyThresholds {
  std::array<int, 6> table{};
  std::array<int, 6> theorem{};
};
StudyThresholds study_thresholds(const Rational& b);

// Header row, one data row per k with exact rational cells, then two
// comment lines carrying the crossover thresholds. The order-1 columns
// appear under both readings; orders 2 and 3 coincide and get one
// column each.
void write_csv(std::ostream& out, const std::vector<StudyRow>& rows,
               const StudyThresholds& thresholds);

// Same table with cells rounded to 15 significant digits.
void write_markdown(std::ostream& out, const std::vector<StudyRow>& rows,
                    const StudyThresholds& thresholds);

}  // namespace boolecert
