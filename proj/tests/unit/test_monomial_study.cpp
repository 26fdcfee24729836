#include "boolecert/monomial_study.hpp"

#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace boolecert;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("study rows cover k = 6..kmax") {
  auto rows = study_rows(30, Rational(1));
  REQUIRE(rows.size() == 25);
  CHECK(rows.front().k == 6);
  CHECK(rows.back().k == 30);
  CHECK_THROWS_AS(study_rows(5, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(study_rows(10, Rational(0)), std::invalid_argument);
}

TEST_CASE("row values at pinned degrees") {
  auto row15 = make_study_row(15, Rational(1));
  CHECK(row15.classical == Rational(715, 384));
  CHECK(row15.table_values[0] == Rational(11, 6));     // t1m
  CHECK(row15.theorem_values[0] == Rational(11, 60));  // t1m
  CHECK(row15.theorem_values[5] == Rational(14, 9));   // t3M
  CHECK(row15.table_better[0]);                        // 11/6 < 715/384
  CHECK(row15.theorem_better[0]);
  CHECK(row15.table_better[5]);

  auto row6 = make_study_row(6, Rational(1));
  CHECK(row6.classical == Rational(1, 2688));
  for (int i = 0; i < 6; ++i) {
    CHECK_FALSE(row6.table_better[i]);
    CHECK_FALSE(row6.theorem_better[i]);
  }
}

TEST_CASE("flags are the exact strictly-below comparison") {
  for (const auto& row : study_rows(40, Rational(1))) {
    for (int i = 0; i < 6; ++i) {
      CHECK(row.table_better[i] == (row.table_values[i] < row.classical));
      CHECK(row.theorem_better[i] == (row.theorem_values[i] < row.classical));
    }
  }
}

TEST_CASE("study thresholds") {
  auto th = study_thresholds(Rational(1));
  CHECK(th.table == std::array<int, 6>{15, 24, 11, 16, 10, 15});
  CHECK(th.theorem == std::array<int, 6>{12, 16, 11, 16, 10, 15});
}

TEST_CASE("csv output round-trips and recomputes") {
  auto rows = study_rows(30, Rational(1));
  auto thresholds = study_thresholds(Rational(1));
  std::ostringstream out;
  write_csv(out, rows, thresholds);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 1 + 25 + 2);
  CHECK(lines[0] ==
        "k,t1m_table,t1m_theorem,t1M_table,t1M_theorem,t2m,t2M,t3m,t3M,classical,"
        "t1m_table_better,t1M_table_better,t2m_table_better,t2M_table_better,"
        "t3m_table_better,t3M_table_better,t1m_theorem_better,t1M_theorem_better,"
        "t2m_theorem_better,t2M_theorem_better,t3m_theorem_better,t3M_theorem_better");
  CHECK(lines[26] ==
        "# crossover thresholds (table reading): t1m=15,t1M=24,t2m=11,t2M=16,t3m=10,t3M=15");
  CHECK(lines[27] ==
        "# crossover thresholds (theorem reading): t1m=12,t1M=16,t2m=11,t2M=16,t3m=10,t3M=15");

  for (std::size_t r = 1; r <= 25; ++r) {
    auto cells = split(lines[r], ',');
    REQUIRE(cells.size() == 22);
    int k = std::stoi(cells[0]);
    CHECK(k == static_cast<int>(r) + 5);
    // Every rational cell parses back to the exact row value.
    const auto& row = rows[r - 1];
    CHECK(parse_rational(cells[1]) == row.table_values[0]);
    CHECK(parse_rational(cells[2]) == row.theorem_values[0]);
    CHECK(parse_rational(cells[3]) == row.table_values[1]);
    CHECK(parse_rational(cells[4]) == row.theorem_values[1]);
    CHECK(parse_rational(cells[5]) == row.table_values[2]);
    CHECK(parse_rational(cells[6]) == row.table_values[3]);
    CHECK(parse_rational(cells[7]) == row.table_values[4]);
    CHECK(parse_rational(cells[8]) == row.table_values[5]);
    Rational classical = parse_rational(cells[9]);
    CHECK(classical == row.classical);
    // Flag cells match a recomputation from the value cells alone.
    const std::size_t flag_base = 10;
    const std::size_t value_of_flag[12] = {1, 3, 5, 6, 7, 8, 2, 4, 5, 6, 7, 8};
    for (std::size_t i = 0; i < 12; ++i) {
      const std::string& flag = cells[flag_base + i];
      REQUIRE((flag == "true" || flag == "false"));
      bool expected = parse_rational(cells[value_of_flag[i]]) < classical;
      CHECK((flag == "true") == expected);
    }
  }
}

TEST_CASE("markdown output uses 15 significant digits") {
  auto rows = study_rows(8, Rational(1));
  auto thresholds = study_thresholds(Rational(1));
  std::ostringstream out;
  write_markdown(out, rows, thresholds);
  std::string text = out.str();
  CHECK(text.find("| k |") != std::string::npos);
  // 1/2688 rendered to 15 significant digits.
  CHECK(text.find("0.00037202380952381") != std::string::npos);
  CHECK(text.find("0.183333333333333") != std::string::npos);
  CHECK(text.find("Crossover thresholds (table reading): "
                  "t1m=15,t1M=24,t2m=11,t2M=16,t3m=10,t3M=15") != std::string::npos);
  CHECK(text.find("Crossover thresholds (theorem reading): "
                  "t1m=12,t1M=16,t2m=11,t2M=16,t3m=10,t3M=15") != std::string::npos);
}
