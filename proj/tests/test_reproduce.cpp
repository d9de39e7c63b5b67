#include <doctest.h>

#include "agcb/reproduce.hpp"
#include "fixtures.hpp"

using namespace agcb;

namespace {

std::string cell(const TableResult& r, const std::string& row, const std::string& col) {
  size_t c = 0;
  while (c < r.columns.size() && r.columns[c] != col) ++c;
  REQUIRE(c < r.columns.size());
  for (const auto& cells : r.rows)
    if (cells.at(0) == row) return cells.at(c);
  FAIL("row not found: " << row);
  return {};
}

}  // namespace

TEST_CASE("every table matches its golden values") {
  for (int id = 1; id <= 6; ++id) {
    const TableResult r = reproduce_table(id, suzuki8_engine());
    INFO("table " << id);
    for (const auto& m : r.mismatches) INFO(m.row << " " << m.column << " " << m.expected << " " << m.got);
    CHECK(r.pass());
    CHECK_FALSE(r.to_markdown().empty());
    CHECK(r.to_json()["table"] == id);
    CHECK(r.to_json()["status"] == "PASS");
  }
  CHECK_THROWS_AS(reproduce_table(7, suzuki8_engine()), std::invalid_argument);
}

TEST_CASE("Table 1 and Table 4 cells") {
  const TableResult t1 = reproduce_table(1, suzuki8_engine());
  CHECK(cell(t1, "28P+2Q", "d_B") == "7");
  CHECK(cell(t1, "30P", "d_GST") == "7");
  CHECK(cell(t1, "30P", "d_GST2") == "6");
  CHECK(cell(t1, "30P+2Q", "d_ABZ") == "10");
  const TableResult t4 = reproduce_table(4, suzuki8_engine());
  const std::vector<std::string> cols{"d_LM", "d_GST", "d_ABZ", "d_GST2", "d_ABZ+", "d_ABZ'"};
  const std::vector<std::vector<std::string>> want{
      {"8", "8", "8", "8", "8", "8"}, {"6", "6", "6", "6", "8", "8"}, {"4", "4", "4", "4", "6", "8"}};
  const std::vector<std::string> rows{"28P+2Q", "27P+2Q", "27P+1Q"};
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) CHECK(cell(t4, rows[i], cols[j]) == want[i][j]);
}

TEST_CASE("Table 6 improvement matrices") {
  const ImprovementMatrices m = improvement_matrices(suzuki8_engine());
  // rows: improved d_GOP, d_LM, d_ABZ, d_B; columns: by d_LM, d_ABZ, d_B, d_DK
  CHECK(m.count[1][3] == 108);
  CHECK(m.count[2][3] == 98);
  CHECK(m.count[3][3] == 15);
  CHECK(m.max_gain[1][3] == 4);
  CHECK(m.max_gain[2][3] == 4);
  CHECK(m.max_gain[3][3] == 1);
  CHECK(m.codes + m.unsupported == 364);
  CHECK(m.unsupported == 1);
}

TEST_CASE("named bounds") {
  CHECK(bound_names().size() == 13);
  auto& eng = suzuki8_engine();
  CHECK(compute_bound(eng, "d_GOP", {4, 2}).value == 6);
  CHECK(compute_bound(eng, "d_DK", {4, 2}).value == 10);
  CHECK_THROWS_AS(compute_bound(eng, "d_XYZ", {4, 2}), std::invalid_argument);
  CHECK_THROWS_AS(compute_bound(eng, "d_B", {0, 0}), UnsupportedClass);
}
