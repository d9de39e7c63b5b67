#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "agcb/orderbounds.hpp"
#include "agcb/report.hpp"
#include "agcb/tables.hpp"

namespace agcb {

/// d_GOP, d_BPT, d_LM, d_GST, d_ABZ, d_GST2, d_ABZ+, d_FR, d_CMST, d_B, d_ABZ', d_DP, d_DK.
const std::vector<std::string>& bound_names();

/// One named bound for the class C. Throws std::invalid_argument for an
/// unknown name and UnsupportedClass when L(-C) != 0.
BoundReport compute_bound(OrderBoundEngine& engine, const std::string& name, const TwoPointDivisor& C);

struct CellDiff {
  std::string row, column, expected, got;
};

/// A regenerated reference table: computed cells next to the embedded golden
/// values. Cells are strings so witness and condition columns fit too.
struct TableResult {
  int id = 0;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<CellDiff> mismatches;
  std::vector<std::string> notes;

  bool pass() const { return mismatches.empty(); }
  nlohmann::json to_json() const;
  std::string to_markdown() const;
  std::string to_csv() const;
};

/// Tables 1-6 of the suzuki8 comparison; `engine` must be built on the
/// suzuki8 table. Table 6 is the F8 block.
TableResult reproduce_table(int id, OrderBoundEngine& engine);

struct ImprovementMatrices {
  // Rows d_GOP, d_LM, d_ABZ, d_B (improved bound); columns d_LM, d_ABZ, d_B,
  // d_DK (improving bound).
  int count[4][4] = {};
  int max_gain[4][4] = {};
  int codes = 0;
  int unsupported = 0;
};

/// Over C = (d - b)P + bQ, 0 <= d <= 2g - 1, 0 <= b < e; classes with
/// L(-C) != 0 are counted in `unsupported` and skipped.
ImprovementMatrices improvement_matrices(OrderBoundEngine& engine);

}  // namespace agcb
