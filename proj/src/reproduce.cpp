#include "agcb/reproduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "agcb/floorbounds.hpp"

namespace agcb {

const std::vector<std::string>& bound_names() {
  static const std::vector<std::string> names = {"d_GOP", "d_BPT", "d_LM",   "d_GST",  "d_ABZ", "d_GST2", "d_ABZ+",
                                                 "d_FR",  "d_CMST", "d_B", "d_ABZ'", "d_DP",  "d_DK"};
  return names;
}

BoundReport compute_bound(OrderBoundEngine& engine, const std::string& name, const TwoPointDivisor& C) {
  const DimensionTable& t = engine.table();
  if (t.l(-C) != 0) throw UnsupportedClass("class " + C.to_string() + " has L(-C) != 0");
  BoundReport r;
  if (name == "d_GOP") {
    r.value = goppa_bound(C);
  } else if (name == "d_BPT") {
    r.value = base_point_bound(t, C);
    if (r.value > C.degree()) r.avoid_set = t.l(C) == t.l(C - TwoPointDivisor::unit(Point::P)) ? PointSet::of(Point::P)
                                                                                                : PointSet::of(Point::Q);
  } else if (name == "d_LM") {
    r = lm_bound(t, C);
  } else if (name == "d_GST") {
    r = gst_bound(t, C);
  } else if (name == "d_ABZ") {
    r = abz_bound(t, C);
  } else if (name == "d_GST2") {
    r = abz_plus_bound(t, C, AbzPlusMode::gst2);
  } else if (name == "d_ABZ+") {
    r = abz_plus_bound(t, C, AbzPlusMode::full);
  } else {
    static const std::vector<std::string> order = {"d_FR", "d_CMST", "d_B", "d_ABZ'", "d_DP", "d_DK"};
    if (std::find(order.begin(), order.end(), name) == order.end())
      throw std::invalid_argument("unknown bound: " + name);
    r = engine.suite(C).at(name);
  }
  r.name = name;
  return r;
}

namespace {

std::string str(int v) { return std::to_string(v); }

TwoPointDivisor canonical_rel(const DimensionTable& t, const TwoPointDivisor& G) { return G - t.canonical(); }

void compare(TableResult& res, const std::string& row, const std::string& col, const std::string& expected,
             const std::string& got) {
  if (expected != got) res.mismatches.push_back({row, col, expected, got});
}

std::string condition(PointSet s) {
  if (s.empty()) return "none";
  return (s.p && s.q ? std::string("P,Q") : s.p ? "P" : "Q") + " not in supp D";
}

// Rows of (G, golden values) for bound columns.
struct GoldenRow {
  TwoPointDivisor G;
  std::vector<int> values;
};

TableResult bound_table(int id, const std::string& title, OrderBoundEngine& engine,
                        const std::vector<std::string>& cols, const std::vector<GoldenRow>& golden) {
  TableResult res;
  res.id = id;
  res.title = title;
  res.columns = {"G"};
  res.columns.insert(res.columns.end(), cols.begin(), cols.end());
  for (const auto& g : golden) {
    const TwoPointDivisor C = canonical_rel(engine.table(), g.G);
    std::vector<std::string> row = {g.G.to_string()};
    for (size_t i = 0; i < cols.size(); ++i) {
      const std::string got = str(compute_bound(engine, cols[i], C).value);
      compare(res, row[0], cols[i], str(g.values[i]), got);
      row.push_back(got);
    }
    res.rows.push_back(std::move(row));
  }
  return res;
}

TableResult table1(OrderBoundEngine& engine) {
  return bound_table(1, "Suzuki curve over F8: floor, mixed and order bounds", engine,
                     {"d_GST", "d_GST2", "d_B", "d_ABZ", "d_ABZ+", "d_ABZ'"},
                     {{{28, 2}, {8, 8, 7, 8, 8, 8}},
                      {{30, 0}, {7, 6, 8, 7, 7, 8}},
                      {{30, 1}, {7, 8, 8, 8, 8, 8}},
                      {{30, 2}, {9, 9, 9, 10, 10, 10}}});
}

TableResult table2(OrderBoundEngine& engine) {
  const DimensionTable& t = engine.table();
  TableResult res;
  res.id = 2;
  res.title = "ABZ witnesses for G = 22P+6Q and the conditions on D";
  res.columns = {"G", "A", "B", "Z", "d_ABZ", "condition"};
  struct Row {
    TwoPointDivisor A, B, Z;
    int value;
    std::string cond;
  };
  const TwoPointDivisor G{22, 6};
  const TwoPointDivisor C = canonical_rel(t, G);
  const std::vector<Row> golden = {{{14, 0}, {8, 0}, {0, 6}, 6, "Q not in supp D"},
                                   {{13, 0}, {8, 0}, {1, 6}, 6, "P,Q not in supp D"}};
  for (const auto& g : golden) {
    if (!(g.A + g.B + g.Z == G)) throw std::logic_error("table 2 golden row does not decompose G");
    const std::string key = g.A.to_string() + "|" + g.B.to_string();
    const std::string value = str(abz_objective(t, C, g.A, g.B));
    const std::string cond = condition(PointSet::support(g.Z));
    compare(res, key, "d_ABZ", str(g.value), value);
    compare(res, key, "condition", g.cond, cond);
    res.rows.push_back({G.to_string(), g.A.to_string(), g.B.to_string(), g.Z.to_string(), value, cond});
  }
  // The optimum over all decompositions, and the weakest condition achieving it.
  const BoundReport best = abz_bound(t, C);
  compare(res, "optimum", "d_ABZ", "6", str(best.value));
  compare(res, "optimum", "condition", "Q not in supp D", condition(best.avoid_set));
  res.notes.push_back("optimum d_ABZ = " + str(best.value) + " with witness " + best.witness->A.to_string() + " | " +
                      best.witness->B.to_string() + " | " + best.witness->Z.to_string() + ", " +
                      condition(best.avoid_set));
  res.notes.push_back("floor(14P) = " + t.floor({14, 0}).to_string());
  return res;
}

TableResult table3(OrderBoundEngine& engine) {
  const DimensionTable& t = engine.table();
  TableResult res;
  res.id = 3;
  res.title = "d_LM estimates improved to d_GST for G = 22P+6Q";
  res.columns = {"G", "Abar", "B", "Z", "C'", "d_LM", "d_GST"};
  struct Row {
    TwoPointDivisor Abar, B, Z, Cp;
    int lm, gst;
  };
  const TwoPointDivisor G{22, 6};
  const TwoPointDivisor C = canonical_rel(t, G);
  const std::vector<Row> golden = {{{17, 2}, {5, 4}, {1, 2}, {0, 0}, 5, 5}, {{14, 2}, {8, 4}, {0, 2}, {8, 0}, 4, 6}};
  for (const auto& g : golden) {
    const std::string key = g.Abar.to_string() + "|" + g.B.to_string();
    const auto lm = lm_value(t, C, g.Abar - g.Z, g.B, g.Z);
    const auto gst = gst_corollary_value(t, G, g.Abar, g.B, g.Z, g.Cp);
    const std::string lm_s = lm ? str(*lm) : "n/a";
    const std::string gst_s = gst ? str(*gst) : "n/a";
    compare(res, key, "d_LM", str(g.lm), lm_s);
    compare(res, key, "d_GST", str(g.gst), gst_s);
    res.rows.push_back(
        {G.to_string(), g.Abar.to_string(), g.B.to_string(), g.Z.to_string(), g.Cp.to_string(), lm_s, gst_s});
  }
  compare(res, "optimum", "d_GST", "6", str(gst_bound(t, C).value));
  return res;
}

TableResult table4(OrderBoundEngine& engine) {
  return bound_table(4, "Suzuki curve over F8: gains of the mixed bounds", engine,
                     {"d_LM", "d_GST", "d_ABZ", "d_GST2", "d_ABZ+", "d_ABZ'"},
                     {{{28, 2}, {8, 8, 8, 8, 8, 8}}, {{27, 2}, {6, 6, 6, 6, 8, 8}}, {{27, 1}, {4, 4, 4, 4, 6, 8}}});
}

TableResult table5(OrderBoundEngine& engine) {
  const DimensionTable& t = engine.table();
  const std::vector<std::string> cols = {"d_GOP", "d_LM",   "d_GST", "d_ABZ", "d_GST2",
                                         "d_ABZ+", "d_B", "d_ABZ'", "d_DK"};
  // (a, b) of G = aP + bQ, then the columns above; the d~ column is not reproduced.
  const std::vector<std::vector<int>> golden = {
      {22, 4, 0, 3, 4, 4, 3, 4, 5, 5, 5},         {21, 5, 0, 3, 4, 4, 3, 5, 5, 5, 5},
      {20, 6, 0, 4, 5, 5, 4, 5, 6, 6, 6},         {20, 7, 1, 4, 5, 5, 4, 5, 6, 6, 6},
      {23, 4, 1, 4, 5, 5, 4, 5, 6, 6, 6},         {21, 6, 1, 4, 5, 5, 4, 5, 6, 6, 7},
      {22, 6, 2, 5, 6, 6, 5, 6, 7, 7, 7},         {24, 4, 2, 4, 5, 5, 5, 6, 6, 6, 6},
      {24, 5, 3, 5, 6, 6, 6, 7, 7, 7, 7},         {24, 6, 4, 6, 7, 7, 7, 7, 7, 7, 7},
      {26, 4, 4, 6, 7, 7, 6, 7, 8, 8, 8},         {24, 3, 1, 3, 3, 3, 4, 5, 6, 6, 6},
      {27, 0, 1, 2, 2, 2, 3, 4, 6, 6, 6},         {30, 1, 5, 7, 7, 8, 8, 8, 8, 8, 8},
      {32, 1, 7, 9, 9, 10, 10, 10, 10, 10, 10},   {40, 0, 14, 15, 15, 15, 16, 16, 16, 16, 16},
      {24, 2, 0, 3, 3, 3, 3, 3, 4, 4, 4},         {25, 1, 0, 2, 2, 2, 2, 3, 6, 6, 6},
      {21, 7, 2, 5, 5, 5, 5, 5, 6, 6, 7},         {21, 8, 3, 5, 5, 5, 5, 5, 6, 6, 7},
      {27, 1, 2, 4, 4, 4, 4, 6, 7, 8, 8},         {28, 1, 3, 6, 6, 6, 6, 6, 7, 8, 8},
      {29, 1, 4, 6, 6, 6, 6, 8, 8, 8, 8},         {28, 2, 4, 8, 8, 8, 8, 8, 7, 8, 8},
      {30, 2, 6, 9, 9, 10, 9, 10, 9, 10, 10},     {30, 3, 7, 9, 9, 10, 9, 10, 10, 10, 10},
      {31, 1, 6, 8, 8, 8, 8, 8, 9, 9, 9},         {33, 1, 8, 10, 10, 10, 10, 10, 11, 11, 11},
      {33, 3, 10, 12, 12, 12, 12, 12, 12, 12, 13}, {34, 3, 11, 12, 12, 12, 12, 12, 12, 12, 13}};
  TableResult res;
  res.id = 5;
  res.title = "Selected two-point codes on the Suzuki curve over F8";
  res.columns = {"G", "A", "B"};
  res.columns.insert(res.columns.end(), cols.begin(), cols.end());
  res.columns.push_back("witnesses");
  for (const auto& g : golden) {
    const TwoPointDivisor G{g[0], g[1]};
    const TwoPointDivisor C = canonical_rel(t, G);
    const std::string key = "(" + str(g[0]) + "," + str(g[1]) + ")";
    std::vector<std::string> cells(cols.size());
    bool witnesses_ok = true;
    TwoPointDivisor A, B;
    for (size_t i = 0; i < cols.size(); ++i) {
      const BoundReport r = compute_bound(engine, cols[i], C);
      cells[i] = str(r.value);
      compare(res, key, cols[i], str(g[2 + i]), cells[i]);
      if (r.witness && (cols[i] == "d_ABZ" || cols[i] == "d_ABZ+"))
        witnesses_ok = witnesses_ok && evaluate_witness(t, C, *r.witness) >= r.value;
      if (cols[i] == "d_ABZ") {
        A = r.witness->A;
        B = r.witness->B;
      }
    }
    compare(res, key, "witnesses", "ok", witnesses_ok ? "ok" : "bad");
    std::vector<std::string> row = {key, A.to_string(), B.to_string()};
    row.insert(row.end(), cells.begin(), cells.end());
    row.push_back(witnesses_ok ? "ok" : "bad");
    res.rows.push_back(std::move(row));
  }
  res.notes.push_back("A, B are this tool's d_ABZ witness; ties may differ from the published pair");
  return res;
}

TableResult table6(OrderBoundEngine& engine) {
  const ImprovementMatrices m = improvement_matrices(engine);
  const int gold_count[4][4] = {{228, 228, 228, 228}, {0, 29, 102, 108}, {0, 0, 94, 98}, {1, 3, 0, 15}};
  const int gold_max[4][4] = {{4, 5, 6, 6}, {0, 1, 4, 4}, {0, 0, 4, 4}, {1, 1, 0, 1}};
  const std::vector<std::string> names = {"d_GOP", "d_LM", "d_ABZ", "d_B"};
  const std::vector<std::string> by = {"d_LM", "d_ABZ", "d_B", "d_DK"};
  TableResult res;
  res.id = 6;
  res.title = "Comparison of bounds for Suzuki codes over F8";
  res.columns = {"matrix", "improved"};
  for (const auto& b : by) res.columns.push_back("by " + b);
  for (int part = 0; part < 2; ++part)
    for (int i = 0; i < 4; ++i) {
      std::vector<std::string> row = {part == 0 ? "count" : "max", names[i]};
      for (int j = 0; j < 4; ++j) {
        const int got = part == 0 ? m.count[i][j] : m.max_gain[i][j];
        const int expected = part == 0 ? gold_count[i][j] : gold_max[i][j];
        compare(res, row[0] + " " + names[i], "by " + by[j], str(expected), str(got));
        row.push_back(str(got));
      }
      res.rows.push_back(std::move(row));
    }
  res.notes.push_back(str(m.codes + m.unsupported) + " classes enumerated, " + str(m.codes) + " compared; " +
                      str(m.unsupported) + " degenerate class (C = 0) reported n/a, outside the Gamma* scope");
  return res;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

ImprovementMatrices improvement_matrices(OrderBoundEngine& engine) {
  const DimensionTable& t = engine.table();
  ImprovementMatrices m;
  const int g = t.genus();
  const int e = t.torsion_order();
  for (int d = 0; d <= 2 * g - 1; ++d)
    for (int b = 0; b < e; ++b) {
      const TwoPointDivisor C{d - b, b};
      if (t.l(-C) != 0) {
        ++m.unsupported;
        continue;
      }
      ++m.codes;
      const int lm = lm_bound(t, C).value;
      const int abz = abz_bound(t, C).value;
      const auto suite = engine.suite(C);
      const int improved[4] = {goppa_bound(C), lm, abz, suite.at("d_B").value};
      const int improving[4] = {lm, abz, suite.at("d_B").value, suite.at("d_DK").value};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          const int gain = improving[j] - improved[i];
          if (gain > 0) {
            ++m.count[i][j];
            m.max_gain[i][j] = std::max(m.max_gain[i][j], gain);
          }
        }
    }
  return m;
}

TableResult reproduce_table(int id, OrderBoundEngine& engine) {
  switch (id) {
    case 1: return table1(engine);
    case 2: return table2(engine);
    case 3: return table3(engine);
    case 4: return table4(engine);
    case 5: return table5(engine);
    case 6: return table6(engine);
  }
  throw std::invalid_argument("no table " + std::to_string(id));
}

nlohmann::json TableResult::to_json() const {
  nlohmann::json j;
  j["table"] = id;
  j["title"] = title;
  j["columns"] = columns;
  j["rows"] = rows;
  j["status"] = pass() ? "PASS" : "FAIL";
  j["mismatches"] = nlohmann::json::array();
  for (const auto& m : mismatches)
    j["mismatches"].push_back({{"row", m.row}, {"column", m.column}, {"expected", m.expected}, {"got", m.got}});
  j["notes"] = notes;
  return j;
}

std::string TableResult::to_markdown() const {
  std::ostringstream os;
  os << "## Table " << id << ": " << title << "\n\n|";
  for (const auto& c : columns) os << ' ' << c << " |";
  os << "\n|";
  for (size_t i = 0; i < columns.size(); ++i) os << (i == 0 ? " --- |" : " ---: |");
  os << '\n';
  for (const auto& r : rows) {
    os << '|';
    for (const auto& c : r) os << ' ' << c << " |";
    os << '\n';
  }
  os << '\n';
  for (const auto& n : notes) os << "- " << n << '\n';
  for (const auto& m : mismatches)
    os << "- MISMATCH row " << m.row << ", column " << m.column << ": expected " << m.expected << ", got " << m.got
       << '\n';
  os << "\nTable " << id << ": " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string TableResult::to_csv() const {
  std::ostringstream os;
  for (size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_cell(columns[i]);
  os << '\n';
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace agcb
