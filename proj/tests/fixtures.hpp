#pragma once

#include "agcb/orderbounds.hpp"
#include "agcb/tables.hpp"

// One suzuki8 kernel and bound table per test binary.
inline const agcb::FunctionFieldKernel& suzuki8_kernel() {
  static const agcb::FunctionFieldKernel k(agcb::CurvePreset::from_id("suzuki8"));
  return k;
}

inline const agcb::DimensionTable& suzuki8_table() {
  static const agcb::DimensionTable t = agcb::build_dimension_table(suzuki8_kernel());
  return t;
}

inline agcb::OrderBoundEngine& suzuki8_engine() {
  static agcb::OrderBoundEngine e(suzuki8_table());
  return e;
}
