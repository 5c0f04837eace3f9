#pragma once

#include <span>

#include "hulthen/model.hpp"

namespace hulthen::cli {

/// Column order of the analytic level tables: NU then SUSY, each at C0 = 0
/// and C0 = 1/12.
inline constexpr int levels_columns = 4;

inline constexpr double level_column_c0[levels_columns] = {0.0, improved_c0, 0.0, improved_c0};
inline constexpr Method level_column_method[levels_columns] = {Method::nu, Method::nu,
                                                               Method::susy, Method::susy};
const char* level_column_name(int col);

/// One published row of the analytic energy-level table, kept verbatim.
/// `misprint_mask` marks columns (bit per column) whose printed value is
/// inconsistent with the closed form the table was generated from; for those
/// cells the formula value is authoritative and the discrepancy is reported.
struct LevelRow {
  const char* state;
  int n_r;
  int l;
  double delta;
  const char* printed[levels_columns];
  unsigned misprint_mask;
};

std::span<const LevelRow> analytic_levels();

/// Published reference energies (magnitudes, as printed) from independent
/// methods. NaN marks a cell absent in the source.
struct ReferenceRow {
  const char* state;
  int n_r;
  int l;
  double delta;
  double aim;          ///< asymptotic iteration method
  double susy_ref;     ///< supersymmetric hierarchy calculation
  double numerical;    ///< direct numerical integration
  double variational;  ///< variational bound
};

std::span<const ReferenceRow> published_reference();

inline constexpr int reference_columns = 4;
const char* reference_column_name(int col);

double parse_printed(const char* text);

}  // namespace hulthen::cli
