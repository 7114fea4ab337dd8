#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fractree/closedform.hpp"
#include "fractree/fractals.hpp"
#include "fractree/limits.hpp"
#include "fractree/verify.hpp"
#include "fractree/cli/csv.hpp"

namespace fractree::cli {

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kDivergent = 2, kVerificationFailed = 3 };

// Output sink: a file path, or standard output when empty.
struct Output {
  std::string path;
};

// --- vertical / horizontal ------------------------------------------------

// Columns w, z (or zstar), total, bending, axial, shear. With `level`, the
// nodes of that level are tabulated instead of the end nodes.
Table displacement_table(const TreeParams& params, Direction kind, std::optional<int> level = std::nullopt);

// --- limit ----------------------------------------------------------------

struct LimitOptions {
  Direction kind = Direction::Vertical;
  std::size_t samples = 4096;
  double tol = 1e-12;
  Cancellation regime = Cancellation::None;
};

// Either a table (convergent) or the divergence document.
struct LimitOutcome {
  std::optional<Table> table;
  std::optional<nlohmann::ordered_json> divergence;
};

LimitOutcome limit_table(const TreeParams& params, const LimitOptions& options);

// --- curve ----------------------------------------------------------------

Table curve_table(const CurveSamples& samples);

// Per-level output path: "<stem>_level<i><ext>".
std::string level_path(const std::string& path, int level);

// --- dimension ------------------------------------------------------------

enum class DimensionMode { Analytic, Graph, Image };

struct DimensionOptions {
  DimensionMode mode = DimensionMode::Analytic;
  double a = 9.0;
  std::optional<double> t;  // image mode; defaults to a/16
  std::size_t samples = 0;  // 0 selects 2^18 + 1 (graph) or 2^16 + 1 (image)
};

nlohmann::ordered_json dimension_report(const DimensionOptions& options);

// --- verify ---------------------------------------------------------------

nlohmann::ordered_json verify_report_json(const VerifyReport& report);

// --- geometry -------------------------------------------------------------

// Columns level, index, x, y, ux, uy: undeformed coordinates and frame-solve
// displacements under the real load.
Table geometry_table(const TreeParams& params);

// --- output helpers -------------------------------------------------------

void emit(const Output& output, const Table& table);
void emit(const Output& output, const nlohmann::ordered_json& doc);

}  // namespace fractree::cli
