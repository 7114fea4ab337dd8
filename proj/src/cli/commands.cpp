#include "fractree/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fractree/dimension.hpp"
#include "fractree/parallel.hpp"
#include "fractree/stiffness.hpp"

namespace fractree::cli {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write '" + path + "'");
  return out;
}

std::string case_kind(Direction kind) { return kind == Direction::Vertical ? "vertical" : "horizontal"; }

}  // namespace

Table displacement_table(const TreeParams& params, Direction kind, std::optional<int> level) {
  validate(params);
  const int depth = level.value_or(params.P);
  if (depth < 1 || depth > params.P) {
    throw Error(ErrorCode::IndexOutOfRange, "level " + std::to_string(depth) + " outside [1, P]");
  }
  const bool vertical = kind == Direction::Vertical;
  Table table{{"w", vertical ? "z" : "zstar", "total", "bending", "axial", "shear"}, {}};
  const std::uint64_t nodes = nodes_at_level(depth);
  table.rows.resize(nodes);
  parallel_for(nodes, [&](std::size_t k) {
    const std::uint64_t n = k + 1;
    const Displacement d = displacement_at_level(params, depth, n, kind);
    const ExactPos x = vertical ? end_node_position_vertical(n, depth) : end_node_position_horizontal(n, depth);
    table.rows[k] = {static_cast<double>(n), x.to_double(), d.total, d.bending, d.axial, d.shear};
  });
  return table;
}

LimitOutcome limit_table(const TreeParams& params, const LimitOptions& options) {
  const std::vector<ExactPos> grid = uniform_grid(options.samples);
  const bool vertical = options.kind == Direction::Vertical;
  auto evaluate = [&](const ExactPos& x) {
    return vertical ? vertical_limit(params, x, options.tol) : horizontal_limit(params, x, options.tol, options.regime);
  };
  const LimitResult probe = evaluate(grid.front());
  LimitOutcome outcome;
  if (!probe.convergent()) {
    outcome.divergence = nlohmann::ordered_json{{"status", "divergent"}, {"reasons", probe.reasons}};
    return outcome;
  }
  Table table{{vertical ? "z" : "zstar", "value"}, {}};
  table.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) { table.rows[k] = {grid[k].to_double(), *evaluate(grid[k]).value}; });
  outcome.table = std::move(table);
  return outcome;
}

Table curve_table(const CurveSamples& samples) {
  Table table{{"x", "value"}, {}};
  table.rows.reserve(samples.values.size());
  for (std::size_t k = 0; k < samples.values.size(); ++k) table.rows.push_back({samples.abscissae[k], samples.values[k]});
  return table;
}

std::string level_path(const std::string& path, int level) {
  const std::filesystem::path p(path);
  std::filesystem::path out = p.parent_path() / (p.stem().string() + "_level" + std::to_string(level));
  out += p.extension();
  return out.string();
}

nlohmann::ordered_json dimension_report(const DimensionOptions& options) {
  const double d_psi = takagi_dimension(options.a);
  const double d_c = cantor_inverse_dimension(options.a / 16.0);
  const double relation = dimension_relation(options.a);
  nlohmann::ordered_json doc{{"D_psi", d_psi},
                             {"D_c", d_c},
                             {"relation", relation},
                             {"relation_residual", relation - 2.0},
                             {"a", options.a}};
  if (options.mode == DimensionMode::Analytic) return doc;

  const std::vector<double> scales = default_scales();
  DimensionReport report;
  if (options.mode == DimensionMode::Graph) {
    CurveRequest request;
    request.kind = CurveKind::TakagiLimit;
    request.ratio = options.a / 16.0;
    request.samples = options.samples ? options.samples : (std::size_t{1} << 18) + 1;
    report = box_count_graph(sample_curve(request), scales, options.a);
    doc["mode"] = "graph";
  } else {
    const double t = options.t.value_or(options.a / 16.0);
    CurveRequest request;
    request.kind = CurveKind::CLimit;
    request.ratio = t;
    request.samples = options.samples ? options.samples : (std::size_t{1} << 16) + 1;
    report = box_count_image(sample_curve(request).values, scales, t);
    doc["mode"] = "image";
    doc["t"] = t;
  }
  doc["analytic"] = *report.analytic;
  doc["empirical"] = *report.empirical;
  doc["ci_halfwidth"] = *report.ci_halfwidth;
  doc["scales"] = report.scales_used;
  return doc;
}

nlohmann::ordered_json verify_report_json(const VerifyReport& report) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const CaseReport& c : report.cases) {
    cases.push_back({{"kind", case_kind(c.kind)},
                     {"case", c.key.label()},
                     {"draws", c.draws},
                     {"max_rel_error_pvw", c.max_error_pvw},
                     {"max_rel_error_stiffness", c.max_error_stiffness},
                     {"pass", c.pass}});
  }
  const VerifyOptions& o = report.options;
  return {{"seed", o.seed},
          {"draws", o.draws},
          {"max_levels", o.max_levels},
          {"tolerance_pvw", o.pvw_tol},
          {"tolerance_stiffness",
           o.stiffness ? nlohmann::ordered_json(o.stiffness_tol) : nlohmann::ordered_json(nullptr)},
          {"cases", cases},
          {"pass", report.pass}};
}

Table geometry_table(const TreeParams& params) {
  const FrameSolution frame = stiffness_solve(params);
  Table table{{"level", "index", "x", "y", "ux", "uy"}, {}};
  const Point base = base_point();
  table.rows.push_back({0.0, 1.0, base.x, base.y, 0.0, 0.0});
  for (int i = 1; i <= params.P; ++i) {
    for (std::uint64_t n = 1; n <= nodes_at_level(i); ++n) {
      const Point p = node_coordinates(params, {i, n});
      const NodeDisplacement& d = frame.at({i, n});
      table.rows.push_back({static_cast<double>(i), static_cast<double>(n), p.x, p.y, d.ux, d.uy});
    }
  }
  return table;
}

void emit(const Output& output, const Table& table) {
  if (output.path.empty()) {
    write_csv(std::cout, table);
    return;
  }
  std::ofstream out = open_output(output.path);
  write_csv(out, table);
}

void emit(const Output& output, const nlohmann::ordered_json& doc) {
  if (output.path.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out = open_output(output.path);
  out << doc.dump(2) << '\n';
}

}  // namespace fractree::cli
