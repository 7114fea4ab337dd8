#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "fractree/cli/commands.hpp"
#include "fractree/cli/config.hpp"

using namespace fractree;
using namespace fractree::cli;

namespace {

const std::map<std::string, Direction> kDirections{{"vertical", Direction::Vertical},
                                                   {"horizontal", Direction::Horizontal}};

const std::map<std::string, Cancellation> kRegimes{{"none", Cancellation::None},
                                                   {"bending_axial", Cancellation::BendingAxial},
                                                   {"axial_shear", Cancellation::AxialShear}};

const std::map<std::string, DimensionMode> kModes{{"analytic", DimensionMode::Analytic},
                                                  {"graph", DimensionMode::Graph},
                                                  {"image", DimensionMode::Image}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Displacement profiles of loaded binary-tree frames and their fractal limits"};
  app.require_subcommand(1);

  std::string config_path;
  std::string output_path;
  auto add_common = [&](CLI::App* cmd, bool config_required) {
    auto* opt = cmd->add_option("-c,--config", config_path, "parameter JSON");
    if (config_required) opt->required()->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", output_path, "output file (default: stdout)");
  };

  std::optional<int> level;
  auto* vertical = app.add_subcommand("vertical", "vertical displacement of every end node");
  add_common(vertical, true);
  vertical->add_option("--level", level, "tabulate the nodes of this level instead");
  auto* horizontal = app.add_subcommand("horizontal", "horizontal displacement of every end node (outward positive)");
  add_common(horizontal, true);
  horizontal->add_option("--level", level, "tabulate the nodes of this level instead");

  LimitOptions limit_options;
  auto* limit = app.add_subcommand("limit", "infinite-level displacement on a uniform grid");
  add_common(limit, true);
  limit->add_option("--direction", limit_options.kind)->transform(CLI::CheckedTransformer(kDirections));
  limit->add_option("-n,--samples", limit_options.samples)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  limit->add_option("--tol", limit_options.tol)->check(CLI::PositiveNumber);
  limit->add_option("--regime", limit_options.regime, "horizontal cancellation regime")
      ->transform(CLI::CheckedTransformer(kRegimes));

  std::string kind_name = "takagi_limit";
  CurveRequest curve_request;
  std::vector<int> levels;
  auto* curve = app.add_subcommand("curve", "sample one of the special functions or displacement curves");
  add_common(curve, false);
  curve->add_option("--kind", kind_name)
      ->check(CLI::IsMember({"takagi_partial", "takagi_limit", "c_partial", "c_limit", "vertical_iteration",
                             "horizontal_iteration", "vertical_limit", "horizontal_limit"}));
  curve->add_option("--ratio", curve_request.ratio, "r for Takagi kinds, t for digit-sum kinds");
  curve->add_option("--depth", curve_request.depth, "P for partial kinds");
  curve->add_option("--levels", levels, "levels for iteration kinds")->delimiter(',');
  curve->add_option("-n,--samples", curve_request.samples)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 30));
  curve->add_option("--tol", curve_request.tol)->check(CLI::PositiveNumber);

  DimensionOptions dimension_options;
  double t_value = 0.0;
  auto* dimension = app.add_subcommand("dimension", "fractal dimensions and their relation");
  dimension->add_option("-o,--output", output_path, "output file (default: stdout)");
  dimension->add_option("-a", dimension_options.a, "inertia reduction ratio");
  dimension->add_option("--mode", dimension_options.mode)->transform(CLI::CheckedTransformer(kModes));
  auto* t_opt = dimension->add_option("-t", t_value, "digit-sum ratio for image mode (default a/16)");
  dimension->add_option("-n,--samples", dimension_options.samples);

  VerifyOptions verify_options;
  bool skip_stiffness = false;
  auto* verify = app.add_subcommand("verify", "cross-check closed forms against both oracles");
  verify->add_option("-o,--output", output_path, "output file (default: stdout)");
  verify->add_option("--seed", verify_options.seed);
  verify->add_option("--draws", verify_options.draws)->check(CLI::PositiveNumber);
  verify->add_option("--max-levels", verify_options.max_levels)->check(CLI::Range(1, 20));
  verify->add_flag("--no-stiffness", skip_stiffness, "skip the frame solve");

  auto* geometry = app.add_subcommand("geometry", "node coordinates and frame-solve displacements");
  add_common(geometry, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidationError;
  }

  const Output output{output_path};
  try {
    if (vertical->parsed() || horizontal->parsed()) {
      const Direction kind = vertical->parsed() ? Direction::Vertical : Direction::Horizontal;
      emit(output, displacement_table(load_params(config_path), kind, level));
    } else if (limit->parsed()) {
      const LimitOutcome outcome = limit_table(load_params(config_path), limit_options);
      if (outcome.divergence) {
        emit(output, *outcome.divergence);
        return kDivergent;
      }
      emit(output, *outcome.table);
    } else if (curve->parsed()) {
      curve_request.kind = *curve_kind_from_string(kind_name);
      if (!config_path.empty()) curve_request.params = load_params(config_path);
      const bool iteration = curve_request.kind == CurveKind::VerticalIteration ||
                             curve_request.kind == CurveKind::HorizontalIteration;
      if (iteration && levels.size() > 1) {
        if (output.path.empty()) throw Error(ErrorCode::InvalidConfig, "several levels need --output");
        for (int i : levels) {
          curve_request.depth = i;
          emit(Output{level_path(output.path, i)}, curve_table(sample_curve(curve_request)));
        }
      } else {
        if (iteration && levels.size() == 1) curve_request.depth = levels.front();
        emit(output, curve_table(sample_curve(curve_request)));
      }
    } else if (dimension->parsed()) {
      if (t_opt->count() > 0) dimension_options.t = t_value;
      emit(output, dimension_report(dimension_options));
    } else if (verify->parsed()) {
      verify_options.stiffness = !skip_stiffness;
      const VerifyReport report = verify_oracles(verify_options);
      emit(output, verify_report_json(report));
      if (!report.pass) return kVerificationFailed;
    } else if (geometry->parsed()) {
      emit(output, geometry_table(load_params(config_path)));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::DivergentParameters ? kDivergent : kValidationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kSuccess;
}
