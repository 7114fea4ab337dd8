#include "fractree/model.hpp"

#include <cmath>
#include <numbers>

namespace fractree {

double TreeParams::c() const noexcept { return std::cos(theta); }
double TreeParams::s() const noexcept { return std::sin(theta); }

double TreeParams::length(int level) const noexcept { return std::ldexp(L, 1 - level); }
double TreeParams::inertia(int level) const noexcept { return I * std::pow(a, 1 - level); }
double TreeParams::area(int level) const noexcept { return A * std::pow(u, 1 - level); }
double TreeParams::shear_area(int level) const noexcept { return Astar * std::pow(v, 1 - level); }

TreeParams reference_params(int levels) {
  TreeParams p;
  p.theta = std::numbers::pi / 3.0;
  p.E = 1e10;
  p.G = 5e8;
  p.L = 0.5;
  p.I = 3.1416e-4;
  p.A = 3.1416e-2;
  p.Astar = 2.8274e-2;
  p.a = 9.0;
  p.u = 3.0;
  p.v = 3.0;
  p.P = levels;
  return p;
}

std::string to_string(const Violation& violation) {
  switch (violation.kind) {
    case ViolationKind::NonPositive: return "NonPositive(" + violation.field + ")";
    case ViolationKind::RatioNotAboveOne: return "RatioNotAboveOne(" + violation.field + ")";
    case ViolationKind::ZeroLevels: return "ZeroLevels";
    case ViolationKind::AngleOutOfRange: return "AngleOutOfRange(" + violation.field + ")";
    case ViolationKind::TooManyLevels: return "TooManyLevels";
  }
  return "Unknown";
}

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += ", ";
    out += to_string(v);
  }
  return out;
}

}  // namespace

InvalidParams::InvalidParams(std::vector<Violation> violations)
    : Error(ErrorCode::InvalidParams, describe(violations)), violations_(std::move(violations)) {}

std::vector<Violation> check(const TreeParams& params) {
  std::vector<Violation> out;
  // NaN fails every comparison below and is reported like a bad value.
  if (!(params.theta > 0.0)) {
    out.push_back({ViolationKind::NonPositive, "theta"});
  } else if (!(params.theta <= std::numbers::pi / 2.0)) {
    out.push_back({ViolationKind::AngleOutOfRange, "theta"});
  }
  const std::pair<const char*, double> positives[] = {
      {"E", params.E}, {"G", params.G}, {"L", params.L},
      {"I", params.I}, {"A", params.A}, {"Astar", params.Astar},
  };
  for (const auto& [name, value] : positives) {
    if (!(value > 0.0) || !std::isfinite(value)) out.push_back({ViolationKind::NonPositive, name});
  }
  const std::pair<const char*, double> ratios[] = {{"a", params.a}, {"u", params.u}, {"v", params.v}};
  for (const auto& [name, value] : ratios) {
    if (!(value > 1.0) || !std::isfinite(value)) out.push_back({ViolationKind::RatioNotAboveOne, name});
  }
  if (params.P < 1) {
    out.push_back({ViolationKind::ZeroLevels, "P"});
  } else if (params.P > kMaxLevels) {
    out.push_back({ViolationKind::TooManyLevels, "P"});
  }
  return out;
}

TreeParams validate(const TreeParams& params) {
  auto violations = check(params);
  if (!violations.empty()) throw InvalidParams(std::move(violations));
  return params;
}

std::uint64_t nodes_at_level(int level) {
  if (level < 1 || level > kMaxLevels) {
    throw Error(ErrorCode::IndexOutOfRange, "level " + std::to_string(level) + " out of range");
  }
  return std::uint64_t{1} << level;
}

void require_node(int levels, std::uint64_t w) {
  if (w < 1 || w > nodes_at_level(levels)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "node " + std::to_string(w) + " outside [1, 2^" + std::to_string(levels) + "]");
  }
}

std::uint64_t mirror_index(int level, std::uint64_t index) {
  return nodes_at_level(level) + 1 - index;
}

ExactPos end_node_position_vertical(std::uint64_t w, int levels) {
  require_node(levels, w);
  // ((w-1)/(2^P-1)) (1 - 2^-P) + 2^-(P+1) simplifies to (2w-1)/2^(P+1).
  return ExactPos(2 * w - 1, std::uint64_t{1} << (levels + 1));
}

ExactPos end_node_position_horizontal(std::uint64_t w, int levels) {
  require_node(levels, w);
  return ExactPos(w - 1, (std::uint64_t{1} << levels) - 1);
}

Point base_point() noexcept { return {0.0, 0.0}; }

Point node_coordinates(const TreeParams& params, const NodeRef& node) {
  require_node(node.level, node.index);
  const double c = params.c();
  const double s = params.s();
  const std::uint64_t path = node.index - 1;
  Point p = base_point();
  for (int k = 1; k <= node.level; ++k) {
    const bool right = ((path >> (node.level - k)) & 1U) != 0;
    const double lk = params.length(k);
    p.x += right ? c * lk : -c * lk;
    p.y += s * lk;
  }
  return p;
}

}  // namespace fractree
