#include "fractree/mechanics.hpp"

#include <cmath>
#include <vector>

namespace fractree {

double integrate_product(const Affine& f, const Affine& g, double length) noexcept {
  const double l2 = length * length;
  return f.at_base * g.at_base * length + (f.at_base * g.slope + f.slope * g.at_base) * l2 / 2.0 +
         f.slope * g.slope * l2 * length / 3.0;
}

BarStressState real_stresses(const TreeParams& params, int level) {
  const double share = std::ldexp(1.0, -level);
  const double c = params.c();
  BarStressState out;
  out.bending = {c * share * params.length(level), -c * share};
  out.axial = params.s() * share;
  out.shear = c * share;
  return out;
}

double lever_arm_vertical(const TreeParams& params, int level, std::uint64_t w) {
  const ExactPos z = end_node_position_vertical(w, params.P);
  const double saw = sigma_scaled(z, static_cast<std::uint64_t>(level - 1));
  return 4.0 * params.c() * params.L * (std::ldexp(1.0, -level) - std::ldexp(saw, 1 - level));
}

BarStressState virtual_stresses_vertical(const TreeParams& params, int level, std::uint64_t w) {
  const double c = params.c();
  BarStressState out;
  out.bending = {lever_arm_vertical(params, level, w), -c};
  out.axial = params.s();
  out.shear = c;
  return out;
}

double lever_arm_horizontal(const TreeParams& params, int level) {
  return params.s() * params.L * (std::ldexp(1.0, 2 - level) - std::ldexp(1.0, 1 - params.P));
}

BarStressState virtual_stresses_horizontal(const TreeParams& params, int level, std::uint64_t w) {
  const ExactPos folded = end_node_position_horizontal(w, params.P).sigma();
  const double sign = 1.0 - 2.0 * folded.digit(static_cast<std::uint64_t>(level));
  const double s = params.s();
  BarStressState out;
  out.bending = {lever_arm_horizontal(params, level) * sign, -s * sign};
  out.axial = -params.c() * sign;
  out.shear = s * sign;
  return out;
}

std::uint64_t loaded_bar(int level, std::uint64_t w, int levels) {
  require_node(levels, w);
  if (level < 1 || level > levels) {
    throw Error(ErrorCode::IndexOutOfRange, "level " + std::to_string(level) + " out of range");
  }
  return ((w - 1) >> (levels - level)) + 1;
}

namespace {

struct BarFrame {
  Point bottom;
  Point top;
  Point dir;
};

BarFrame frame_between(const Point& bottom, const Point& top, double length) {
  return {bottom, top, {(top.x - bottom.x) / length, (top.y - bottom.y) / length}};
}

BarFrame bar_frame(const TreeParams& params, const NodeRef& bar) {
  const Point top = node_coordinates(params, bar);
  const Point bottom =
      bar.level == 1 ? base_point() : node_coordinates(params, {bar.level - 1, (bar.index + 1) / 2});
  return frame_between(bottom, top, params.length(bar.level));
}

SectionForces real_forces(const BarFrame& f, int level) {
  // The loads carried by a bar sum to 2^-level and, by symmetry of the
  // subtree, act on the vertical through its top node.
  const double load = std::ldexp(1.0, -level);
  SectionForces out;
  out.moment = {-load * (f.top.x - f.bottom.x), load * f.dir.x};
  out.axial = -load * f.dir.y;
  out.shear = -load * f.dir.x;
  return out;
}

SectionForces unit_forces(const BarFrame& f, const Point& target, UnitLoad load) {
  SectionForces out;
  if (load == UnitLoad::Down) {
    out.moment = {-(target.x - f.bottom.x), f.dir.x};
    out.axial = -f.dir.y;
    out.shear = -f.dir.x;
  } else {
    out.moment = {target.y - f.bottom.y, -f.dir.y};
    out.axial = -f.dir.x;
    out.shear = f.dir.y;
  }
  return out;
}

// Virtual work along the path base -> w; returns the displacement of w in the
// direction of the unit load. Offsets from each bar's foot to w are summed
// from the tip down rather than taken as differences of absolute
// coordinates: at depth 20 a bar is 2^-19 L long and the difference would
// lose about 19 bits.
Displacement path_work(const TreeParams& params, std::uint64_t w, UnitLoad load) {
  require_node(params.P, w);
  const auto levels = static_cast<std::size_t>(params.P);
  const double c = params.c();
  const double s = params.s();
  std::vector<Point> dir(levels + 1);
  std::vector<Point> to_tip(levels + 2, Point{0.0, 0.0});  // foot of bar i -> w
  for (int i = 1; i <= params.P; ++i) {
    const bool right = (((w - 1) >> (params.P - i)) & 1U) != 0;
    dir[i] = {right ? c : -c, s};
  }
  for (int i = params.P; i >= 1; --i) {
    const double li = params.length(i);
    to_tip[i] = {to_tip[i + 1].x + dir[i].x * li, to_tip[i + 1].y + dir[i].y * li};
  }

  double bending = 0.0;
  double axial = 0.0;
  double shear = 0.0;
  for (int i = 1; i <= params.P; ++i) {
    const double li = params.length(i);
    // Local frame with the foot at the origin; only offsets enter the forces.
    const BarFrame frame{{0.0, 0.0}, {dir[i].x * li, dir[i].y * li}, dir[i]};
    const SectionForces real = real_forces(frame, i);
    const SectionForces unit = unit_forces(frame, to_tip[i], load);
    bending += integrate_product(unit.moment, real.moment, li) / (params.E * params.inertia(i));
    axial += unit.axial * real.axial * li / (params.E * params.area(i));
    shear += unit.shear * real.shear * li / (params.G * params.shear_area(i));
  }
  return Displacement::from_terms(bending, axial, shear);
}

}  // namespace

SectionForces real_section_forces(const TreeParams& params, const NodeRef& bar) {
  return real_forces(bar_frame(params, bar), bar.level);
}

SectionForces unit_load_section_forces(const TreeParams& params, const NodeRef& bar,
                                       std::uint64_t w, UnitLoad load) {
  if (loaded_bar(bar.level, w, params.P) != bar.index) return {};
  const Point target = node_coordinates(params, {params.P, w});
  return unit_forces(bar_frame(params, bar), target, load);
}

Displacement pvw_sum_vertical(const TreeParams& params, std::uint64_t w) {
  return path_work(params, w, UnitLoad::Down);
}

Displacement pvw_sum_horizontal(const TreeParams& params, std::uint64_t w) {
  return path_work(params, w, UnitLoad::Left).negated();
}

double outward(double signed_value, std::uint64_t w, int levels) {
  return w <= nodes_at_level(levels) / 2 ? -signed_value : signed_value;
}

Displacement outward(const Displacement& signed_value, std::uint64_t w, int levels) {
  return w <= nodes_at_level(levels) / 2 ? signed_value.negated() : signed_value;
}

}  // namespace fractree
