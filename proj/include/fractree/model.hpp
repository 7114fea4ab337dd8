#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fractree/error.hpp"
#include "fractree/exact_pos.hpp"

namespace fractree {

// Parameters of a P-level symmetric binary tree. Level i (1-based) has 2^i
// bars, each tilted by theta from the horizontal, with
//   L_i = L 2^(1-i),  I_i = I a^(1-i),  A_i = A u^(1-i),  A*_i = Astar v^(1-i).
struct TreeParams {
  double theta = 0.0;  // rad
  double E = 0.0;      // Pa
  double G = 0.0;      // Pa
  double L = 0.0;      // m
  double I = 0.0;      // m^4
  double A = 0.0;      // m^2
  double Astar = 0.0;  // m^2, shear area
  double a = 0.0;      // inertia reduction ratio per level
  double u = 0.0;      // area reduction ratio per level
  double v = 0.0;      // shear-area reduction ratio per level
  int P = 0;           // level count

  double c() const noexcept;
  double s() const noexcept;

  double length(int level) const noexcept;
  double inertia(int level) const noexcept;
  double area(int level) const noexcept;
  double shear_area(int level) const noexcept;

  TreeParams with_levels(int levels) const noexcept {
    TreeParams out = *this;
    out.P = levels;
    return out;
  }
};

// Reference parameter set (theta = 60 deg).
TreeParams reference_params(int levels = 8);

// Levels beyond this would overflow the 64-bit exact positions.
inline constexpr int kMaxLevels = 62;

enum class ViolationKind { NonPositive, RatioNotAboveOne, ZeroLevels, AngleOutOfRange, TooManyLevels };

struct Violation {
  ViolationKind kind;
  std::string field;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(const Violation& violation);

class InvalidParams : public Error {
 public:
  explicit InvalidParams(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Every violated constraint, in field order. Empty when valid.
std::vector<Violation> check(const TreeParams& params);

// Returns params unchanged or throws InvalidParams listing all violations.
TreeParams validate(const TreeParams& params);

struct NodeRef {
  int level = 1;
  std::uint64_t index = 1;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

std::uint64_t nodes_at_level(int level);
void require_node(int levels, std::uint64_t w);
std::uint64_t mirror_index(int level, std::uint64_t index);

// Displacement per unit total load with its three flexibility contributions.
struct Displacement {
  double total = 0.0;
  double bending = 0.0;
  double axial = 0.0;
  double shear = 0.0;

  static Displacement from_terms(double bending, double axial, double shear) noexcept {
    return {bending + axial + shear, bending, axial, shear};
  }
  Displacement negated() const noexcept { return {-total, -bending, -axial, -shear}; }
};

// Abscissa of end node w used for vertical data: (2w - 1) / 2^(P+1).
ExactPos end_node_position_vertical(std::uint64_t w, int levels);

// Abscissa of end node w used for horizontal data: (w - 1) / (2^P - 1).
ExactPos end_node_position_horizontal(std::uint64_t w, int levels);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Undeformed coordinates. The base sits at the origin; each level-i bar rises
// by s L_i and moves c L_i outward to the left (even step) or right (odd step).
Point node_coordinates(const TreeParams& params, const NodeRef& node);
Point base_point() noexcept;

}  // namespace fractree
