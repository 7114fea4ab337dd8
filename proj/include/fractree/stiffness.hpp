#pragma once

#include <cstdint>
#include <vector>

#include "fractree/model.hpp"

namespace fractree {

struct NodeDisplacement {
  double ux = 0.0;  // m, rightward positive
  double uy = 0.0;  // m, upward positive
  double rz = 0.0;  // rad, counter-clockwise positive
};

struct Reaction {
  double fx = 0.0;
  double fy = 0.0;
  double mz = 0.0;
};

class FrameSolution {
 public:
  FrameSolution(int levels, std::vector<NodeDisplacement> nodes, Reaction base_reaction,
                double applied_load);

  int levels() const noexcept { return levels_; }
  const NodeDisplacement& at(const NodeRef& node) const;
  const Reaction& base_reaction() const noexcept { return reaction_; }
  // Sum of the applied vertical loads (downward positive).
  double applied_load() const noexcept { return applied_load_; }

  // Row of `node` in the flat storage: base = 0, then level by level.
  static std::size_t slot(const NodeRef& node) noexcept;

 private:
  int levels_;
  std::vector<NodeDisplacement> nodes_;
  Reaction reaction_;
  double applied_load_;
};

// Linear planar frame analysis of the tree with shear-flexible (Timoshenko)
// elements, rigid joints and a clamped base, under 1/2^P downward on every
// end node. Throws DegenerateGeometry for theta >= 90 deg, where sibling bars
// coincide, and SingularSystem if factorisation fails.
FrameSolution stiffness_solve(const TreeParams& params);

}  // namespace fractree
