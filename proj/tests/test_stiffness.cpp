#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fractree/closedform.hpp"
#include "fractree/mechanics.hpp"
#include "fractree/stiffness.hpp"

using namespace fractree;

TEST(StiffnessSolve, MirrorSymmetry) {
  const TreeParams p = reference_params(7);
  const FrameSolution frame = stiffness_solve(p);
  for (int i = 1; i <= 7; ++i) {
    for (std::uint64_t n = 1; n <= nodes_at_level(i); ++n) {
      const NodeDisplacement& a = frame.at({i, n});
      const NodeDisplacement& b = frame.at({i, mirror_index(i, n)});
      const double scale = std::fabs(frame.at({7, 1}).uy);
      EXPECT_NEAR(a.ux, -b.ux, 1e-12 * scale);
      EXPECT_NEAR(a.uy, b.uy, 1e-12 * scale);
      EXPECT_NEAR(a.rz, -b.rz, 1e-12 * std::fabs(frame.at({1, 1}).rz) + 1e-25);
    }
  }
}

TEST(StiffnessSolve, BaseReactionBalancesLoad) {
  for (int P : {1, 4, 9}) {
    const FrameSolution frame = stiffness_solve(reference_params(P));
    // The support pushes up with the full applied load.
    EXPECT_NEAR(frame.base_reaction().fy, frame.applied_load(), 1e-10);
    EXPECT_NEAR(frame.base_reaction().fx, 0.0, 1e-10);
    // Symmetric loading gives no net base moment.
    EXPECT_NEAR(frame.base_reaction().mz, 0.0, 1e-10);
  }
}

TEST(StiffnessSolve, ReproducesVirtualWork) {
  for (int P : {1, 3, 6, 9}) {
    const TreeParams p = reference_params(P);
    const FrameSolution frame = stiffness_solve(p);
    double vmax = 0.0;
    double hmax = 0.0;
    double verr = 0.0;
    double herr = 0.0;
    for (std::uint64_t w = 1; w <= nodes_at_level(P); ++w) {
      const double v = pvw_sum_vertical(p, w).total;
      const double h = pvw_sum_horizontal(p, w).total;
      vmax = std::max(vmax, std::fabs(v));
      hmax = std::max(hmax, std::fabs(h));
      verr = std::max(verr, std::fabs(-frame.at({P, w}).uy - v));
      herr = std::max(herr, std::fabs(frame.at({P, w}).ux - h));
    }
    EXPECT_LE(verr, 1e-9 * vmax) << "P=" << P;
    EXPECT_LE(herr, 1e-9 * hmax) << "P=" << P;
  }
}

TEST(StiffnessSolve, InnerNodesBehaveAsEndNodesOfShorterTrees) {
  const TreeParams p = reference_params(6);
  const FrameSolution frame = stiffness_solve(p);
  // The load on a subtree acts on the vertical through its top node, so the
  // level-3 nodes carry 1/8 each just like the end nodes of a 3-level tree.
  const FrameSolution short_frame = stiffness_solve(p.with_levels(3));
  for (std::uint64_t n = 1; n <= 8; ++n) {
    EXPECT_NEAR(frame.at({3, n}).uy, short_frame.at({3, n}).uy, 1e-12 * std::fabs(short_frame.at({3, n}).uy));
    EXPECT_NEAR(displacement_at_level(p, 3, n, Direction::Vertical).total, -frame.at({3, n}).uy,
                1e-9 * std::fabs(frame.at({3, n}).uy));
  }
}

TEST(StiffnessSolve, RejectsUprightGeometry) {
  TreeParams p = reference_params(3);
  p.theta = std::numbers::pi / 2.0;
  try {
    stiffness_solve(p);
    FAIL() << "expected DegenerateGeometry";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateGeometry);
  }
}

TEST(StiffnessSolve, RejectsInvalidParams) { EXPECT_THROW(stiffness_solve(reference_params(0)), InvalidParams); }
