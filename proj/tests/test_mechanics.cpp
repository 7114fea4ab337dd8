#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "fractree/closedform.hpp"
#include "fractree/mechanics.hpp"
#include "fractree/stiffness.hpp"

using namespace fractree;

namespace {

constexpr double kPi = std::numbers::pi;

TreeParams upright(int levels) {
  TreeParams p = reference_params(levels);
  p.theta = kPi / 2.0;
  return p;
}

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

// Values from an independent 40-digit evaluation that enumerates the loads
// of every subtree and integrates the moment products numerically.
struct Frozen {
  std::uint64_t w;
  double vertical[4];    // total, bending, axial, shear
  double horizontal[4];  // outward positive
};

const Frozen kReferenceP3[] = {
    {1,
     {1.7283249973116467e-8, 5.6794660927818094e-9, 1.3801685446906035e-9, 1.0223615335644054e-8},
     {2.6748104350134458e-8, 9.8371238325627892e-9, -7.9684068080417399e-10, 1.7707821198375843e-8}},
    {2,
     {1.4641035416839411e-8, 3.0372515365047533e-9, 1.3801685446906035e-9, 1.0223615335644054e-8},
     {1.6704021059346831e-8, 8.0200040368100277e-9, -4.0918845771025151e-10, 9.0932054802470545e-9}},
    {3,
     {1.3397640331532561e-8, 1.7938564511979033e-9, 1.3801685446906035e-9, 1.0223615335644054e-8},
     {1.0125558103301601e-8, 4.18386224577642e-9, -2.7997105001227735e-10, 6.2216669075374583e-9}},
    {4,
     {1.3553064717195918e-8, 1.9492808368612596e-9, 1.3801685446906035e-9, 1.0223615335644054e-8},
     {8.1474812513973526e-11, 2.3667424500236585e-9, 1.0768117308164513e-10, -2.3929488105913301e-9}},
};

}  // namespace

TEST(RealStresses, UprightBarsCarryOnlyAxialForce) {
  for (int i = 1; i <= 6; ++i) {
    const BarStressState s = real_stresses(upright(6), i);
    EXPECT_NEAR(s.bending.at_base, 0.0, 1e-16);
    EXPECT_NEAR(s.bending.slope, 0.0, 1e-16);
    EXPECT_NEAR(s.shear, 0.0, 1e-16);
    EXPECT_DOUBLE_EQ(s.axial, std::ldexp(1.0, -i));
  }
}

TEST(RealStresses, BaseMomentOfFirstLevel) {
  const BarStressState s = real_stresses(reference_params(), 1);
  EXPECT_NEAR(s.bending(0.0), 0.125, 1e-15);
}

TEST(RealStresses, FreeEndMomentVanishes) {
  const TreeParams p = reference_params(8);
  for (int i = 1; i <= 8; ++i) EXPECT_NEAR(real_stresses(p, i).bending(p.length(i)), 0.0, 1e-17);
}

TEST(LeverArm, VerticalSingleLevel) {
  const TreeParams p = reference_params(1);
  EXPECT_NEAR(lever_arm_vertical(p, 1, 1), p.c() * p.L, 1e-15);
  EXPECT_NEAR(lever_arm_vertical(p, 1, 2), p.c() * p.L, 1e-15);
}

TEST(LeverArm, VerticalSymmetricAndNonNegative) {
  const TreeParams p = reference_params(7);
  for (int i = 1; i <= 7; ++i) {
    for (std::uint64_t w = 1; w <= 128; ++w) {
      const double dh = lever_arm_vertical(p, i, w);
      EXPECT_GE(dh, 0.0);
      EXPECT_DOUBLE_EQ(dh, lever_arm_vertical(p, i, 129 - w));
    }
  }
}

TEST(LeverArm, VerticalEqualsGeometricDistance) {
  const TreeParams p = reference_params(6);
  for (std::uint64_t w = 1; w <= 64; ++w) {
    const double tip = node_coordinates(p, {6, w}).x;
    for (int i = 1; i <= 6; ++i) {
      const std::uint64_t bar = loaded_bar(i, w, 6);
      const double foot = i == 1 ? 0.0 : node_coordinates(p, {i - 1, (bar + 1) / 2}).x;
      EXPECT_NEAR(lever_arm_vertical(p, i, w), std::fabs(tip - foot), 1e-15);
    }
  }
}

TEST(LeverArm, Horizontal) {
  const TreeParams p1 = reference_params(1);
  EXPECT_NEAR(lever_arm_horizontal(p1, 1), p1.s() * p1.L, 1e-15);
  const TreeParams p = reference_params(5);
  EXPECT_NEAR(lever_arm_horizontal(p, 5), p.s() * p.L * std::ldexp(1.0, -4), 1e-16);
  TreeParams flat = reference_params(5);
  flat.theta = 1e-9;
  for (int i = 1; i <= 5; ++i) EXPECT_LT(std::fabs(lever_arm_horizontal(flat, i)), 1e-8);
}

TEST(VirtualStresses, Vertical) {
  const BarStressState up = virtual_stresses_vertical(upright(4), 2, 3);
  EXPECT_NEAR(up.bending.at_base, 0.0, 1e-16);
  EXPECT_NEAR(up.shear, 0.0, 1e-16);
  EXPECT_DOUBLE_EQ(up.axial, 1.0);
  const TreeParams p = reference_params(1);
  EXPECT_NEAR(virtual_stresses_vertical(p, 1, 1).bending(0.0), p.c() * p.L, 1e-15);
}

TEST(VirtualStresses, VerticalBaseMomentSameSenseAsReal) {
  const TreeParams p = reference_params(6);
  for (int i = 1; i <= 6; ++i) {
    for (std::uint64_t w = 1; w <= 64; ++w) {
      EXPECT_GE(virtual_stresses_vertical(p, i, w).bending(0.0) * real_stresses(p, i).bending(0.0), 0.0);
    }
  }
}

TEST(VirtualStresses, Horizontal) {
  const BarStressState up = virtual_stresses_horizontal(upright(4), 3, 5);
  EXPECT_NEAR(up.axial, 0.0, 1e-16);
  EXPECT_NEAR(std::fabs(up.shear), 1.0, 1e-16);
  const TreeParams p = reference_params(7);
  for (int i = 1; i <= 7; ++i) {
    EXPECT_GT(virtual_stresses_horizontal(p, i, 1).shear, 0.0);
    for (std::uint64_t w = 1; w <= 128; ++w) {
      const BarStressState s = virtual_stresses_horizontal(p, i, w);
      EXPECT_NEAR(std::fabs(s.shear), p.s(), 1e-15);
    }
  }
}

TEST(Statics, OneLoadedBarPerLevel) {
  const TreeParams p = reference_params(5);
  for (std::uint64_t w = 1; w <= 32; ++w) {
    for (int i = 1; i <= 5; ++i) {
      int loaded = 0;
      for (std::uint64_t n = 1; n <= nodes_at_level(i); ++n) {
        const SectionForces f = unit_load_section_forces(p, {i, n}, w, UnitLoad::Down);
        if (f.axial != 0.0 || f.shear != 0.0 || f.moment.at_base != 0.0) ++loaded;
      }
      EXPECT_EQ(loaded, 1) << "w=" << w << " level=" << i;
    }
  }
}

TEST(Statics, AgreesWithSawtoothForces) {
  const TreeParams p = reference_params(6);
  for (std::uint64_t w = 1; w <= 64; ++w) {
    for (int i = 1; i <= 6; ++i) {
      const NodeRef bar{i, loaded_bar(i, w, 6)};
      const SectionForces down = unit_load_section_forces(p, bar, w, UnitLoad::Down);
      const BarStressState sv = virtual_stresses_vertical(p, i, w);
      EXPECT_NEAR(std::fabs(down.moment.at_base), sv.bending.at_base, 1e-14);
      EXPECT_NEAR(std::fabs(down.axial), sv.axial, 1e-14);
      EXPECT_NEAR(std::fabs(down.shear), sv.shear, 1e-14);
      const SectionForces left = unit_load_section_forces(p, bar, w, UnitLoad::Left);
      const BarStressState sh = virtual_stresses_horizontal(p, i, w);
      EXPECT_NEAR(std::fabs(left.moment.at_base), std::fabs(sh.bending.at_base), 1e-14);
      EXPECT_NEAR(std::fabs(left.axial), std::fabs(sh.axial), 1e-14);
    }
  }
}

TEST(IntegrateProduct, MatchesAdaptiveQuadrature) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_real_distribution<double> len(0.01, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Affine f{coef(rng), coef(rng)};
    const Affine g{coef(rng), coef(rng)};
    const double l = len(rng);
    const double exact = integrate_product(f, g, l);
    const double quad = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&](double x) { return f(x) * g(x); }, 0.0, l, 10, 1e-15);
    // Scale by the integral of |f g| so that near-cancelling pairs are fair.
    const double scale = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&](double x) { return std::fabs(f(x) * g(x)); }, 0.0, l, 10, 1e-15);
    EXPECT_LE(std::fabs(exact - quad), 1e-13 * scale);
  }
}

TEST(PvwSum, UprightSingleLevelIsPureAxial) {
  TreeParams p = upright(1);
  p.u = 2.0;
  const Displacement d = pvw_sum_vertical(p, 1);
  EXPECT_NEAR(d.total, p.L / (2.0 * p.E * p.A), 1e-25);
  EXPECT_NEAR(d.bending, 0.0, 1e-30);
  EXPECT_NEAR(d.shear, 0.0, 1e-30);
}

TEST(PvwSum, MatchesIndependentEvaluation) {
  const TreeParams p = reference_params(3);
  for (const Frozen& f : kReferenceP3) {
    for (std::uint64_t w : {f.w, std::uint64_t{9} - f.w}) {
      const Displacement v = pvw_sum_vertical(p, w);
      const Displacement h = outward(pvw_sum_horizontal(p, w), w, 3);
      const double vs[4] = {v.total, v.bending, v.axial, v.shear};
      const double hs[4] = {h.total, h.bending, h.axial, h.shear};
      for (int k = 0; k < 4; ++k) {
        EXPECT_LE(rel(vs[k], f.vertical[k]), 1e-13) << "w=" << w << " term " << k;
        EXPECT_LE(std::fabs(hs[k] - f.horizontal[k]), 1e-13 * std::fabs(f.horizontal[0]) + 1e-13 * std::fabs(f.horizontal[k]))
            << "w=" << w << " term " << k;
      }
    }
  }
}

TEST(PvwSum, ReferenceEightLevels) {
  const TreeParams p = reference_params(8);
  const Displacement v = pvw_sum_vertical(p, 128);
  EXPECT_GT(v.total, 0.0);
  EXPECT_LE(rel(v.total, 2.2262454694642049e-8), 1e-13);
  EXPECT_LE(rel(v.bending, 4.2004520990250602e-9), 1e-13);
  EXPECT_LE(rel(v.axial, 2.148317143241352e-9), 1e-13);
  EXPECT_LE(rel(v.shear, 1.5913685452375636e-8), 1e-13);
  const Displacement h = outward(pvw_sum_horizontal(p, 1), 1, 8);
  EXPECT_LE(rel(h.total, 4.2145569821855556e-8), 1e-13);
}

TEST(PvwSum, HorizontalUprightIsZero) {
  // cos(pi/2) is about 6e-17 in double, so only zero relative to the vertical scale.
  const TreeParams p = upright(4);
  const double scale = pvw_sum_vertical(p, 1).total;
  for (std::uint64_t w = 1; w <= 16; ++w) EXPECT_NEAR(pvw_sum_horizontal(p, w).total, 0.0, 1e-14 * scale);
}

TEST(PvwSum, HorizontalAntisymmetric) {
  const TreeParams p = reference_params(7);
  for (std::uint64_t w = 1; w <= 128; ++w) {
    const double a = pvw_sum_horizontal(p, w).total;
    const double b = pvw_sum_horizontal(p, 129 - w).total;
    EXPECT_NEAR(a, -b, 1e-13 * std::fabs(a) + 1e-25);
  }
}

TEST(PvwSum, LeftHalfMovesOutwardToTheLeft) {
  // Signed value at node 1 is leftward (negative); the outward view flips it.
  const TreeParams p = reference_params(4);
  EXPECT_LT(pvw_sum_horizontal(p, 1).total, 0.0);
  EXPECT_GT(outward(pvw_sum_horizontal(p, 1).total, 1, 4), 0.0);
  EXPECT_GT(outward(pvw_sum_horizontal(p, 16).total, 16, 4), 0.0);
}

TEST(PvwSum, MatchesStiffnessSolveSingleLevel) {
  const TreeParams p = reference_params(1);
  const FrameSolution frame = stiffness_solve(p);
  for (std::uint64_t w = 1; w <= 2; ++w) {
    EXPECT_LE(rel(-frame.at({1, w}).uy, pvw_sum_vertical(p, w).total), 1e-9);
    EXPECT_LE(rel(frame.at({1, w}).ux, pvw_sum_horizontal(p, w).total), 1e-9);
  }
}
