#pragma once

#include <cstdint>

#include "fractree/model.hpp"

namespace fractree {

// f(x) = at_base + slope * x, x measured along the bar from its lower end.
struct Affine {
  double at_base = 0.0;
  double slope = 0.0;

  double operator()(double x) const noexcept { return at_base + slope * x; }
};

// Exact integral over [0, length] of the product of two affine functions.
double integrate_product(const Affine& f, const Affine& g, double length) noexcept;

struct BarStressState {
  Affine bending;     // N m
  double axial = 0.0; // N
  double shear = 0.0; // N
};

// Internal forces of a level-i bar under the real load (1/2^P on every end
// node), as unsigned magnitudes: M(x) = c 2^-i (L_i - x), N = s 2^-i, T = c 2^-i.
BarStressState real_stresses(const TreeParams& params, int level);

// Horizontal distance from the lower end of the loaded level-i bar to end
// node w, via the sawtooth: 4 c L (2^-i - sigma(2^(i-1) z(w)) / 2^(i-1)).
double lever_arm_vertical(const TreeParams& params, int level, std::uint64_t w);

// Virtual forces in the loaded level-i bar for a unit downward load at w.
BarStressState virtual_stresses_vertical(const TreeParams& params, int level, std::uint64_t w);

// Vertical distance from the lower end of the loaded level-i bar to the end
// nodes: s L (2^(2-i) - 2^(1-P)).
double lever_arm_horizontal(const TreeParams& params, int level);

// Virtual forces in the loaded level-i bar for a unit leftward load at w,
// using the left-half convention: the sign factor 1 - 2 rho_i(sigma(z*(w)))
// is that of the mirror node when w lies in the right half.
BarStressState virtual_stresses_horizontal(const TreeParams& params, int level, std::uint64_t w);

// ---------------------------------------------------------------------------
// Statics route. Forces are taken as signed resultants of the loads acting
// on the part of the tree beyond a section; no closed-form lever arms.

enum class UnitLoad { Down, Left };

// Index of the bar of `level` lying on the path from the base to end node w.
std::uint64_t loaded_bar(int level, std::uint64_t w, int levels);

struct SectionForces {
  Affine moment;      // signed, counter-clockwise positive
  double axial = 0.0; // resultant projected on the bar axis
  double shear = 0.0; // resultant projected on the bar normal
};

SectionForces real_section_forces(const TreeParams& params, const NodeRef& bar);

// Zero unless w is carried by `bar`.
SectionForces unit_load_section_forces(const TreeParams& params, const NodeRef& bar,
                                       std::uint64_t w, UnitLoad load);

// Virtual-work displacement of end node w, summed level by level with
// lever arms taken from the node coordinates. Positive = downward.
Displacement pvw_sum_vertical(const TreeParams& params, std::uint64_t w);

// Horizontal counterpart, signed in the global frame: negative = leftward.
Displacement pvw_sum_horizontal(const TreeParams& params, std::uint64_t w);

// Converts a signed horizontal value (rightward positive) to the outward
// convention: leftward counts positive on the left half, rightward on the right.
double outward(double signed_value, std::uint64_t w, int levels);
Displacement outward(const Displacement& signed_value, std::uint64_t w, int levels);

}  // namespace fractree
