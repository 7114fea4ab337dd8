#pragma once

#include <cstdint>
#include <string>

#include "fractree/exact_pos.hpp"
#include "fractree/model.hpp"

namespace fractree {

// Parameter values at which the geometric sums of the closed forms
// degenerate into linear-in-P terms.
enum class ACase { Generic, A8, A16 };
enum class UCase { Generic, U4 };
enum class VCase { Generic, V4 };

struct CaseKey {
  ACase a = ACase::Generic;
  UCase u = UCase::Generic;
  VCase v = VCase::Generic;

  std::string label() const;
  friend bool operator==(const CaseKey&, const CaseKey&) = default;
};

// Values closer than this to a special value (but not equal) are rejected
// with IllConditioned.
inline constexpr double kSingularGuard = 1e-9;

// a = 8 only matters for horizontal data; vertical keys use Generic there.
CaseKey vertical_case(const TreeParams& params);
CaseKey horizontal_case(const TreeParams& params);

enum class Direction { Vertical, Horizontal };

// --- vertical, positive = downward -----------------------------------------

double vertical_bending_term(const TreeParams& params, std::uint64_t w);
double vertical_axial_term(const TreeParams& params);
double vertical_shear_term(const TreeParams& params);
Displacement vertical_displacement(const TreeParams& params, std::uint64_t w);

// The P-level expression evaluated at an arbitrary abscissa z; at z = z(w)
// this is vertical_displacement(params, w).
Displacement vertical_displacement_at(const TreeParams& params, const ExactPos& z);

// --- horizontal, positive = outward ---------------------------------------

double horizontal_bending_term(const TreeParams& params, std::uint64_t w);
double horizontal_axial_term(const TreeParams& params, std::uint64_t w);
double horizontal_shear_term(const TreeParams& params, std::uint64_t w);
Displacement horizontal_displacement(const TreeParams& params, std::uint64_t w);

// The P-level expression evaluated at an arbitrary abscissa z*.
Displacement horizontal_displacement_at(const TreeParams& params, const ExactPos& zstar);

// Bending contribution carrying the 2^(1-P) factor; it has no counterpart
// in the infinite-level limit.
double horizontal_bending_transient(const TreeParams& params, const ExactPos& zstar);

// Evaluates one named branch, bypassing dispatch and the guard band. The
// generic branch at an exactly special value divides by zero.
Displacement vertical_branch(const TreeParams& params, const ExactPos& z, const CaseKey& branch);
Displacement horizontal_branch(const TreeParams& params, const ExactPos& zstar, const CaseKey& branch);

// Node n of level i behaves as end node n of an i-level tree carrying unit load.
Displacement displacement_at_level(const TreeParams& params, int level, std::uint64_t n,
                                   Direction kind);

}  // namespace fractree
