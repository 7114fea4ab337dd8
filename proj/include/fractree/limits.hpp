#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fractree/closedform.hpp"
#include "fractree/exact_pos.hpp"
#include "fractree/model.hpp"

namespace fractree {

enum class LimitStatus { Convergent, Divergent };

struct Classification {
  LimitStatus status = LimitStatus::Convergent;
  std::vector<std::string> reasons;  // subset of {"a", "u", "v"}
};

// Convergent iff a < 16, u < 4 and v < 4.
Classification classify(double a, double u, double v);

struct LimitResult {
  LimitStatus status = LimitStatus::Convergent;
  std::optional<double> value;  // m, present iff convergent
  std::vector<std::string> reasons;
  // Bound on |finite-P value - limit| at a fixed abscissa; empty if divergent.
  std::function<double(int)> tail_bound_at;

  bool convergent() const noexcept { return status == LimitStatus::Convergent; }
};

// P -> infinity of the vertical expression at abscissa z, positive downward.
// tol is the absolute error allowed in the result.
LimitResult vertical_limit(const TreeParams& params, const ExactPos& z, double tol = 1e-12);

// Parameter regimes in which two of the horizontal series cancel. They are
// only used when requested, never detected.
//   BendingAxial: a = 4u and A = 6 I / (5 L^2); bending and axial cancel,
//                 leaving the shear series.
//   AxialShear:   u = v and E A u = G A* v; axial and shear cancel, leaving
//                 the bending series.
enum class Cancellation { None, BendingAxial, AxialShear };

// P -> infinity of the horizontal expression at z*, positive outward.
LimitResult horizontal_limit(const TreeParams& params, const ExactPos& zstar, double tol = 1e-12,
                             Cancellation regime = Cancellation::None);

// Rigorous bound on |value at P levels - limit| at any fixed abscissa.
// Nonincreasing in P. Throws DivergentParameters outside the convergent region.
double tail_bound(Direction kind, const TreeParams& params, int P);

}  // namespace fractree
