#include "fractree/closedform.hpp"

#include <cmath>
#include <string>

#include "fractree/fractals.hpp"

namespace fractree {

namespace {

// sum_{i=1..P} t^i. The special branch is the t = 1 value P.
double geometric(double t, int P, bool special) {
  if (special) return static_cast<double>(P);
  return -t * std::expm1(P * std::log(t)) / (1.0 - t);
}

bool near_special(double value, double special) {
  const double gap = std::fabs(value - special);
  return gap > 0.0 && gap < kSingularGuard;
}

void guard(double value, double special, const char* field) {
  if (near_special(value, special)) {
    throw Error(ErrorCode::IllConditioned,
                std::string(field) + " = " + std::to_string(value) + " lies within the guard band of " +
                    std::to_string(special));
  }
}

// sum_{i=1..P} (1 - 2 rho_i(x)) t^i
double signed_series(const ExactPos& x, double t, int P, bool special) {
  return geometric(t, P, special) - 2.0 * c_partial(x, t, P);
}

}  // namespace

std::string CaseKey::label() const {
  std::string out;
  out += a == ACase::A8 ? "a8" : a == ACase::A16 ? "a16" : "a_generic";
  out += u == UCase::U4 ? "/u4" : "/u_generic";
  out += v == VCase::V4 ? "/v4" : "/v_generic";
  return out;
}

CaseKey vertical_case(const TreeParams& params) {
  guard(params.a, 16.0, "a");
  guard(params.u, 4.0, "u");
  guard(params.v, 4.0, "v");
  CaseKey key;
  key.a = params.a == 16.0 ? ACase::A16 : ACase::Generic;
  key.u = params.u == 4.0 ? UCase::U4 : UCase::Generic;
  key.v = params.v == 4.0 ? VCase::V4 : VCase::Generic;
  return key;
}

CaseKey horizontal_case(const TreeParams& params) {
  guard(params.a, 8.0, "a");
  CaseKey key = vertical_case(params);
  if (params.a == 8.0) key.a = ACase::A8;
  return key;
}

Displacement vertical_branch(const TreeParams& params, const ExactPos& z, const CaseKey& branch) {
  const int P = params.P;
  const double c = params.c();
  const double s = params.s();
  const double L = params.L;
  const double EI = params.E * params.I;
  const double r = params.a / 16.0;

  const double cl3 = c * c * L * L * L / EI;
  const double bending = 20.0 * cl3 / (3.0 * params.a) * geometric(r, P, branch.a == ACase::A16) -
                         cl3 * phi(z, r, P);
  const double axial = 2.0 * s * s * L / (params.E * params.A * params.u) *
                       geometric(params.u / 4.0, P, branch.u == UCase::U4);
  const double shear = 2.0 * c * c * L / (params.G * params.Astar * params.v) *
                       geometric(params.v / 4.0, P, branch.v == VCase::V4);
  return Displacement::from_terms(bending, axial, shear);
}

Displacement horizontal_branch(const TreeParams& params, const ExactPos& zstar, const CaseKey& branch) {
  const int P = params.P;
  const double cs = params.c() * params.s();
  const double L = params.L;
  const double EIa = params.E * params.I * params.a;
  const double r = params.a / 16.0;
  const ExactPos x = zstar.sigma();

  const double steady = 10.0 * L * L / (3.0 * EIa) * signed_series(x, r, P, branch.a == ACase::A16);
  const double transient = L * L / (std::ldexp(1.0, P - 1) * EIa) *
                           signed_series(x, 2.0 * r, P, branch.a == ACase::A8);
  const double bending = 2.0 * cs * L * (steady - transient);
  const double axial = -2.0 * cs * L / (params.E * params.A * params.u) *
                       signed_series(x, params.u / 4.0, P, branch.u == UCase::U4);
  const double shear = 2.0 * cs * L / (params.G * params.Astar * params.v) *
                       signed_series(x, params.v / 4.0, P, branch.v == VCase::V4);
  return Displacement::from_terms(bending, axial, shear);
}

Displacement vertical_displacement_at(const TreeParams& params, const ExactPos& z) {
  validate(params);
  return vertical_branch(params, z, vertical_case(params));
}

Displacement horizontal_displacement_at(const TreeParams& params, const ExactPos& zstar) {
  validate(params);
  return horizontal_branch(params, zstar, horizontal_case(params));
}

double horizontal_bending_transient(const TreeParams& params, const ExactPos& zstar) {
  validate(params);
  const CaseKey key = horizontal_case(params);
  const double r = params.a / 16.0;
  const double EIa = params.E * params.I * params.a;
  const double L = params.L;
  return -2.0 * params.c() * params.s() * L * L * L / (std::ldexp(1.0, params.P - 1) * EIa) *
         signed_series(zstar.sigma(), 2.0 * r, params.P, key.a == ACase::A8);
}

Displacement vertical_displacement(const TreeParams& params, std::uint64_t w) {
  validate(params);
  return vertical_displacement_at(params, end_node_position_vertical(w, params.P));
}

Displacement horizontal_displacement(const TreeParams& params, std::uint64_t w) {
  validate(params);
  return horizontal_displacement_at(params, end_node_position_horizontal(w, params.P));
}

double vertical_bending_term(const TreeParams& params, std::uint64_t w) {
  return vertical_displacement(params, w).bending;
}

double vertical_axial_term(const TreeParams& params) { return vertical_displacement(params, 1).axial; }

double vertical_shear_term(const TreeParams& params) { return vertical_displacement(params, 1).shear; }

double horizontal_bending_term(const TreeParams& params, std::uint64_t w) {
  return horizontal_displacement(params, w).bending;
}

double horizontal_axial_term(const TreeParams& params, std::uint64_t w) {
  return horizontal_displacement(params, w).axial;
}

double horizontal_shear_term(const TreeParams& params, std::uint64_t w) {
  return horizontal_displacement(params, w).shear;
}

Displacement displacement_at_level(const TreeParams& params, int level, std::uint64_t n,
                                   Direction kind) {
  validate(params);
  if (level < 1 || level > params.P) {
    throw Error(ErrorCode::IndexOutOfRange,
                "level " + std::to_string(level) + " outside [1, " + std::to_string(params.P) + "]");
  }
  const TreeParams sub = params.with_levels(level);
  return kind == Direction::Vertical ? vertical_displacement(sub, n) : horizontal_displacement(sub, n);
}

}  // namespace fractree
