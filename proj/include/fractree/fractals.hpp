#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fractree/exact_pos.hpp"
#include "fractree/model.hpp"

namespace fractree {

// Truncation depth is capped; deeper requests throw DepthExceeded.
inline constexpr int kMaxSeriesDepth = 1'000'000;

// Partial sum sum_{i=1..P} r^(i-1) sigma(2^(i-1) z).
double phi(const ExactPos& z, double r, int P);

// Smallest P with (1/2) r^P / (1 - r) <= tol.
int takagi_depth(double r, double tol);

// Exponential Takagi function Psi_r(z), 0 < r < 1, to absolute tolerance tol.
double takagi(const ExactPos& z, double r, double tol = 1e-12);

// Digit sum sum_{k=1..P} rho_k(x) t^k.
double c_partial(const ExactPos& x, double t, int P);

// Smallest P with t^(P+1) / (1 - t) <= tol.
int digit_sum_depth(double t, double tol);

// C_t(x) = sum_{k>=1} rho_k(x) t^k, 0 < t < 1, to absolute tolerance tol.
double c_limit(const ExactPos& x, double t, double tol = 1e-12);

// Inverse of the beta-Cantor function at y = sum alpha_k / 2^k:
// ((1 + beta)/(1 - beta)) sum alpha_k ((1 - beta)/2)^k.
double beta_cantor_inverse(const ExactPos& y, double beta, double tol = 1e-15);

// beta-Cantor function at the set point encoded by the digit stream alpha.
double beta_cantor(std::span<const std::uint8_t> alpha, double beta);

// beta-Cantor function (devil's staircase) at a real x in [0, 1]: decodes
// the set digits greedily and is constant across the gaps.
double beta_cantor(double x, double beta);

// Leading `count` digits of y.
std::vector<std::uint8_t> leading_digits(const ExactPos& y, std::size_t count);

enum class CurveKind {
  TakagiPartial,
  TakagiLimit,
  CPartial,
  CLimit,
  VerticalIteration,
  HorizontalIteration,
  VerticalLimit,
  HorizontalLimit,
};

const char* to_string(CurveKind kind) noexcept;
std::optional<CurveKind> curve_kind_from_string(const std::string& name);

struct CurveSamples {
  std::vector<double> abscissae;
  std::vector<double> values;
  std::string kind;
  std::map<std::string, double> meta;
};

struct CurveRequest {
  CurveKind kind = CurveKind::TakagiLimit;
  std::size_t samples = 1025;  // grid size for non-iteration kinds
  double ratio = 0.5;          // r for Takagi kinds, t for digit-sum kinds
  int depth = 8;               // P for partial kinds, level for iteration kinds
  double tol = 1e-12;
  TreeParams params = reference_params();
};

// Uniform grid k/(n-1), k = 0..n-1, as exact rationals.
std::vector<ExactPos> uniform_grid(std::size_t n);

CurveSamples sample_curve(const CurveRequest& request);

}  // namespace fractree
