#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fractree/fractals.hpp"

namespace fractree {

// log(a/4) / log 2, for 1 < a < 16.
double takagi_dimension(double a);

// -log 2 / log t, for 0 < t < 1.
double cantor_inverse_dimension(double t);

// takagi_dimension(a) + 1 / cantor_inverse_dimension(a/16); identically 2.
double dimension_relation(double a);

struct DimensionReport {
  std::optional<double> analytic;
  std::optional<double> empirical;
  std::optional<double> ci_halfwidth;  // 95 % interval on the fitted slope
  std::vector<double> scales_used;
};

inline constexpr std::size_t kMinGraphSamples = std::size_t{1} << 16;
inline constexpr std::size_t kMinImageSamples = std::size_t{1} << 10;

// Box sizes 2^-4 ... 2^-12.
std::vector<double> default_scales();

// Box-counting dimension of the graph of a sampled curve, after mapping it
// onto the unit square. Consecutive samples are joined, so every column
// covers the full vertical range the curve sweeps inside it.
// Pass `a` to attach takagi_dimension(a) as the analytic reference.
DimensionReport box_count_graph(const CurveSamples& samples, std::span<const double> scales,
                                std::optional<double> a = std::nullopt);

// Box-counting dimension of a set of values on the line, after mapping its
// range onto [0, 1]. Pass `t` to attach cantor_inverse_dimension(t).
DimensionReport box_count_image(std::span<const double> values, std::span<const double> scales,
                                std::optional<double> t = std::nullopt);

}  // namespace fractree
