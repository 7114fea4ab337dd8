#include "fractree/dimension.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace fractree {

namespace {

void require_ratio_range(double a) {
  if (!(a > 1.0 && a < 16.0)) throw Error(ErrorCode::OutOfRange, "a = " + std::to_string(a) + " outside (1, 16)");
}

void require_scales(std::span<const double> scales) {
  if (scales.size() < 4) throw Error(ErrorCode::DegenerateScales, "need at least four box sizes");
  for (double eps : scales) {
    if (!(eps > 0.0 && eps <= 1.0)) throw Error(ErrorCode::DegenerateScales, "box sizes must lie in (0, 1]");
  }
  const auto [lo, hi] = std::minmax_element(scales.begin(), scales.end());
  if (std::log10(*hi / *lo) < 2.0) throw Error(ErrorCode::DegenerateScales, "box sizes span less than two decades");
}

// Maps values onto [0, 1]; a constant input maps to 0.
std::vector<double> normalised(std::span<const double> values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double span = *hi - *lo;
  std::vector<double> out(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) out[k] = span > 0.0 ? (values[k] - *lo) / span : 0.0;
  return out;
}

std::int64_t box_index(double y, double eps, std::int64_t count) {
  return std::clamp<std::int64_t>(static_cast<std::int64_t>(std::floor(y / eps)), 0, count - 1);
}

std::int64_t box_total(double eps) { return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(1.0 / eps))); }

// Least-squares slope of log N against log(1/eps), with the 95 % interval.
DimensionReport fit(std::span<const double> scales, const std::vector<double>& counts) {
  const std::size_t n = scales.size();
  std::vector<double> x(n);
  std::vector<double> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = -std::log(scales[k]);
    y[k] = std::log(counts[k]);
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxx += (x[k] - mx) * (x[k] - mx);
    sxy += (x[k] - mx) * (y[k] - my);
  }
  const double slope = sxy / sxx;
  double sse = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = y[k] - my - slope * (x[k] - mx);
    sse += r * r;
  }
  const double se = std::sqrt(sse / static_cast<double>(n - 2) / sxx);
  const boost::math::students_t dist(static_cast<double>(n - 2));

  DimensionReport out;
  out.empirical = slope;
  out.ci_halfwidth = boost::math::quantile(boost::math::complement(dist, 0.025)) * se;
  out.scales_used.assign(scales.begin(), scales.end());
  return out;
}

}  // namespace

double takagi_dimension(double a) {
  require_ratio_range(a);
  return std::log(a / 4.0) / std::numbers::ln2;
}

double cantor_inverse_dimension(double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::OutOfRange, "t = " + std::to_string(t) + " outside (0, 1)");
  return -std::numbers::ln2 / std::log(t);
}

double dimension_relation(double a) {
  require_ratio_range(a);
  return takagi_dimension(a) + 1.0 / cantor_inverse_dimension(a / 16.0);
}

std::vector<double> default_scales() {
  std::vector<double> out;
  for (int k = 4; k <= 12; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

DimensionReport box_count_graph(const CurveSamples& samples, std::span<const double> scales,
                                std::optional<double> a) {
  const std::size_t n = samples.values.size();
  if (n < kMinGraphSamples || samples.abscissae.size() != n) {
    throw Error(ErrorCode::TooFewSamples,
                "graph box counting needs " + std::to_string(kMinGraphSamples) + " samples, got " + std::to_string(n));
  }
  require_scales(scales);
  const std::vector<double> xs = normalised(samples.abscissae);
  const std::vector<double> ys = normalised(samples.values);

  std::vector<double> counts(scales.size());
  for (std::size_t s = 0; s < scales.size(); ++s) {
    const double eps = scales[s];
    const std::int64_t boxes = box_total(eps);
    std::vector<double> lo(static_cast<std::size_t>(boxes), 2.0);
    std::vector<double> hi(static_cast<std::size_t>(boxes), -1.0);
    auto cover = [&](std::size_t column, double y) {
      lo[column] = std::min(lo[column], y);
      hi[column] = std::max(hi[column], y);
    };
    for (std::size_t k = 0; k < n; ++k) {
      const auto column = static_cast<std::size_t>(box_index(xs[k], eps, boxes));
      cover(column, ys[k]);
      // The segment from the previous sample enters this column.
      if (k > 0) cover(column, ys[k - 1]);
    }
    double total = 0.0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (hi[j] < lo[j]) continue;
      total += static_cast<double>(box_index(hi[j], eps, boxes) - box_index(lo[j], eps, boxes) + 1);
    }
    counts[s] = total;
  }
  DimensionReport out = fit(scales, counts);
  if (a) out.analytic = takagi_dimension(*a);
  return out;
}

DimensionReport box_count_image(std::span<const double> values, std::span<const double> scales,
                                std::optional<double> t) {
  if (values.size() < kMinImageSamples) {
    throw Error(ErrorCode::TooFewSamples, "image box counting needs " + std::to_string(kMinImageSamples) +
                                              " values, got " + std::to_string(values.size()));
  }
  require_scales(scales);
  const std::vector<double> ys = normalised(values);
  std::vector<double> counts(scales.size());
  for (std::size_t s = 0; s < scales.size(); ++s) {
    const double eps = scales[s];
    const std::int64_t boxes = box_total(eps);
    std::vector<bool> hit(static_cast<std::size_t>(boxes), false);
    for (double y : ys) hit[static_cast<std::size_t>(box_index(y, eps, boxes))] = true;
    counts[s] = static_cast<double>(std::count(hit.begin(), hit.end(), true));
  }
  DimensionReport out = fit(scales, counts);
  if (t) out.analytic = cantor_inverse_dimension(*t);
  return out;
}

}  // namespace fractree
