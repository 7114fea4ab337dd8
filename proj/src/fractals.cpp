#include "fractree/fractals.hpp"

#include <cmath>
#include <functional>

#include "fractree/closedform.hpp"
#include "fractree/limits.hpp"
#include "fractree/parallel.hpp"

namespace fractree {

namespace {

void require_unit_ratio(double r, const char* name) {
  if (!(r > 0.0 && r < 1.0)) {
    throw Error(ErrorCode::RatioOutOfRange, std::string(name) + " = " + std::to_string(r) + " outside (0, 1)");
  }
}

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::OutOfRange, "tolerance must be positive");
}

// Smallest P >= 1 with scale * t^P <= tol.
int depth_for(double scale, double t, double tol) {
  double P = std::ceil(std::log(tol / scale) / std::log(t));
  if (!(P >= 1.0)) P = 1.0;
  if (P > kMaxSeriesDepth) {
    throw Error(ErrorCode::DepthExceeded, "series needs more than " + std::to_string(kMaxSeriesDepth) + " terms");
  }
  int depth = static_cast<int>(P);
  // Guard against rounding in the logarithms.
  while (depth < kMaxSeriesDepth && scale * std::pow(t, depth) > tol) ++depth;
  while (depth > 1 && scale * std::pow(t, depth - 1) <= tol) --depth;
  return depth;
}

double digit_sum(const ExactPos& x, double t, int P) {
  DigitStream digits(x);
  double weight = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= P; ++k) {
    weight *= t;
    if (digits.next() != 0) sum += weight;
  }
  return sum;
}

void require_samples(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "at least two samples are needed");
}

}  // namespace

double phi(const ExactPos& z, double r, int P) {
  SawtoothStream saw(z);
  double weight = 1.0;
  double sum = 0.0;
  for (int i = 1; i <= P; ++i) {
    sum += weight * saw.next();
    weight *= r;
  }
  return sum;
}

int takagi_depth(double r, double tol) {
  require_unit_ratio(r, "r");
  require_tolerance(tol);
  return depth_for(0.5 / (1.0 - r), r, tol);
}

double takagi(const ExactPos& z, double r, double tol) { return phi(z, r, takagi_depth(r, tol)); }

double c_partial(const ExactPos& x, double t, int P) { return digit_sum(x, t, P); }

int digit_sum_depth(double t, double tol) {
  require_unit_ratio(t, "t");
  require_tolerance(tol);
  return depth_for(t / (1.0 - t), t, tol);
}

double c_limit(const ExactPos& x, double t, double tol) { return digit_sum(x, t, digit_sum_depth(t, tol)); }

double beta_cantor_inverse(const ExactPos& y, double beta, double tol) {
  require_unit_ratio(beta, "beta");
  require_tolerance(tol);
  const double t = (1.0 - beta) / 2.0;
  const double factor = (1.0 + beta) / (1.0 - beta);
  return factor * digit_sum(y, t, depth_for(factor * t / (1.0 - t), t, tol));
}

double beta_cantor(std::span<const std::uint8_t> alpha, double beta) {
  require_unit_ratio(beta, "beta");
  double sum = 0.0;
  double weight = 1.0;
  for (const std::uint8_t digit : alpha) {
    weight *= 0.5;
    if (digit != 0) sum += weight;
  }
  return sum;
}

double beta_cantor(double x, double beta) {
  require_unit_ratio(beta, "beta");
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::OutOfRange, "x outside [0, 1]");
  // Each step keeps the outer pieces [0, t] and [1 - t, 1] of the current
  // interval, rescaled to [0, 1].
  const double t = (1.0 - beta) / 2.0;
  double y = x;
  double value = 0.0;
  double weight = 1.0;
  for (int k = 0; k < 64; ++k) {
    weight *= 0.5;
    if (y <= t) {
      y /= t;
    } else if (y >= 1.0 - t) {
      value += weight;
      y = (y - (1.0 - t)) / t;
    } else {
      // Inside a gap the staircase holds the value of the gap's left end.
      return value + weight;
    }
  }
  return value;
}

std::vector<std::uint8_t> leading_digits(const ExactPos& y, std::size_t count) {
  std::vector<std::uint8_t> out(count);
  DigitStream digits(y);
  for (auto& d : out) d = static_cast<std::uint8_t>(digits.next());
  return out;
}

const char* to_string(CurveKind kind) noexcept {
  switch (kind) {
    case CurveKind::TakagiPartial: return "takagi_partial";
    case CurveKind::TakagiLimit: return "takagi_limit";
    case CurveKind::CPartial: return "c_partial";
    case CurveKind::CLimit: return "c_limit";
    case CurveKind::VerticalIteration: return "vertical_iteration";
    case CurveKind::HorizontalIteration: return "horizontal_iteration";
    case CurveKind::VerticalLimit: return "vertical_limit";
    case CurveKind::HorizontalLimit: return "horizontal_limit";
  }
  return "unknown";
}

std::optional<CurveKind> curve_kind_from_string(const std::string& name) {
  for (CurveKind kind : {CurveKind::TakagiPartial, CurveKind::TakagiLimit, CurveKind::CPartial, CurveKind::CLimit,
                         CurveKind::VerticalIteration, CurveKind::HorizontalIteration, CurveKind::VerticalLimit,
                         CurveKind::HorizontalLimit}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::vector<ExactPos> uniform_grid(std::size_t n) {
  require_samples(n);
  std::vector<ExactPos> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(k, n - 1);
  return out;
}

CurveSamples sample_curve(const CurveRequest& request) {
  CurveSamples out;
  out.kind = to_string(request.kind);
  out.meta["tol"] = request.tol;

  std::vector<ExactPos> grid;
  const bool iteration =
      request.kind == CurveKind::VerticalIteration || request.kind == CurveKind::HorizontalIteration;
  TreeParams params = request.params;
  if (iteration) {
    validate(params.with_levels(request.depth));
    params = params.with_levels(request.depth);
    const std::uint64_t nodes = nodes_at_level(request.depth);
    grid.reserve(nodes);
    for (std::uint64_t n = 1; n <= nodes; ++n) {
      grid.push_back(request.kind == CurveKind::VerticalIteration ? end_node_position_vertical(n, request.depth)
                                                                  : end_node_position_horizontal(n, request.depth));
    }
    out.meta["level"] = request.depth;
  } else {
    grid = uniform_grid(request.samples);
  }

  std::function<double(std::size_t)> eval;
  switch (request.kind) {
    case CurveKind::TakagiPartial:
      out.meta["r"] = request.ratio;
      out.meta["P"] = request.depth;
      eval = [&](std::size_t k) { return phi(grid[k], request.ratio, request.depth); };
      break;
    case CurveKind::TakagiLimit: {
      const int depth = takagi_depth(request.ratio, request.tol);
      out.meta["r"] = request.ratio;
      eval = [&, depth](std::size_t k) { return phi(grid[k], request.ratio, depth); };
      break;
    }
    case CurveKind::CPartial:
      out.meta["t"] = request.ratio;
      out.meta["P"] = request.depth;
      eval = [&](std::size_t k) { return c_partial(grid[k], request.ratio, request.depth); };
      break;
    case CurveKind::CLimit: {
      const int depth = digit_sum_depth(request.ratio, request.tol);
      out.meta["t"] = request.ratio;
      eval = [&, depth](std::size_t k) { return c_partial(grid[k], request.ratio, depth); };
      break;
    }
    case CurveKind::VerticalIteration:
      eval = [&](std::size_t k) { return vertical_displacement(params, k + 1).total; };
      break;
    case CurveKind::HorizontalIteration:
      eval = [&](std::size_t k) { return horizontal_displacement(params, k + 1).total; };
      break;
    case CurveKind::VerticalLimit:
    case CurveKind::HorizontalLimit: {
      const bool vertical = request.kind == CurveKind::VerticalLimit;
      const LimitResult probe = vertical ? vertical_limit(params, grid.front(), request.tol)
                                         : horizontal_limit(params, grid.front(), request.tol);
      if (!probe.convergent()) {
        std::string which;
        for (const auto& r : probe.reasons) which += (which.empty() ? "" : ",") + r;
        throw Error(ErrorCode::DivergentParameters, "limit curve diverges (" + which + ")");
      }
      eval = [&, vertical](std::size_t k) {
        const LimitResult r = vertical ? vertical_limit(params, grid[k], request.tol)
                                       : horizontal_limit(params, grid[k], request.tol);
        return *r.value;
      };
      break;
    }
  }

  out.abscissae.resize(grid.size());
  out.values.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t k) {
    out.abscissae[k] = grid[k].to_double();
    out.values[k] = eval(k);
  });
  return out;
}

}  // namespace fractree
