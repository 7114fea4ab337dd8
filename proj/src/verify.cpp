#include "fractree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fractree/mechanics.hpp"
#include "fractree/parallel.hpp"
#include "fractree/stiffness.hpp"

namespace fractree {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

struct Draw {
  Direction kind;
  TreeParams params;
};

struct DrawResult {
  double pvw = 0.0;
  double stiffness = 0.0;
};

DrawResult check_draw(const Draw& draw, const VerifyOptions& options, const Evaluators& evaluators) {
  const TreeParams& p = draw.params;
  const std::uint64_t nodes = nodes_at_level(p.P);
  const bool vertical = draw.kind == Direction::Vertical;
  std::vector<double> closed(nodes);
  std::vector<double> pvw(nodes);
  for (std::uint64_t w = 1; w <= nodes; ++w) {
    if (vertical) {
      closed[w - 1] = evaluators.vertical(p, w).total;
      pvw[w - 1] = pvw_sum_vertical(p, w).total;
    } else {
      closed[w - 1] = evaluators.horizontal(p, w).total;
      pvw[w - 1] = outward(pvw_sum_horizontal(p, w).total, w, p.P);
    }
  }
  DrawResult out;
  out.pvw = normwise_error(closed, pvw);
  if (options.stiffness) {
    const FrameSolution frame = stiffness_solve(p);
    std::vector<double> solved(nodes);
    for (std::uint64_t w = 1; w <= nodes; ++w) {
      const NodeDisplacement& d = frame.at({p.P, w});
      solved[w - 1] = vertical ? -d.uy : outward(d.ux, w, p.P);
    }
    out.stiffness = normwise_error(closed, solved);
  }
  return out;
}

}  // namespace

std::vector<CaseKey> vertical_case_keys() {
  std::vector<CaseKey> out;
  for (ACase a : {ACase::Generic, ACase::A16}) {
    for (UCase u : {UCase::Generic, UCase::U4}) {
      for (VCase v : {VCase::Generic, VCase::V4}) out.push_back({a, u, v});
    }
  }
  return out;
}

std::vector<CaseKey> horizontal_case_keys() {
  std::vector<CaseKey> out;
  for (ACase a : {ACase::Generic, ACase::A8, ACase::A16}) {
    for (UCase u : {UCase::Generic, UCase::U4}) {
      for (VCase v : {VCase::Generic, VCase::V4}) out.push_back({a, u, v});
    }
  }
  return out;
}

TreeParams draw_params(std::mt19937_64& rng, const CaseKey& key, int max_levels) {
  TreeParams p;
  p.theta = uniform(rng, 10.0, 80.0) * std::numbers::pi / 180.0;
  p.E = log_uniform(rng, 5e9, 5e10);
  p.G = uniform(rng, 1e8, 5e9);
  p.L = uniform(rng, 0.2, 2.0);
  p.I = log_uniform(rng, 1e-5, 1e-3);
  p.A = log_uniform(rng, 1e-3, 1e-1);
  p.Astar = p.A * uniform(rng, 0.5, 1.0);
  double a = 0.0;
  do {
    a = uniform(rng, 1.0, 16.0);
  } while (std::fabs(a - 8.0) < 1e-3 || a > 16.0 - 1e-3);
  p.a = key.a == ACase::A8 ? 8.0 : key.a == ACase::A16 ? 16.0 : a;
  const double u = uniform(rng, 1.0, 4.0 - 1e-3);
  const double v = uniform(rng, 1.0, 4.0 - 1e-3);
  p.u = key.u == UCase::U4 ? 4.0 : u;
  p.v = key.v == VCase::V4 ? 4.0 : v;
  p.P = std::uniform_int_distribution<int>(1, max_levels)(rng);
  return p;
}

double normwise_error(const std::vector<double>& closed, const std::vector<double>& oracle) {
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    diff = std::max(diff, std::fabs(closed[k] - oracle[k]));
    scale = std::max(scale, std::fabs(oracle[k]));
  }
  if (scale == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return diff / scale;
}

VerifyReport verify_oracles(const VerifyOptions& options, const Evaluators& evaluators) {
  std::mt19937_64 rng(options.seed);
  std::vector<Draw> draws;
  std::vector<CaseReport> cases;
  auto add_cases = [&](Direction kind, const std::vector<CaseKey>& keys) {
    for (const CaseKey& key : keys) {
      cases.push_back({kind, key, options.draws, 0.0, 0.0, true});
      for (int d = 0; d < options.draws; ++d) draws.push_back({kind, draw_params(rng, key, options.max_levels)});
    }
  };
  add_cases(Direction::Vertical, vertical_case_keys());
  add_cases(Direction::Horizontal, horizontal_case_keys());

  std::vector<DrawResult> results(draws.size());
  parallel_for(draws.size(), [&](std::size_t k) { results[k] = check_draw(draws[k], options, evaluators); });

  VerifyReport report;
  report.options = options;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    CaseReport& cr = cases[c];
    for (int d = 0; d < options.draws; ++d) {
      const DrawResult& r = results[c * static_cast<std::size_t>(options.draws) + static_cast<std::size_t>(d)];
      cr.max_error_pvw = std::max(cr.max_error_pvw, r.pvw);
      cr.max_error_stiffness = std::max(cr.max_error_stiffness, r.stiffness);
    }
    // Negated comparisons so that NaN counts as a failure.
    cr.pass = !(cr.max_error_pvw > options.pvw_tol) && !(cr.max_error_stiffness > options.stiffness_tol) &&
              !std::isnan(cr.max_error_pvw) && !std::isnan(cr.max_error_stiffness);
    report.pass = report.pass && cr.pass;
  }
  report.cases = std::move(cases);
  return report;
}

}  // namespace fractree
