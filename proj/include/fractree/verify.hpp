#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "fractree/closedform.hpp"
#include "fractree/model.hpp"

namespace fractree {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int draws = 50;        // per case key
  int max_levels = 10;   // P is drawn from [1, max_levels]
  double pvw_tol = 1e-12;
  double stiffness_tol = 1e-9;
  bool stiffness = true;
};

// Closed-form evaluators under test. Replaceable so that a deliberately
// broken formula can be checked to fail.
struct Evaluators {
  std::function<Displacement(const TreeParams&, std::uint64_t)> vertical = vertical_displacement;
  std::function<Displacement(const TreeParams&, std::uint64_t)> horizontal = horizontal_displacement;
};

struct CaseReport {
  Direction kind = Direction::Vertical;
  CaseKey key;
  int draws = 0;
  // Normwise relative errors: sup over end nodes of |closed - oracle|,
  // divided by the sup of |oracle|; maximised over draws.
  double max_error_pvw = 0.0;
  double max_error_stiffness = 0.0;
  bool pass = true;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CaseReport> cases;
  bool pass = true;
};

std::vector<CaseKey> vertical_case_keys();    // 8 keys
std::vector<CaseKey> horizontal_case_keys();  // 12 keys

// Random parameters falling in case `key`: theta in (10, 80) deg, generic
// ratios a in (1, 16) away from 8, u and v in (1, 4).
TreeParams draw_params(std::mt19937_64& rng, const CaseKey& key, int max_levels);

// Normwise relative error of `closed` against `oracle` over all end nodes.
double normwise_error(const std::vector<double>& closed, const std::vector<double>& oracle);

// Closed form against the direct virtual-work sum and the frame solve, for
// every case key. Draws are generated serially from the seed, so the report
// does not depend on the thread count.
VerifyReport verify_oracles(const VerifyOptions& options = {}, const Evaluators& evaluators = {});

}  // namespace fractree
