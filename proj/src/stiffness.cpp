#include "fractree/stiffness.hpp"

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <array>
#include <cmath>
#include <numbers>

namespace fractree {

namespace {

// Assembly and solve run in extended precision: axial member stiffness can
// exceed bending stiffness by seven or more orders of magnitude at deep
// levels, and in double the rotation to global axes would leak rounding of
// the axial term into the transverse stiffness.
using Real = long double;
using Mat6 = Eigen::Matrix<Real, 6, 6>;
using Vec6 = Eigen::Matrix<Real, 6, 1>;
using SpMat = Eigen::SparseMatrix<Real>;
using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Local stiffness of a two-node Timoshenko beam-column; dofs (u, v, rz) at
// each end. Exact for end-loaded members.
Mat6 local_stiffness(Real E, Real G, Real I, Real A, Real As, Real l) {
  const Real phi = 12.0L * E * I / (G * As * l * l);
  const Real k = E * I / ((1.0L + phi) * l * l * l);
  const Real ea = E * A / l;
  Mat6 m = Mat6::Zero();
  m(0, 0) = ea;
  m(0, 3) = -ea;
  m(3, 0) = -ea;
  m(3, 3) = ea;

  const std::array<int, 4> idx = {1, 2, 4, 5};
  const Real bend[4][4] = {
      {12.0L, 6.0L * l, -12.0L, 6.0L * l},
      {6.0L * l, (4.0L + phi) * l * l, -6.0L * l, (2.0L - phi) * l * l},
      {-12.0L, -6.0L * l, 12.0L, -6.0L * l},
      {6.0L * l, (2.0L - phi) * l * l, -6.0L * l, (4.0L + phi) * l * l},
  };
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(idx[r], idx[c]) = k * bend[r][c];
  }
  return m;
}

Mat6 rotation(Real cx, Real cy) {
  Mat6 t = Mat6::Zero();
  for (int b = 0; b < 6; b += 3) {
    t(b, b) = cx;
    t(b, b + 1) = cy;
    t(b + 1, b) = -cy;
    t(b + 1, b + 1) = cx;
    t(b + 2, b + 2) = 1.0L;
  }
  return t;
}

struct Element {
  std::size_t lower;
  std::size_t upper;
  Mat6 k;
};

}  // namespace

FrameSolution::FrameSolution(int levels, std::vector<NodeDisplacement> nodes, Reaction base_reaction,
                             double applied_load)
    : levels_(levels), nodes_(std::move(nodes)), reaction_(base_reaction), applied_load_(applied_load) {}

std::size_t FrameSolution::slot(const NodeRef& node) noexcept {
  return (std::size_t{1} << node.level) - 2 + node.index;
}

const NodeDisplacement& FrameSolution::at(const NodeRef& node) const {
  if (node.level < 1 || node.level > levels_) {
    throw Error(ErrorCode::IndexOutOfRange, "level outside solved frame");
  }
  require_node(node.level, node.index);
  return nodes_[slot(node)];
}

FrameSolution stiffness_solve(const TreeParams& params) {
  validate(params);
  if (params.theta >= std::numbers::pi / 2.0 - 1e-12) {
    throw Error(ErrorCode::DegenerateGeometry, "sibling bars coincide at theta = 90 deg");
  }
  if (params.P > 20) {
    throw Error(ErrorCode::OutOfRange, "frame solve limited to 20 levels");
  }
  const int levels = params.P;
  const std::size_t node_count = (std::size_t{1} << (levels + 1)) - 1;
  const std::size_t free_dofs = 3 * (node_count - 1);
  const Real c = std::cos(static_cast<Real>(params.theta));
  const Real s = std::sin(static_cast<Real>(params.theta));

  std::vector<Element> elements;
  elements.reserve(node_count - 1);
  for (int i = 1; i <= levels; ++i) {
    const Real l = std::ldexp(static_cast<Real>(params.L), 1 - i);
    const Mat6 k_local =
        local_stiffness(params.E, params.G, static_cast<Real>(params.I) * std::pow(static_cast<Real>(params.a), 1 - i),
                        static_cast<Real>(params.A) * std::pow(static_cast<Real>(params.u), 1 - i),
                        static_cast<Real>(params.Astar) * std::pow(static_cast<Real>(params.v), 1 - i), l);
    for (std::uint64_t n = 1; n <= nodes_at_level(i); ++n) {
      const std::size_t upper = FrameSolution::slot({i, n});
      const std::size_t lower = i == 1 ? 0 : FrameSolution::slot({i - 1, (n + 1) / 2});
      // Odd indices are left children.
      const Mat6 t = rotation(n % 2 == 1 ? -c : c, s);
      elements.push_back({lower, upper, t.transpose() * k_local * t});
    }
  }

  // Global dof 3*node + j; the base (node 0) is clamped and dropped.
  auto free_index = [](std::size_t node, int j) -> std::ptrdiff_t {
    return node == 0 ? -1 : static_cast<std::ptrdiff_t>(3 * (node - 1) + j);
  };

  std::vector<Eigen::Triplet<Real>> triplets;
  triplets.reserve(elements.size() * 36);
  for (const auto& e : elements) {
    const std::array<std::size_t, 2> ends = {e.lower, e.upper};
    for (int a = 0; a < 6; ++a) {
      const auto ra = free_index(ends[a / 3], a % 3);
      if (ra < 0) continue;
      for (int b = 0; b < 6; ++b) {
        const auto cb = free_index(ends[b / 3], b % 3);
        if (cb < 0) continue;
        triplets.emplace_back(ra, cb, e.k(a, b));
      }
    }
  }
  SpMat k(static_cast<Eigen::Index>(free_dofs), static_cast<Eigen::Index>(free_dofs));
  k.setFromTriplets(triplets.begin(), triplets.end());

  Vec f = Vec::Zero(static_cast<Eigen::Index>(free_dofs));
  const Real end_load = std::ldexp(1.0L, -levels);
  for (std::uint64_t n = 1; n <= nodes_at_level(levels); ++n) {
    f(free_index(FrameSolution::slot({levels, n}), 1)) = -end_load;
  }

  Eigen::SimplicialLDLT<SpMat> solver(k);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularSystem, "stiffness factorisation failed");
  }
  Vec u = solver.solve(f);
  if (solver.info() != Eigen::Success || !u.allFinite()) {
    throw Error(ErrorCode::SingularSystem, "stiffness solve failed");
  }
  for (int round = 0; round < 2; ++round) {
    const Vec r = f - k * u;
    u += solver.solve(r);
  }

  std::vector<NodeDisplacement> nodes(node_count);
  for (std::size_t node = 1; node < node_count; ++node) {
    nodes[node] = {static_cast<double>(u(free_index(node, 0))), static_cast<double>(u(free_index(node, 1))),
                   static_cast<double>(u(free_index(node, 2)))};
  }

  Vec6 fe = Vec6::Zero();
  for (const auto& e : elements) {
    if (e.lower != 0) continue;
    Vec6 ue = Vec6::Zero();
    for (int j = 0; j < 3; ++j) ue(3 + j) = u(free_index(e.upper, j));
    fe += e.k * ue;
  }
  const Reaction reaction{static_cast<double>(fe(0)), static_cast<double>(fe(1)), static_cast<double>(fe(2))};
  return FrameSolution(levels, std::move(nodes), reaction, 1.0);
}

}  // namespace fractree
