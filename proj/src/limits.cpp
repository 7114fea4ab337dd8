#include "fractree/limits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fractree/fractals.hpp"

namespace fractree {

namespace {

// sum_{i>P} t^i
double geometric_tail(double t, int P) { return std::pow(t, P + 1) / (1.0 - t); }

// Majorant of 2^(1-P) sum_{i<=P} (2r)^i, nonincreasing in P.
double transient_majorant(double r, int P) {
  const double q = 2.0 * r;
  if (q > 1.0) return 2.0 * std::pow(r, P) / (1.0 - 1.0 / q);
  if (q < 1.0) return std::ldexp(1.0, 1 - P) * q / (1.0 - q);
  return P * std::ldexp(1.0, 1 - P);
}

struct HorizontalParts {
  bool bending = true;
  bool axial = true;
  bool shear = true;
};

double horizontal_tail(const TreeParams& p, int P, HorizontalParts parts) {
  const double scale = 2.0 * std::fabs(p.c() * p.s()) * p.L;
  const double EIa = p.E * p.I * p.a;
  const double r = p.a / 16.0;
  // The 2^(1-P) bending series stays in every regime: only its steady part
  // is involved in the bending/axial cancellation.
  double sum = p.L * p.L / EIa * transient_majorant(r, P);
  if (parts.bending) sum += 10.0 * p.L * p.L / (3.0 * EIa) * geometric_tail(r, P);
  if (parts.axial) sum += geometric_tail(p.u / 4.0, P) / (p.E * p.A * p.u);
  if (parts.shear) sum += geometric_tail(p.v / 4.0, P) / (p.G * p.Astar * p.v);
  return scale * sum;
}

double vertical_tail(const TreeParams& p, int P) {
  const double c2 = p.c() * p.c();
  const double L3 = p.L * p.L * p.L;
  const double EI = p.E * p.I;
  const double r = p.a / 16.0;
  return 20.0 * c2 * L3 / (3.0 * EI * p.a) * geometric_tail(r, P) +
         c2 * L3 / EI * 0.5 * std::pow(r, P) / (1.0 - r) +
         2.0 * p.s() * p.s() * p.L / (p.E * p.A * p.u) * geometric_tail(p.u / 4.0, P) +
         2.0 * c2 * p.L / (p.G * p.Astar * p.v) * geometric_tail(p.v / 4.0, P);
}

void require_level(int P) {
  if (P < 0) throw Error(ErrorCode::OutOfRange, "negative level count");
}

LimitResult divergent(std::vector<std::string> reasons) {
  LimitResult out;
  out.status = LimitStatus::Divergent;
  out.reasons = std::move(reasons);
  return out;
}

// Tolerance for a series whose weight in the output is `coefficient`.
double share(double tol, double coefficient, int parts) {
  const double k = std::fabs(coefficient);
  return k > 0.0 ? tol / (parts * k) : tol;
}

bool relative_equal(double x, double y) { return std::fabs(x - y) <= 1e-9 * std::max(std::fabs(x), std::fabs(y)); }

}  // namespace

Classification classify(double a, double u, double v) {
  Classification out;
  if (a >= 16.0) out.reasons.push_back("a");
  if (u >= 4.0) out.reasons.push_back("u");
  if (v >= 4.0) out.reasons.push_back("v");
  if (!out.reasons.empty()) out.status = LimitStatus::Divergent;
  return out;
}

double tail_bound(Direction kind, const TreeParams& params, int P) {
  validate(params.with_levels(1));
  require_level(P);
  const Classification cls = classify(params.a, params.u, params.v);
  if (cls.status == LimitStatus::Divergent) {
    std::string which;
    for (const auto& r : cls.reasons) which += (which.empty() ? "" : ",") + r;
    throw Error(ErrorCode::DivergentParameters, "series diverge (" + which + ")");
  }
  return kind == Direction::Vertical ? vertical_tail(params, P) : horizontal_tail(params, P, {});
}

LimitResult vertical_limit(const TreeParams& params, const ExactPos& z, double tol) {
  validate(params.with_levels(1));
  if (!(tol > 0.0)) throw Error(ErrorCode::OutOfRange, "tolerance must be positive");
  const Classification cls = classify(params.a, params.u, params.v);
  if (cls.status == LimitStatus::Divergent) return divergent(cls.reasons);

  const double c = params.c();
  const double s = params.s();
  const double L = params.L;
  const double EI = params.E * params.I;
  const double cl3 = c * c * L * L * L / EI;
  const double psi = cl3 > 0.0 ? takagi(z, params.a / 16.0, share(tol, cl3, 1)) : 0.0;

  LimitResult out;
  out.value = 20.0 * cl3 / (3.0 * (16.0 - params.a)) - cl3 * psi +
              2.0 * s * s * L / (params.E * params.A * (4.0 - params.u)) +
              2.0 * c * c * L / (params.G * params.Astar * (4.0 - params.v));
  out.tail_bound_at = [params](int P) { return tail_bound(Direction::Vertical, params, P); };
  return out;
}

LimitResult horizontal_limit(const TreeParams& params, const ExactPos& zstar, double tol,
                             Cancellation regime) {
  validate(params.with_levels(1));
  if (!(tol > 0.0)) throw Error(ErrorCode::OutOfRange, "tolerance must be positive");
  const double a = params.a;
  const double u = params.u;
  const double v = params.v;
  const double L = params.L;
  const double EI = params.E * params.I;
  const double EA = params.E * params.A;
  const double GAs = params.G * params.Astar;
  const double cs = params.c() * params.s();
  const ExactPos x = zstar.sigma();

  std::vector<std::string> reasons;
  HorizontalParts parts;
  switch (regime) {
    case Cancellation::None:
      reasons = classify(a, u, v).reasons;
      break;
    case Cancellation::BendingAxial:
      if (!relative_equal(a, 4.0 * u) || !relative_equal(params.A, 6.0 * params.I / (5.0 * L * L))) {
        throw Error(ErrorCode::InvalidCancellation, "bending/axial regime needs a = 4u and A = 6I/(5L^2)");
      }
      if (a >= 16.0) reasons.push_back("a");
      if (v >= 4.0) reasons.push_back("v");
      parts = {false, false, true};
      break;
    case Cancellation::AxialShear:
      if (!relative_equal(u, v) || !relative_equal(EA * u, GAs * v)) {
        throw Error(ErrorCode::InvalidCancellation, "axial/shear regime needs u = v and EAu = GA*v");
      }
      if (a >= 16.0) reasons.push_back("a");
      parts = {true, false, false};
      break;
  }
  if (!reasons.empty()) return divergent(reasons);

  const double scale = 2.0 * cs * L;
  const int terms = static_cast<int>(parts.bending) + static_cast<int>(parts.axial) + static_cast<int>(parts.shear);
  double bracket = 0.0;
  if (parts.bending) {
    const double k = 20.0 * L * L / (3.0 * EI * a);
    bracket += 10.0 * L * L / (3.0 * EI * (16.0 - a)) - k * c_limit(x, a / 16.0, share(tol, scale * k, terms));
  }
  if (parts.axial) {
    const double k = 2.0 / (EA * u);
    bracket += k * c_limit(x, u / 4.0, share(tol, scale * k, terms)) - 1.0 / (EA * (4.0 - u));
  }
  if (parts.shear) {
    const double k = 2.0 / (GAs * v);
    bracket += 1.0 / (GAs * (4.0 - v)) - k * c_limit(x, v / 4.0, share(tol, scale * k, terms));
  }

  LimitResult out;
  out.value = scale * bracket;
  out.tail_bound_at = [params, parts](int P) {
    require_level(P);
    return horizontal_tail(params, P, parts);
  };
  return out;
}

}  // namespace fractree
