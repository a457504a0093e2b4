#include "ctl/spherical.hpp"

#include "ctl/errors.hpp"
#include "ctl/tiling.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace ctl::sph {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-9;

double arc(const Eigen::Vector3d& u, const Eigen::Vector3d& v) { return std::atan2(u.cross(v).norm(), u.dot(v)); }

Eigen::Vector3d on_circle(double r, double longitude) {
  return {std::sin(r) * std::cos(longitude), std::sin(r) * std::sin(longitude), std::cos(r)};
}

}  // namespace

double spherical_corner_angle(const Eigen::Vector3d& A, const Eigen::Vector3d& B, const Eigen::Vector3d& C) {
  Eigen::Vector3d tb = B - A.dot(B) * A;
  Eigen::Vector3d tc = C - A.dot(C) * A;
  return std::atan2(tb.cross(tc).norm(), tb.dot(tc));
}

double solid_angle(const Eigen::Vector3d& A, const Eigen::Vector3d& B, const Eigen::Vector3d& C) {
  double num = std::abs(A.dot(B.cross(C)));
  double den = 1.0 + A.dot(B) + B.dot(C) + C.dot(A);
  return 2.0 * std::atan2(num, den);
}

ModelTriangle spherical_from_vertices(const Eigen::Vector3d& A, const Eigen::Vector3d& B, const Eigen::Vector3d& C) {
  ModelTriangle t;
  t.k = 1;
  t.a = arc(B, C);
  t.b = arc(C, A);
  t.c = arc(A, B);
  t.alpha = spherical_corner_angle(A, B, C);
  t.beta = spherical_corner_angle(B, C, A);
  t.gamma = spherical_corner_angle(C, A, B);
  t.area = t.alpha + t.beta + t.gamma - kPi;
  return t;
}

ModelTriangle euclidean_from_points(const Eigen::Vector2d& A, const Eigen::Vector2d& B, const Eigen::Vector2d& C) {
  auto angle = [](const Eigen::Vector2d& p, const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
    Eigen::Vector2d x = u - p, y = v - p;
    return std::atan2(std::abs(x.x() * y.y() - x.y() * y.x()), x.dot(y));
  };
  ModelTriangle t;
  t.k = 0;
  t.a = (B - C).norm();
  t.b = (C - A).norm();
  t.c = (A - B).norm();
  t.alpha = angle(A, B, C);
  t.beta = angle(B, C, A);
  t.gamma = angle(C, A, B);
  Eigen::Vector2d x = B - A, y = C - A;
  t.area = 0.5 * std::abs(x.x() * y.y() - x.y() * y.x());
  return t;
}

double spherical_circumradius(const ModelTriangle& tri) {
  // tan R = tan(a/2) / cos(S - alpha), S the half angle sum.
  double S = 0.5 * (tri.alpha + tri.beta + tri.gamma);
  return std::atan2(std::tan(tri.a / 2.0), std::cos(S - tri.alpha));
}

double r_q_eps(double q, double eps) {
  if (!(q > 1.0 && q <= 3.0)) throw DomainError("q must lie in (1, 3]");
  if (eps < 0.0) throw DomainError("eps must be non-negative");
  double base;
  if (std::abs(q - 3.0) <= 1e-9) {
    base = kPi / 2.0;
  } else {
    double c = std::cos(kPi * q / 6.0);
    base = std::atan(std::sqrt(-std::cos(kPi * q / 2.0) / (c * c * c)));
  }
  if (eps >= base) throw DomainError("eps must be below the unshifted radius");
  return base - eps;
}

double equilateral_angle_at_radius(double r) {
  auto A = on_circle(r, 0.0);
  auto B = on_circle(r, 2.0 * kPi / 3.0);
  auto C = on_circle(r, 4.0 * kPi / 3.0);
  return spherical_corner_angle(A, B, C);
}

double circumradius_equilateral_oracle(double angle) {
  if (!(angle > kPi / 3.0 && angle < kPi)) throw DomainError("angle must lie in (pi/3, pi)");
  double lo = 0.0;
  double hi = kPi / 2.0;
  for (int step = 0; step < 200; ++step) {
    double mid = 0.5 * (lo + hi);
    double diff = equilateral_angle_at_radius(mid) - angle;
    if (std::abs(diff) <= 1e-12) return mid;
    (diff < 0.0 ? lo : hi) = mid;
  }
  throw NoConvergence("equilateral circumradius bisection did not reach 1e-12 in 200 steps");
}

SideBound max_side_bound(const ModelTriangle& tri, double eps) {
  if (!(eps > 0.0 && eps < kPi)) throw DomainError("eps must lie in (0, pi)");
  if (tri.gamma < eps - kTol) throw PreconditionFailed("angle gamma is below eps");
  if (tri.k == 1 && tri.perimeter() > 2.0 * kPi - eps + kTol) {
    throw PreconditionFailed("perimeter exceeds 2 pi - eps");
  }
  double C = tiling::constant_ledger(eps, 1, tri.k).get("C_length").value;
  SideBound out{C * tri.c, false};
  out.holds = std::max(tri.a, tri.b) <= out.bound + kTol;
  return out;
}

double isoperimetric_quadratic(double k, double L, double A) { return L * L - 4.0 * kPi * A + k * A * A; }

bool within_area_cap(double k, double A) { return k <= 0.0 || A <= 2.0 * kPi / k + kTol; }

CorollaryBound corollary_area_and_curvature(double q, double eps, const ModelTriangle& tri,
                                            std::optional<double> min_total_angle) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (tri.k != 1) throw PreconditionFailed("triangle must be spherical");
  CorollaryBound out;
  out.radius = r_q_eps(q, eps);
  if (spherical_circumradius(tri) > out.radius + kTol) {
    throw PreconditionFailed("circumradius exceeds r_q_eps");
  }
  if (min_total_angle && *min_total_angle < 2.0 * kPi * q - kTol) {
    throw PreconditionFailed("total angle below 2 pi q at some vertex");
  }
  out.maximal_area = 3.0 * equilateral_angle_at_radius(out.radius) - kPi;
  out.eta = kPi * (q - 1.0) - out.maximal_area;
  out.area_bound = kPi * (q - 1.0) - out.eta;
  out.K_bound = -out.eta / q;
  out.triangle_area = tri.area;
  out.area_within_bound = tri.area <= out.area_bound + kTol;
  return out;
}

double sampled_inscribed_max_area(double r, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lon(0.0, 2.0 * kPi);
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    auto A = on_circle(r, lon(rng));
    auto B = on_circle(r, lon(rng));
    auto C = on_circle(r, lon(rng));
    best = std::max(best, spherical_from_vertices(A, B, C).area);
  }
  return best;
}

}  // namespace ctl::sph
