#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>

namespace ctl::sph {

/// Model triangle on the unit sphere (k = 1) or the plane (k = 0). Side a is
/// opposite alpha, b opposite beta, c opposite gamma.
struct ModelTriangle {
  int k = 0;
  double a = 0, b = 0, c = 0;
  double alpha = 0, beta = 0, gamma = 0;
  double area = 0;

  double perimeter() const { return a + b + c; }
};

/// Triangle with vertices A, B, C on the unit sphere (unit vectors).
ModelTriangle spherical_from_vertices(const Eigen::Vector3d& A, const Eigen::Vector3d& B, const Eigen::Vector3d& C);
/// Triangle with vertices in the plane; area from the cross product.
ModelTriangle euclidean_from_points(const Eigen::Vector2d& A, const Eigen::Vector2d& B, const Eigen::Vector2d& C);

/// Angle at A between the great-circle arcs AB and AC.
double spherical_corner_angle(const Eigen::Vector3d& A, const Eigen::Vector3d& B, const Eigen::Vector3d& C);
/// Solid angle subtended by the triangle (Van Oosterom-Strackee).
double solid_angle(const Eigen::Vector3d& A, const Eigen::Vector3d& B, const Eigen::Vector3d& C);
/// Circumradius of a spherical triangle from its sides and angles.
double spherical_circumradius(const ModelTriangle& tri);

/// Circumradius of the spherical equilateral triangle with angles pi q / 3,
/// minus eps. At q = 3 (within 1e-9) returns the limit pi/2 - eps.
double r_q_eps(double q, double eps);

/// Bisection on the circumradius of an equilateral triangle built from three
/// points around a pole until its corner angle matches `angle` to 1e-12.
/// Throws NoConvergence after 200 steps, DomainError outside (pi/3, pi).
double circumradius_equilateral_oracle(double angle);

/// Corner angle of the equilateral triangle inscribed in the circle of
/// spherical radius r.
double equilateral_angle_at_radius(double r);

struct SideBound {
  double bound;  ///< C_length(eps) * c
  bool holds;    ///< max(a, b) <= bound
};

/// Throws PreconditionFailed unless gamma >= eps and, on the sphere,
/// perimeter <= 2 pi - eps.
SideBound max_side_bound(const ModelTriangle& tri, double eps);

/// L^2 - 4 pi A + k A^2.
double isoperimetric_quadratic(double k, double L, double A);
/// True when k <= 0 or A <= 2 pi / k, the range where the quadratic gives 2 pi A <= L^2.
bool within_area_cap(double k, double A);

struct CorollaryBound {
  double radius;          ///< r_q_eps(q, eps)
  double maximal_area;    ///< equilateral area at that radius (assumed maximizer)
  double eta;             ///< pi (q - 1) - maximal_area
  double area_bound;      ///< pi (q - 1) - eta
  double K_bound;         ///< -eta / q
  double triangle_area;
  bool area_within_bound;
};

/// Throws PreconditionFailed when tri is not spherical, its circumradius
/// exceeds r_q_eps(q, eps), or a supplied minimum total angle is below 2 pi q.
CorollaryBound corollary_area_and_curvature(double q, double eps, const ModelTriangle& tri,
                                            std::optional<double> min_total_angle = std::nullopt);

/// Largest Girard area over `samples` random triangles inscribed in the
/// circle of spherical radius r.
double sampled_inscribed_max_area(double r, int samples, std::uint64_t seed);

}  // namespace ctl::sph
