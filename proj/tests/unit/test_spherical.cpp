#include "ctl/errors.hpp"
#include "ctl/spherical.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace ctl;
using namespace ctl::sph;
using std::numbers::pi;

namespace {

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Eigen::Vector3d v(n(rng), n(rng), n(rng));
  return v.normalized();
}

// Random triangle within a small cap around the north pole.
ModelTriangle small_triangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  auto p = [&] { return Eigen::Vector3d(u(rng), u(rng), 1.0).normalized(); };
  return spherical_from_vertices(p(), p(), p());
}

}  // namespace

TEST_CASE("law of sines on random spherical triangles") {
  std::mt19937_64 rng(ctl_test::seed() + 5);
  for (int i = 0; i < 200; ++i) {
    auto t = spherical_from_vertices(random_unit(rng), random_unit(rng), random_unit(rng));
    if (t.area < 1e-6) continue;
    double r1 = std::sin(t.a) / std::sin(t.alpha);
    CHECK(std::sin(t.b) / std::sin(t.beta) == doctest::Approx(r1).epsilon(1e-7));
    CHECK(std::sin(t.c) / std::sin(t.gamma) == doctest::Approx(r1).epsilon(1e-7));
  }
}

TEST_CASE("Girard area equals the solid angle") {
  std::mt19937_64 rng(ctl_test::seed() + 6);
  for (int i = 0; i < 200; ++i) {
    Eigen::Vector3d A = random_unit(rng), B = random_unit(rng), C = random_unit(rng);
    auto t = spherical_from_vertices(A, B, C);
    CHECK(t.area == doctest::Approx(solid_angle(A, B, C)).epsilon(1e-9));
    CHECK(t.alpha + t.beta + t.gamma - pi == doctest::Approx(t.area).epsilon(1e-9));
  }
}

TEST_CASE("octant triangle") {
  auto t = spherical_from_vertices(Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(), Eigen::Vector3d::UnitZ());
  CHECK(t.alpha == doctest::Approx(pi / 2));
  CHECK(t.a == doctest::Approx(pi / 2));
  CHECK(t.area == doctest::Approx(pi / 2));
  CHECK(spherical_circumradius(t) == doctest::Approx(std::acos(1 / std::sqrt(3.0))));
}

TEST_CASE("isoperimetric quadratic is non-negative") {
  std::mt19937_64 rng(ctl_test::seed() + 8);
  for (int i = 0; i < 300; ++i) {
    auto t = spherical_from_vertices(random_unit(rng), random_unit(rng), random_unit(rng));
    CHECK(isoperimetric_quadratic(1, t.perimeter(), t.area) >= -1e-9);
    CHECK(within_area_cap(1, t.area));
  }
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 300; ++i) {
    auto t = euclidean_from_points({u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)});
    CHECK(isoperimetric_quadratic(0, t.perimeter(), t.area) >= -1e-9);
  }
}

TEST_CASE("circumradius of an equilateral triangle round-trips through its angle") {
  for (double r : {0.1, 0.4, 0.9, 1.3}) {
    double angle = equilateral_angle_at_radius(r);
    CHECK(circumradius_equilateral_oracle(angle) == doctest::Approx(r).epsilon(1e-10));
  }
}

TEST_CASE("r_q_eps closed form") {
  CHECK(std::abs(r_q_eps(2, 0) - std::atan(2 * std::sqrt(2.0))) <= 1e-12);
  CHECK(std::abs(r_q_eps(3, 0) - pi / 2) <= 1e-9);
  for (double q : {1.25, 1.5, 2.0, 2.5, 2.9}) {
    CHECK(std::abs(r_q_eps(q, 0) - circumradius_equilateral_oracle(pi * q / 3)) <= 1e-9);
  }
  // eps shrinks the radius
  CHECK(r_q_eps(2.5, 0.2) < r_q_eps(2.5, 0));
}

TEST_CASE("side bound on small triangles") {
  std::mt19937_64 rng(ctl_test::seed() + 9);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto t = small_triangle(rng);
    double eps = 0.05;
    if (t.alpha < eps || t.beta < eps || t.gamma < eps) continue;
    if (t.perimeter() > 2 * pi - eps) continue;
    auto s = max_side_bound(t, eps);
    CHECK(s.holds);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("corollary bound and sampled maximizer") {
  std::mt19937_64 rng(ctl_test::seed() + 10);
  auto t = small_triangle(rng);
  auto c = corollary_area_and_curvature(3, 0.2, t);
  CHECK(c.eta > 0);
  CHECK(c.K_bound < 0);
  CHECK(c.area_bound == doctest::Approx(c.maximal_area));
  CHECK(sampled_inscribed_max_area(c.radius, 2000, 7) <= c.maximal_area + 1e-9);
}
