#pragma once

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace ctl::geom {

/// Constant-curvature model plane. Points are unit vectors on the sphere,
/// points (x, y, 1) of the Euclidean plane, or points (x, y, t) of the upper
/// hyperboloid sheet t^2 - x^2 - y^2 = 1.
enum class Model { spherical, euclidean, hyperbolic };

using Point = Eigen::Vector3d;
using Transform = Eigen::Matrix3d;

Point origin();
double distance(Model model, const Point& a, const Point& b);
/// Point at distance `d` from the origin in direction `angle`.
Point polar_point(Model model, double d, double angle);
Transform rotation(double angle);
Transform translation_x(Model model, double d);

/// Convex polygon circumscribed about a circle of radius `inradius` centered
/// at the origin. Side l touches the circle at polar angle `tangent_angle[l]`;
/// the vertex between sides l and l+1 (cyclically) has interior angle
/// 2 * half_angle[l]. A half angle of zero is an ideal vertex.
struct TangentialPolygon {
  Model model = Model::euclidean;
  double inradius = 1.0;
  std::vector<double> half_angles;
  std::vector<double> tangent_angles;
  /// Central half-angle subtended by the tangent segment next to vertex l.
  std::vector<double> central_half_angles;

  std::size_t sides() const { return half_angles.size(); }
  /// Reflection across side l.
  Transform side_reflection(std::size_t l) const;
  /// Vertex between sides l and l+1; nullopt for ideal vertices.
  std::optional<Point> vertex(std::size_t l) const;
};

/// Solves for the inradius that closes the polygon with the requested
/// half angles. Returns nullopt when no such polygon exists in `model`.
std::optional<TangentialPolygon> make_tangential_polygon(Model model, std::span<const double> half_angles);

/// One copy g(P) of the base polygon inside the reflection tessellation.
struct Tile {
  Transform transform;
  bool reflected = false;
  int depth = 0;
  /// Tile across each side, or -1 when that tile lies outside the explored ball.
  std::vector<int> neighbors;
};

/// Breadth-first exploration of the tiles generated by reflections in the
/// sides of `polygon`, out to `max_depth` adjacency steps. Tiles are
/// identified by the image of the polygon's center.
struct Tessellation {
  TangentialPolygon polygon;
  std::vector<Tile> tiles;
  bool complete = false;  ///< true when the orbit closed up before max_depth.
};

/// Throws TooLarge when more than `max_tiles` tiles would be produced.
Tessellation explore(const TangentialPolygon& polygon, int max_depth, std::size_t max_tiles = 2'000'000);

/// Spatial hash that merges points closer than `tolerance` (coordinate metric).
class PointIndex {
 public:
  explicit PointIndex(double tolerance);
  /// Returns the id of an existing point within tolerance, or registers `p`
  /// under `new_id` and returns nullopt.
  std::optional<int> find_or_insert(const Point& p, int new_id);
  std::optional<int> find(const Point& p) const;

 private:
  struct Entry {
    Point p;
    int id;
  };
  std::array<long long, 3> cell_of(const Point& p) const;
  double tolerance_;
  double cell_;
  struct CellHash {
    std::size_t operator()(const std::array<long long, 3>& c) const noexcept;
  };
  std::unordered_map<std::array<long long, 3>, std::vector<Entry>, CellHash> cells_;
};

}  // namespace ctl::geom
