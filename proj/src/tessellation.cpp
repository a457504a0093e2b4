#include "ctl/tessellation.hpp"

#include "ctl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace ctl::geom {

Point origin() { return Point(0.0, 0.0, 1.0); }

double distance(Model model, const Point& a, const Point& b) {
  switch (model) {
    case Model::spherical:
      return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
    case Model::euclidean:
      return std::hypot(a.x() - b.x(), a.y() - b.y());
    case Model::hyperbolic: {
      double inner = a.z() * b.z() - a.x() * b.x() - a.y() * b.y();
      return std::acosh(std::max(1.0, inner));
    }
  }
  return 0.0;
}

Point polar_point(Model model, double d, double angle) {
  double c = std::cos(angle);
  double s = std::sin(angle);
  switch (model) {
    case Model::spherical:
      return Point(std::sin(d) * c, std::sin(d) * s, std::cos(d));
    case Model::euclidean:
      return Point(d * c, d * s, 1.0);
    case Model::hyperbolic:
      return Point(std::sinh(d) * c, std::sinh(d) * s, std::cosh(d));
  }
  return origin();
}

Transform rotation(double angle) {
  Transform r = Transform::Identity();
  r(0, 0) = std::cos(angle);
  r(0, 1) = -std::sin(angle);
  r(1, 0) = std::sin(angle);
  r(1, 1) = std::cos(angle);
  return r;
}

Transform translation_x(Model model, double d) {
  Transform t = Transform::Identity();
  switch (model) {
    case Model::spherical:
      t(0, 0) = std::cos(d);
      t(0, 2) = std::sin(d);
      t(2, 0) = -std::sin(d);
      t(2, 2) = std::cos(d);
      break;
    case Model::euclidean:
      t(0, 2) = d;
      break;
    case Model::hyperbolic:
      t(0, 0) = std::cosh(d);
      t(0, 2) = std::sinh(d);
      t(2, 0) = std::sinh(d);
      t(2, 2) = std::cosh(d);
      break;
  }
  return t;
}

Transform TangentialPolygon::side_reflection(std::size_t l) const {
  Transform mirror = Transform::Identity();
  mirror(0, 0) = -1.0;
  double phi = tangent_angles.at(l);
  return rotation(phi) * translation_x(model, inradius) * mirror * translation_x(model, -inradius) *
         rotation(-phi);
}

std::optional<Point> TangentialPolygon::vertex(std::size_t l) const {
  double alpha = half_angles.at(l);
  double beta = central_half_angles.at(l);
  double direction = tangent_angles.at(l) + beta;
  if (alpha <= 0.0) return std::nullopt;
  if (beta <= 1e-15) return polar_point(model, inradius, direction);
  double d = 0.0;
  switch (model) {
    case Model::euclidean:
      d = inradius / std::cos(beta);
      break;
    case Model::hyperbolic:
      d = std::acosh(std::max(1.0, 1.0 / (std::tan(alpha) * std::tan(beta))));
      break;
    case Model::spherical:
      d = std::acos(std::clamp(1.0 / (std::tan(alpha) * std::tan(beta)), -1.0, 1.0));
      break;
  }
  return polar_point(model, d, direction);
}

namespace {

double central_half_angle(Model model, double alpha, double rho) {
  switch (model) {
    case Model::euclidean:
      return std::numbers::pi / 2 - alpha;
    case Model::hyperbolic:
      return std::asin(std::clamp(std::cos(alpha) / std::cosh(rho), -1.0, 1.0));
    case Model::spherical:
      return std::asin(std::clamp(std::cos(alpha) / std::cos(rho), -1.0, 1.0));
  }
  return 0.0;
}

double closure_defect(Model model, std::span<const double> half_angles, double rho) {
  double sum = 0.0;
  for (double a : half_angles) sum += central_half_angle(model, a, rho);
  return sum - std::numbers::pi;
}

}  // namespace

std::optional<TangentialPolygon> make_tangential_polygon(Model model, std::span<const double> half_angles) {
  if (half_angles.size() < 2) return std::nullopt;
  double rho = 1.0;
  if (model == Model::euclidean) {
    if (std::abs(closure_defect(model, half_angles, rho)) > 1e-9) return std::nullopt;
  } else if (model == Model::hyperbolic) {
    if (closure_defect(model, half_angles, 0.0) <= 0.0) return std::nullopt;
    double lo = 0.0;
    double hi = 1.0;
    while (closure_defect(model, half_angles, hi) > 0.0) {
      hi *= 2.0;
      if (hi > 200.0) return std::nullopt;
    }
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      (closure_defect(model, half_angles, mid) > 0.0 ? lo : hi) = mid;
    }
    rho = 0.5 * (lo + hi);
  } else {
    double alpha_min = *std::min_element(half_angles.begin(), half_angles.end());
    if (alpha_min <= 0.0) return std::nullopt;
    if (closure_defect(model, half_angles, 0.0) >= 0.0) return std::nullopt;
    if (closure_defect(model, half_angles, alpha_min) < -1e-12) return std::nullopt;
    double lo = 0.0;
    double hi = alpha_min;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      (closure_defect(model, half_angles, mid) < 0.0 ? lo : hi) = mid;
    }
    rho = 0.5 * (lo + hi);
  }

  TangentialPolygon poly;
  poly.model = model;
  poly.inradius = rho;
  poly.half_angles.assign(half_angles.begin(), half_angles.end());
  double phi = 0.0;
  for (double a : half_angles) {
    double beta = central_half_angle(model, a, rho);
    poly.tangent_angles.push_back(phi);
    poly.central_half_angles.push_back(beta);
    phi += 2.0 * beta;
  }
  return poly;
}

PointIndex::PointIndex(double tolerance) : tolerance_(tolerance), cell_(tolerance) {}

std::size_t PointIndex::CellHash::operator()(const std::array<long long, 3>& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (long long v : c) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::array<long long, 3> PointIndex::cell_of(const Point& p) const {
  return {static_cast<long long>(std::floor(p.x() / cell_)), static_cast<long long>(std::floor(p.y() / cell_)),
          static_cast<long long>(std::floor(p.z() / cell_))};
}

std::optional<int> PointIndex::find(const Point& p) const {
  auto c = cell_of(p);
  for (long long dx = -1; dx <= 1; ++dx) {
    for (long long dy = -1; dy <= 1; ++dy) {
      for (long long dz = -1; dz <= 1; ++dz) {
        auto it = cells_.find({c[0] + dx, c[1] + dy, c[2] + dz});
        if (it == cells_.end()) continue;
        for (const auto& e : it->second) {
          if ((e.p - p).norm() < tolerance_) return e.id;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<int> PointIndex::find_or_insert(const Point& p, int new_id) {
  if (auto hit = find(p)) return hit;
  cells_[cell_of(p)].push_back({p, new_id});
  return std::nullopt;
}

Tessellation explore(const TangentialPolygon& polygon, int max_depth, std::size_t max_tiles) {
  Tessellation out;
  out.polygon = polygon;
  const std::size_t q = polygon.sides();
  std::vector<Transform> reflections;
  for (std::size_t l = 0; l < q; ++l) reflections.push_back(polygon.side_reflection(l));

  PointIndex index(0.25 * polygon.inradius);
  out.tiles.push_back(Tile{Transform::Identity(), false, 0, std::vector<int>(q, -1)});
  index.find_or_insert(origin(), 0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < q; ++l) {
      if (out.tiles[id].neighbors[l] != -1) continue;
      Transform child = out.tiles[id].transform * reflections[l];
      Point center = child * origin();
      int next_id = static_cast<int>(out.tiles.size());
      if (out.tiles[id].depth >= max_depth) {
        if (auto hit = index.find(center)) out.tiles[id].neighbors[l] = *hit;
        continue;
      }
      if (auto hit = index.find_or_insert(center, next_id)) {
        out.tiles[id].neighbors[l] = *hit;
        continue;
      }
      if (out.tiles.size() >= max_tiles) {
        throw TooLarge("tessellation exceeds " + std::to_string(max_tiles) + " tiles");
      }
      Tile tile{child, !out.tiles[id].reflected, out.tiles[id].depth + 1, std::vector<int>(q, -1)};
      tile.neighbors[l] = id;
      out.tiles[id].neighbors[l] = next_id;
      out.tiles.push_back(std::move(tile));
      queue.push_back(next_id);
    }
  }
  out.complete = std::all_of(out.tiles.begin(), out.tiles.end(), [](const Tile& t) {
    return std::none_of(t.neighbors.begin(), t.neighbors.end(), [](int n) { return n == -1; });
  });
  return out;
}

}  // namespace ctl::geom
