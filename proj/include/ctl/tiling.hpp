#pragma once

#include "ctl/certificate.hpp"
#include "ctl/graph.hpp"
#include "ctl/line_complex.hpp"
#include "ctl/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctl::tiling {

/// Absolute tolerance for floating-point condition checks.
constexpr double kTolerance = 1e-9;

struct TVertex {
  std::string id;
  /// Total angle in radians; nullopt for a vertex at infinity.
  std::optional<double> total_angle;
};

struct Triangle {
  std::string id;
  std::array<int, 3> v{};
  std::array<double, 3> angle{};
  /// Side lengths |v1v2|, |v2v3|, |v3v1|.
  std::array<double, 3> length{};
  /// Model curvature k of the comparison triangle.
  double k = 0.0;
  /// Left turn of each side; zero for geodesic sides.
  std::array<double, 3> turn{};
  std::optional<double> omega;

  double perimeter() const { return length[0] + length[1] + length[2]; }
};

struct Cluster {
  std::string id;
  std::vector<int> triangles;
};

/// Immutable triangle tiling with derived side adjacency.
class Tiling {
 public:
  const std::vector<TVertex>& vertices() const { return vertices_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Cluster>& clusters() const { return clusters_; }

  std::optional<int> find_vertex(std::string_view id) const;
  std::optional<int> find_triangle(std::string_view id) const;
  int vertex_index(std::string_view id) const;    ///< throws UnknownVertex
  int triangle_index(std::string_view id) const;  ///< throws MissingCluster

  /// Triangles across each side (index 0: v1v2, 1: v2v3, 2: v3v1); -1 if none.
  const std::array<int, 3>& neighbors(int t) const { return neighbors_[t]; }
  /// Side adjacency graph on triangles.
  const Graph& adjacency() const { return adjacency_; }
  /// Triangles incident to each vertex.
  const std::vector<int>& star(int v) const { return star_[v]; }
  /// Cluster index of each triangle, -1 if unassigned.
  int cluster_of(int t) const { return cluster_of_[t]; }
  /// Number of triangles sharing the side {a, b}.
  int side_multiplicity(int a, int b) const;

 private:
  friend class TilingBuilder;
  std::vector<TVertex> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Cluster> clusters_;
  std::map<std::string, int, std::less<>> vertex_index_;
  std::map<std::string, int, std::less<>> triangle_index_;
  std::vector<std::array<int, 3>> neighbors_;
  std::vector<std::vector<int>> star_;
  std::vector<int> cluster_of_;
  std::map<std::pair<int, int>, std::vector<int>> sides_;
  Graph adjacency_;
};

class TilingBuilder {
 public:
  TilingBuilder& add_vertex(std::string id, std::optional<double> total_angle);
  /// Vertex ids must already exist. Angles must be positive.
  TilingBuilder& add_triangle(Triangle t, const std::array<std::string, 3>& vertex_ids);
  TilingBuilder& add_cluster(std::string id, const std::vector<std::string>& triangle_ids);
  /// One cluster per triangle, named after the triangle.
  TilingBuilder& singleton_clusters();
  bool has_triangle(std::string_view id) const { return t_.find_triangle(id).has_value(); }
  Tiling build() &&;

 private:
  Tiling t_;
};

std::optional<double> total_angle(const Tiling& tiling, int v);
/// Sum of incident corner angles at v.
double incident_angle_sum(const Tiling& tiling, int v);

/// K = 2 pi sum theta_i / T(v_i) - pi, with theta / infinity = 0.
double angular_curvature(const Tiling& tiling, int t);

/// Clusters of size <= M, curvature sums <= -eps*pi, corner angles >= eps and
/// perimeter <= (2 pi - eps)/sqrt(k) where k > 0. Every violated condition is
/// listed; the constant ledger is attached. Throws MissingCluster when a
/// triangle has no cluster.
Certificate check_theorem_T(const Tiling& tiling, double eps, std::int64_t M);

/// Partitions each component of the triangle adjacency graph with the
/// degree-3 partition lemma (components too small to split form a single
/// cluster) and checks every cluster against sum K <= -eps, the size bound
/// 6M^2 and the angle conditions.
Certificate check_final_tiling_theorem(const Tiling& tiling, double eps, std::int64_t M);

struct EulerCounts {
  std::int64_t boundary_edges;     ///< e0
  std::int64_t triangles;          ///< f
  std::int64_t interior_vertices;  ///< v'
  std::int64_t residual;           ///< e0 - (f - 2 v' + 2)
};

/// Counts for a union D of triangles that is a closed disk. Throws
/// NotSimplyConnected when D is empty, disconnected, pinched at a vertex, or
/// its boundary is not a single cycle.
EulerCounts euler_boundary_identity(const Tiling& tiling, std::span<const int> D);

/// Throws NotSimplyConnected with a reason when D is not a closed disk.
void require_disk(const Tiling& tiling, std::span<const int> D);
bool is_disk(const Tiling& tiling, std::span<const int> D);

struct CombReport {
  std::int64_t boundary_edges;
  std::int64_t triangles;
  /// (6 M^2 / eps) * e0, exact.
  Rational bound;
  bool holds;
  /// Whether the ambient clusters satisfy the size and curvature conditions.
  bool precondition_met;
};

CombReport comb_isoperimetric_check(const Tiling& tiling, std::span<const int> D, const Rational& eps,
                                    std::int64_t M);

struct LedgerEntry {
  std::string name;
  double value;
  /// Set when the value is rational and known exactly.
  std::optional<Rational> exact;
  std::string provenance;
};

struct ConstantLedger {
  double eps;
  std::int64_t M;
  double k;
  std::vector<LedgerEntry> entries;

  const LedgerEntry& get(std::string_view name) const;
};

/// eps in radians; DomainError outside (0, pi) or for M < 1.
ConstantLedger constant_ledger(double eps, std::int64_t M, double k);
/// eps given as a rational multiple of pi; sines that are rational (Niven's
/// values 0, 1/2, 1) are carried exactly.
ConstantLedger constant_ledger_pi(const Rational& eps_over_pi, std::int64_t M, double k);

nlohmann::ordered_json to_json(const ConstantLedger& ledger);

struct HalfSheetIdentity {
  Rational sum_K_over_pi;
  Rational excess;  ///< E_p, so pi * E_p = pi * excess
  Rational residual;
  double sum_K_numeric;  ///< the same sum via angular_curvature on the built tiling
  Tiling hemisphere;
};

/// Pole-fan tiling of a hemisphere with q equator points; T(pole) = 2 pi and
/// T(nu_j) = 2 pi m_j. DomainError for q < 3.
HalfSheetIdentity half_sheet_curvature_identity(int q, std::span<const lc::FaceDegree> m);

/// Ball of the regular tiling by equilateral triangles with d around each
/// vertex (angle 2 pi / d), out to `radius` adjacency steps. Total angles are
/// 2 pi; clusters are singletons.
Tiling regular_tiling(int d, int radius);

// .tlg text format
Tiling parse_tlg(std::string_view text);
std::string serialize_tlg(const Tiling& tiling);
Tiling read_tlg_file(const std::string& path);

}  // namespace ctl::tiling
