#pragma once

#include "ctl/graph.hpp"
#include "ctl/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctl::lc {

enum class Parity { circle, cross };

struct Vertex {
  std::string id;
  Parity parity;
};

/// Edge between vertices `a` and `b` (indices). `a` is the endpoint written
/// first in the input and is expected to be the circle vertex.
struct Edge {
  int a;
  int b;
  int label;
};

/// Half-edge or face corner reference: vertex index plus a label or corner index.
struct Slot {
  int vertex;
  int label;
  auto operator<=>(const Slot&) const = default;
};

/// Labeled bipartite graph of degree q, possibly a finite truncation with
/// frontier half-edges. Immutable; build it through LineComplexBuilder.
/// Vertices are kept sorted by id and edges by (first endpoint, label, second
/// endpoint), so derived data never depends on input order.
class LineComplex {
 public:
  int q() const { return q_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Slot>& frontier() const { return frontier_; }
  /// Corners (vertex, j) whose face is declared to have infinite half-perimeter.
  const std::vector<Slot>& infinite_corners() const { return infinite_; }
  const Graph& graph() const { return graph_; }

  std::size_t size() const { return vertices_.size(); }
  std::optional<int> find(std::string_view id) const;
  /// Throws UnknownVertex.
  int index_of(std::string_view id) const;
  const std::string& id(int v) const { return vertices_[v].id; }
  bool is_circle(int v) const { return vertices_[v].parity == Parity::circle; }

  /// Edge indices incident to v, in edge order.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  /// The unique edge at v carrying `label`, or -1 if absent or duplicated.
  int edge_at(int v, int label) const;
  int other_end(int edge, int v) const;
  bool is_frontier(int v, int label) const;
  bool is_declared_infinite(int v, int corner) const;

  int next_label(int j) const { return j % q_ + 1; }
  int prev_label(int j) const { return (j + q_ - 2) % q_ + 1; }

 private:
  friend class LineComplexBuilder;
  int q_ = 2;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Slot> frontier_;
  std::vector<Slot> infinite_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<std::vector<int>> incident_;
  Graph graph_;
};

class LineComplexBuilder {
 public:
  explicit LineComplexBuilder(int q);
  /// Throws InvalidComplex on a duplicate id.
  LineComplexBuilder& add_vertex(std::string id, Parity parity);
  /// Throws UnknownVertex for undeclared endpoints.
  LineComplexBuilder& add_edge(std::string_view circle, std::string_view cross, int label);
  LineComplexBuilder& add_frontier(std::string_view id, int label);
  /// Declares the face at corner (id, corner) to be infinite.
  LineComplexBuilder& add_infinite(std::string_view id, int corner);
  LineComplex build() &&;

 private:
  int require(std::string_view id) const;
  int q_;
  std::vector<Vertex> vertices_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<std::tuple<int, int, int>> edges_;
  std::vector<Slot> frontier_;
  std::vector<Slot> infinite_;
};

struct Diagnostic {
  std::string property;
  std::string witness;
  std::string message;
};

/// Structural checks: label range, bipartite, degree/labels, frontier
/// consistency, connectivity, face closure, two-label alternation and, for
/// closed complexes, the sphere Euler count. Empty result means valid.
std::vector<Diagnostic> validate(const LineComplex& complex);

/// Half-perimeter of a face: finite m, declared infinite, or unknown because
/// the face runs into the frontier of a truncation.
struct HalfPerimeter {
  enum class Kind { finite, infinite, unknown };
  Kind kind = Kind::unknown;
  std::int64_t value = 0;

  static HalfPerimeter finite(std::int64_t m) { return {Kind::finite, m}; }
  static HalfPerimeter infinite() { return {Kind::infinite, 0}; }
  static HalfPerimeter unknown() { return {Kind::unknown, 0}; }
  std::string to_string() const;
};

struct WalkStep {
  int vertex;
  int edge;  ///< edge leaving `vertex` along the boundary, -1 at a frontier end
};

struct Face {
  int id;
  /// Corner index j: the face sits between labels j and j+1 (mod q).
  int corner;
  HalfPerimeter m;
  bool closed;
  std::vector<WalkStep> walk;
};

struct FaceSet {
  std::vector<Face> faces;
  /// Face id at corner (v, j), stored at v*q + (j-1).
  std::vector<int> corner_face;
  int q = 2;

  int face_at(int v, int corner) const { return corner_face[static_cast<std::size_t>(v) * q + (corner - 1)]; }
};

/// Throws NonOrientableWalk when a walk does not close within the edge budget.
FaceSet trace_faces(const LineComplex& complex);

/// Euler characteristic |V| - |E| + |F| of a closed complex.
std::int64_t euler_characteristic(const LineComplex& complex, const FaceSet& faces);

/// E_p = sum 1/m_i - q + 2 over the q faces at p; nullopt when unresolved.
std::optional<Rational> vertex_excess(const LineComplex& complex, const FaceSet& faces, int p);
std::optional<Rational> vertex_excess(const LineComplex& complex, const FaceSet& faces, std::string_view p);

struct ExcessReport {
  std::vector<std::optional<Rational>> per_vertex;
  /// Common value when every vertex is resolved and all values agree.
  std::optional<Rational> regular;
  bool all_resolved = true;
};

ExcessReport excess_report(const LineComplex& complex, const FaceSet& faces);

/// Vertices at graph distance <= j from p, ascending index order.
std::vector<int> ball(const LineComplex& complex, int p, int j);

struct MeanExcessRow {
  int j;
  std::int64_t n;
  Rational mean;
};

/// Partial means (1/n_j) sum_{B(p,j)} E over j = 0..jmax. Throws
/// UnresolvedExcess when a ball vertex has unresolved excess.
std::vector<MeanExcessRow> mean_excess_sequence(const LineComplex& complex, const FaceSet& faces, int p, int jmax);

/// Common excess when all vertices agree; throws UnresolvedExcess if any is unresolved.
std::optional<Rational> is_regularly_ramified(const LineComplex& complex, const FaceSet& faces);

// Generators. A face degree of nullopt means an infinite face.
using FaceDegree = std::optional<int>;

struct RegularScheme {
  int q;
  std::vector<FaceDegree> m;
  int radius;
};

struct ClosedScheme {
  int n;
  int q;
};

enum class ClassicKind { exp, sine, punctured_sphere_cover };

struct ClassicScheme {
  ClassicKind kind;
  int radius;
};

/// Closed genus-0 complex drawn from random sheet permutations.
struct RandomClosedScheme {
  int n;
  int q;
  std::uint64_t seed;
};

using Scheme = std::variant<RegularScheme, ClosedScheme, ClassicScheme, RandomClosedScheme>;

/// Throws InfeasibleScheme when no complex realizes the scheme.
LineComplex generate(const Scheme& scheme);

// .spg text format
LineComplex parse_spg(std::string_view text);
std::string serialize_spg(const LineComplex& complex);
LineComplex read_spg_file(const std::string& path);

}  // namespace ctl::lc
