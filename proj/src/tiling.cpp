#include "ctl/tiling.hpp"

#include "ctl/errors.hpp"
#include "ctl/partitioner.hpp"
#include "ctl/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <numbers>
#include <numeric>
#include <set>

namespace ctl::tiling {

namespace {

constexpr double kPi = std::numbers::pi;

std::pair<int, int> side_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string format_real(double x) {
  char buf[40];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

std::optional<int> Tiling::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Tiling::find_triangle(std::string_view id) const {
  auto it = triangle_index_.find(id);
  if (it == triangle_index_.end()) return std::nullopt;
  return it->second;
}

int Tiling::vertex_index(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw UnknownVertex("no vertex '" + std::string(id) + "'");
  return *v;
}

int Tiling::triangle_index(std::string_view id) const {
  auto t = find_triangle(id);
  if (!t) throw MissingCluster("no triangle '" + std::string(id) + "'");
  return *t;
}

int Tiling::side_multiplicity(int a, int b) const {
  auto it = sides_.find(side_key(a, b));
  return it == sides_.end() ? 0 : static_cast<int>(it->second.size());
}

TilingBuilder& TilingBuilder::add_vertex(std::string id, std::optional<double> total_angle) {
  if (t_.vertex_index_.count(id)) throw InvalidComplex("duplicate vertex '" + id + "'");
  if (total_angle && !(*total_angle > 0.0 && std::isfinite(*total_angle))) {
    throw DomainError("total angle at '" + id + "' must be positive");
  }
  t_.vertex_index_.emplace(id, static_cast<int>(t_.vertices_.size()));
  t_.vertices_.push_back({std::move(id), total_angle});
  return *this;
}

TilingBuilder& TilingBuilder::add_triangle(Triangle t, const std::array<std::string, 3>& vertex_ids) {
  if (t_.triangle_index_.count(t.id)) throw InvalidComplex("duplicate triangle '" + t.id + "'");
  for (int i = 0; i < 3; ++i) {
    t.v[i] = t_.vertex_index(vertex_ids[i]);
    if (!(t.angle[i] > 0.0 && std::isfinite(t.angle[i]))) {
      throw DomainError("triangle '" + t.id + "' has a non-positive corner angle");
    }
    if (!(t.length[i] >= 0.0 && std::isfinite(t.length[i]))) {
      throw DomainError("triangle '" + t.id + "' has an invalid side length");
    }
  }
  if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[0] == t.v[2]) {
    throw InvalidComplex("triangle '" + t.id + "' repeats a vertex");
  }
  if (!std::isfinite(t.k)) throw DomainError("triangle '" + t.id + "' needs a finite model curvature");
  t_.triangle_index_.emplace(t.id, static_cast<int>(t_.triangles_.size()));
  t_.triangles_.push_back(std::move(t));
  return *this;
}

TilingBuilder& TilingBuilder::add_cluster(std::string id, const std::vector<std::string>& triangle_ids) {
  Cluster c{std::move(id), {}};
  for (const auto& tid : triangle_ids) c.triangles.push_back(t_.triangle_index(tid));
  t_.clusters_.push_back(std::move(c));
  return *this;
}

TilingBuilder& TilingBuilder::singleton_clusters() {
  t_.clusters_.clear();
  for (std::size_t i = 0; i < t_.triangles_.size(); ++i) {
    t_.clusters_.push_back({t_.triangles_[i].id, {static_cast<int>(i)}});
  }
  return *this;
}

Tiling TilingBuilder::build() && {
  Tiling out = std::move(t_);
  const std::size_t n = out.triangles_.size();
  out.star_.assign(out.vertices_.size(), {});
  out.neighbors_.assign(n, {-1, -1, -1});
  for (std::size_t t = 0; t < n; ++t) {
    const auto& v = out.triangles_[t].v;
    for (int i = 0; i < 3; ++i) {
      out.star_[v[i]].push_back(static_cast<int>(t));
      out.sides_[side_key(v[i], v[(i + 1) % 3])].push_back(static_cast<int>(t));
    }
  }
  out.adjacency_ = Graph(n);
  for (std::size_t t = 0; t < n; ++t) {
    const auto& v = out.triangles_[t].v;
    for (int i = 0; i < 3; ++i) {
      for (int other : out.sides_[side_key(v[i], v[(i + 1) % 3])]) {
        if (other == static_cast<int>(t)) continue;
        out.neighbors_[t][i] = other;
        out.adjacency_.add_edge(static_cast<int>(t), other);
      }
    }
  }
  out.adjacency_.finalize();
  out.cluster_of_.assign(n, -1);
  for (std::size_t c = 0; c < out.clusters_.size(); ++c) {
    for (int t : out.clusters_[c].triangles) {
      if (out.cluster_of_[t] != -1) {
        throw InvalidPartition("triangle '" + out.triangles_[t].id + "' lies in two clusters");
      }
      out.cluster_of_[t] = static_cast<int>(c);
    }
  }
  return out;
}

std::optional<double> total_angle(const Tiling& tiling, int v) {
  if (v < 0 || v >= static_cast<int>(tiling.vertices().size())) {
    throw UnknownVertex("vertex index " + std::to_string(v));
  }
  return tiling.vertices()[v].total_angle;
}

double incident_angle_sum(const Tiling& tiling, int v) {
  double sum = 0.0;
  for (int t : tiling.star(v)) {
    const auto& tri = tiling.triangles()[t];
    for (int i = 0; i < 3; ++i) {
      if (tri.v[i] == v) sum += tri.angle[i];
    }
  }
  return sum;
}

double angular_curvature(const Tiling& tiling, int t) {
  const auto& tri = tiling.triangles().at(t);
  double weighted = 0.0;
  for (int i = 0; i < 3; ++i) {
    auto T = tiling.vertices()[tri.v[i]].total_angle;
    if (T) weighted += tri.angle[i] / *T;
  }
  return 2.0 * kPi * weighted - kPi;
}

namespace {

void add_violation(Certificate& cert, const std::string& condition) {
  if (std::find(cert.violations.begin(), cert.violations.end(), condition) == cert.violations.end()) {
    cert.violations.push_back(condition);
  }
}

// Per-triangle angle and perimeter conditions; returns (angle detail, perimeter detail).
std::pair<std::optional<std::string>, std::optional<std::string>> triangle_conditions(const Triangle& tri,
                                                                                      double eps) {
  std::optional<std::string> r1;
  std::optional<std::string> r2;
  for (int i = 0; i < 3; ++i) {
    if (tri.angle[i] < eps - kTolerance) {
      r1 = "triangle " + tri.id + " corner " + std::to_string(i + 1) + " angle " + format_real(tri.angle[i]) +
           " < eps " + format_real(eps);
      break;
    }
  }
  if (tri.k > 0.0) {
    double limit = (2.0 * kPi - eps) / std::sqrt(tri.k);
    if (tri.perimeter() > limit + kTolerance) {
      r2 = "triangle " + tri.id + " perimeter " + format_real(tri.perimeter()) + " > " + format_real(limit);
    }
  }
  return {r1, r2};
}

struct ClusterCheck {
  std::string size_tag;
  std::string sum_tag;
  std::int64_t size_bound;
  double sum_bound;  ///< cluster curvature sum must be <= sum_bound
};

Certificate check_clusters(const Tiling& tiling, const std::vector<Cluster>& clusters, double eps,
                           const ClusterCheck& check) {
  Certificate cert;
  cert.q = 3;
  cert.eps = format_real(eps);
  for (const auto& cluster : clusters) {
    PieceReport r;
    r.id = cluster.id;
    r.size = static_cast<std::int64_t>(cluster.triangles.size());
    double sum = 0.0;
    std::optional<std::string> r1;
    std::optional<std::string> r2;
    for (int t : cluster.triangles) {
      const auto& tri = tiling.triangles()[t];
      r.members.push_back(tri.id);
      sum += angular_curvature(tiling, t);
      auto [a, b] = triangle_conditions(tri, eps);
      if (a && !r1) r1 = a;
      if (b && !r2) r2 = b;
    }
    r.real_sum = sum;
    std::vector<std::pair<std::string, std::string>> found;
    if (r.size > check.size_bound) {
      found.emplace_back(check.size_tag, "size " + std::to_string(r.size) + " > " + std::to_string(check.size_bound));
    }
    if (sum > check.sum_bound + kTolerance) {
      found.emplace_back(check.sum_tag,
                         "curvature sum " + format_real(sum) + " > " + format_real(check.sum_bound));
    }
    if (r1) found.emplace_back("R1", *r1);
    if (r2) found.emplace_back("R2", *r2);
    for (const auto& [tag, detail] : found) {
      r.violated.push_back(tag);
      add_violation(cert, tag);
    }
    if (!found.empty()) {
      r.status = PieceStatus::violated;
      if (!cert.witness) cert.witness = Witness{r.id, found.front().first, found.front().second, r.members};
    }
    cert.pieces.push_back(std::move(r));
  }
  if (!cert.violations.empty()) {
    cert.verdict = Verdict::conditions_violated;
  } else if (clusters.empty()) {
    cert.verdict = Verdict::inconclusive;
  } else {
    cert.verdict = Verdict::hyperbolic;
    cert.annotation = "linear isoperimetric inequality holds; the surface is also Gromov hyperbolic";
  }
  return cert;
}

double max_model_curvature(const Tiling& tiling) {
  double k = 0.0;
  for (const auto& t : tiling.triangles()) k = std::max(k, t.k);
  return k;
}

}  // namespace

Certificate check_theorem_T(const Tiling& tiling, double eps, std::int64_t M) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  for (std::size_t t = 0; t < tiling.triangles().size(); ++t) {
    if (tiling.cluster_of(static_cast<int>(t)) == -1) {
      throw MissingCluster("triangle '" + tiling.triangles()[t].id + "' has no cluster");
    }
  }
  for (const auto& c : tiling.clusters()) {
    if (c.triangles.empty() || !is_connected_subset(tiling.adjacency(), c.triangles)) {
      throw InvalidPartition("cluster '" + c.id + "' is empty or not connected across sides");
    }
  }
  auto cert = check_clusters(tiling, tiling.clusters(), eps, {"M1", "M2", M, -eps * kPi});
  cert.theorem = "tiling-conditions";
  cert.M = M;
  if (eps < kPi) cert.extra["ledger"] = to_json(constant_ledger(eps, std::max<std::int64_t>(M, 1), max_model_curvature(tiling)));
  return cert;
}

Certificate check_final_tiling_theorem(const Tiling& tiling, double eps, std::int64_t M) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (M < 1) throw DomainError("M must be positive");
  constexpr int q = 3;
  std::vector<int> all(tiling.triangles().size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Cluster> clusters;
  std::int64_t fallback = 0;
  for (auto& component : induced_components(tiling.adjacency(), all)) {
    const auto size = static_cast<std::int64_t>(component.size());
    std::vector<std::vector<int>> groups;
    if (M < 2 || size < 4 * q || size < M) {
      groups.push_back(component);
      ++fallback;
    } else {
      for (auto& piece : part::partition_lemma_par2(tiling.adjacency(), q, part::Subgraph{component, false}, M)) {
        groups.push_back(std::move(piece.vertices));
      }
    }
    for (auto& g : groups) clusters.push_back({"C" + std::to_string(clusters.size()), std::move(g)});
  }
  const std::int64_t bound = 2 * q * M * M;
  auto cert = check_clusters(tiling, clusters, eps, {"M1'", "M2'", bound, -eps});
  cert.theorem = "tiling-clusters";
  cert.M = M;
  cert.extra["cluster_size_bound"] = bound;
  cert.extra["single_cluster_components"] = fallback;
  return cert;
}

namespace {

struct DiskScan {
  std::map<std::pair<int, int>, int> side_count;
  std::set<int> vertices;
};

DiskScan scan(const Tiling& tiling, std::span<const int> D) {
  DiskScan s;
  for (int t : D) {
    const auto& v = tiling.triangles()[t].v;
    for (int i = 0; i < 3; ++i) {
      s.vertices.insert(v[i]);
      ++s.side_count[side_key(v[i], v[(i + 1) % 3])];
    }
  }
  return s;
}

std::optional<std::string> disk_defect(const Tiling& tiling, std::span<const int> D) {
  if (D.empty()) return "empty triangle set";
  std::set<int> unique;
  for (int t : D) {
    if (t < 0 || t >= static_cast<int>(tiling.triangles().size())) return "triangle index out of range";
    if (!unique.insert(t).second) return "triangle listed twice";
  }
  if (!is_connected_subset(tiling.adjacency(), D)) return "triangles are not connected across sides";
  auto s = scan(tiling, D);
  std::map<int, std::vector<int>> boundary_adj;
  for (const auto& [side, count] : s.side_count) {
    if (count > 2) return "side shared by more than two triangles";
    if (count == 1) {
      boundary_adj[side.first].push_back(side.second);
      boundary_adj[side.second].push_back(side.first);
    }
  }
  // The triangles around each vertex must form one fan.
  std::set<int> inD(D.begin(), D.end());
  for (int v : s.vertices) {
    std::vector<int> fan;
    for (int t : tiling.star(v)) {
      if (inD.count(t)) fan.push_back(t);
    }
    std::vector<int> seen{fan.front()};
    std::vector<char> mark(fan.size(), 0);
    mark[0] = 1;
    for (std::size_t head = 0; head < seen.size(); ++head) {
      const auto& tv = tiling.triangles()[seen[head]].v;
      for (std::size_t j = 0; j < fan.size(); ++j) {
        if (mark[j]) continue;
        const auto& uv = tiling.triangles()[fan[j]].v;
        int shared = 0;
        for (int a : tv) {
          if (a != v && std::find(uv.begin(), uv.end(), a) != uv.end()) ++shared;
        }
        if (shared > 0) {
          mark[j] = 1;
          seen.push_back(fan[j]);
        }
      }
    }
    if (seen.size() != fan.size()) return "pinched at vertex " + tiling.vertices()[v].id;
  }
  if (boundary_adj.empty()) return "no boundary (closed surface)";
  for (const auto& [v, nbrs] : boundary_adj) {
    if (nbrs.size() != 2) return "boundary is not a simple cycle at vertex " + tiling.vertices()[v].id;
  }
  // Walk the boundary once; it must visit every boundary vertex.
  int start = boundary_adj.begin()->first;
  int prev = -1;
  int cur = start;
  std::size_t steps = 0;
  do {
    const auto& nbrs = boundary_adj[cur];
    int next = nbrs[0] != prev ? nbrs[0] : nbrs[1];
    prev = cur;
    cur = next;
    ++steps;
  } while (cur != start && steps <= boundary_adj.size());
  if (steps != boundary_adj.size()) return "boundary has more than one component (hole)";
  return std::nullopt;
}

}  // namespace

void require_disk(const Tiling& tiling, std::span<const int> D) {
  if (auto defect = disk_defect(tiling, D)) throw NotSimplyConnected(*defect);
}

bool is_disk(const Tiling& tiling, std::span<const int> D) { return !disk_defect(tiling, D).has_value(); }

EulerCounts euler_boundary_identity(const Tiling& tiling, std::span<const int> D) {
  require_disk(tiling, D);
  auto s = scan(tiling, D);
  std::set<int> boundary_vertices;
  std::int64_t e0 = 0;
  for (const auto& [side, count] : s.side_count) {
    if (count == 1) {
      ++e0;
      boundary_vertices.insert(side.first);
      boundary_vertices.insert(side.second);
    }
  }
  EulerCounts c;
  c.boundary_edges = e0;
  c.triangles = static_cast<std::int64_t>(D.size());
  c.interior_vertices = static_cast<std::int64_t>(s.vertices.size() - boundary_vertices.size());
  c.residual = c.boundary_edges - (c.triangles - 2 * c.interior_vertices + 2);
  return c;
}

CombReport comb_isoperimetric_check(const Tiling& tiling, std::span<const int> D, const Rational& eps,
                                    std::int64_t M) {
  if (eps <= Rational(0)) throw DomainError("eps must be positive");
  auto s = scan(tiling, D);
  CombReport r;
  r.boundary_edges = 0;
  for (const auto& [side, count] : s.side_count) {
    if (count == 1) ++r.boundary_edges;
  }
  r.triangles = static_cast<std::int64_t>(D.size());
  r.bound = Rational(6 * M * M) / eps * Rational(r.boundary_edges);
  r.holds = Rational(r.triangles) <= r.bound;
  r.precondition_met = true;
  const double eps_real = to_double(eps);
  for (std::size_t t = 0; t < tiling.triangles().size(); ++t) {
    if (tiling.cluster_of(static_cast<int>(t)) == -1) r.precondition_met = false;
  }
  for (const auto& c : tiling.clusters()) {
    double sum = 0.0;
    for (int t : c.triangles) sum += angular_curvature(tiling, t);
    if (static_cast<std::int64_t>(c.triangles.size()) > M || sum > -eps_real * kPi + kTolerance) {
      r.precondition_met = false;
    }
  }
  return r;
}

const LedgerEntry& ConstantLedger::get(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw DomainError("no ledger entry '" + std::string(name) + "'");
}

namespace {

ConstantLedger make_ledger(double eps, std::int64_t M, double k, std::optional<Rational> exact_sin) {
  if (!(eps > 0.0 && eps < kPi)) throw DomainError("eps must lie in (0, pi)");
  if (M < 1) throw DomainError("M must be at least 1");
  ConstantLedger L{eps, M, k, {}};
  LedgerEntry length;
  length.name = "C_length";
  if (k > 0.0) {
    length.value = kPi / (std::sin(eps / 2.0) * std::sin(eps));
    length.provenance =
        "spherical law of sines after scaling to k = 1: with the opposite angle >= eps and perimeter <= 2 pi - eps, "
        "each side is at most pi / (sin(eps/2) sin(eps)) times the opposite side";
  } else {
    length.value = 1.0 / std::sin(eps);
    if (exact_sin) {
      length.exact = Rational(1) / *exact_sin;
      length.value = to_double(*length.exact);
    }
    length.provenance =
        "planar law of sines: a side is at most 1/sin(eps) times the side opposite an angle >= eps";
  }
  const double c_liso = 9.0 * length.value * length.value / (2.0 * kPi);
  const double c_comb = 6.0 * static_cast<double>(M) * static_cast<double>(M) / eps;
  const double c = c_liso * c_comb;
  L.entries.push_back(length);
  L.entries.push_back({"C_liso", c_liso, std::nullopt,
                       "isoperimetric constant for small domains, 9 C_length^2 / (2 pi), from 2 pi A <= L^2"});
  L.entries.push_back({"C_comb", c_comb, std::nullopt,
                       "triangles per boundary edge of a cluster union, 6 M^2 / eps"});
  L.entries.push_back({"C", c, std::nullopt, "C_liso * C_comb (chosen convention for the combined constant)"});
  L.entries.push_back({"C_final", c * c + 2.0 * c, std::nullopt, "C^2 + 2C"});
  return L;
}

}  // namespace

ConstantLedger constant_ledger(double eps, std::int64_t M, double k) { return make_ledger(eps, M, k, std::nullopt); }

ConstantLedger constant_ledger_pi(const Rational& eps_over_pi, std::int64_t M, double k) {
  // Niven: sin(r pi) for rational r in (0, 1) is rational only at 1/6, 1/2, 5/6.
  std::optional<Rational> exact;
  if (eps_over_pi == Rational(1, 6) || eps_over_pi == Rational(5, 6)) exact = Rational(1, 2);
  if (eps_over_pi == Rational(1, 2)) exact = Rational(1);
  return make_ledger(to_double(eps_over_pi) * kPi, M, k, exact);
}

nlohmann::ordered_json to_json(const ConstantLedger& ledger) {
  nlohmann::ordered_json out;
  out["eps"] = ledger.eps;
  out["M"] = ledger.M;
  out["k"] = ledger.k;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : ledger.entries) {
    nlohmann::ordered_json j;
    j["name"] = e.name;
    j["value"] = e.value;
    if (e.exact) j["exact"] = {{"num", e.exact->numerator()}, {"den", e.exact->denominator()}};
    j["provenance"] = e.provenance;
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  return out;
}

HalfSheetIdentity half_sheet_curvature_identity(int q, std::span<const lc::FaceDegree> m) {
  if (q < 3) throw DomainError("the hemisphere fan needs q >= 3");
  if (static_cast<int>(m.size()) != q) throw DomainError("expected " + std::to_string(q) + " face degrees");
  auto inverse = [](const lc::FaceDegree& d) {
    if (d && *d < 1) throw DomainError("face degree must be at least 1");
    return d ? Rational(1, *d) : Rational(0);
  };

  TilingBuilder b;
  b.add_vertex("pole", 2.0 * kPi);
  for (int j = 0; j < q; ++j) {
    std::optional<double> T;
    if (m[j]) T = 2.0 * kPi * *m[j];
    b.add_vertex("nu" + std::to_string(j + 1), T);
  }
  Rational sum(0);
  Rational excess(2 - q);
  for (int j = 0; j < q; ++j) {
    int next = (j + 1) % q;
    Triangle t;
    t.id = "h" + std::to_string(j + 1);
    t.angle = {2.0 * kPi / q, kPi / 2.0, kPi / 2.0};
    t.length = {kPi / 2.0, 2.0 * kPi / q, kPi / 2.0};
    t.k = 1.0;
    t.omega = 2.0 * kPi / q;
    b.add_triangle(t, {"pole", "nu" + std::to_string(j + 1), "nu" + std::to_string(next + 1)});
    // Same formula in units of pi: 2 (1/q) + (1/2)(1/m_j) + (1/2)(1/m_{j+1}) - 1.
    sum += Rational(2, q) + inverse(m[j]) / Rational(2) + inverse(m[next]) / Rational(2) - Rational(1);
    excess += inverse(m[j]);
  }
  b.singleton_clusters();
  HalfSheetIdentity out{sum, excess, sum - excess, 0.0, std::move(b).build()};
  for (std::size_t t = 0; t < out.hemisphere.triangles().size(); ++t) {
    out.sum_K_numeric += angular_curvature(out.hemisphere, static_cast<int>(t));
  }
  return out;
}

Tiling regular_tiling(int d, int radius) {
  if (d < 3) throw DomainError("need at least 3 triangles per vertex");
  if (radius < 0) throw DomainError("negative radius");
  geom::Model model = d > 6 ? geom::Model::hyperbolic : (d == 6 ? geom::Model::euclidean : geom::Model::spherical);
  double k = d > 6 ? -1.0 : (d == 6 ? 0.0 : 1.0);
  std::vector<double> half(3, kPi / d);
  auto polygon = geom::make_tangential_polygon(model, half);
  if (!polygon) throw DomainError("no equilateral triangle with angle 2 pi / " + std::to_string(d));
  auto tess = geom::explore(*polygon, radius);

  std::array<geom::Point, 3> corners;
  for (int l = 0; l < 3; ++l) corners[l] = *polygon->vertex(l);
  const double side = geom::distance(model, corners[0], corners[1]);
  geom::PointIndex index(0.25 * side);
  std::vector<geom::Point> points;
  TilingBuilder b;
  auto vertex_id = [&](const geom::Point& p) {
    int next = static_cast<int>(points.size());
    if (auto hit = index.find_or_insert(p, next)) return *hit;
    points.push_back(p);
    b.add_vertex("p" + std::to_string(next), 2.0 * kPi);
    return next;
  };
  const double angle = 2.0 * kPi / d;
  for (std::size_t t = 0; t < tess.tiles.size(); ++t) {
    std::array<std::string, 3> ids;
    std::array<geom::Point, 3> pts;
    for (int l = 0; l < 3; ++l) {
      pts[l] = tess.tiles[t].transform * corners[l];
      if (model == geom::Model::spherical) pts[l].normalize();
      ids[l] = "p" + std::to_string(vertex_id(pts[l]));
    }
    Triangle tri;
    tri.id = "t" + std::to_string(t);
    tri.angle = {angle, angle, angle};
    for (int l = 0; l < 3; ++l) tri.length[l] = geom::distance(model, pts[l], pts[(l + 1) % 3]);
    tri.k = k;
    tri.omega = 3.0 * angle - kPi;
    b.add_triangle(tri, ids);
  }
  b.singleton_clusters();
  return std::move(b).build();
}

}  // namespace ctl::tiling
