#include "ctl/line_complex.hpp"

#include "ctl/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ctl::lc {

std::optional<int> LineComplex::find(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int LineComplex::index_of(std::string_view id) const {
  auto v = find(id);
  if (!v) throw UnknownVertex("no vertex '" + std::string(id) + "'");
  return *v;
}

int LineComplex::edge_at(int v, int label) const {
  int found = -1;
  for (int e : incident_[v]) {
    if (edges_[e].label != label) continue;
    if (found != -1) return -1;
    found = e;
  }
  return found;
}

int LineComplex::other_end(int edge, int v) const {
  const Edge& e = edges_[edge];
  return e.a == v ? e.b : e.a;
}

bool LineComplex::is_frontier(int v, int label) const {
  return std::binary_search(frontier_.begin(), frontier_.end(), Slot{v, label});
}

bool LineComplex::is_declared_infinite(int v, int corner) const {
  return std::binary_search(infinite_.begin(), infinite_.end(), Slot{v, corner});
}

LineComplexBuilder::LineComplexBuilder(int q) : q_(q) {
  if (q < 2) throw InvalidComplex("degree q must be at least 2, got " + std::to_string(q));
}

LineComplexBuilder& LineComplexBuilder::add_vertex(std::string id, Parity parity) {
  if (index_.count(id)) throw InvalidComplex("duplicate vertex '" + id + "'");
  index_.emplace(id, static_cast<int>(vertices_.size()));
  vertices_.push_back({std::move(id), parity});
  return *this;
}

int LineComplexBuilder::require(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownVertex("no vertex '" + std::string(id) + "'");
  return it->second;
}

LineComplexBuilder& LineComplexBuilder::add_edge(std::string_view circle, std::string_view cross, int label) {
  edges_.emplace_back(require(circle), require(cross), label);
  return *this;
}

LineComplexBuilder& LineComplexBuilder::add_frontier(std::string_view id, int label) {
  frontier_.push_back({require(id), label});
  return *this;
}

LineComplexBuilder& LineComplexBuilder::add_infinite(std::string_view id, int corner) {
  infinite_.push_back({require(id), corner});
  return *this;
}

LineComplex LineComplexBuilder::build() && {
  LineComplex out;
  out.q_ = q_;
  std::vector<int> order(vertices_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return vertices_[x].id < vertices_[y].id; });
  std::vector<int> remap(vertices_.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<int>(i);
    out.vertices_.push_back(std::move(vertices_[order[i]]));
    out.index_.emplace(out.vertices_.back().id, static_cast<int>(i));
  }
  for (auto [a, b, label] : edges_) out.edges_.push_back({remap[a], remap[b], label});
  std::sort(out.edges_.begin(), out.edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.a, x.label, x.b) < std::tie(y.a, y.label, y.b);
  });
  auto normalize = [&](std::vector<Slot>& slots) {
    for (auto& s : slots) s.vertex = remap[s.vertex];
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
  };
  normalize(frontier_);
  normalize(infinite_);
  out.frontier_ = std::move(frontier_);
  out.infinite_ = std::move(infinite_);

  out.incident_.assign(out.vertices_.size(), {});
  out.graph_ = Graph(out.vertices_.size());
  for (std::size_t e = 0; e < out.edges_.size(); ++e) {
    const Edge& edge = out.edges_[e];
    out.incident_[edge.a].push_back(static_cast<int>(e));
    if (edge.b != edge.a) out.incident_[edge.b].push_back(static_cast<int>(e));
    out.graph_.add_edge(edge.a, edge.b);
  }
  out.graph_.finalize();
  return out;
}

std::string HalfPerimeter::to_string() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "inf";
    case Kind::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

std::string edge_witness(const LineComplex& c, const Edge& e) {
  return c.id(e.a) + "-" + c.id(e.b) + ":" + std::to_string(e.label);
}

// Label of the edge leaving v along the face at corner c.
int departing_label(const LineComplex& c, int v, int corner) {
  return c.is_circle(v) ? c.next_label(corner) : corner;
}

int arriving_label(const LineComplex& c, int v, int corner) {
  return c.is_circle(v) ? corner : c.next_label(corner);
}

}  // namespace

FaceSet trace_faces(const LineComplex& complex) {
  const int q = complex.q();
  FaceSet out;
  out.q = q;
  out.corner_face.assign(complex.size() * static_cast<std::size_t>(q), -1);
  const std::size_t budget = 2 * complex.edges().size() + 2;

  auto assign = [&](int v, int corner, int face_id) {
    int& slot = out.corner_face[static_cast<std::size_t>(v) * q + (corner - 1)];
    if (slot != -1 && slot != face_id) {
      throw NonOrientableWalk("corner (" + complex.id(v) + ", " + std::to_string(corner) +
                              ") lies on two faces");
    }
    slot = face_id;
  };

  for (int v = 0; v < static_cast<int>(complex.size()); ++v) {
    for (int corner = 1; corner <= q; ++corner) {
      if (out.face_at(v, corner) != -1) continue;
      Face face;
      face.id = static_cast<int>(out.faces.size());
      face.corner = corner;
      face.closed = false;

      // Forward walk.
      std::vector<WalkStep> forward;
      int u = v;
      bool closed = false;
      for (std::size_t step = 0;; ++step) {
        if (step > budget) {
          throw NonOrientableWalk("face at corner (" + complex.id(v) + ", " + std::to_string(corner) +
                                  ") does not close within " + std::to_string(budget) + " steps");
        }
        int e = complex.edge_at(u, departing_label(complex, u, corner));
        forward.push_back({u, e});
        if (e == -1) break;
        u = complex.other_end(e, u);
        if (u == v) {
          closed = true;
          break;
        }
      }

      std::vector<WalkStep> backward;
      if (!closed) {
        u = v;
        for (std::size_t step = 0;; ++step) {
          if (step > budget) throw NonOrientableWalk("open face walk from " + complex.id(v) + " does not terminate");
          int e = complex.edge_at(u, arriving_label(complex, u, corner));
          if (e == -1) break;
          int w = complex.other_end(e, u);
          backward.push_back({w, e});
          u = w;
        }
      }
      std::reverse(backward.begin(), backward.end());
      face.walk = std::move(backward);
      face.walk.insert(face.walk.end(), forward.begin(), forward.end());
      face.closed = closed;

      bool declared = false;
      for (const auto& s : face.walk) {
        assign(s.vertex, corner, face.id);
        declared = declared || complex.is_declared_infinite(s.vertex, corner);
      }
      if (closed) {
        std::size_t len = face.walk.size();
        face.m = len % 2 == 0 ? HalfPerimeter::finite(static_cast<std::int64_t>(len / 2)) : HalfPerimeter::unknown();
      } else {
        face.m = declared ? HalfPerimeter::infinite() : HalfPerimeter::unknown();
      }
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

std::int64_t euler_characteristic(const LineComplex& complex, const FaceSet& faces) {
  return static_cast<std::int64_t>(complex.size()) - static_cast<std::int64_t>(complex.edges().size()) +
         static_cast<std::int64_t>(faces.faces.size());
}

std::vector<Diagnostic> validate(const LineComplex& complex) {
  std::vector<Diagnostic> out;
  const int q = complex.q();
  for (const auto& e : complex.edges()) {
    if (e.label < 1 || e.label > q) {
      out.push_back({"label-range", edge_witness(complex, e), "label outside 1.." + std::to_string(q)});
    }
    if (complex.is_circle(e.a) == complex.is_circle(e.b)) {
      out.push_back({"bipartite", edge_witness(complex, e), "edge joins two vertices of the same parity"});
    } else if (!complex.is_circle(e.a)) {
      out.push_back({"bipartite", edge_witness(complex, e), "first endpoint is not a circle vertex"});
    }
  }
  for (int v = 0; v < static_cast<int>(complex.size()); ++v) {
    std::vector<int> count(q + 1, 0);
    for (int e : complex.incident(v)) {
      int label = complex.edges()[e].label;
      if (label >= 1 && label <= q) ++count[label];
    }
    for (int label = 1; label <= q; ++label) {
      bool frontier = complex.is_frontier(v, label);
      if (count[label] > 1) {
        out.push_back({"degree", complex.id(v), "label " + std::to_string(label) + " appears " +
                                                    std::to_string(count[label]) + " times"});
      } else if (count[label] == 0 && !frontier) {
        out.push_back({"degree", complex.id(v), "label " + std::to_string(label) + " missing"});
      } else if (count[label] == 1 && frontier) {
        out.push_back({"frontier", complex.id(v), "label " + std::to_string(label) + " is both an edge and frontier"});
      }
    }
  }
  for (const auto& s : complex.frontier()) {
    if (s.label < 1 || s.label > q) {
      out.push_back({"label-range", complex.id(s.vertex), "frontier label " + std::to_string(s.label)});
    }
  }
  for (const auto& s : complex.infinite_corners()) {
    if (s.label < 1 || s.label > q) {
      out.push_back({"label-range", complex.id(s.vertex), "infinite corner " + std::to_string(s.label)});
    }
  }
  if (complex.size() == 0) {
    out.push_back({"connected", "", "complex has no vertices"});
    return out;
  }
  std::vector<int> all(complex.size());
  std::iota(all.begin(), all.end(), 0);
  auto components = induced_components(complex.graph(), all);
  if (components.size() > 1) {
    out.push_back({"connected", complex.id(components[1].front()),
                   std::to_string(components.size()) + " components"});
  }
  if (!out.empty()) return out;

  FaceSet faces;
  try {
    faces = trace_faces(complex);
  } catch (const NonOrientableWalk& e) {
    out.push_back({"faces", "", e.what()});
    return out;
  }
  for (const auto& f : faces.faces) {
    const std::string witness = complex.id(f.walk.front().vertex);
    const int a = f.corner;
    const int b = complex.next_label(f.corner);
    int previous = 0;
    for (const auto& step : f.walk) {
      if (step.edge == -1) continue;
      int label = complex.edges()[step.edge].label;
      if ((label != a && label != b) || label == previous) {
        out.push_back({"alternation", witness, "face " + std::to_string(f.id) + " breaks label alternation"});
        break;
      }
      previous = label;
    }
    if (f.closed) {
      if (f.m.kind != HalfPerimeter::Kind::finite) {
        out.push_back({"faces", witness, "closed face " + std::to_string(f.id) + " has odd length"});
      }
      for (const auto& s : f.walk) {
        if (complex.is_declared_infinite(s.vertex, f.corner)) {
          out.push_back({"infinite-corner", complex.id(s.vertex),
                         "corner " + std::to_string(f.corner) + " is declared infinite but its face closes"});
          break;
        }
      }
    }
  }
  bool closed = complex.frontier().empty() && complex.infinite_corners().empty();
  if (closed) {
    auto chi = euler_characteristic(complex, faces);
    if (chi != 2) {
      out.push_back({"euler", complex.id(0), "V - E + F = " + std::to_string(chi) + ", expected 2"});
    }
  }
  return out;
}

std::optional<Rational> vertex_excess(const LineComplex& complex, const FaceSet& faces, int p) {
  if (p < 0 || p >= static_cast<int>(complex.size())) throw UnknownVertex("vertex index " + std::to_string(p));
  Rational sum(2 - complex.q());
  for (int corner = 1; corner <= complex.q(); ++corner) {
    int f = faces.face_at(p, corner);
    if (f == -1) return std::nullopt;
    const auto& m = faces.faces[f].m;
    switch (m.kind) {
      case HalfPerimeter::Kind::unknown:
        return std::nullopt;
      case HalfPerimeter::Kind::infinite:
        break;
      case HalfPerimeter::Kind::finite:
        sum += Rational(1, m.value);
        break;
    }
  }
  return sum;
}

std::optional<Rational> vertex_excess(const LineComplex& complex, const FaceSet& faces, std::string_view p) {
  return vertex_excess(complex, faces, complex.index_of(p));
}

ExcessReport excess_report(const LineComplex& complex, const FaceSet& faces) {
  ExcessReport report;
  for (int v = 0; v < static_cast<int>(complex.size()); ++v) {
    report.per_vertex.push_back(vertex_excess(complex, faces, v));
    if (!report.per_vertex.back()) report.all_resolved = false;
  }
  if (report.all_resolved && !report.per_vertex.empty()) {
    const Rational first = *report.per_vertex.front();
    bool same = std::all_of(report.per_vertex.begin(), report.per_vertex.end(),
                            [&](const auto& e) { return *e == first; });
    if (same) report.regular = first;
  }
  return report;
}

std::vector<int> ball(const LineComplex& complex, int p, int j) {
  if (p < 0 || p >= static_cast<int>(complex.size())) throw UnknownVertex("vertex index " + std::to_string(p));
  auto dist = bfs_distances(complex.graph(), p);
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(dist.size()); ++v) {
    if (dist[v] != -1 && dist[v] <= j) out.push_back(v);
  }
  return out;
}

std::vector<MeanExcessRow> mean_excess_sequence(const LineComplex& complex, const FaceSet& faces, int p, int jmax) {
  if (p < 0 || p >= static_cast<int>(complex.size())) throw UnknownVertex("vertex index " + std::to_string(p));
  auto dist = bfs_distances(complex.graph(), p);
  std::vector<std::vector<int>> shells(std::max(jmax, 0) + 1);
  for (int v = 0; v < static_cast<int>(dist.size()); ++v) {
    if (dist[v] != -1 && dist[v] <= jmax) shells[dist[v]].push_back(v);
  }
  std::vector<MeanExcessRow> rows;
  Rational sum(0);
  std::int64_t n = 0;
  for (int j = 0; j <= jmax; ++j) {
    for (int v : shells[j]) {
      auto e = vertex_excess(complex, faces, v);
      if (!e) {
        throw UnresolvedExcess("j=" + std::to_string(j) + ": vertex " + complex.id(v) +
                               " has an unresolved face; truncation radius too small");
      }
      sum += *e;
      ++n;
    }
    rows.push_back({j, n, sum / n});
  }
  return rows;
}

std::optional<Rational> is_regularly_ramified(const LineComplex& complex, const FaceSet& faces) {
  auto report = excess_report(complex, faces);
  if (!report.all_resolved) {
    for (std::size_t v = 0; v < report.per_vertex.size(); ++v) {
      if (!report.per_vertex[v]) {
        throw UnresolvedExcess("vertex " + complex.id(static_cast<int>(v)) + " has an unresolved face");
      }
    }
  }
  return report.regular;
}

}  // namespace ctl::lc
