#include "ctl/errors.hpp"
#include "ctl/text_lines.hpp"
#include "ctl/tiling.hpp"

#include <charconv>
#include <sstream>

namespace ctl::tiling {

namespace {

std::string real(double x) {
  char buf[40];
  auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

// Builder errors (unknown ids, duplicates, bad angles) become positioned parse errors.
template <class F>
void at(const TokenLine& line, const Token& token, F&& f) {
  try {
    f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(line.number, token.column, e.what());
  }
}

}  // namespace

Tiling parse_tlg(std::string_view text) {
  TilingBuilder b;
  for (const auto& line : tokenize_lines(text)) {
    const auto& head = line.tokens[0];
    if (head.text == "vertex") {
      expect_arity(line, 3);
      std::optional<double> T;
      if (line.tokens[2].text != "inf") T = parse_double_token(line, line.tokens[2]);
      at(line, line.tokens[1], [&] { b.add_vertex(std::string(line.tokens[1].text), T); });
    } else if (head.text == "tri") {
      if (line.tokens.size() != 12 && line.tokens.size() != 13) {
        throw ParseError(line.number, head.column, "'tri' expects 11 or 12 fields");
      }
      Triangle t;
      t.id = std::string(line.tokens[1].text);
      std::array<std::string, 3> ids;
      for (int i = 0; i < 3; ++i) {
        ids[i] = std::string(line.tokens[2 + i].text);
        t.angle[i] = parse_double_token(line, line.tokens[5 + i]);
        t.length[i] = parse_double_token(line, line.tokens[8 + i]);
      }
      const auto& ktok = line.tokens[11];
      if (!ktok.text.starts_with("k=")) throw ParseError(line.number, ktok.column, "expected k=<curvature>");
      t.k = parse_double_token(line, ktok, 2);
      if (line.tokens.size() == 13) {
        const auto& wtok = line.tokens[12];
        if (!wtok.text.starts_with("omega=")) throw ParseError(line.number, wtok.column, "expected omega=<value>");
        t.omega = parse_double_token(line, wtok, 6);
      }
      at(line, line.tokens[1], [&] { b.add_triangle(std::move(t), ids); });
    } else if (head.text == "cluster") {
      if (line.tokens.size() < 3) throw ParseError(line.number, head.column, "'cluster' needs an id and triangles");
      std::vector<std::string> tris;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        std::string id(line.tokens[i].text);
        at(line, line.tokens[i], [&] {
          if (!b.has_triangle(id)) throw MissingCluster("unknown triangle '" + id + "'");
        });
        tris.push_back(std::move(id));
      }
      at(line, line.tokens[1], [&] { b.add_cluster(std::string(line.tokens[1].text), tris); });
    } else {
      throw ParseError(line.number, head.column, "unknown record '" + std::string(head.text) + "'");
    }
  }
  return std::move(b).build();
}

std::string serialize_tlg(const Tiling& tiling) {
  std::ostringstream out;
  for (const auto& v : tiling.vertices()) {
    out << "vertex " << v.id << " " << (v.total_angle ? real(*v.total_angle) : "inf") << "\n";
  }
  for (const auto& t : tiling.triangles()) {
    out << "tri " << t.id;
    for (int v : t.v) out << " " << tiling.vertices()[v].id;
    for (double a : t.angle) out << " " << real(a);
    for (double l : t.length) out << " " << real(l);
    out << " k=" << real(t.k);
    if (t.omega) out << " omega=" << real(*t.omega);
    out << "\n";
  }
  for (const auto& c : tiling.clusters()) {
    out << "cluster " << c.id;
    for (int t : c.triangles) out << " " << tiling.triangles()[t].id;
    out << "\n";
  }
  return out.str();
}

Tiling read_tlg_file(const std::string& path) { return parse_tlg(read_text_file(path)); }

}  // namespace ctl::tiling
