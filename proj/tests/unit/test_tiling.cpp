#include "ctl/errors.hpp"
#include "ctl/tiling.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctl;
using namespace ctl::tiling;
using std::numbers::pi;

namespace {

// One equilateral triangle with prescribed total angles and model curvature.
Tiling single(double angle, std::optional<double> T1, std::optional<double> T2, std::optional<double> T3,
              double k = 0.0, double side = 1.0) {
  TilingBuilder b;
  b.add_vertex("a", T1).add_vertex("b", T2).add_vertex("c", T3);
  Triangle t;
  t.id = "t";
  t.angle = {angle, angle, angle};
  t.length = {side, side, side};
  t.k = k;
  b.add_triangle(t, {"a", "b", "c"});
  b.singleton_clusters();
  return std::move(b).build();
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("angular curvature of simple configurations") {
  // flat equilateral in the plane: K = 0
  CHECK(angular_curvature(single(pi / 3, 2 * pi, 2 * pi, 2 * pi), 0) == doctest::Approx(0.0).epsilon(1e-12));
  // a vertex at infinity contributes nothing
  CHECK(angular_curvature(single(pi / 3, 2 * pi, 2 * pi, std::nullopt), 0) ==
        doctest::Approx(-pi / 3).epsilon(1e-12));
  // all three at infinity: -pi
  CHECK(angular_curvature(single(pi / 3, std::nullopt, std::nullopt, std::nullopt), 0) == doctest::Approx(-pi));
  // total angle 4 pi halves each share
  CHECK(angular_curvature(single(pi / 3, 4 * pi, 4 * pi, 4 * pi), 0) == doctest::Approx(-pi / 2));
}

TEST_CASE("check_theorem_T flags each condition") {
  SUBCASE("hyperbolic") {
    auto t = single(pi / 3, std::nullopt, std::nullopt, std::nullopt);
    auto c = check_theorem_T(t, 0.5, 1);
    CHECK(c.verdict == Verdict::hyperbolic);
    CHECK(c.extra.contains("ledger"));
  }
  SUBCASE("curvature not negative enough") {
    auto c = check_theorem_T(single(pi / 3, 2 * pi, 2 * pi, 2 * pi), 0.1, 1);
    CHECK(c.verdict == Verdict::conditions_violated);
    CHECK(has(c.violations, "M2"));
  }
  SUBCASE("small angle") {
    auto c = check_theorem_T(single(0.05, std::nullopt, std::nullopt, std::nullopt), 0.1, 1);
    CHECK(has(c.violations, "R1"));
  }
  SUBCASE("long spherical perimeter") {
    // spherical k = 1, perimeter 3*2.2 > 2 pi - eps
    auto c = check_theorem_T(single(2.0, std::nullopt, std::nullopt, std::nullopt, 1.0, 2.2), 0.1, 1);
    CHECK(has(c.violations, "R2"));
    CHECK_FALSE(has(c.violations, "R1"));
  }
  SUBCASE("spherical triangle with short perimeter passes R2") {
    auto c = check_theorem_T(single(1.2, std::nullopt, std::nullopt, std::nullopt, 1.0, 1.0), 0.1, 1);
    CHECK_FALSE(has(c.violations, "R2"));
  }
  SUBCASE("cluster too big") {
    TilingBuilder b;
    b.add_vertex("a", std::nullopt).add_vertex("b", std::nullopt).add_vertex("c", std::nullopt);
    b.add_vertex("d", std::nullopt);
    Triangle t{"t1", {}, {1, 1, 1}, {1, 1, 1}, 0.0, {}, {}};
    b.add_triangle(t, {"a", "b", "c"});
    t.id = "t2";
    b.add_triangle(t, {"c", "b", "d"});
    b.add_cluster("C", {"t1", "t2"});
    auto c = check_theorem_T(std::move(b).build(), 0.5, 1);
    CHECK(has(c.violations, "M1"));
  }
}

TEST_CASE("missing cluster is an error") {
  TilingBuilder b;
  b.add_vertex("a", 2 * pi).add_vertex("b", 2 * pi).add_vertex("c", 2 * pi);
  Triangle t{"t", {}, {1, 1, 1}, {1, 1, 1}, 0.0, {}, {}};
  b.add_triangle(t, {"a", "b", "c"});
  auto tl = std::move(b).build();
  CHECK_THROWS_AS(check_theorem_T(tl, 0.1, 1), MissingCluster);
  CHECK_THROWS_AS(parse_tlg("vertex a inf\ncluster C nope\n"), ParseError);
}

TEST_CASE("regular tiling: curvature, Gauss-Bonnet style sums and final check") {
  for (int d = 7; d <= 9; ++d) {
    auto T = regular_tiling(d, 5);
    double expected = 6 * pi / d - pi;
    double sum = 0;
    for (std::size_t t = 0; t < T.triangles().size(); ++t) {
      CHECK(angular_curvature(T, static_cast<int>(t)) == doctest::Approx(expected).epsilon(1e-12));
      sum += angular_curvature(T, static_cast<int>(t));
    }
    CHECK(sum == doctest::Approx(expected * static_cast<double>(T.triangles().size())));
    // interior vertices have exactly d incident triangles with angle sum 2 pi
    int interior = 0;
    for (std::size_t v = 0; v < T.vertices().size(); ++v) {
      if (T.star(static_cast<int>(v)).size() == static_cast<std::size_t>(d)) {
        CHECK(incident_angle_sum(T, static_cast<int>(v)) == doctest::Approx(2 * pi));
        ++interior;
      }
    }
    CHECK(interior > 0);
    auto c = check_final_tiling_theorem(T, 0.1, 2);
    CHECK(c.verdict == Verdict::hyperbolic);
  }
  // d = 6 is flat: curvature zero
  CHECK(check_theorem_T(regular_tiling(6, 2), 0.1, 1).verdict == Verdict::conditions_violated);
}

TEST_CASE("curvature is invariant under relabeling") {
  auto T = regular_tiling(7, 2);
  auto text = serialize_tlg(T);
  // rename every vertex and triangle id by prefixing, keep geometry
  std::string renamed;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok, out;
    bool first = true;
    while (ls >> tok) {
      if (!first && (tok[0] == 'p' || tok[0] == 't')) tok = "z" + tok;
      first = false;
      out += (out.empty() ? "" : " ") + tok;
    }
    renamed += out + "\n";
  }
  auto R = parse_tlg(renamed);
  REQUIRE(R.triangles().size() == T.triangles().size());
  for (std::size_t t = 0; t < T.triangles().size(); ++t) {
    int r = R.triangle_index("z" + T.triangles()[t].id);
    CHECK(angular_curvature(R, r) == doctest::Approx(angular_curvature(T, static_cast<int>(t))));
  }
  CHECK(to_json(check_theorem_T(R, 1.0 / 7, 1))["verdict"] == to_json(check_theorem_T(T, 1.0 / 7, 1))["verdict"]);
}

TEST_CASE("tlg round trip is byte-stable and errors carry positions") {
  auto T = regular_tiling(8, 2);
  auto text = serialize_tlg(T);
  CHECK(serialize_tlg(parse_tlg(text)) == text);
  try {
    parse_tlg("vertex a inf\nvertex b inf\nvertex c inf\ntri t a b q 1 1 1 1 1 1 k=0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_tlg("vertex a inf\nvertex b inf\nvertex c inf\ntri t a b c 1 1 1 1 1 1 k0\n"), ParseError);
  CHECK_THROWS_AS(parse_tlg("bogus\n"), ParseError);
}

TEST_CASE("euler identity against the boundary walk") {
  auto T = regular_tiling(7, 4);
  std::mt19937_64 rng(ctl_test::seed() + 3);
  for (int i = 0; i < 30; ++i) {
    auto D = ctl_test::grow_disk(T, rng, 1 + static_cast<int>(rng() % 40));
    auto e = euler_boundary_identity(T, D);
    auto w = ctl_test::boundary_walk(T, D);
    CHECK(e.residual == 0);
    CHECK(w.single_cycle);
    CHECK(e.boundary_edges == w.e0);
    CHECK(e.interior_vertices == w.interior);
  }
}

TEST_CASE("non-disks are rejected") {
  auto T = regular_tiling(7, 3);
  // two triangles sharing only a vertex
  int v = -1;
  for (std::size_t i = 0; i < T.vertices().size(); ++i) {
    if (T.star(static_cast<int>(i)).size() == 7) {
      v = static_cast<int>(i);
      break;
    }
  }
  REQUIRE(v >= 0);
  const auto& s = T.star(v);
  std::vector<int> pinched;
  for (int a : s) {
    for (int b : s) {
      bool adjacent = false;
      for (int n : T.neighbors(a)) adjacent = adjacent || n == b;
      if (a != b && !adjacent && pinched.empty()) pinched = {a, b};
    }
  }
  REQUIRE(pinched.size() == 2);
  CHECK_FALSE(is_disk(T, pinched));
  CHECK_THROWS_AS(euler_boundary_identity(T, pinched), NotSimplyConnected);
  // full star of an interior vertex is a disk with one interior vertex
  auto e = euler_boundary_identity(T, s);
  CHECK(e.interior_vertices == 1);
  CHECK(e.boundary_edges == 7);
  std::vector<int> ring(s.begin(), s.end());
  CHECK_THROWS_AS(euler_boundary_identity(T, std::vector<int>{}), NotSimplyConnected);
}

TEST_CASE("half-sheet curvature identity") {
  std::vector<lc::FaceDegree> m{2, 3, 5};
  auto h = half_sheet_curvature_identity(3, m);
  CHECK(h.residual == Rational(0));
  CHECK(h.excess == Rational(1, 30));
  CHECK(h.sum_K_numeric == doctest::Approx(pi / 30).epsilon(1e-12));
  std::vector<lc::FaceDegree> inf(4, std::nullopt);
  auto h4 = half_sheet_curvature_identity(4, inf);
  CHECK(h4.excess == Rational(-2));
  CHECK(h4.residual == Rational(0));
  CHECK_THROWS_AS(half_sheet_curvature_identity(2, std::vector<lc::FaceDegree>{1, 1}), DomainError);
}

TEST_CASE("constant ledger") {
  auto L = constant_ledger_pi(Rational(1, 6), 1, 0.0);
  REQUIRE(L.get("C_length").exact.has_value());
  CHECK(*L.get("C_length").exact == Rational(2));
  CHECK_THROWS_AS(constant_ledger(0.0, 1, 0.0), DomainError);
  CHECK_THROWS_AS(constant_ledger(0.5, 0, 0.0), DomainError);
  auto a = constant_ledger(0.3, 3, 0.0);
  for (const auto& e : a.entries) {
    CHECK(std::isfinite(e.value));
    CHECK(e.value > 0);
    CHECK_FALSE(e.provenance.empty());
  }
}
