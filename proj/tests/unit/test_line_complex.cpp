#include "ctl/errors.hpp"
#include "ctl/line_complex.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ctl;
using namespace ctl::lc;

namespace {

LineComplex hexagon_two_vertex() {
  // q=2 closed complex: one circle, one cross, two edges
  return parse_spg("spg 1 q=2\nv a o\nv b x\ne a b 1\ne a b 2\n");
}

}  // namespace

TEST_CASE("spg parser reports line and column") {
  CHECK_THROWS_AS(parse_spg("spg 1 q=3\nv a o\ne a zz 1\n"), ParseError);
  try {
    parse_spg("spg 1 q=3\nv a o\nv b x\ne a b one\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_spg("nonsense"), ParseError);
  // out-of-range labels parse but fail validation
  CHECK_FALSE(validate(parse_spg("spg 1 q=3\nv a o\nv b x\ne a b 7\n")).empty());
}

TEST_CASE("two-vertex sphere has two 1-gons") {
  auto g = hexagon_two_vertex();
  CHECK(validate(g).empty());
  auto f = trace_faces(g);
  CHECK(f.faces.size() == 2);
  CHECK(euler_characteristic(g, f) == 2);
  for (int v = 0; v < 2; ++v) CHECK(*vertex_excess(g, f, v) == Rational(2));
}

TEST_CASE("closed(n, 3) excess matches the permutation oracle") {
  for (int n = 1; n <= 6; ++n) {
    auto g = generate(ClosedScheme{n, 3});
    auto f = trace_faces(g);
    auto oracle = ctl_test::closed_excess(g);
    CHECK(euler_characteristic(g, f) == 2);
    for (std::size_t v = 0; v < g.size(); ++v) {
      CHECK(*vertex_excess(g, f, static_cast<int>(v)) == oracle[v]);
      CHECK(oracle[v] == Rational(2, n));
    }
  }
}

TEST_CASE("random closed complexes: excess oracle agreement and total 4") {
  std::mt19937_64 rng(ctl_test::seed());
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    int q = 3 + static_cast<int>(rng() % 2);
    auto g = generate(RandomClosedScheme{n, q, rng()});
    auto f = trace_faces(g);
    auto oracle = ctl_test::closed_excess(g);
    Rational total(0);
    for (std::size_t v = 0; v < g.size(); ++v) {
      auto e = vertex_excess(g, f, static_cast<int>(v));
      REQUIRE(e);
      CHECK(*e == oracle[v]);
      total += *e;
    }
    // sum of E_p over a sphere is 2 chi = 4
    CHECK(total == Rational(4));
  }
}

TEST_CASE("mean excess sequence agrees with a BFS oracle") {
  auto g = generate(ClosedScheme{5, 3});
  auto f = trace_faces(g);
  auto rows = mean_excess_sequence(g, f, 0, 6);
  auto E = ctl_test::closed_excess(g);
  for (const auto& r : rows) CHECK(r.mean == ctl_test::ball_mean(g, E, 0, r.j));
}

TEST_CASE("classic schemes have the expected excess") {
  auto check = [](ClassicKind k, Rational expected) {
    auto g = generate(ClassicScheme{k, 3});
    auto f = trace_faces(g);
    auto r = excess_report(g, f);
    int resolved = 0;
    for (const auto& e : r.per_vertex) {
      if (e) {
        CHECK(*e == expected);
        ++resolved;
      }
    }
    CHECK(resolved > 0);
  };
  check(ClassicKind::exp, Rational(0));
  check(ClassicKind::sine, Rational(0));
  check(ClassicKind::punctured_sphere_cover, Rational(-1));
}

TEST_CASE("regular hyperbolic scheme: interior vertices resolved, frontier unknown") {
  auto g = generate(RegularScheme{3, {3, 4, 4}, 7});
  auto f = trace_faces(g);
  auto r = excess_report(g, f);
  CHECK_FALSE(r.all_resolved);
  bool any = false;
  for (const auto& e : r.per_vertex) {
    if (e) {
      CHECK(*e == Rational(-1, 6));
      any = true;
    }
  }
  CHECK(any);
  CHECK_THROWS_AS(is_regularly_ramified(g, f), UnresolvedExcess);
}

TEST_CASE("spherical scheme closes up") {
  auto g = generate(RegularScheme{3, {2, 3, 5}, 40});
  CHECK(g.frontier().empty());
  CHECK(g.size() == 120);
  auto f = trace_faces(g);
  CHECK(euler_characteristic(g, f) == 2);
  CHECK(*is_regularly_ramified(g, f) == Rational(1, 30));
}

TEST_CASE("infeasible scheme is rejected") {
  CHECK_THROWS_AS(generate(RegularScheme{3, {2, 2}, 2}), Error);
  CHECK_THROWS_AS(generate(ClosedScheme{0, 3}), Error);
}

TEST_CASE("spg round trip is exact") {
  std::mt19937_64 rng(ctl_test::seed() + 1);
  std::vector<LineComplex> corpus;
  corpus.push_back(generate(ClosedScheme{4, 3}));
  corpus.push_back(generate(RegularScheme{3, {7, 7, 7}, 2}));
  corpus.push_back(generate(ClassicScheme{ClassicKind::exp, 3}));
  corpus.push_back(generate(RandomClosedScheme{5, 4, rng()}));
  for (const auto& g : corpus) {
    auto text = serialize_spg(g);
    CHECK(serialize_spg(parse_spg(text)) == text);
  }
}

TEST_CASE("validate flags broken complexes") {
  auto g = parse_spg("spg 1 q=3\nv a o\nv b x\nv c o\ne a b 1\ne c b 1\n");
  auto d = validate(g);
  CHECK_FALSE(d.empty());
}

TEST_CASE("ball grows by graph distance") {
  auto g = generate(ClosedScheme{6, 3});
  auto adj = ctl_test::edge_adjacency(g);
  auto d = ctl_test::bfs(adj, 0);
  for (int j = 0; j <= 4; ++j) {
    auto b = ball(g, 0, j);
    std::size_t expected = 0;
    for (int x : d) expected += (x >= 0 && x <= j) ? 1 : 0;
    CHECK(b.size() == expected);
  }
}
