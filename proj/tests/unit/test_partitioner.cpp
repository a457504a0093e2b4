#include "ctl/errors.hpp"
#include "ctl/partitioner.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace ctl;
using namespace ctl::part;

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) { return g.adjacency; }

Subgraph whole(std::size_t n) {
  Subgraph s;
  s.vertices.resize(n);
  std::iota(s.vertices.begin(), s.vertices.end(), 0);
  return s;
}

}  // namespace

TEST_CASE("split lemma on random bounded-degree graphs") {
  std::mt19937_64 rng(ctl_test::seed() + 7);
  for (int trial = 0; trial < 200; ++trial) {
    int q = 2 + trial % 4;
    int K = 4 * q + static_cast<int>(rng() % (200 - 4 * q + 1));
    auto g = ctl_test::random_bounded_graph(rng, K, q, K / 3);
    auto [a, b] = split_lemma_par(g, q, whole(K));
    CHECK(ctl_test::connected(adjacency(g), a.vertices));
    CHECK(ctl_test::connected(adjacency(g), b.vertices));
    std::vector<int> all(a.vertices);
    all.insert(all.end(), b.vertices.begin(), b.vertices.end());
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.size() == static_cast<std::size_t>(K));
    CHECK(2 * q * static_cast<int>(a.size()) >= K);
    CHECK(2 * q * static_cast<int>(b.size()) >= K);
  }
}

TEST_CASE("split lemma preconditions") {
  std::mt19937_64 rng(1);
  auto g = ctl_test::random_bounded_graph(rng, 11, 3, 0);
  CHECK_THROWS_AS(split_lemma_par(g, 3, whole(11)), TooSmall);
  Graph two(13);  // no edges: disconnected
  two.finalize();
  CHECK_THROWS_AS(split_lemma_par(two, 3, whole(13)), NotConnected);
}

TEST_CASE("K = 4q: both halves have at least 2 vertices") {
  std::mt19937_64 rng(5);
  for (int q = 2; q <= 5; ++q) {
    auto g = ctl_test::random_bounded_graph(rng, 4 * q, q, 2);
    auto [a, b] = split_lemma_par(g, q, whole(4 * q));
    CHECK(a.size() >= 2);
    CHECK(b.size() >= 2);
  }
}

TEST_CASE("partition lemma piece bounds on finite graphs") {
  std::mt19937_64 rng(ctl_test::seed() + 11);
  for (int trial = 0; trial < 100; ++trial) {
    int q = 2 + trial % 4;
    std::int64_t M = 2 + static_cast<std::int64_t>(rng() % 4);
    int n = static_cast<int>(M) + static_cast<int>(rng() % 180);
    auto g = ctl_test::random_bounded_graph(rng, n, q, n / 4);
    auto pieces = partition_lemma_par2(g, q, whole(n), M);
    Partition p{pieces};
    CHECK_NOTHROW(check_partition(g, p));
    for (const auto& s : pieces) {
      CHECK_FALSE(s.infinite);
      CHECK(static_cast<std::int64_t>(s.size()) >= M);
      CHECK(static_cast<std::int64_t>(s.size()) <= 2 * q * M * M);
    }
  }
}

TEST_CASE("partition lemma: sub of size M is returned whole") {
  std::mt19937_64 rng(3);
  auto g = ctl_test::random_bounded_graph(rng, 5, 3, 1);
  auto pieces = partition_lemma_par2(g, 3, whole(5), 5);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].size() == 5);
  CHECK_THROWS_AS(partition_lemma_par2(g, 3, whole(5), 6), TooSmall);
}

TEST_CASE("partition lemma on a truncation flags frontier pieces") {
  auto c = lc::generate(lc::RegularScheme{3, {std::nullopt, std::nullopt, std::nullopt}, 6});
  auto mask = frontier_mask(c);
  Subgraph s = whole(c.size());
  s.infinite = true;
  auto pieces = partition_lemma_par2(c.graph(), 3, s, 2, mask);
  CHECK_NOTHROW(check_partition(c.graph(), Partition{pieces}));
  CHECK_FALSE(pieces[0].infinite);
  bool any_infinite = false;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].infinite) {
      any_infinite = true;
      bool touches = false;
      for (int v : pieces[i].vertices) touches = touches || mask[v];
      CHECK(touches);
    } else {
      CHECK(pieces[i].size() >= 2);
      CHECK(pieces[i].size() <= 36);
    }
  }
  CHECK(any_infinite);
}

TEST_CASE("certify_T2: all-infinite q=3 complex with singletons") {
  auto c = lc::generate(lc::ClassicScheme{lc::ClassicKind::punctured_sphere_cover, 3});
  auto f = lc::trace_faces(c);
  std::vector<Subgraph> singles;
  for (std::size_t v = 0; v < c.size(); ++v) singles.push_back({{static_cast<int>(v)}, false});
  auto p = name_pieces(singles);
  auto cert = certify_T2(c, f, p, Rational(1), 1);
  CHECK(cert.verdict == Verdict::hyperbolic);
  CHECK(cert.annotation.has_value());
  for (const auto& piece : cert.pieces) CHECK(*piece.exact_sum == Rational(-1));
  // the same check run concurrently merges to the same certificate
  auto par = certify_T2(c, f, p, Rational(1), 1, {true});
  CHECK(to_json(par) == to_json(cert));
  CHECK(certify_T2(c, f, p, Rational(3, 2), 1).verdict == Verdict::conditions_violated);
}

TEST_CASE("certify_T2: flat complex is violated with a witness") {
  auto c = lc::generate(lc::ClassicScheme{lc::ClassicKind::sine, 2});
  auto f = lc::trace_faces(c);
  std::vector<Subgraph> singles;
  for (int v = 0; v < static_cast<int>(c.size()); ++v) {
    singles.push_back({{v}, !lc::vertex_excess(c, f, v).has_value()});
  }
  auto cert = certify_T2(c, f, name_pieces(singles), Rational(1, 100), 1);
  CHECK(cert.verdict == Verdict::conditions_violated);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->condition == "M2'");
}

TEST_CASE("certify_T2 rejects unresolved pieces and bad eps") {
  auto c = lc::generate(lc::RegularScheme{3, {7, 7, 7}, 2});
  auto f = lc::trace_faces(c);
  auto p = name_pieces({whole(c.size())});
  CHECK_THROWS_AS(certify_T2(c, f, p, Rational(1), 100), UnresolvedExcess);
  CHECK_THROWS_AS(certify_T2(c, f, p, Rational(0), 100), DomainError);
}

TEST_CASE("certify_Tfinal constructive on the all-infinite complex") {
  auto c = lc::generate(lc::ClassicScheme{lc::ClassicKind::punctured_sphere_cover, 3});
  auto f = lc::trace_faces(c);
  auto cert = certify_Tfinal(c, f, Rational(1), 2);
  CHECK(cert.verdict == Verdict::hyperbolic);
  for (const auto& piece : cert.pieces) CHECK(*piece.exact_sum <= Rational(-1));
}

TEST_CASE("exhaustive mode refuses large regions") {
  auto c = lc::generate(lc::ClassicScheme{lc::ClassicKind::punctured_sphere_cover, 4});
  REQUIRE(c.size() > kExhaustiveLimit);
  auto f = lc::trace_faces(c);
  TfinalOptions opt;
  opt.mode = TfinalMode::exhaustive;
  CHECK_THROWS_AS(certify_Tfinal(c, f, Rational(1), 2, opt), TooLarge);
}

TEST_CASE("gpt round trip and errors") {
  auto c = lc::generate(lc::ClosedScheme{3, 3});
  auto p = name_pieces(partition_lemma_par2(c.graph(), 3, whole(c.size()), 2));
  auto text = serialize_gpt(p, c);
  CHECK(serialize_gpt(parse_gpt(text, c), c) == text);
  CHECK_THROWS_AS(parse_gpt("piece A v0\npiece A v1\n", c), ParseError);
  CHECK_THROWS_AS(parse_gpt("piece A nope\n", c), ParseError);
  CHECK_THROWS_AS(parse_gpt("piece A v0\ninfinite B\n", c), ParseError);
}
