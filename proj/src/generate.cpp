#include "ctl/errors.hpp"
#include "ctl/line_complex.hpp"
#include "ctl/tessellation.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

namespace ctl::lc {

namespace {

std::string vid(std::size_t k) { return "v" + std::to_string(k); }

// Dual graph of the reflection tessellation by a tangential polygon whose
// vertex between sides j-1 and j has angle pi/m_j. Tile g is a circle vertex
// when g preserves orientation; side l of a tile carries label l+1.
LineComplex regular_complex(const RegularScheme& s) {
  if (s.q < 2) throw InfeasibleScheme("q must be at least 2");
  if (static_cast<int>(s.m.size()) != s.q) {
    throw InfeasibleScheme("expected " + std::to_string(s.q) + " face degrees, got " + std::to_string(s.m.size()));
  }
  if (s.radius < 0) throw InfeasibleScheme("negative truncation radius");
  Rational excess(2 - s.q);
  std::vector<double> half_angles;
  for (const auto& m : s.m) {
    if (m && *m < 1) throw InfeasibleScheme("face degree must be at least 1");
    if (m) excess += Rational(1, *m);
    half_angles.push_back(m ? std::numbers::pi / (2.0 * *m) : 0.0);
  }
  geom::Model model = excess < Rational(0) ? geom::Model::hyperbolic
                                 : (excess == Rational(0) ? geom::Model::euclidean : geom::Model::spherical);
  auto polygon = geom::make_tangential_polygon(model, half_angles);
  if (!polygon) throw InfeasibleScheme("no polygon with the requested angles exists");
  auto tess = geom::explore(*polygon, s.radius);

  LineComplexBuilder b(s.q);
  for (std::size_t t = 0; t < tess.tiles.size(); ++t) {
    b.add_vertex(vid(t), tess.tiles[t].reflected ? Parity::cross : Parity::circle);
  }
  for (std::size_t t = 0; t < tess.tiles.size(); ++t) {
    const auto& tile = tess.tiles[t];
    for (int l = 0; l < s.q; ++l) {
      int n = tile.neighbors[l];
      if (n == -1) {
        b.add_frontier(vid(t), l + 1);
        continue;
      }
      if (tess.tiles[n].reflected == tile.reflected) {
        throw InfeasibleScheme("reflection orbit is not bipartite at tile " + vid(t));
      }
      if (!tile.reflected) b.add_edge(vid(t), vid(n), l + 1);
    }
    for (int j = 1; j <= s.q; ++j) {
      if (!s.m[j - 1]) b.add_infinite(vid(t), j);
    }
  }
  return std::move(b).build();
}

// Circles c_i and crosses x_i; label 2 shifts the sheet index by one, all
// other labels join c_i to x_i. Faces at corners 1 and 2 are 2n-gons, the
// rest are 2-gons.
LineComplex closed_complex(const ClosedScheme& s) {
  if (s.n < 1) throw InfeasibleScheme("closed complex needs at least one sheet");
  if (s.q < 2) throw InfeasibleScheme("q must be at least 2");
  LineComplexBuilder b(s.q);
  for (int i = 0; i < s.n; ++i) {
    b.add_vertex(vid(2 * i), Parity::circle);
    b.add_vertex(vid(2 * i + 1), Parity::cross);
  }
  for (int i = 0; i < s.n; ++i) {
    for (int label = 1; label <= s.q; ++label) {
      int cross = label == 2 ? (i + 1) % s.n : i;
      b.add_edge(vid(2 * i), vid(2 * cross + 1), label);
    }
  }
  return std::move(b).build();
}

LineComplex complex_from_permutations(int q, const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.front().size());
  LineComplexBuilder b(q);
  for (int i = 0; i < n; ++i) {
    b.add_vertex(vid(2 * i), Parity::circle);
    b.add_vertex(vid(2 * i + 1), Parity::cross);
  }
  for (int label = 1; label <= q; ++label) {
    for (int i = 0; i < n; ++i) b.add_edge(vid(2 * i), vid(2 * perms[label - 1][i] + 1), label);
  }
  return std::move(b).build();
}

// Label l joins c_i to x_{pi_l(i)}. Any tuple of permutations gives a
// consistent face structure; we keep the first connected genus-0 draw.
LineComplex random_closed_complex(const RandomClosedScheme& s) {
  if (s.n < 1 || s.q < 2) throw InfeasibleScheme("random closed complex needs n >= 1 and q >= 2");
  std::mt19937_64 rng(s.seed);
  constexpr int kAttempts = 200000;
  std::vector<std::vector<int>> perms(s.q, std::vector<int>(s.n));
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    for (int l = 0; l < s.q; ++l) {
      std::iota(perms[l].begin(), perms[l].end(), 0);
      if (l > 0) std::shuffle(perms[l].begin(), perms[l].end(), rng);
    }
    auto complex = complex_from_permutations(s.q, perms);
    std::vector<int> all(complex.size());
    std::iota(all.begin(), all.end(), 0);
    if (!is_connected_subset(complex.graph(), all)) continue;
    auto faces = trace_faces(complex);
    if (euler_characteristic(complex, faces) == 2) return complex;
  }
  throw InfeasibleScheme("no planar complex found for n=" + std::to_string(s.n) + ", q=" + std::to_string(s.q));
}

}  // namespace

LineComplex generate(const Scheme& scheme) {
  return std::visit(
      [](const auto& s) -> LineComplex {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RegularScheme>) {
          return regular_complex(s);
        } else if constexpr (std::is_same_v<T, ClosedScheme>) {
          return closed_complex(s);
        } else if constexpr (std::is_same_v<T, RandomClosedScheme>) {
          return random_closed_complex(s);
        } else {
          switch (s.kind) {
            case ClassicKind::exp:
              return regular_complex({2, {std::nullopt, std::nullopt}, s.radius});
            case ClassicKind::sine:
              return regular_complex({3, {2, 2, std::nullopt}, s.radius});
            case ClassicKind::punctured_sphere_cover:
              return regular_complex({3, {std::nullopt, std::nullopt, std::nullopt}, s.radius});
          }
          throw InfeasibleScheme("unknown classic scheme");
        }
      },
      scheme);
}

}  // namespace ctl::lc
