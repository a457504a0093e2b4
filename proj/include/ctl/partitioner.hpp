#pragma once

#include "ctl/certificate.hpp"
#include "ctl/graph.hpp"
#include "ctl/line_complex.hpp"
#include "ctl/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctl::part {

/// Connected vertex set of a parent graph. `infinite` marks a piece that runs
/// into the frontier of a truncation and stands in for an infinite component.
struct Subgraph {
  std::vector<int> vertices;  ///< sorted ascending
  bool infinite = false;

  std::size_t size() const { return vertices.size(); }
};

struct Partition {
  std::vector<Subgraph> pieces;
};

/// Partition with piece names as they appear in `.gpt` files and certificates.
struct NamedPartition {
  std::vector<std::string> names;
  Partition partition;
};

/// Splits a finite connected subgraph of a degree-q graph with K >= 4q
/// vertices into two disjoint connected subgraphs of size >= K/(2q) each, by
/// growing a connected set from the smallest vertex and cutting at the first
/// disconnection. Throws TooSmall, NotConnected.
std::pair<Subgraph, Subgraph> split_lemma_par(const Graph& g, int q, const Subgraph& sub);

/// Cuts a connected subgraph into disjoint connected pieces. Piece 0 is
/// finite; every other piece is infinite-flagged or has size in [M, 2qM^2].
/// `frontier` marks vertices touching a truncation frontier; only components
/// of an infinite-flagged `sub` that meet it may keep the infinite flag.
/// Throws TooSmall when a finite sub has fewer than M vertices.
std::vector<Subgraph> partition_lemma_par2(const Graph& g, int q, const Subgraph& sub, std::int64_t M,
                                           std::span<const char> frontier = {});

/// Throws InvalidPartition unless pieces are disjoint, connected and cover 0..n-1.
void check_partition(const Graph& g, const Partition& p);

struct T2Options {
  bool parallel = false;
};

/// Checks #(piece) <= M and sum of E_p <= -eps on every piece, exactly.
/// Infinite-flagged pieces are inconclusive. Throws UnresolvedExcess when an
/// unflagged piece holds a vertex with unresolved excess.
Certificate certify_T2(const lc::LineComplex& complex, const lc::FaceSet& faces, const NamedPartition& partition,
                       const Rational& eps, std::int64_t M, const T2Options& options = {});

enum class TfinalMode { constructive, exhaustive };

struct TfinalOptions {
  TfinalMode mode = TfinalMode::constructive;
  /// Restrict to vertices with resolved excess instead of requiring all.
  bool resolved_only = false;
  bool parallel = false;
};

constexpr std::size_t kExhaustiveLimit = 15;

/// Constructive: partition each component of the region with
/// partition_lemma_par2 and check every piece against -eps with size bound
/// 2qM^2. Exhaustive: check every connected vertex set of size >= M (region
/// of at most kExhaustiveLimit vertices, else TooLarge).
Certificate certify_Tfinal(const lc::LineComplex& complex, const lc::FaceSet& faces, const Rational& eps,
                           std::int64_t M, const TfinalOptions& options = {});

// .gpt partition files: `piece <id> <vertex-id>...`, optional `infinite <id>`.
NamedPartition parse_gpt(std::string_view text, const lc::LineComplex& complex);
std::string serialize_gpt(const NamedPartition& p, const lc::LineComplex& complex);
NamedPartition read_gpt_file(const std::string& path, const lc::LineComplex& complex);
/// Names pieces "P0", "P1", ...
NamedPartition name_pieces(std::vector<Subgraph> pieces);

/// Vertices with a frontier half-edge.
std::vector<char> frontier_mask(const lc::LineComplex& complex);

}  // namespace ctl::part
