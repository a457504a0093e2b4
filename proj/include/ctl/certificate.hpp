#pragma once

#include "ctl/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctl {

enum class Verdict { hyperbolic, conditions_violated, inconclusive };

std::string to_string(Verdict v);

enum class PieceStatus { ok, violated, inconclusive };

struct PieceReport {
  std::string id;
  std::vector<std::string> members;
  std::int64_t size = 0;
  /// Exact sum for graph pieces, real sum (curvature) for tiling clusters.
  std::optional<Rational> exact_sum;
  std::optional<double> real_sum;
  PieceStatus status = PieceStatus::ok;
  std::vector<std::string> violated;
};

struct Witness {
  std::string piece;
  std::string condition;
  std::string detail;
  std::vector<std::string> members;
};

/// Verdict plus enough data to re-check it by hand.
struct Certificate {
  Verdict verdict = Verdict::inconclusive;
  std::string theorem;
  int q = 0;
  std::string eps;
  std::int64_t M = 0;
  std::vector<PieceReport> pieces;
  std::optional<Witness> witness;
  /// Distinct violated conditions in first-seen order, e.g. "M2'" or "R1".
  std::vector<std::string> violations;
  std::optional<std::string> annotation;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const Certificate& c);

}  // namespace ctl
