#pragma once

#include "ctl/hnat.hpp"
#include "ctl/rational.hpp"
#include "ctl/tiling.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ctl::example {

/// Natural logarithm of a length stored as a_pi * pi + b.
struct LogLength {
  HNat a_pi;
  Rational b;
};

nlohmann::ordered_json to_json(const LogLength& x);

/// Triangles of one kind in one stage. Every member has area <= 2^-log2_area_neg.
struct TriangleClass {
  std::string kind;  ///< "core", "connector" or "fan"
  int stage = 0;
  HNat count;
  HNat log2_area_neg;
};

/// Stage n: the annulus between C(R_n) and C(R_{n+1}) (stage 0 is the core triangle).
struct Stage {
  int n = 0;
  LogLength logR;       ///< log R_n
  LogLength logR_next;  ///< log R_{n+1}
  HNat t;               ///< vertices over C(R_n)
  HNat k;               ///< M_n = 2^k
  HNat M;
  HNat sheets;          ///< s_n = t_1 + ... + t_n + 1
  HNat delta_a;         ///< (log R_{n+1} - log R_n) / pi
  std::vector<TriangleClass> triangles;
};

struct GrowthRecord {
  double eps = 0;
  std::uint64_t c_eps = 0;  ///< least c >= 0 with 2^-c <= eps
  int n_max = 0;
  /// Vertices of the core triangle inscribed in C(R_1): area <= 2^-c_eps.
  TriangleClass core;
  std::vector<Stage> stages;  ///< stages[i].n == i + 1
  HNat t_final;               ///< vertices over C(R_{n_max + 1})
  /// Branch points all have local degree 2, so total angle 4 pi.
  static constexpr int branch_local_degree = 2;

  const Stage& stage(int n) const;  ///< throws StageMissing
};

constexpr int kMaxStages = 8;

/// Minimal radii: log R_1 = -(1 + c_eps)/2, log R_{n+1} = log R_n + 2 pi n s_n.
/// DomainError unless eps > 0 and 1 <= n_max <= kMaxStages.
GrowthRecord build(double eps, int n_max);

/// (log R_{n+1} - log R_n) / (2 pi s_n), exact.
Rational module_lower_bound(const GrowthRecord& record, int n);

struct HurwitzAudit {
  HNat sheets;
  HNat branch_count;
  std::int64_t euler_char;  ///< sheets * chi(disk) - sum (e_p - 1)
  /// V + F == E + 1 for the triangulated disk through stage n.
  bool combinatorial_disk;
};

/// n = 0 is the core disk over D(R_1).
HurwitzAudit riemann_hurwitz_audit(const GrowthRecord& record, int n);

/// True when every triangle class has area bound 2^-d <= eps.
bool log_areas_within_eps(const GrowthRecord& record);

/// Planar realization with the same combinatorics through stage n, each fan
/// of M_i triangles capped at `fan_cap`. Radii double per stage; corner
/// angles and sides come from that realization, k = 0, every vertex has
/// total angle 4 pi, clusters are singletons.
tiling::Tiling export_tiling(const GrowthRecord& record, int n, int fan_cap = 16);

nlohmann::ordered_json to_json(const GrowthRecord& record);

}  // namespace ctl::example
