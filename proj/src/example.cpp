#include "ctl/example.hpp"

#include "ctl/errors.hpp"

#include <Eigen/Core>

#include <cmath>
#include <numbers>

namespace ctl::example {

namespace {

constexpr double kPi = std::numbers::pi;

HNat u(std::uint64_t x) { return HNat::from_u64(x); }

std::uint64_t least_c(double eps) {
  for (std::uint64_t c = 0; c < 1100; ++c) {
    if (std::ldexp(1.0, -static_cast<int>(c)) <= eps) return c;
  }
  throw DomainError("eps too small");
}

nlohmann::ordered_json to_json(const TriangleClass& c) {
  return {{"kind", c.kind},
          {"stage", c.stage},
          {"count", c.count.to_string()},
          {"log2_area_bound", "-" + c.log2_area_neg.to_string()}};
}

}  // namespace

nlohmann::ordered_json to_json(const LogLength& x) {
  return {{"a_pi", x.a_pi.to_string()}, {"b", {{"num", x.b.numerator()}, {"den", x.b.denominator()}}}};
}

const Stage& GrowthRecord::stage(int n) const {
  if (n < 1 || n > static_cast<int>(stages.size())) throw StageMissing("stage " + std::to_string(n) + " not built");
  return stages[n - 1];
}

GrowthRecord build(double eps, int n_max) {
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (n_max < 1 || n_max > kMaxStages) throw DomainError("n_max must lie in [1, 8]");
  GrowthRecord rec;
  rec.eps = eps;
  rec.c_eps = least_c(eps);
  rec.n_max = n_max;
  // Core triangle in C(R_1): area <= (3 sqrt 3 / 4) R_1^2 < 2 e^{-(1+c)} < 2^{-c}.
  rec.core = {"core", 0, u(1), u(rec.c_eps)};
  const Rational b(-static_cast<std::int64_t>(1 + rec.c_eps), 2);

  HNat a;            // log R_n = a pi + b
  HNat t = u(3);     // t_n
  HNat sum_t = u(3); // t_1 + ... + t_n
  for (int n = 1; n <= n_max; ++n) {
    Stage s;
    s.n = n;
    s.logR = {a, b};
    s.t = t;
    s.sheets = sum_t + u(1);
    s.delta_a = s.sheets.times(2 * static_cast<std::uint64_t>(n));
    HNat a_next = a + s.delta_a;
    s.logR_next = {a_next, b};
    // Fan triangle: area <= (1/2) chord * 2 R_{n+1} <= 2 pi s_n R_{n+1}^2 / M_n, and
    // 2 log2 R_{n+1} <= 16 a_{n+1}, so log2 area <= 3 + bitlen(s_n) + 16 a_{n+1} - k_n.
    const HNat bits = s.sheets.bit_length();
    s.k = u(4 + 2 * rec.c_eps) + bits.times(2) + a_next.times(16);
    s.M = HNat::pow2(s.k);
    s.triangles.push_back({"connector", n, t, u(rec.c_eps)});
    s.triangles.push_back({"fan", n, t.shifted(s.k), u(1 + 2 * rec.c_eps) + bits});
    t = t.shifted(s.k);
    sum_t += t;
    a = a_next;
    rec.stages.push_back(std::move(s));
  }
  rec.t_final = t;
  return rec;
}

Rational module_lower_bound(const GrowthRecord& record, int n) {
  const Stage& s = record.stage(n);
  if (!(s.logR.a_pi + s.delta_a == s.logR_next.a_pi) || s.logR.b != s.logR_next.b) {
    throw PreconditionFailed("radius record is inconsistent at stage " + std::to_string(n));
  }
  auto q = exact_quotient(s.delta_a, s.sheets.times(2));
  if (!q) throw PreconditionFailed("module bound is not an integer at stage " + std::to_string(n));
  return Rational(static_cast<std::int64_t>(*q));
}

HurwitzAudit riemann_hurwitz_audit(const GrowthRecord& record, int n) {
  if (n < 0 || n > record.n_max) throw StageMissing("stage " + std::to_string(n) + " not built");
  HurwitzAudit out;
  out.sheets = u(1);
  // Disk through stage n: core triangle plus annuli 1..n.
  HNat V = u(3), E = u(3), F = u(1);
  for (int i = 1; i <= n; ++i) {
    const Stage& s = record.stage(i);
    out.branch_count += s.t;
    HNat outer = i < record.n_max ? record.stage(i + 1).t : record.t_final;
    HNat radial = s.t.shifted(s.k) + s.t;  // t_i (M_i + 1)
    V += outer;
    E += outer + radial;
    F += radial;
  }
  out.sheets = out.branch_count + u(1);
  if (n >= 1 && !(out.sheets == record.stage(n).sheets)) {
    throw PreconditionFailed("sheet count disagrees with the record at stage " + std::to_string(n));
  }
  auto chi = small_difference(out.sheets, out.branch_count);
  out.euler_char = chi ? *chi : 0;
  out.combinatorial_disk = V + F == E + u(1);
  return out;
}

bool log_areas_within_eps(const GrowthRecord& record) {
  auto ok = [&](const TriangleClass& c) {
    return c.log2_area_neg >= u(record.c_eps) && std::ldexp(1.0, -static_cast<int>(record.c_eps)) <= record.eps;
  };
  if (!ok(record.core)) return false;
  for (const auto& s : record.stages) {
    for (const auto& c : s.triangles) {
      if (!ok(c)) return false;
    }
  }
  return true;
}

tiling::Tiling export_tiling(const GrowthRecord& record, int n, int fan_cap) {
  record.stage(n);
  if (fan_cap < 1) throw DomainError("fan cap must be positive");
  tiling::TilingBuilder b;
  std::vector<std::vector<Eigen::Vector2d>> circles;
  auto name = [](std::size_t circle, std::size_t idx) {
    return "c" + std::to_string(circle) + "_" + std::to_string(idx);
  };
  auto add_circle = [&](std::size_t count) {
    std::size_t i = circles.size() + 1;
    double radius = std::ldexp(1.0, static_cast<int>(i) - 1);
    std::vector<Eigen::Vector2d> pts;
    for (std::size_t j = 0; j < count; ++j) {
      double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(count);
      pts.emplace_back(radius * std::cos(phi), radius * std::sin(phi));
      b.add_vertex(name(i, j), 4.0 * kPi);
    }
    circles.push_back(std::move(pts));
  };
  auto add_triangle = [&](std::string id, std::array<std::pair<std::size_t, std::size_t>, 3> at) {
    std::array<Eigen::Vector2d, 3> p;
    std::array<std::string, 3> ids;
    for (int i = 0; i < 3; ++i) {
      p[i] = circles[at[i].first - 1][at[i].second];
      ids[i] = name(at[i].first, at[i].second);
    }
    tiling::Triangle t;
    t.id = std::move(id);
    for (int i = 0; i < 3; ++i) {
      Eigen::Vector2d x = p[(i + 1) % 3] - p[i], y = p[(i + 2) % 3] - p[i];
      t.angle[i] = std::atan2(std::abs(x.x() * y.y() - x.y() * y.x()), x.dot(y));
      t.length[i] = x.norm();
    }
    t.k = 0.0;
    b.add_triangle(std::move(t), ids);
  };

  add_circle(3);
  add_triangle("d0", {{{1, 0}, {1, 1}, {1, 2}}});
  for (int i = 1; i <= n; ++i) {
    const Stage& s = record.stage(i);
    auto M = s.M.to_u64();
    std::size_t F = M && *M < static_cast<std::uint64_t>(fan_cap) ? *M : static_cast<std::size_t>(fan_cap);
    std::size_t inner = circles.back().size();
    std::size_t outer = inner * F;
    add_circle(outer);
    std::size_t ci = static_cast<std::size_t>(i), co = ci + 1;
    for (std::size_t j = 0; j < inner; ++j) {
      std::string stem = "s" + std::to_string(i) + "_" + std::to_string(j) + "_";
      for (std::size_t k = 0; k < F; ++k) {
        add_triangle(stem + std::to_string(k), {{{ci, j}, {co, j * F + k}, {co, (j * F + k + 1) % outer}}});
      }
      add_triangle(stem + "c", {{{ci, j}, {co, ((j + 1) * F) % outer}, {ci, (j + 1) % inner}}});
    }
  }
  b.singleton_clusters();
  return std::move(b).build();
}

nlohmann::ordered_json to_json(const GrowthRecord& record) {
  nlohmann::ordered_json out;
  out["eps"] = record.eps;
  out["c_eps"] = record.c_eps;
  out["n_max"] = record.n_max;
  out["core"] = to_json(record.core);
  auto stages = nlohmann::ordered_json::array();
  for (const auto& s : record.stages) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["logR"] = to_json(s.logR);
    j["logR_next"] = to_json(s.logR_next);
    j["t"] = s.t.to_string();
    j["k"] = s.k.to_string();
    j["M"] = s.M.to_string();
    j["sheets"] = s.sheets.to_string();
    auto m = module_lower_bound(record, s.n);
    j["module_bound"] = {{"num", m.numerator()}, {"den", m.denominator()}};
    auto tris = nlohmann::ordered_json::array();
    for (const auto& c : s.triangles) tris.push_back(to_json(c));
    j["triangles"] = std::move(tris);
    stages.push_back(std::move(j));
  }
  out["stages"] = std::move(stages);
  out["t_final"] = record.t_final.to_string();
  return out;
}

}  // namespace ctl::example
