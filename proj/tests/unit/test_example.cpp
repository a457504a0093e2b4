#include "ctl/errors.hpp"
#include "ctl/example.hpp"
#include "ctl/hnat.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace ctl;

TEST_CASE("HNat agrees with machine arithmetic") {
  std::mt19937_64 rng(ctl_test::seed() + 12);
  for (int i = 0; i < 500; ++i) {
    std::uint64_t a = rng() >> 34, b = rng() >> 34;
    auto A = HNat::from_u64(a), B = HNat::from_u64(b);
    CHECK((A + B).to_u64() == a + b);
    CHECK((A * B).to_u64() == a * b);
    CHECK(((A <=> B) == (a <=> b)));
    CHECK(A.times(7).to_u64() == a * 7);
    CHECK(A.bit_length().to_u64() == static_cast<std::uint64_t>(std::bit_width(a)));
    CHECK(A.to_string() == std::to_string(a));
    if (b != 0 && a % b == 0) CHECK(exact_quotient(A, B) == a / b);
  }
  CHECK(HNat::from_u64(5).shifted(HNat::from_u64(3)).to_u64() == 40);
}

TEST_CASE("HNat towers stay exact") {
  auto x = HNat::pow2(HNat::pow2(HNat::from_u64(100)));
  CHECK_FALSE(x.to_u64().has_value());
  CHECK(x + HNat::from_u64(1) > x);
  CHECK(small_difference(x + HNat::from_u64(3), x) == 3);
  CHECK(x.to_string().find("2^") != std::string::npos);
}

TEST_CASE("growth record: modules, audits and areas") {
  auto r = example::build(0.1, 6);
  CHECK(r.stages.size() == 6);
  CHECK(example::log_areas_within_eps(r));
  for (int n = 1; n <= 6; ++n) {
    CHECK(example::module_lower_bound(r, n) >= Rational(n));
    auto a = example::riemann_hurwitz_audit(r, n);
    CHECK(a.euler_char == 1);
    CHECK(a.combinatorial_disk);
  }
  CHECK(example::module_lower_bound(r, 1) == Rational(1));
  CHECK(example::riemann_hurwitz_audit(r, 1).sheets.to_u64() == 4);
  CHECK_THROWS_AS(r.stage(7), StageMissing);
  CHECK_THROWS_AS(example::build(0.0, 2), DomainError);
}

TEST_CASE("exported stage has 4 pi branch vertices and fails only R1") {
  auto r = example::build(0.1, 2);
  auto T = example::export_tiling(r, 1);
  int branch = 0;
  for (const auto& v : T.vertices()) {
    REQUIRE(v.total_angle.has_value());
    if (std::abs(*v.total_angle - 4 * std::numbers::pi) < 1e-12) ++branch;
  }
  CHECK(branch > 0);
  auto c = tiling::check_theorem_T(T, 0.1, 1);
  CHECK(c.verdict == Verdict::conditions_violated);
  CHECK(c.violations == std::vector<std::string>{"R1"});
}
