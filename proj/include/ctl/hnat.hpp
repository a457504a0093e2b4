#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctl {

/// Natural number in hereditary binary form: a sum of distinct powers of two
/// whose exponents are again HNat values. Addition, shifts and comparison stay
/// exact for numbers far beyond any machine or multiprecision integer, which
/// the branched-cover growth records need (sizes grow like towers of
/// exponentials).
///
/// Canonical form: exponents strictly decreasing, no repeats.
class HNat {
 public:
  HNat() = default;
  static HNat from_u64(std::uint64_t value);
  static HNat pow2(HNat exponent);

  bool is_zero() const { return exps_.empty(); }
  /// Exponents of the set bits, most significant first.
  const std::vector<HNat>& exponents() const { return exps_; }

  friend HNat operator+(const HNat& a, const HNat& b);
  HNat& operator+=(const HNat& other);
  friend HNat operator*(const HNat& a, const HNat& b);

  /// this * 2^e
  HNat shifted(const HNat& e) const;
  HNat times(std::uint64_t factor) const;

  /// Number of binary digits; zero for zero.
  HNat bit_length() const;

  std::optional<std::uint64_t> to_u64() const;

  friend std::strong_ordering operator<=>(const HNat& a, const HNat& b);
  friend bool operator==(const HNat& a, const HNat& b) { return (a <=> b) == 0; }

  /// Decimal when the value has at most `max_decimal_bits` binary digits,
  /// otherwise a nested power-of-two expression such as "2^(2^70+3)+2".
  std::string to_string(std::uint64_t max_decimal_bits = 4096) const;

  /// Total number of nodes in the representation (size proxy).
  std::size_t node_count() const;

 private:
  std::vector<HNat> exps_;
};

/// If a == b * r for some integer 0 <= r <= limit, returns r.
std::optional<std::uint64_t> exact_quotient(const HNat& a, const HNat& b,
                                            std::uint64_t limit = (std::uint64_t{1} << 40));

/// If a - b is an integer in [-limit, limit], returns it.
std::optional<std::int64_t> small_difference(const HNat& a, const HNat& b, std::uint64_t limit = 64);

}  // namespace ctl
