#include "ctl/hnat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>

namespace ctl {

namespace {

const HNat& one() {
  static const HNat value = HNat::from_u64(1);
  return value;
}

HNat from_counts(std::map<HNat, std::uint64_t> counts) {
  // Ascending sweep; carries land on larger keys, which the sweep visits later.
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second >= 2) {
      std::uint64_t carry = it->second / 2;
      it->second %= 2;
      counts[it->first + one()] += carry;
    }
  }
  std::vector<HNat> exps;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->second == 1) exps.push_back(it->first);
  }
  HNat result;
  for (auto& e : exps) result = result + HNat::pow2(e);
  return result;
}

}  // namespace

HNat HNat::from_u64(std::uint64_t value) {
  HNat result;
  for (int bit = 63; bit >= 0; --bit) {
    if (value & (std::uint64_t{1} << bit)) {
      result.exps_.push_back(from_u64(static_cast<std::uint64_t>(bit)));
    }
  }
  return result;
}

HNat HNat::pow2(HNat exponent) {
  HNat result;
  result.exps_.push_back(std::move(exponent));
  return result;
}

HNat operator+(const HNat& a, const HNat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Fast path: disjoint exponent sets merge without carries.
  std::vector<HNat> merged;
  merged.reserve(a.exps_.size() + b.exps_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  bool collision = false;
  while (i < a.exps_.size() && j < b.exps_.size()) {
    auto cmp = a.exps_[i] <=> b.exps_[j];
    if (cmp == 0) {
      collision = true;
      break;
    }
    if (cmp > 0) {
      merged.push_back(a.exps_[i++]);
    } else {
      merged.push_back(b.exps_[j++]);
    }
  }
  if (!collision) {
    while (i < a.exps_.size()) merged.push_back(a.exps_[i++]);
    while (j < b.exps_.size()) merged.push_back(b.exps_[j++]);
    HNat result;
    result.exps_ = std::move(merged);
    return result;
  }
  std::map<HNat, std::uint64_t> counts;
  for (const auto& e : a.exps_) counts[e] += 1;
  for (const auto& e : b.exps_) counts[e] += 1;
  return from_counts(std::move(counts));
}

HNat& HNat::operator+=(const HNat& other) {
  *this = *this + other;
  return *this;
}

HNat operator*(const HNat& a, const HNat& b) {
  HNat result;
  for (const auto& e : b.exps_) result += a.shifted(e);
  return result;
}

HNat HNat::shifted(const HNat& e) const {
  if (e.is_zero()) return *this;
  HNat result;
  result.exps_.reserve(exps_.size());
  for (const auto& x : exps_) result.exps_.push_back(x + e);
  return result;
}

HNat HNat::times(std::uint64_t factor) const { return *this * from_u64(factor); }

HNat HNat::bit_length() const {
  if (is_zero()) return HNat();
  return exps_.front() + one();
}

std::optional<std::uint64_t> HNat::to_u64() const {
  std::uint64_t value = 0;
  for (const auto& e : exps_) {
    auto bit = e.to_u64();
    if (!bit || *bit >= 64) return std::nullopt;
    value |= std::uint64_t{1} << *bit;
  }
  return value;
}

std::strong_ordering operator<=>(const HNat& a, const HNat& b) {
  std::size_t n = std::min(a.exps_.size(), b.exps_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto cmp = a.exps_[i] <=> b.exps_[i];
    if (cmp != 0) return cmp;
  }
  return a.exps_.size() <=> b.exps_.size();
}

std::string HNat::to_string(std::uint64_t max_decimal_bits) const {
  if (is_zero()) return "0";
  auto bits = bit_length().to_u64();
  if (bits && *bits <= max_decimal_bits) {
    boost::multiprecision::cpp_int value = 0;
    for (const auto& e : exps_) value += boost::multiprecision::cpp_int(1) << static_cast<unsigned>(*e.to_u64());
    return value.str();
  }
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) out += "+";
    const auto& e = exps_[i];
    auto small = e.to_u64();
    if (small && *small == 0) {
      out += "1";
    } else if (small && *small < 64) {
      out += "2^" + std::to_string(*small);
    } else {
      out += "2^(" + e.to_string(64) + ")";
    }
  }
  return out;
}

std::size_t HNat::node_count() const {
  std::size_t n = 1;
  for (const auto& e : exps_) n += e.node_count();
  return n;
}

std::optional<std::uint64_t> exact_quotient(const HNat& a, const HNat& b, std::uint64_t limit) {
  if (b.is_zero()) {
    if (a.is_zero()) return 0;
    return std::nullopt;
  }
  std::uint64_t lo = 0;
  std::uint64_t hi = limit;
  if (b.times(hi) < a) return std::nullopt;
  // Largest r with b*r <= a.
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (b.times(mid) <= a) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  if (b.times(lo) == a) return lo;
  return std::nullopt;
}

std::optional<std::int64_t> small_difference(const HNat& a, const HNat& b, std::uint64_t limit) {
  const HNat& big = a >= b ? a : b;
  const HNat& small = a >= b ? b : a;
  std::int64_t sign = a >= b ? 1 : -1;
  HNat probe = small;
  for (std::uint64_t d = 0; d <= limit; ++d) {
    auto cmp = probe <=> big;
    if (cmp == 0) return sign * static_cast<std::int64_t>(d);
    if (cmp > 0) return std::nullopt;
    probe += one();
  }
  return std::nullopt;
}

}  // namespace ctl
