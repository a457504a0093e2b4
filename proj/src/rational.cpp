#include "ctl/rational.hpp"

#include "ctl/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace ctl {

namespace {

std::int64_t parse_int(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw DomainError("not an exact rational: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw DomainError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
    if (frac_part.size() > 15) throw DomainError("too many decimals in '" + std::string(text) + "'");
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (frac < 0) throw DomainError("malformed decimal '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    if (whole > std::numeric_limits<std::int64_t>::max() / scale - 1) {
      throw DomainError("decimal out of range: '" + std::string(text) + "'");
    }
    Rational r(whole * scale + frac, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text.front() == '+' ? text.substr(1) : text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ctl
