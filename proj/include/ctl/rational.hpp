#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace ctl {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2/5" or a finite decimal such as "0.125" into an exact
/// rational. Throws DomainError on anything else.
Rational parse_rational(std::string_view text);

/// "num/den" with den > 0; integers print without the "/1".
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace ctl
