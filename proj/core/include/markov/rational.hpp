#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace markov {

// Exact arithmetic for all metric values. Halving schedules hit equality
// boundaries (kappa_i / 2 == kappa_{i+1}) that floating point would blur.
using Rational = boost::rational<std::int64_t>;

/// Canonical text form: "3", "-1/2". Denominator printed only when != 1.
std::string rational_to_string(const Rational& q);

/// Parses "n" or "n/d". Returns nullopt on malformed input or zero denominator.
std::optional<Rational> rational_from_string(const std::string& text);

}  // namespace markov
