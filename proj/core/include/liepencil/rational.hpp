#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace liepencil {

/// Exact rational scalar. mpq_class keeps the canonical form for us
/// (reduced, positive denominator), which matches the serialization contract.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view s);

}  // namespace liepencil
