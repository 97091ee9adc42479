#pragma once

#include <string>

#include "liepencil/liealg.hpp"

namespace liepencil {

/// JSON text form of a LieAlgebra:
///   {
///     "format": 1,
///     "dim": n,
///     "scalar_order": m,
///     "labels": ["h1", ...],
///     "brackets": [[i, j, k, "c"], ...]
///   }
/// with i < j, entries ordered by (i, j, k), and each structure constant
/// rendered by Cyc::str() in Q(zeta_m). Round-trips bit-exactly:
/// serialize(deserialize(s)) == s for any serialize output.
std::string serialize_algebra(const LieAlgebra& a);

/// Inverse of serialize_algebra. Throws std::runtime_error with a
/// description on malformed input. The realization and summand data are
/// not part of the format; only dim, labels and structure survive.
LieAlgebra deserialize_algebra(const std::string& text);

}  // namespace liepencil
