#pragma once

/// Loads a generic affine pair from a JSON config:
///
///   {
///     "first_map":  {"slope": "2",   "intercept": "3", "label": "Q"},
///     "second_map": {"slope": "1/3", "intercept": "0", "label": "R"}
///   }
///
/// Rationals are strings so the file round-trips exactly. Slopes must be
/// nonzero and labels distinct single letters; anything else throws
/// std::runtime_error with the offending field.

#include <string>

#include "collatz/affine_map.hpp"

namespace collatz {

MapPair load_system_config(const std::string& path);

}  // namespace collatz
