#pragma once

#include <optional>
#include <string>

#include "mcf/linalg.hpp"

namespace mcf {

// Parsed direction vector: comma-separated components, each an integer,
// a rational "p/q", a decimal, or one of the symbols "e" and "pi"
// (evaluated to doubles at parse time).
struct VectorSpec {
    Vec3 values{};                  // always populated
    std::optional<IVec3> integers;  // set when every component is an integer literal
    std::string repr;               // normalized input, e.g. "1,e,pi"
};

// Throws std::invalid_argument on malformed input.
VectorSpec parse_vector(const std::string& text);

}  // namespace mcf
