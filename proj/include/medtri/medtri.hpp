#pragma once

// Umbrella header.

#include "medtri/exact_arith.hpp"
#include "medtri/triangle.hpp"
#include "medtri/companion.hpp"
#include "medtri/audit.hpp"
#include "medtri/search.hpp"
#include "medtri/records.hpp"

namespace medtri {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace medtri
