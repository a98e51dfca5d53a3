#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace knotkit {

// Exact arbitrary-precision integer used everywhere a value can outgrow
// 64 bits (tangle fractions, polynomial evaluations, group orders).
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace knotkit
