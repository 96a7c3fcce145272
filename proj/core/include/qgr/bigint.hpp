#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qgr {

// Exact arithmetic everywhere. Grassmannian point counts over F_p fit in
// int64 for everything this library touches, but Laurent coefficients and
// interpolation denominators do not, hence arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

} // namespace qgr
