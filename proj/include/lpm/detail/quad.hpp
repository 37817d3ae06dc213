#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lpm::detail {

// IEEE binary128-equivalent software float; used only to re-verify numerical
// verdicts that double precision cannot settle.
using quad = boost::multiprecision::cpp_bin_float_quad;

} // namespace lpm::detail
