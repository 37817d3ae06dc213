#pragma once

#include <vector>

#include "lpm/unipoly.hpp"

namespace lpm {

struct RealRootsResult {
    bool real_rooted = true;
    std::vector<double> roots;  // real parts, ascending
    double max_imag = 0;
};

// Companion-matrix roots of q. A root counts as real when
// |Im| <= tol_imag (1 + |root|); tight clusters around a multiple real root
// are first merged onto their centroid. Throws DomainError on the zero
// polynomial.
RealRootsResult real_roots(const UniPoly& q, double tol_imag = 1e-7);

// Coefficient noise level assumed when merging root clusters.
inline constexpr double kDoubleCoeffErr = 1e-12;
inline constexpr double kQuadCoeffErr = 1e-30;
inline constexpr double kTolImag = 1e-7;

} // namespace lpm
