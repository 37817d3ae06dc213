#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpm/exact.hpp"

namespace lpm {

// Variable order used throughout: x1, x2, x3, a, b, c.
const std::vector<std::string>& rayleigh_vars();

// 6 x 6 symmetric matrix of polynomials indexed by the edges
// 12, 13, 14, 23, 24, 34 of K4: diagonal (x1, x2, x2, x2, x2, x3), the middle
// 4 x 4 block has off-diagonal pattern [[., a, b, c], [a, ., c, b],
// [b, c, ., a], [c, b, a, .]], every other entry is zero.
using BorderedMatrix = std::array<std::array<ExactPoly, 6>, 6>;
BorderedMatrix bordered_matrix();

// Determinant by cofactor expansion along the first row.
ExactPoly laplace_det(const std::vector<std::vector<ExactPoly>>& m);

// Minor lift of the K4 spanning-tree polynomial evaluated at the bordered
// matrix: the sum over the 16 trees of the 3 x 3 principal minors.
ExactPoly build_p();

// df/di df/dj - f d^2f/didj.
ExactPoly rayleigh_difference(const ExactPoly& f, const std::string& i, const std::string& j);

// a^2b^2 + a^2c^2 + b^2c^2 + c^4 - 8abc x2 + 2a^2x2^2 + 2b^2x2^2
ExactPoly w_closed_form();

struct WIdentityReport {
    ExactPoly w;
    bool matches_closed_form = false;  // W / 4 equals the closed form exactly
    bool free_of_x1_x3 = false;
    std::size_t quarter_term_count = 0;
    bool pass() const { return matches_closed_form && free_of_x1_x3; }
};
WIdentityReport verify_w_identity();

// Smallest value of W over `trials` standard normal points.
double nonneg_sampling(const ExactPoly& w, int trials, std::uint64_t seed);

struct HyperbolicityReport {
    int trials = 0;
    int failures = 0;
    std::vector<double> witness;
};
// p(v - t e), e = (1, 1, 1, 0, 0, 0), real-rooted for random v.
HyperbolicityReport hyperbolicity_spot_check(const ExactPoly& p, int trials, std::uint64_t seed);

} // namespace lpm
