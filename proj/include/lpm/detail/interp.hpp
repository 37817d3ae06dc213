#pragma once

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <vector>

namespace lpm::detail {

// Ascending monomial coefficients of the degree <= deg polynomial through
// (t_j, f(t_j)) at deg+1 Chebyshev nodes mapped onto [center-radius,
// center+radius]. Newton divided differences, then nested expansion.
template <class Real, class F>
std::vector<Real> chebyshev_interpolate(F&& f, int deg, Real center, Real radius) {
    using std::cos;
    const int m = deg + 1;
    const Real pi = boost::math::constants::pi<Real>();
    std::vector<Real> nodes(m), dd(m);
    for (int j = 0; j < m; ++j) {
        nodes[j] = center + radius * cos(pi * Real(2 * j + 1) / Real(2 * m));
        dd[j] = f(nodes[j]);
    }
    for (int level = 1; level < m; ++level)
        for (int j = m - 1; j >= level; --j)
            dd[j] = (dd[j] - dd[j - 1]) / (nodes[j] - nodes[j - level]);

    std::vector<Real> coeffs{dd[m - 1]};
    for (int k = m - 2; k >= 0; --k) {
        // coeffs <- coeffs * (t - nodes[k]) + dd[k]
        std::vector<Real> next(coeffs.size() + 1, Real(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= nodes[k] * coeffs[i];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    return coeffs;
}

} // namespace lpm::detail
