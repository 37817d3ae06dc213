#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpm/detail/interp.hpp"
#include "lpm/detail/linalg_kernels.hpp"
#include "lpm/multiaffine.hpp"

namespace lpm::detail {

// sum_S a_S det(A_S) for a row-major n x n matrix held in Real.
template <class Real>
Real minor_lift_eval_as(const MultiAffinePoly& p, const std::vector<Real>& a, int n) {
    Real total = 0;
    std::vector<int> idx;
    for (const auto& [bits, c] : p.terms()) {
        idx.clear();
        for (int i = 0; i < n; ++i)
            if ((bits >> i) & 1u) idx.push_back(i);
        total += Real(c) * det_lu<Real>(principal_block<Real>(a, n, idx), static_cast<int>(idx.size()));
    }
    return total;
}

// Interval holding the roots of p(v - t a) when p is stable and a > 0;
// otherwise a box sized by |v|/|a|.
template <class Real, class Vec>
std::pair<Real, Real> line_nodes(const Vec& v, const Vec& a, int n) {
    using std::abs;
    bool positive = n > 0;
    for (int i = 0; i < n; ++i) positive = positive && a[i] > 0;
    if (positive) {
        Real lo = Real(v[0]) / Real(a[0]), hi = lo;
        for (int i = 1; i < n; ++i) {
            const Real r = Real(v[i]) / Real(a[i]);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        const Real center = (lo + hi) / 2;
        return {center, std::max((hi - lo) / 2, Real(0.1) * (1 + abs(center)))};
    }
    Real vmax = 0, amax = 0;
    for (int i = 0; i < n; ++i) {
        vmax = std::max(vmax, Real(abs(v[i])));
        amax = std::max(amax, Real(abs(a[i])));
    }
    return {Real(0), 1 + (amax > 0 ? vmax / amax : Real(0))};
}

template <class Real, class Vec>
std::vector<Real> line_coeffs(const MultiAffinePoly& p, const Vec& v, const Vec& a) {
    const int n = p.n();
    const auto [center, radius] = line_nodes<Real>(v, a, n);
    std::vector<Real> point(n);
    auto f = [&](const Real& t) {
        for (int i = 0; i < n; ++i) point[i] = Real(v[i]) - t * Real(a[i]);
        return p.evaluate_as<Real>(point);
    };
    return chebyshev_interpolate<Real>(f, std::max(p.degree(), 0), center, radius);
}

// Coefficients of t -> P(A - t I) with nodes spread over the Gershgorin
// interval of A (which contains every eigenvalue of every principal block).
template <class Real>
std::vector<Real> pencil_coeffs(const MultiAffinePoly& p, const std::vector<double>& a, int n) {
    using std::abs;
    Real lo = 0, hi = 0;
    for (int i = 0; i < n; ++i) {
        Real r = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) r += abs(Real(a[i * n + j]));
        const Real l = Real(a[i * n + i]) - r, h = Real(a[i * n + i]) + r;
        if (i == 0 || l < lo) lo = l;
        if (i == 0 || h > hi) hi = h;
    }
    const Real center = (lo + hi) / 2;
    const Real radius = std::max((hi - lo) / 2, Real(0.1) * (1 + abs(center)));
    std::vector<Real> shifted(a.size());
    auto f = [&](const Real& t) {
        for (std::size_t k = 0; k < a.size(); ++k) shifted[k] = Real(a[k]);
        for (int i = 0; i < n; ++i) shifted[i * n + i] -= t;
        return minor_lift_eval_as<Real>(p, shifted, n);
    };
    return chebyshev_interpolate<Real>(f, std::max(p.degree(), 0), center, radius);
}

} // namespace lpm::detail
