#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace lpm::detail {

// Determinant of a k x k row-major matrix by LU with partial pivoting.
// The empty matrix has determinant 1.
template <class Real>
Real det_lu(std::vector<Real> a, int k) {
    using std::abs;
    Real det = 1;
    for (int c = 0; c < k; ++c) {
        int piv = c;
        Real best = abs(a[c * k + c]);
        for (int r = c + 1; r < k; ++r) {
            Real v = abs(a[r * k + c]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0) return Real(0);
        if (piv != c) {
            for (int j = 0; j < k; ++j) std::swap(a[c * k + j], a[piv * k + j]);
            det = -det;
        }
        const Real d = a[c * k + c];
        det *= d;
        for (int r = c + 1; r < k; ++r) {
            const Real f = a[r * k + c] / d;
            if (f == 0) continue;
            for (int j = c + 1; j < k; ++j) a[r * k + j] -= f * a[c * k + j];
        }
    }
    return det;
}

// Principal submatrix (row-major, rows/cols given by ascending indices) of an
// n x n row-major matrix.
template <class Real, class Src>
std::vector<Real> principal_block(const Src& full, int n, const std::vector<int>& idx) {
    const int k = static_cast<int>(idx.size());
    std::vector<Real> out(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            out[i * k + j] = Real(full[idx[i] * n + idx[j]]);
    return out;
}

} // namespace lpm::detail
