#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lpm/error.hpp"

namespace lpm::detail {

template <class Real>
struct ComplexRoot {
    Real re;
    Real im;
};

// Parlett-Reinsch balancing with radix 2 (exact in binary floating point).
template <class Real>
void balance(std::vector<Real>& a, int n) {
    using std::abs;
    const Real radix = 2;
    const Real sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            Real r = 0, c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                c += abs(a[j * n + i]);
                r += abs(a[i * n + j]);
            }
            if (c == 0 || r == 0) continue;
            Real g = r / radix;
            Real f = 1;
            const Real s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < Real(0.95) * s) {
                done = false;
                g = Real(1) / f;
                for (int j = 0; j < n; ++j) a[i * n + j] *= g;
                for (int j = 0; j < n; ++j) a[j * n + i] *= f;
            }
        }
    }
}

// Eigenvalues of an upper Hessenberg matrix by the Francis double-shift QR
// iteration (EISPACK hqr). `a` is row-major n x n and is destroyed.
template <class Real>
std::vector<ComplexRoot<Real>> hessenberg_eigenvalues(std::vector<Real> a, int n) {
    using std::abs;
    using std::sqrt;
    // 1-based accessor keeps the index arithmetic identical to the classical
    // formulation of the algorithm.
    auto A = [&](int i, int j) -> Real& { return a[(i - 1) * n + (j - 1)]; };
    auto sign = [](const Real& x, const Real& y) { return y >= 0 ? abs(x) : -abs(x); };
    const Real eps = std::numeric_limits<Real>::epsilon();

    std::vector<ComplexRoot<Real>> out(n + 1, ComplexRoot<Real>{0, 0});
    Real anorm = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += abs(A(i, j));

    int nn = n;
    Real t = 0;
    Real p = 0, q = 0, r = 0, s = 0, w = 0, x = 0, y = 0, z = 0;
    while (nn >= 1) {
        int its = 0;
        int l = 0;
        do {
            for (l = nn; l >= 2; --l) {
                s = abs(A(l - 1, l - 1)) + abs(A(l, l));
                if (s == 0) s = anorm;
                if (abs(A(l, l - 1)) <= eps * s) {
                    A(l, l - 1) = 0;
                    break;
                }
            }
            if (l < 1) l = 1;
            x = A(nn, nn);
            if (l == nn) {
                out[nn] = {x + t, Real(0)};
                --nn;
            } else {
                y = A(nn - 1, nn - 1);
                w = A(nn, nn - 1) * A(nn - 1, nn);
                if (l == nn - 1) {
                    p = Real(0.5) * (y - x);
                    q = p * p + w;
                    z = sqrt(abs(q));
                    x += t;
                    if (q >= 0) {
                        z = p + sign(z, p);
                        out[nn - 1] = out[nn] = {x + z, Real(0)};
                        if (z != 0) out[nn].re = x - w / z;
                    } else {
                        out[nn - 1] = {x + p, -z};
                        out[nn] = {x + p, z};
                    }
                    nn -= 2;
                } else {
                    if (its == 60) throw ConvergenceError("hessenberg_eigenvalues: no convergence");
                    if (its == 10 || its == 20 || its == 40) {
                        t += x;
                        for (int i = 1; i <= nn; ++i) A(i, i) -= x;
                        s = abs(A(nn, nn - 1)) + abs(A(nn - 1, nn - 2));
                        y = x = Real(0.75) * s;
                        w = Real(-0.4375) * s * s;
                    }
                    ++its;
                    int m = nn - 2;
                    for (; m >= l; --m) {
                        z = A(m, m);
                        r = x - z;
                        s = y - z;
                        p = (r * s - w) / A(m + 1, m) + A(m, m + 1);
                        q = A(m + 1, m + 1) - z - r - s;
                        r = A(m + 2, m + 1);
                        s = abs(p) + abs(q) + abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l) break;
                        const Real u = abs(A(m, m - 1)) * (abs(q) + abs(r));
                        const Real v = abs(p) * (abs(A(m - 1, m - 1)) + abs(z) + abs(A(m + 1, m + 1)));
                        if (u <= eps * v) break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        A(i, i - 2) = 0;
                        if (i != m + 2) A(i, i - 3) = 0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = A(k, k - 1);
                            q = A(k + 1, k - 1);
                            r = 0;
                            if (k != nn - 1) r = A(k + 2, k - 1);
                            x = abs(p) + abs(q) + abs(r);
                            if (x != 0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        s = sign(sqrt(p * p + q * q + r * r), p);
                        if (s != 0) {
                            if (k == m) {
                                if (l != m) A(k, k - 1) = -A(k, k - 1);
                            } else {
                                A(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            y = q / s;
                            z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                p = A(k, j) + q * A(k + 1, j);
                                if (k != nn - 1) {
                                    p += r * A(k + 2, j);
                                    A(k + 2, j) -= p * z;
                                }
                                A(k + 1, j) -= p * y;
                                A(k, j) -= p * x;
                            }
                            const int mmin = nn < k + 3 ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                p = x * A(i, k) + y * A(i, k + 1);
                                if (k != nn - 1) {
                                    p += z * A(i, k + 2);
                                    A(i, k + 2) -= p * r;
                                }
                                A(i, k + 1) -= p * q;
                                A(i, k) -= p;
                            }
                        }
                    }
                }
            }
        } while (nn >= 1 && l < nn - 1);
    }
    out.erase(out.begin());
    return out;
}

// Roots of sum_i coeffs[i] t^i via eigenvalues of the balanced companion
// matrix. coeffs.back() must be nonzero. Zero trailing coefficients are
// factored out as exact zero roots.
template <class Real>
std::vector<ComplexRoot<Real>> companion_roots(const std::vector<Real>& coeffs) {
    std::size_t lo = 0;
    while (lo + 1 < coeffs.size() && coeffs[lo] == 0) ++lo;
    std::vector<ComplexRoot<Real>> roots(lo, ComplexRoot<Real>{0, 0});
    const int d = static_cast<int>(coeffs.size() - 1 - lo);
    if (d <= 0) return roots;
    const Real lead = coeffs.back();
    if (d == 1) {
        roots.push_back({-coeffs[lo] / lead, Real(0)});
        return roots;
    }
    std::vector<Real> a(static_cast<std::size_t>(d) * d, Real(0));
    for (int j = 0; j < d; ++j) a[j] = -coeffs[lo + d - 1 - j] / lead;
    for (int i = 1; i < d; ++i) a[i * d + (i - 1)] = 1;
    balance(a, d);
    auto ev = hessenberg_eigenvalues(std::move(a), d);
    roots.insert(roots.end(), ev.begin(), ev.end());
    return roots;
}

// Taylor coefficient of order m of the polynomial at the real point c.
template <class Real>
Real taylor_coefficient(std::vector<Real> coeffs, const Real& c, int m) {
    Real rem = 0;
    for (int j = 0; j <= m; ++j) {
        if (coeffs.empty()) return Real(0);
        // synthetic division by (t - c)
        const std::size_t d = coeffs.size() - 1;
        std::vector<Real> quot(d);
        Real acc = coeffs[d];
        for (std::size_t i = d; i-- > 0;) {
            quot[i] = acc;
            acc = coeffs[i] + acc * c;
        }
        rem = acc;
        coeffs = std::move(quot);
    }
    return rem;
}

// Roots of a real polynomial that scatter into a small complex cloud around a
// multiple real root are collapsed onto the centroid of the cloud. A cluster
// of size m is accepted when its radius is consistent with the perturbation
// expected for an m-fold root given coefficient error `coeff_err`.
template <class Real>
void collapse_multiple_roots(std::vector<ComplexRoot<Real>>& roots, const std::vector<Real>& coeffs,
                             const Real& tol_imag, const Real& coeff_err) {
    using std::abs;
    using std::pow;
    using std::sqrt;
    const int d = static_cast<int>(roots.size());
    if (d < 2) return;
    auto modulus = [](const ComplexRoot<Real>& z) { return sqrt(z.re * z.re + z.im * z.im); };
    auto nonreal = [&](const ComplexRoot<Real>& z) { return abs(z.im) > tol_imag * (1 + modulus(z)); };

    std::vector<std::vector<int>> clusters;
    for (int i = 0; i < d; ++i) clusters.push_back({i});

    auto centroid = [&](const std::vector<int>& members) {
        ComplexRoot<Real> c{0, 0};
        for (int i : members) {
            c.re += roots[i].re;
            c.im += roots[i].im;
        }
        c.re /= Real(members.size());
        c.im /= Real(members.size());
        return c;
    };
    auto acceptable = [&](const std::vector<int>& members, Real& radius) {
        const auto c = centroid(members);
        radius = 0;
        for (int i : members) {
            const Real dr = roots[i].re - c.re, di = roots[i].im - c.im;
            radius = std::max(radius, sqrt(dr * dr + di * di));
        }
        if (abs(c.im) > tol_imag * (1 + modulus(c))) return false;
        const int m = static_cast<int>(members.size());
        const Real bm = abs(taylor_coefficient(coeffs, c.re, m));
        if (bm == 0) return false;
        Real scale = 0, pw = 1;
        for (const auto& ci : coeffs) {
            scale += abs(ci) * pw;
            pw *= 1 + abs(c.re);
        }
        const Real predicted = pow(coeff_err * scale / bm, Real(1) / Real(m));
        return radius <= 8 * predicted;
    };
    auto has_nonreal = [&](const std::vector<int>& members) {
        return std::any_of(members.begin(), members.end(), [&](int i) { return nonreal(roots[i]); });
    };

    while (true) {
        int best_a = -1, best_b = -1;
        Real best_radius = 0;
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                if (!has_nonreal(clusters[a]) && !has_nonreal(clusters[b])) continue;
                std::vector<int> merged = clusters[a];
                merged.insert(merged.end(), clusters[b].begin(), clusters[b].end());
                Real radius;
                if (!acceptable(merged, radius)) continue;
                if (best_a < 0 || radius < best_radius) {
                    best_a = static_cast<int>(a);
                    best_b = static_cast<int>(b);
                    best_radius = radius;
                }
            }
        }
        if (best_a < 0) break;
        clusters[best_a].insert(clusters[best_a].end(), clusters[best_b].begin(), clusters[best_b].end());
        clusters.erase(clusters.begin() + best_b);
    }
    for (const auto& members : clusters) {
        if (members.size() < 2 || !has_nonreal(members)) continue;
        const auto c = centroid(members);
        for (int i : members) roots[i] = {c.re, Real(0)};
    }
}

template <class Real>
struct RealRootsImpl {
    bool real_rooted = true;
    std::vector<Real> roots;  // real parts, ascending
    Real max_imag = 0;        // largest |imag| after collapsing clusters
};

template <class Real>
RealRootsImpl<Real> real_roots_impl(const std::vector<Real>& coeffs, const Real& tol_imag,
                                    const Real& coeff_err) {
    using std::abs;
    using std::sqrt;
    RealRootsImpl<Real> out;
    auto roots = companion_roots(coeffs);
    collapse_multiple_roots(roots, coeffs, tol_imag, coeff_err);
    for (const auto& z : roots) {
        const Real mod = sqrt(z.re * z.re + z.im * z.im);
        out.max_imag = std::max(out.max_imag, abs(z.im));
        if (abs(z.im) > tol_imag * (1 + mod)) out.real_rooted = false;
        out.roots.push_back(z.re);
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace lpm::detail
