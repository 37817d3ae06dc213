#include "lpm/spectral.hpp"

#include "lpm/detail/pencil.hpp"
#include "lpm/detail/quad.hpp"
#include "lpm/detail/roots_impl.hpp"
#include "lpm/error.hpp"
#include "lpm/minorlift.hpp"
#include "lpm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace lpm {

namespace {

// Eigenvalues (ascending) grouped into clusters of values within 1e-10 of
// their neighbour. ids[i] is the cluster of eigenvalue i.
struct Clusters {
    std::vector<int> ids;
    std::vector<std::vector<int>> members;
};

Clusters cluster_values(const std::vector<double>& sorted) {
    Clusters c;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double scale = 1.0 + std::abs(sorted[i]);
        if (i == 0 || sorted[i] - sorted[i - 1] > 1e-10 * scale) c.members.emplace_back();
        c.members.back().push_back(static_cast<int>(i));
        c.ids.push_back(static_cast<int>(c.members.size()) - 1);
    }
    return c;
}

// Builds the arrangement and the permutation for a sequence of cluster ids
// (one per slot).
void realise(const Clusters& c, const std::vector<double>& values, const std::vector<int>& slot_ids,
             std::vector<double>& w, Permutation& perm) {
    std::vector<std::size_t> used(c.members.size(), 0);
    w.assign(values.size(), 0.0);
    perm.assign(values.size(), 0);
    for (std::size_t slot = 0; slot < slot_ids.size(); ++slot) {
        const int cid = slot_ids[slot];
        const int member = c.members[cid][used[cid]++];
        w[slot] = values[member];
        perm[member] = static_cast<int>(slot);
    }
}

// Calls visit(w, perm) for every distinct arrangement until it returns false.
void for_each_arrangement(const std::vector<double>& values,
                          const std::function<bool(const std::vector<double>&, const Permutation&)>& visit) {
    const Clusters c = cluster_values(values);
    std::vector<int> ids = c.ids;
    std::vector<double> w;
    Permutation perm;
    do {
        realise(c, values, ids, w, perm);
        if (!visit(w, perm)) return;
    } while (std::next_permutation(ids.begin(), ids.end()));
}

// Rows/columns i and j of Y replaced by those of R Y R^T, R the Givens
// rotation in the (i, j) plane.
Matrix rotate(const Matrix& y, int i, int j, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    Matrix out = y;
    const int n = y.n();
    for (int k = 0; k < n; ++k) {
        out(i, k) = c * y(i, k) - s * y(j, k);
        out(j, k) = s * y(i, k) + c * y(j, k);
    }
    const Matrix tmp = out;
    for (int k = 0; k < n; ++k) {
        out(k, i) = c * tmp(k, i) - s * tmp(k, j);
        out(k, j) = s * tmp(k, i) + c * tmp(k, j);
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const double avg = 0.5 * (out(a, b) + out(b, a));
            out(a, b) = avg;
            out(b, a) = avg;
        }
    return out;
}

double lift_value(const MultiAffinePoly& p, const Matrix& y) {
    return detail::minor_lift_eval_as<double>(p, y.data(), y.n());
}

} // namespace

SpectralResult spectral_containment_search(const MultiAffinePoly& p, const SymMatrix& a, double tol,
                                           std::uint64_t max_perms, std::uint64_t seed) {
    require_dim(a.n() == p.n(), "spectral_containment_search: size mismatch");
    if (!in_cone_matrix(p, a, tol).in_closed_cone())
        throw PreconditionError("spectral_containment_search: A is not in the hyperbolicity cone of P");
    SpectralResult res;
    res.eigenvalues = eigenvalues_sym(a);
    const int n = a.n();
    double best_min = -std::numeric_limits<double>::infinity();
    std::vector<double> best_w;
    Permutation best_perm;

    auto try_one = [&](const std::vector<double>& w, const Permutation& perm) {
        ++res.permutations_tested;
        const ConeReport r = in_cone_vector(p, w, tol);
        if (r.in_closed_cone()) {
            res.found = true;
            res.arrangement = w;
            res.permutation = perm;
            res.cone = r;
            return false;
        }
        if (r.real_rooted && r.min_root > best_min) {
            best_min = r.min_root;
            best_w = w;
            best_perm = perm;
            res.cone = r;
        }
        return true;
    };

    if (n <= 9) {
        res.exhaustive = true;
        for_each_arrangement(res.eigenvalues, try_one);
    } else {
        const Clusters c = cluster_values(res.eigenvalues);
        std::vector<int> ids = c.ids;
        std::vector<double> w;
        Permutation perm;
        realise(c, res.eigenvalues, ids, w, perm);
        bool go = try_one(w, perm);
        if (go) {
            std::reverse(ids.begin(), ids.end());
            realise(c, res.eigenvalues, ids, w, perm);
            go = try_one(w, perm);
        }
        Rng rng(seed);
        for (std::uint64_t i = 0; go && i < max_perms; ++i) {
            std::shuffle(ids.begin(), ids.end(), rng.engine());
            realise(c, res.eigenvalues, ids, w, perm);
            go = try_one(w, perm);
        }
    }
    if (res.found || best_w.empty()) return res;

    res.arrangement = best_w;
    res.permutation = best_perm;
    // Re-derive the best candidate's roots from 128-bit coefficients; only a
    // miss by more than 100 tol counts as a counterexample.
    const std::vector<double> ones(n, 1.0);
    auto qc = detail::line_coeffs<detail::quad>(p, best_w, ones);
    const auto hi = detail::real_roots_impl<detail::quad>(qc, detail::quad(kTolImag), detail::quad(kQuadCoeffErr));
    if (hi.real_rooted && !hi.roots.empty()) {
        double max_abs = 0.0;
        for (const auto& r : hi.roots) max_abs = std::max(max_abs, std::abs(static_cast<double>(r)));
        res.counterexample_confirmed = static_cast<double>(hi.roots.front()) < -100.0 * tol * (1.0 + max_abs);
    }
    return res;
}

SchurHornResult schur_horn_gap(const MultiAffinePoly& p, const SymMatrix& x, int restarts, int iters,
                               std::uint64_t seed) {
    require_dim(x.n() == p.n(), "schur_horn_gap: size mismatch");
    require(x.n() <= 8, "schur_horn_gap: n must be at most 8");
    const int n = x.n();
    const auto eig = eigen_sym(x);
    SchurHornResult res;
    res.perm_max = -std::numeric_limits<double>::infinity();
    Permutation best_perm;
    for_each_arrangement(eig.values, [&](const std::vector<double>& w, const Permutation& perm) {
        const double v = p.evaluate(w);
        if (v > res.perm_max) {
            res.perm_max = v;
            res.best_arrangement = w;
            best_perm = perm;
        }
        return true;
    });

    res.orth_max_lower_bound = -std::numeric_limits<double>::infinity();
    constexpr int kSamples = 48;
    const double pi = std::numbers::pi;
    for (int r = 0; r < std::max(restarts, 1); ++r) {
        Matrix u(n);
        if (r == 0) {
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) u(best_perm[i], k) = eig.vectors(k, i);
        } else {
            u = random_orthogonal(n, derive_seed(seed, static_cast<std::uint64_t>(r)));
        }
        Matrix y = u * x.matrix() * u.transpose();
        double fy = lift_value(p, y);
        for (int it = 0; it < iters; ++it) {
            bool improved = false;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto f = [&](double th) { return lift_value(p, rotate(y, i, j, th)); };
                    // theta -> f has period pi
                    double best_th = 0.0, best_f = fy;
                    for (int s = 1; s <= kSamples; ++s) {
                        const double th = -pi / 2 + pi * s / kSamples;
                        const double v = f(th);
                        if (v > best_f) {
                            best_f = v;
                            best_th = th;
                        }
                    }
                    // golden-section refinement around the best sample
                    double lo = best_th - pi / kSamples, hi = best_th + pi / kSamples;
                    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
                    double c1 = hi - g * (hi - lo), c2 = lo + g * (hi - lo);
                    double f1 = f(c1), f2 = f(c2);
                    for (int s = 0; s < 60; ++s) {
                        if (f1 > f2) {
                            hi = c2;
                            c2 = c1;
                            f2 = f1;
                            c1 = hi - g * (hi - lo);
                            f1 = f(c1);
                        } else {
                            lo = c1;
                            c1 = c2;
                            f1 = f2;
                            c2 = lo + g * (hi - lo);
                            f2 = f(c2);
                        }
                    }
                    const double th_ref = 0.5 * (lo + hi);
                    const double f_ref = f(th_ref);
                    if (f_ref > best_f) {
                        best_f = f_ref;
                        best_th = th_ref;
                    }
                    if (best_f > fy + 1e-15 * (1.0 + std::abs(fy))) {
                        y = rotate(y, i, j, best_th);
                        u = givens(n, i, j, best_th) * u;
                        fy = lift_value(p, y);
                        improved = true;
                    }
                }
            if (!improved) break;
        }
        if (fy > res.orth_max_lower_bound) {
            res.orth_max_lower_bound = fy;
            res.maximizer = u;
        }
    }
    return res;
}

namespace {

struct SignedPerm {
    std::vector<int> image;
    int sign;
};

std::vector<SignedPerm> all_signed_perms(int k) {
    std::vector<SignedPerm> out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
        int inv = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (idx[a] > idx[b]) ++inv;
        out.push_back({idx, inv % 2 == 0 ? 1 : -1});
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

} // namespace

DerivationMatrix derivation_matrix(const SymMatrix& x, int k, int d) {
    const int n = x.n();
    require(d >= 1 && d <= k && k <= n, "derivation_matrix: need 1 <= d <= k <= n");
    DerivationMatrix out;
    out.n = n;
    out.k = k;
    out.d = d;
    out.basis = k_subsets(n, k);
    const auto slots = k_subsets(k, d);
    const auto perms = all_signed_perms(k);
    const int m = static_cast<int>(out.basis.size());
    Matrix full(m);
    for (int col = 0; col < m; ++col) {
        const auto s = SubsetMask(n, out.basis[col]).zero_based();
        for (int row = 0; row < m; ++row) {
            const auto t = SubsetMask(n, out.basis[row]).zero_based();
            double total = 0.0;
            for (auto r : slots) {
                // w_i = X e_{s_i} for slots in R, e_{s_i} otherwise; row t_a of w_i
                auto entry = [&](int a, int i) {
                    if ((r >> i) & 1u) return x(t[a], s[i]);
                    return t[a] == s[i] ? 1.0 : 0.0;
                };
                for (const auto& sp : perms) {
                    double prod = sp.sign;
                    for (int i = 0; i < k && prod != 0.0; ++i) prod *= entry(sp.image[i], i);
                    total += prod;
                }
            }
            full(row, col) = total;
        }
    }
    out.entries = SymMatrix(full);
    return out;
}

Matrix compound_matrix(const SymMatrix& x, int k) {
    const int n = x.n();
    require(k >= 1 && k <= n, "compound_matrix: need 1 <= k <= n");
    const auto basis = k_subsets(n, k);
    const int m = static_cast<int>(basis.size());
    Matrix out(m);
    for (int row = 0; row < m; ++row) {
        const auto t = SubsetMask(n, basis[row]).zero_based();
        for (int col = 0; col < m; ++col) {
            const auto s = SubsetMask(n, basis[col]).zero_based();
            std::vector<double> block(static_cast<std::size_t>(k) * k);
            for (int a = 0; a < k; ++a)
                for (int b = 0; b < k; ++b) block[a * k + b] = x(t[a], s[b]);
            out(row, col) = detail::det_lu<double>(std::move(block), k);
        }
    }
    return out;
}

DerivationSpectrumReport check_derivation_spectrum(const SymMatrix& x, int k, int d, double tol) {
    const auto dm = derivation_matrix(x, k, d);
    const auto lambda = eigenvalues_sym(x);
    const MultiAffinePoly ed = elementary(k, d);
    std::vector<double> expected;
    DerivationSpectrumReport rep;
    for (auto bits : dm.basis) {
        std::vector<double> sub;
        for (int i : SubsetMask(x.n(), bits).zero_based()) sub.push_back(lambda[i]);
        expected.push_back(ed.evaluate(sub));
    }
    std::sort(expected.begin(), expected.end());
    const auto got = eigenvalues_sym(dm.entries);
    for (std::size_t i = 0; i < got.size(); ++i) {
        rep.spectrum_error = std::max(rep.spectrum_error, std::abs(got[i] - expected[i]));
        rep.scale = std::max(rep.scale, std::abs(expected[i]));
    }
    for (std::size_t i = 0; i < dm.basis.size(); ++i) {
        const double want = minor_lift_eval(ed, x.principal(SubsetMask(x.n(), dm.basis[i])));
        const int ii = static_cast<int>(i);
        rep.diagonal_error = std::max(rep.diagonal_error, std::abs(dm.entries(ii, ii) - want));
        rep.scale = std::max(rep.scale, std::abs(want));
    }
    rep.spectrum_ok = rep.spectrum_error <= tol * (1.0 + rep.scale);
    rep.diagonal_ok = rep.diagonal_error <= tol * (1.0 + rep.scale);
    return rep;
}

bool majorizes(const std::vector<double>& alpha, const std::vector<double>& beta, double tol) {
    require_dim(alpha.size() == beta.size(), "majorizes: length mismatch");
    auto a = alpha, b = beta;
    std::sort(a.begin(), a.end(), std::greater<>());
    std::sort(b.begin(), b.end(), std::greater<>());
    double max_abs = 0.0;
    for (double v : a) max_abs = std::max(max_abs, std::abs(v));
    for (double v : b) max_abs = std::max(max_abs, std::abs(v));
    const double eps = tol * (1.0 + max_abs);
    double sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (i + 1 < a.size() && sa < sb - eps) return false;
    }
    return std::abs(sa - sb) <= eps;
}

MultiAffinePoly rescaled_elementary(const std::vector<double>& d, int k) {
    const int n = static_cast<int>(d.size());
    for (double v : d) require(v > 0.0, "rescaled_elementary: D must be positive");
    std::vector<double> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = 1.0 / d[i];
    return rescale_variables(elementary(n, k), inv);
}

MajorizationReport check_majorization_rescaled_ek(const SymMatrix& x, const std::vector<double>& d, int k,
                                                  double tol) {
    require_dim(static_cast<int>(d.size()) == x.n(), "check_majorization_rescaled_ek: D size mismatch");
    const MultiAffinePoly p = rescaled_elementary(d, k);
    MajorizationReport rep;
    const auto rx = real_roots(matrix_pencil_poly(p, x));
    const auto rd = real_roots(matrix_pencil_poly(p, SymMatrix::diagonal(x.diag())));
    rep.roots_x = rx.roots;
    rep.roots_diag = rd.roots;
    rep.pass = rx.real_rooted && rd.real_rooted && rep.roots_x.size() == static_cast<std::size_t>(k) &&
               rep.roots_diag.size() == static_cast<std::size_t>(k) && majorizes(rep.roots_x, rep.roots_diag, tol);
    return rep;
}

namespace {

IdentityReport make_identity(double lhs, double rhs, double scale, double rel_tol) {
    IdentityReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.rel_error = std::abs(lhs - rhs) / std::max({1.0, scale, std::abs(lhs), std::abs(rhs)});
    r.pass = r.rel_error <= rel_tol;
    return r;
}

} // namespace

IdentityReport check_adjugate_route(const MultiAffinePoly& p, const SymMatrix& x, double rel_tol) {
    require_dim(x.n() == p.n(), "check_adjugate_route: size mismatch");
    require(p.is_homogeneous() && p.degree() == p.n() - 1, "check_adjugate_route: p must be homogeneous of degree n-1");
    const SymMatrix adj = adjugate(x);
    double scale = 0.0;
    for (const auto& [bits, c] : p.terms()) scale += std::abs(c * principal_minor(x, SubsetMask(p.n(), bits)));
    return make_identity(minor_lift_eval(p, x), minor_lift_eval(dual(p), adj), scale, rel_tol);
}

MultiAffinePoly times_new_variable(const MultiAffinePoly& q) {
    require(q.n() + 1 <= kMaxVars, "times_new_variable: too many variables");
    return multiply_variable(shift_variables(q, q.n() + 1, 1), 0);
}

IdentityReport check_schur_route(const MultiAffinePoly& q, const SymMatrix& x, double rel_tol) {
    require_dim(x.n() == q.n() + 1, "check_schur_route: X must have one more row than q has variables");
    const MultiAffinePoly p = times_new_variable(q);
    const SymMatrix sc = schur_complement_0(x);
    const double rhs = x(0, 0) * minor_lift_eval(q, sc);
    double scale = 0.0;
    for (const auto& [bits, c] : p.terms()) scale += std::abs(c * principal_minor(x, SubsetMask(p.n(), bits)));
    return make_identity(minor_lift_eval(p, x), rhs, scale, rel_tol);
}

} // namespace lpm
