#include "lpm/cones.hpp"

#include "lpm/detail/pencil.hpp"
#include "lpm/detail/quad.hpp"
#include "lpm/detail/roots_impl.hpp"
#include "lpm/error.hpp"
#include "lpm/minorlift.hpp"
#include "lpm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpm {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::inside: return "inside";
    case Verdict::boundary: return "boundary";
    case Verdict::outside: return "outside";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ConeReport classify_roots(std::vector<double> roots, bool real_rooted, double tol) {
    ConeReport r;
    std::sort(roots.begin(), roots.end());
    r.roots = std::move(roots);
    r.real_rooted = real_rooted;
    double max_abs = 0.0;
    for (double x : r.roots) max_abs = std::max(max_abs, std::abs(x));
    r.tolerance = tol * (1.0 + max_abs);
    r.min_root = r.roots.empty() ? std::numeric_limits<double>::infinity() : r.roots.front();
    r.slack = r.min_root;
    if (!real_rooted)
        r.verdict = Verdict::inconclusive;
    else if (r.min_root > r.tolerance)
        r.verdict = Verdict::inside;
    else if (std::abs(r.min_root) <= r.tolerance)
        r.verdict = Verdict::boundary;
    else
        r.verdict = Verdict::outside;
    return r;
}

namespace {

std::vector<double> to_double(const std::vector<detail::quad>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(static_cast<double>(x));
    return out;
}

// Drops negligible high-order coefficients the same way UniPoly does.
template <class Real>
std::vector<Real> trim(std::vector<Real> c) {
    using std::abs;
    Real mx = 0;
    for (const auto& x : c) mx = std::max(mx, Real(abs(x)));
    while (!c.empty() && abs(c.back()) <= Real(1e-14) * mx) c.pop_back();
    return c;
}

// Double-precision roots first; a non-real verdict is recomputed from
// 128-bit coefficients before it is believed.
template <class QuadCoeffs>
ConeReport cone_from_coeffs(const UniPoly& q, QuadCoeffs&& quad_coeffs, double tol, double tol_imag) {
    if (q.degree() <= 0) return classify_roots({}, true, tol);
    const auto dbl = real_roots(q, tol_imag);
    if (dbl.real_rooted) return classify_roots(dbl.roots, true, tol);
    const auto qc = trim(quad_coeffs());
    auto hi = detail::real_roots_impl<detail::quad>(qc, detail::quad(tol_imag), detail::quad(kQuadCoeffErr));
    ConeReport r = classify_roots(to_double(hi.roots), hi.real_rooted, tol);
    r.high_precision = true;
    return r;
}

void require_direction(const MultiAffinePoly& p) {
    const std::vector<double> ones(p.n(), 1.0);
    double scale = 0.0;
    for (const auto& [bits, c] : p.terms()) scale += std::abs(c);
    require(!p.is_zero() && std::abs(p.evaluate(ones)) > 1e-12 * scale,
            "cone membership: p(1) = 0, the all-ones direction is degenerate");
}

std::vector<double> random_normal_vector(int n, Rng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal();
    return v;
}

} // namespace

ConeReport in_cone_vector(const MultiAffinePoly& p, const std::vector<double>& v, double tol, double tol_imag) {
    require_dim(static_cast<int>(v.size()) == p.n(), "in_cone_vector: point dimension mismatch");
    require_direction(p);
    const std::vector<double> ones(p.n(), 1.0);
    const UniPoly q = restrict_line(p, v, ones);
    return cone_from_coeffs(
        q, [&] { return detail::line_coeffs<detail::quad>(p, v, ones); }, tol, tol_imag);
}

ConeReport in_cone_matrix(const MultiAffinePoly& p, const SymMatrix& a, double tol, double tol_imag) {
    require_dim(a.n() == p.n(), "in_cone_matrix: matrix size does not match variable count");
    require_direction(p);
    const UniPoly q = matrix_pencil_poly(p, a);
    return cone_from_coeffs(
        q, [&] { return detail::pencil_coeffs<detail::quad>(p, a.data(), a.n()); }, tol, tol_imag);
}

StabilityReport is_stable_probabilistic(const MultiAffinePoly& p, int trials, std::uint64_t seed, double tol_imag) {
    require(p.is_homogeneous(), "is_stable_probabilistic: p must be homogeneous");
    StabilityReport rep;
    bool pos = false, neg = false;
    for (const auto& [bits, c] : p.terms()) (c > 0 ? pos : neg) = true;
    if (pos && neg) {
        rep.evidence_stable = false;
        rep.sign_test_rejected = true;
        rep.reason = "coefficients have mixed signs";
        return rep;
    }
    if (p.degree() <= 1) {
        rep.trials_run = 0;
        return rep;
    }
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        auto v = random_normal_vector(p.n(), rng);
        std::vector<double> a(p.n());
        for (auto& x : a) x = rng.uniform(0.05, 2.0);
        ++rep.trials_run;
        const auto dbl = real_roots(restrict_line(p, v, a), tol_imag);
        if (dbl.real_rooted) continue;
        const auto qc = trim(detail::line_coeffs<detail::quad>(p, v, a));
        const auto hi = detail::real_roots_impl<detail::quad>(qc, detail::quad(tol_imag), detail::quad(kQuadCoeffErr));
        if (hi.real_rooted) continue;
        rep.evidence_stable = false;
        rep.witness_v = v;
        rep.witness_a = a;
        rep.witness_max_imag = static_cast<double>(hi.max_imag);
        rep.reason = "restriction to a positive line is not real-rooted";
        return rep;
    }
    return rep;
}

bool roots_interlace(const std::vector<double>& q_roots, const std::vector<double>& p_roots, double tol) {
    if (q_roots.size() + 1 != p_roots.size()) return false;
    double max_abs = 0.0;
    for (double x : p_roots) max_abs = std::max(max_abs, std::abs(x));
    for (double x : q_roots) max_abs = std::max(max_abs, std::abs(x));
    const double eps = tol * (1.0 + max_abs);
    for (std::size_t i = 0; i < q_roots.size(); ++i) {
        if (q_roots[i] < p_roots[i] - eps) return false;
        if (q_roots[i] > p_roots[i + 1] + eps) return false;
    }
    return true;
}

namespace {

template <class MakeLine>
InterlaceReport interlace_driver(const MultiAffinePoly& q, const MultiAffinePoly& p, int trials, std::uint64_t seed,
                                 double tol, MakeLine&& make_line) {
    require(p.n() == q.n(), "interlaces: variable count mismatch");
    require(q.degree() == p.degree() - 1, "interlaces: degree mismatch, need deg q = deg p - 1");
    InterlaceReport rep;
    if (q.degree() <= 0) return rep;
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
        ++rep.trials_run;
        std::vector<double> witness;
        const auto [pq, qq] = make_line(rng, witness);
        auto fail = [&](std::string why, std::vector<double> pr, std::vector<double> qr) {
            rep.pass = false;
            rep.witness = witness;
            rep.p_roots = std::move(pr);
            rep.q_roots = std::move(qr);
            rep.reason = std::move(why);
        };
        if (pq.degree() != p.degree() || qq.degree() != q.degree()) {
            fail("restriction lost degree along the line", {}, {});
            return rep;
        }
        const auto pr = real_roots(pq);
        const auto qr = real_roots(qq);
        if (!pr.real_rooted || !qr.real_rooted) {
            fail("restriction is not real-rooted", pr.roots, qr.roots);
            return rep;
        }
        if (!roots_interlace(qr.roots, pr.roots, tol)) {
            fail("roots do not interlace", pr.roots, qr.roots);
            return rep;
        }
    }
    return rep;
}

} // namespace

InterlaceReport interlaces(const MultiAffinePoly& q, const MultiAffinePoly& p, int trials, std::uint64_t seed,
                           double tol) {
    const std::vector<double> ones(p.n(), 1.0);
    return interlace_driver(q, p, trials, seed, tol, [&](Rng& rng, std::vector<double>& witness) {
        witness = random_normal_vector(p.n(), rng);
        return std::pair{restrict_line(p, witness, ones), restrict_line(q, witness, ones)};
    });
}

InterlaceReport interlaces_matrix(const MultiAffinePoly& q, const MultiAffinePoly& p, int trials,
                                  std::uint64_t seed, double tol) {
    return interlace_driver(q, p, trials, seed, tol, [&](Rng& rng, std::vector<double>& witness) {
        const SymMatrix a = random_symmetric(p.n(), rng);
        witness = a.data();
        return std::pair{matrix_pencil_poly(p, a), matrix_pencil_poly(q, a)};
    });
}

std::vector<double> sample_in_cone_vector(const MultiAffinePoly& p, double margin, Rng& rng) {
    require(!p.is_zero(), "sample_in_cone: zero polynomial");
    const std::vector<double> ones(p.n(), 1.0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto g = random_normal_vector(p.n(), rng);
        const UniPoly q = restrict_line(p, g, ones);
        require(!q.is_zero(), "sample_in_cone: pencil is identically zero");
        if (q.degree() == 0) return g;
        const auto rr = real_roots(q);
        if (!rr.real_rooted) continue;
        const double m = rr.roots.front();
        const double s = -m + margin * (1.0 + std::abs(m));
        for (auto& x : g) x += s;
        return g;
    }
    throw DomainError("sample_in_cone: no real-rooted restriction in 100 draws, p is probably not hyperbolic");
}

SymMatrix sample_in_cone_matrix(const MultiAffinePoly& p, double margin, Rng& rng) {
    require(!p.is_zero(), "sample_in_cone: zero polynomial");
    for (int attempt = 0; attempt < 100; ++attempt) {
        const SymMatrix g = random_symmetric(p.n(), rng);
        const UniPoly q = matrix_pencil_poly(p, g);
        require(!q.is_zero(), "sample_in_cone: pencil is identically zero");
        if (q.degree() == 0) return g;
        const auto rr = real_roots(q);
        if (!rr.real_rooted) continue;
        const double m = rr.roots.front();
        return g.shifted(-m + margin * (1.0 + std::abs(m)));
    }
    throw DomainError("sample_in_cone: no real-rooted pencil in 100 draws, P is probably not PSD-stable");
}

std::vector<double> sample_in_cone_vector(const MultiAffinePoly& p, double margin, std::uint64_t seed) {
    Rng rng(seed);
    return sample_in_cone_vector(p, margin, rng);
}

SymMatrix sample_in_cone_matrix(const MultiAffinePoly& p, double margin, std::uint64_t seed) {
    Rng rng(seed);
    return sample_in_cone_matrix(p, margin, rng);
}

NestingReport renegar_nesting_check(const MultiAffinePoly& p, int samples, std::uint64_t seed, double tol) {
    const std::vector<double> ones(p.n(), 1.0);
    const MultiAffinePoly dp = directional_derivative(p, ones);
    NestingReport rep;
    rep.min_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const double margin = (i % 2 == 0) ? 0.0 : rng.uniform(0.01, 0.5);
        const auto x = sample_in_cone_vector(p, margin, rng);
        ++rep.samples;
        if (dp.degree() <= 0) continue;
        const auto r = in_cone_vector(dp, x, tol);
        // slack relative to the tolerance band
        const double slack = r.min_root + r.tolerance;
        rep.min_slack = std::min(rep.min_slack, r.min_root);
        if (!r.in_closed_cone() || slack < 0) {
            if (rep.violations == 0) rep.witness = x;
            ++rep.violations;
        }
    }
    return rep;
}

} // namespace lpm
