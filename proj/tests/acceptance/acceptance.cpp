// End-to-end acceptance run: one PASS/FAIL line per criterion, exit 1 if
// any fails. Tolerances are fixed here on purpose.

#include "lpm/cones.hpp"
#include "lpm/detail/interp.hpp"
#include "lpm/detail/pencil.hpp"
#include "lpm/detail/quad.hpp"
#include "lpm/detail/roots_impl.hpp"
#include "lpm/families.hpp"
#include "lpm/inequalities.hpp"
#include "lpm/minorlift.hpp"
#include "lpm/permwalk.hpp"
#include "lpm/rayleigh.hpp"
#include "lpm/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>

using namespace lpm;

namespace {

constexpr double kIdentityTol = 1e-8;    // 1: E_k vs e_k(lambda)
constexpr double kInequalityRel = 1e-9;  // 3, 4: slack >= -1e-9 scale
constexpr double kCoeffFloor = -1e-10;   // 4: P_A coefficients
constexpr double kSamplingFloor = -1e-12;  // 5
constexpr double kDerivationTol = 1e-7;  // 6
constexpr double kCompoundTol = 1e-9;    // 6, d = k
constexpr double kWalkTol = 1e-7;        // 7
constexpr double kSchurHornTol = 1e-6;   // 8
constexpr double kMajorizationTol = 1e-8;  // 10
constexpr double kDualTol = 1e-8;        // 11

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// --- 1 -------------------------------------------------------------------

Outcome ek_identity() {
    Rng rng(derive_seed(kSeed, 1));
    double worst = 0;
    int checks = 0;
    for (int s = 0; s < 200; ++s) {
        const int n = 3 + s % 5;
        const SymMatrix a = random_symmetric(n, rng);
        const auto lam = eigenvalues_sym(a);
        for (int k = 0; k <= n; ++k) {
            const double ek_a = minor_lift_eval(elementary(n, k), a);
            const double ek_l = elementary(n, k).evaluate(lam);
            worst = std::max(worst, std::abs(ek_a - ek_l) / (1 + std::abs(ek_a)));
            ++checks;
        }
    }
    return {worst <= kIdentityTol, std::to_string(checks) + " (A,k) pairs, worst rel error " + fmt("%.2e", worst)};
}

// --- 2 -------------------------------------------------------------------

// Real-rootedness of t -> P(B - t M), M positive definite. Double first,
// 128-bit recomputation when double says no.
bool matrix_line_real_rooted(const MultiAffinePoly& p, const SymMatrix& b, const SymMatrix& m) {
    const int n = p.n();
    const int d = p.degree();
    double radius = 1.0;
    {
        const auto lb = eigenvalues_sym(b);
        const auto lm = eigenvalues_sym(m);
        radius += std::max(std::abs(lb.front()), std::abs(lb.back())) / lm.front();
    }
    auto coeffs_as = [&](auto zero) {
        using Real = decltype(zero);
        auto f = [&](const Real& t) {
            std::vector<Real> x(static_cast<std::size_t>(n) * n);
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = Real(b.data()[i]) - t * Real(m.data()[i]);
            return detail::minor_lift_eval_as<Real>(p, x, n);
        };
        return detail::chebyshev_interpolate<Real>(f, d, Real(0), Real(radius));
    };
    if (real_roots(UniPoly(coeffs_as(0.0)), kTolImag).real_rooted) return true;
    const auto qc = coeffs_as(detail::quad(0));
    return detail::real_roots_impl<detail::quad>(qc, detail::quad(kTolImag), detail::quad(kQuadCoeffErr)).real_rooted;
}

SymMatrix random_pd(int n, Rng& rng) {
    const SymMatrix g = random_symmetric(n, rng);
    Matrix gg = g.matrix() * g.matrix();
    return SymMatrix(gg).shifted(0.1);
}

Outcome minor_lift_stability() {
    Rng rng(derive_seed(kSeed, 2));
    int polys = 0, lines = 0, line_fail = 0, psd_samples = 0, psd_fail = 0;
    for (int i = 0; i < 50; ++i) {
        const auto& fam = family_names()[i % family_names().size()];
        const auto m = draw_family(fam, rng, 2, 6);
        const MultiAffinePoly& p = m.p;
        ++polys;
        for (int l = 0; l < 100; ++l) {
            const SymMatrix b = random_symmetric(p.n(), rng);
            const SymMatrix dir = (l % 2 == 0) ? SymMatrix::identity(p.n()) : random_pd(p.n(), rng);
            ++lines;
            if (!matrix_line_real_rooted(p, b, dir)) ++line_fail;
        }
        const int k = std::max(p.degree(), 1);
        for (int s = 0; s < 100; ++s) {
            const double margin = (s % 2 == 0) ? 0.0 : rng.uniform(0.01, 0.5);
            const SymMatrix a = sample_k_locally_psd(p.n(), k, margin, rng);
            ++psd_samples;
            if (!in_cone_matrix(p, a).in_closed_cone()) ++psd_fail;
        }
    }
    std::ostringstream os;
    os << polys << " polynomials, " << lines << " lines (" << line_fail << " not real-rooted), " << psd_samples
       << " k-locally PSD samples (" << psd_fail << " outside)";
    return {line_fail == 0 && psd_fail == 0, os.str()};
}

// --- 3 -------------------------------------------------------------------

double rel_slack(const InequalityRecord& r) { return r.slack / (1 + std::max(std::abs(r.lhs), std::abs(r.rhs))); }

Outcome fischer_battery() {
    Rng rng(derive_seed(kSeed, 3));
    Tolerances tol;
    tol.rel = kInequalityRel;
    int samples = 0, precond = 0, mono_fail = 0, draws = 0;
    double worst = std::numeric_limits<double>::infinity();
    while (samples < 500) {
        ++draws;
        const auto m = draw_family(family_names()[draws % family_names().size()], rng, 2, 6);
        const double margin = rng.coin() ? 0.0 : rng.uniform(0.01, 0.5);
        const SymMatrix a = sample_in_cone_matrix(m.p, margin, rng);
        const Partition pi = random_partition(m.p.n(), rng);
        const auto r = check_fischer_hadamard(m.p, a, pi, tol);
        if (r.status == Status::precondition_failed) {
            ++precond;
            continue;
        }
        ++samples;
        worst = std::min(worst, rel_slack(r));
        if (check_monotone_segment(m.p, a, pi, 101, tol).status != Status::pass) ++mono_fail;
    }
    std::ostringstream os;
    os << samples << " samples, min rel slack " << fmt("%.2e", worst) << ", monotone failures " << mono_fail
       << ", skipped (not in cone) " << precond;
    return {worst >= -kInequalityRel && mono_fail == 0, os.str()};
}

// --- 4 -------------------------------------------------------------------

Outcome koteljanskii_nlc() {
    Rng rng(derive_seed(kSeed, 4));
    Tolerances tol;
    tol.rel = kInequalityRel;
    int samples = 0, pairs = 0, precond = 0, draws = 0;
    double worst = std::numeric_limits<double>::infinity(), min_coeff = std::numeric_limits<double>::infinity();
    while (samples < 200) {
        ++draws;
        const auto m = draw_family(family_names()[draws % family_names().size()], rng, 2, 6);
        const double margin = rng.coin() ? 0.0 : rng.uniform(0.01, 0.5);
        const SymMatrix a = sample_in_cone_matrix(m.p, margin, rng);
        const auto kot = koteljanskii_battery(m.p, a, tol);
        const auto nlc = check_nlc_battery(m.p, a, tol);
        if (nlc.status == Status::precondition_failed ||
            (!kot.empty() && kot.front().status == Status::precondition_failed)) {
            ++precond;
            continue;
        }
        ++samples;
        for (const auto& r : kot) worst = std::min(worst, rel_slack(r)), ++pairs;
        for (const auto& r : nlc.records) worst = std::min(worst, rel_slack(r)), ++pairs;
        min_coeff = std::min(min_coeff, nlc.min_coeff);
    }
    std::ostringstream os;
    os << samples << " samples, " << pairs << " (S,T) records, min rel slack " << fmt("%.2e", worst)
       << ", min P_A coefficient " << fmt("%.2e", min_coeff) << ", skipped " << precond;
    return {worst >= -kInequalityRel && min_coeff >= kCoeffFloor, os.str()};
}

// --- 5 -------------------------------------------------------------------

Outcome w_identity() {
    const auto rep = verify_w_identity();
    // closed form typed in independently
    const auto& vars = rayleigh_vars();
    auto v = [&](const char* s) { return ExactPoly::variable(vars, s); };
    const ExactPoly a = v("a"), b = v("b"), c = v("c"), x2 = v("x2");
    const ExactPoly closed = a * a * b * b + a * a * c * c + b * b * c * c + c * c * c * c -
                             Rational(8) * a * b * c * x2 + Rational(2) * a * a * x2 * x2 +
                             Rational(2) * b * b * x2 * x2;
    const ExactPoly quarter = Rational(1, 4) * rep.w;
    const bool exact = quarter == closed;
    const bool free = !rep.w.involves("x1") && !rep.w.involves("x3");
    const double sampled = nonneg_sampling(rep.w, 10000, derive_seed(kSeed, 5));
    const auto hyp = hyperbolicity_spot_check(build_p(), 10000, derive_seed(kSeed, 55));
    std::ostringstream os;
    os << "exact " << (exact ? "yes" : "no") << ", terms " << quarter.term_count() << ", free of x1,x3 "
       << (free ? "yes" : "no") << ", sampling min " << fmt("%.2e", sampled) << ", hyperbolicity failures "
       << hyp.failures << "/" << hyp.trials;
    return {exact && free && rep.pass() && sampled >= kSamplingFloor && hyp.failures == 0, os.str()};
}

// --- 6 -------------------------------------------------------------------

Outcome derivation() {
    Rng rng(derive_seed(kSeed, 6));
    int cases = 0, fails = 0;
    double worst_compound = 0;
    for (int s = 0; s < 100; ++s) {
        const int n = 2 + s % 5;
        const SymMatrix x = random_symmetric(n, rng);
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= k; ++d) {
                ++cases;
                if (!check_derivation_spectrum(x, k, d, kDerivationTol).pass()) ++fails;
            }
        for (int k = 1; k <= n; ++k) {
            const auto dm = derivation_matrix(x, k, k);
            const Matrix comp = compound_matrix(x, k);
            for (int r = 0; r < comp.n(); ++r)
                for (int c = 0; c < comp.n(); ++c)
                    worst_compound = std::max(worst_compound, std::abs(dm.entries(r, c) - comp(r, c)));
        }
    }
    std::ostringstream os;
    os << cases << " (X,k,d) cases, " << fails << " spectrum/diagonal failures, d=k max deviation "
       << fmt("%.2e", worst_compound);
    return {fails == 0 && worst_compound <= kCompoundTol, os.str()};
}

// --- 7 -------------------------------------------------------------------

Outcome permutation_walks() {
    bool exact = true;
    for (int n = 2; n <= 5; ++n) exact = exact && verify_factorization(n);
    Rng rng(derive_seed(kSeed, 7));
    int runs = 0, failures = 0;
    for (int s = 0; s < 100; ++s) {
        const auto m = draw_family(family_names()[s % family_names().size()], rng, 2, 6);
        const double margin = (s % 2 == 0) ? 0.0 : rng.uniform(0.01, 0.5);
        const auto v = sample_in_cone_vector(elementary(m.p.n(), m.p.degree()), margin, rng);
        const auto w = permutation_walk(m.p, v, kWalkTol);
        ++runs;
        if (!w.success || !w.final_check.in_closed_cone()) ++failures;
    }
    std::ostringstream os;
    os << "factorization exact for n=2..5: " << (exact ? "yes" : "no") << ", walks " << runs << ", hard failures "
       << failures;
    return {exact && failures == 0, os.str()};
}

// --- 8 -------------------------------------------------------------------

Outcome schur_horn() {
    Rng rng(derive_seed(kSeed, 8));
    double worst_linear = 0, worst_embedded = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < 50; ++s) {
        const int n = 2 + s % 4;
        MultiAffinePoly::TermMap t;
        for (int i = 0; i < n; ++i) t[1u << i] = rng.normal();
        const MultiAffinePoly p(n, t);
        const SymMatrix x = random_symmetric(n, rng);
        const auto r = schur_horn_gap(p, x, 20, 200, derive_seed(kSeed, 800 + s));
        worst_linear = std::max(worst_linear, std::abs(r.orth_max_lower_bound - r.perm_max));
    }
    int embedded = 0;
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            for (int d = 1; d <= k; ++d)
                for (double sign : {1.0, -1.0}) {
                    const MultiAffinePoly p = sign * shift_variables(elementary(k, d), n, 0);
                    const SymMatrix x = random_symmetric(n, rng);
                    const auto r = schur_horn_gap(p, x, 20, 200, derive_seed(kSeed, 900 + embedded));
                    worst_embedded = std::max(worst_embedded, r.orth_max_lower_bound - r.perm_max);
                    ++embedded;
                }
    std::ostringstream os;
    os << "linear: 50 X, max |orth - perm| " << fmt("%.2e", worst_linear) << "; +-e_d embeddings: " << embedded
       << " cases, max (orth - perm) " << fmt("%.2e", worst_embedded);
    return {worst_linear <= kSchurHornTol && worst_embedded <= kSchurHornTol, os.str()};
}

// --- 9 -------------------------------------------------------------------

Outcome spectral_containment() {
    Rng rng(derive_seed(kSeed, 9));
    int samples = 0, not_found = 0, confirmed = 0, skipped = 0, draws = 0;
    std::uint64_t perms = 0;
    std::string first_miss;
    while (samples < 200) {
        const auto& fam = containment_family_names()[draws++ % containment_family_names().size()];
        const auto m = draw_containment_family(fam, rng, 0.01, 2, 7);
        const double margin = rng.coin() ? 0.0 : rng.uniform(0.01, 0.5);
        SymMatrix a;
        try {
            a = sample_in_cone_matrix(m.p, margin, rng);
        } catch (const DomainError&) {
            ++skipped;  // no real-rooted pencil found for this draw
            continue;
        }
        if (!in_cone_matrix(m.p, a).in_closed_cone()) {
            ++skipped;
            continue;
        }
        ++samples;
        const auto r = spectral_containment_search(m.p, a);
        perms += r.permutations_tested;
        if (!r.found) {
            ++not_found;
            if (r.counterexample_confirmed) ++confirmed;
            if (first_miss.empty()) first_miss = m.label;
        }
    }
    std::ostringstream os;
    os << samples << " samples over " << containment_family_names().size() << " families, " << perms
       << " arrangements tried, not found " << not_found << " (confirmed " << confirmed << "), skipped " << skipped;
    if (!first_miss.empty()) os << ", first miss " << first_miss;
    return {not_found == 0 && confirmed == 0, os.str()};
}

// --- 10 ------------------------------------------------------------------

Outcome majorization() {
    Rng rng(derive_seed(kSeed, 10));
    int fails = 0, schur_fails = 0;
    for (int s = 0; s < 200; ++s) {
        const int n = 2 + s % 5;
        const int k = rng.uniform_int(1, n);
        const SymMatrix x = random_symmetric(n, rng);
        std::vector<double> d(n);
        for (auto& v : d) v = rng.uniform(0.1, 3.0);
        if (!check_majorization_rescaled_ek(x, d, k, kMajorizationTol).pass) ++fails;
        // D = I, k = n: roots are eigenvalues and diagonal entries
        const auto r = check_majorization_rescaled_ek(x, std::vector<double>(n, 1.0), n, kMajorizationTol);
        if (!r.pass || !majorizes(eigenvalues_sym(x), x.diag(), kMajorizationTol)) ++schur_fails;
    }
    std::ostringstream os;
    os << "200 (X,D,k), failures " << fails << "; Schur case failures " << schur_fails;
    return {fails == 0 && schur_fails == 0, os.str()};
}

// --- 11 ------------------------------------------------------------------

Outcome dual_identity() {
    Rng rng(derive_seed(kSeed, 11));
    int runs = 0, fails = 0;
    double worst = 0;
    while (runs < 200) {
        const int n = rng.uniform_int(1, 8);
        const SymMatrix a = random_symmetric(n, rng);
        if (std::abs(determinant(a.matrix())) < 1e-6) continue;
        // sparse: about three terms
        MultiAffinePoly::TermMap t;
        const int terms = rng.uniform_int(1, 3);
        for (int i = 0; i < terms; ++i) t[static_cast<std::uint32_t>(rng.uniform_int(0, (1 << n) - 1))] = rng.normal();
        const MultiAffinePoly p(n, t);
        if (p.is_zero()) continue;
        const auto r = check_dual_identity(p, a, kDualTol);
        ++runs;
        worst = std::max(worst, r.rel_error);
        if (!r.pass) ++fails;
    }
    std::ostringstream os;
    os << runs << " (A,p), failures " << fails << ", worst rel error " << fmt("%.2e", worst);
    return {fails == 0, os.str()};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "E_k equals e_k of the spectrum", ek_identity},
        {2, "minor lift is PSD-stable", minor_lift_stability},
        {3, "Fischer-Hadamard and segment monotonicity", fischer_battery},
        {4, "Koteljanskii and lattice condition", koteljanskii_nlc},
        {5, "exact Rayleigh difference identity", w_identity},
        {6, "derivation matrix spectrum", derivation},
        {7, "permutation walk", permutation_walks},
        {8, "Schur-Horn property", schur_horn},
        {9, "spectral containment", spectral_containment},
        {10, "root majorization", majorization},
        {11, "dual identity", dual_identity},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %2d %s: %s -- %s [%.1fs]\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
