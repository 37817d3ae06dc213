#include "lpm/permwalk.hpp"

#include "lpm/error.hpp"

#include <algorithm>
#include <cmath>

namespace lpm {

FactorSchedule factorization_schedule(int n) {
    require(n >= 2, "factorization_schedule: n must be at least 2");
    FactorSchedule s;
    s.n = n;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) s.factors.push_back({i, j, Rational(1, j - i)});
    return s;
}

std::vector<Rational> group_algebra_product(int n) {
    require(n >= 2 && n <= 6, "group_algebra_product: n must be in [2, 6]");
    const auto sched = factorization_schedule(n);
    const std::uint64_t order = factorial(n);
    std::vector<Permutation> elems(order);
    for (std::uint64_t r = 0; r < order; ++r) elems[r] = lehmer_unrank(n, r);
    std::vector<Rational> x(order, Rational(0));
    x[lehmer_rank(identity_permutation(n))] = 1;
    for (const auto& f : sched.factors) {
        const Permutation tau = transposition(n, f.i - 1, f.j - 1);
        // x <- x (1 + lambda e_tau)
        std::vector<Rational> next = x;
        for (std::uint64_t r = 0; r < order; ++r) {
            if (x[r] == 0) continue;
            next[lehmer_rank(compose(elems[r], tau))] += f.lambda * x[r];
        }
        x = std::move(next);
    }
    return x;
}

bool verify_factorization(int n) {
    require(n >= 2 && n <= 5, "verify_factorization: n must be in [2, 5]");
    const auto coeffs = group_algebra_product(n);
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 1; });
}

std::vector<MultiAffinePoly> build_h_chain(const MultiAffinePoly& h) {
    require(!h.is_zero() && h.is_homogeneous(), "build_h_chain: h must be nonzero and homogeneous");
    const int n = h.n();
    std::vector<MultiAffinePoly> chain{h};
    if (n < 2) return chain;
    for (const auto& f : factorization_schedule(n).factors) {
        const double lambda = static_cast<double>(f.lambda);
        const auto& prev = chain.back();
        chain.push_back(prev + lambda * apply_permutation(prev, transposition(n, f.i - 1, f.j - 1)));
    }
    const double spread = proportionality_to_elementary(chain.back(), h.degree());
    if (!(spread <= 1e-10))
        throw Error("build_h_chain: final polynomial is not a multiple of e_d (spread " + std::to_string(spread) + ")");
    return chain;
}

WalkResult permutation_walk(const MultiAffinePoly& h, const std::vector<double>& v, double tol) {
    require_dim(static_cast<int>(v.size()) == h.n(), "permutation_walk: point dimension mismatch");
    const int n = h.n();
    const int d = h.degree();
    if (!in_cone_vector(elementary(n, d), v, tol).in_closed_cone())
        throw PreconditionError("permutation_walk: v is not in the hyperbolicity cone of e_d");
    const auto stab = is_stable_probabilistic(h, 20, 0);
    if (!stab.evidence_stable) throw PreconditionError("permutation_walk: h is not stable (" + stab.reason + ")");

    WalkResult res;
    std::vector<double> w = v;
    Permutation tau = identity_permutation(n);
    if (n >= 2) {
        const auto chain = build_h_chain(h);
        const auto sched = factorization_schedule(n);
        for (int k = static_cast<int>(sched.factors.size()); k >= 1; --k) {
            const auto& prev = chain[k - 1];
            WalkStep step;
            step.factor_index = k - 1;
            const ConeReport keep = in_cone_vector(prev, w, tol);
            if (keep.in_closed_cone()) {
                step.slack = keep.min_root;
                res.trace.steps.push_back(step);
                continue;
            }
            const int i = sched.factors[k - 1].i - 1, j = sched.factors[k - 1].j - 1;
            std::vector<double> swapped = w;
            std::swap(swapped[i], swapped[j]);
            const ConeReport alt = in_cone_vector(prev, swapped, tol);
            step.swapped = true;
            step.slack = alt.min_root;
            res.trace.steps.push_back(step);
            if (!alt.in_closed_cone()) {
                res.failure = "neither v nor its swap lies in H(h_" + std::to_string(k - 1) + ")";
                res.tau = tau;
                res.image = w;
                res.trace.tau = tau;
                return res;
            }
            w = std::move(swapped);
            tau = compose(transposition(n, i, j), tau);
        }
    }
    res.tau = tau;
    res.trace.tau = tau;
    res.image = w;
    res.final_check = in_cone_vector(h, w, tol);
    res.success = res.final_check.in_closed_cone();
    if (!res.success) res.failure = "final membership check failed";
    return res;
}

bool common_interlacer_check(const MultiAffinePoly& h, int i, int j, int trials, std::uint64_t seed) {
    const int n = h.n();
    require(i >= 0 && j >= 0 && i < n && j < n && i != j, "common_interlacer_check: bad transposition");
    if (h.degree() <= 1) return true;
    std::vector<double> dir(n, 0.0);
    dir[i] = dir[j] = 1.0;
    const MultiAffinePoly g = directional_derivative(h, dir);
    const MultiAffinePoly th = apply_permutation(h, transposition(n, i, j));
    if (g.is_zero()) return th == h;
    return interlaces(g, h, trials, seed).pass && interlaces(g, th, trials, seed).pass;
}

TransconeReport transcone_probe(const MultiAffinePoly& h, int samples_per_step, std::uint64_t seed, double tol) {
    TransconeReport rep;
    const int n = h.n();
    if (n < 2) return rep;
    const auto chain = build_h_chain(h);
    const auto sched = factorization_schedule(n);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        const auto& f = sched.factors[k - 1];
        const MultiAffinePoly moved = apply_permutation(chain[k - 1], transposition(n, f.i - 1, f.j - 1));
        for (int s = 0; s < samples_per_step; ++s) {
            Rng rng(derive_seed(seed, k * 100000 + s));
            const double margin = (s % 2 == 0) ? 0.0 : rng.uniform(0.01, 0.5);
            const auto x = sample_in_cone_vector(chain[k], margin, rng);
            ++rep.samples;
            if (!in_cone_vector(chain[k - 1], x, tol).in_closed_cone() &&
                !in_cone_vector(moved, x, tol).in_closed_cone())
                ++rep.violations;
        }
    }
    return rep;
}

} // namespace lpm
