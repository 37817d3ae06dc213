#include "lpm/rayleigh.hpp"

#include "lpm/detail/interp.hpp"
#include "lpm/detail/quad.hpp"
#include "lpm/detail/roots_impl.hpp"
#include "lpm/error.hpp"
#include "lpm/graph.hpp"
#include "lpm/random.hpp"
#include "lpm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpm {

const std::vector<std::string>& rayleigh_vars() {
    static const std::vector<std::string> vars{"x1", "x2", "x3", "a", "b", "c"};
    return vars;
}

BorderedMatrix bordered_matrix() {
    const auto& vars = rayleigh_vars();
    auto var = [&](const char* name) { return ExactPoly::variable(vars, name); };
    BorderedMatrix m;
    for (auto& row : m)
        for (auto& e : row) e = ExactPoly(vars);
    const char* diag[6] = {"x1", "x2", "x2", "x2", "x2", "x3"};
    for (int i = 0; i < 6; ++i) m[i][i] = var(diag[i]);
    const char* inner[4][4] = {{nullptr, "a", "b", "c"},
                               {"a", nullptr, "c", "b"},
                               {"b", "c", nullptr, "a"},
                               {"c", "b", "a", nullptr}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (inner[i][j]) m[i + 1][j + 1] = var(inner[i][j]);
    return m;
}

ExactPoly laplace_det(const std::vector<std::vector<ExactPoly>>& m) {
    const std::size_t k = m.size();
    require(k >= 1, "laplace_det: empty matrix");
    if (k == 1) return m[0][0];
    ExactPoly total(m[0][0].vars());
    for (std::size_t col = 0; col < k; ++col) {
        if (m[0][col].is_zero()) continue;
        std::vector<std::vector<ExactPoly>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<ExactPoly> row;
            for (std::size_t c = 0; c < k; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        const ExactPoly term = m[0][col] * laplace_det(minor);
        total = (col % 2 == 0) ? total + term : total - term;
    }
    return total;
}

ExactPoly build_p() {
    const auto m = bordered_matrix();
    // edge variables of K4 appear in the order 12, 13, 14, 23, 24, 34
    const MultiAffinePoly trees = spanning_tree_poly(Graph::complete(4));
    ExactPoly p(rayleigh_vars());
    for (const auto& [bits, coeff] : trees.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < 6; ++i)
            if ((bits >> i) & 1u) idx.push_back(i);
        std::vector<std::vector<ExactPoly>> block;
        for (int r : idx) {
            std::vector<ExactPoly> row;
            for (int c : idx) row.push_back(m[r][c]);
            block.push_back(std::move(row));
        }
        p = p + Rational(static_cast<long long>(coeff)) * laplace_det(block);
    }
    return p;
}

ExactPoly rayleigh_difference(const ExactPoly& f, const std::string& i, const std::string& j) {
    require(i != j, "rayleigh_difference: variables must differ");
    require(f.var_index(i) >= 0 && f.var_index(j) >= 0, "rayleigh_difference: unknown variable");
    const ExactPoly fi = f.derivative(i);
    return fi * f.derivative(j) - f * fi.derivative(j);
}

ExactPoly w_closed_form() {
    const auto& vars = rayleigh_vars();
    // exponents over (x1, x2, x3, a, b, c)
    ExactPoly::TermMap t;
    t[{0, 0, 0, 2, 2, 0}] = 1;
    t[{0, 0, 0, 2, 0, 2}] = 1;
    t[{0, 0, 0, 0, 2, 2}] = 1;
    t[{0, 0, 0, 0, 0, 4}] = 1;
    t[{0, 1, 0, 1, 1, 1}] = -8;
    t[{0, 2, 0, 2, 0, 0}] = 2;
    t[{0, 2, 0, 0, 2, 0}] = 2;
    return ExactPoly(vars, std::move(t));
}

WIdentityReport verify_w_identity() {
    WIdentityReport rep;
    rep.w = rayleigh_difference(build_p(), "x1", "x3");
    const ExactPoly quarter = Rational(1, 4) * rep.w;
    rep.quarter_term_count = quarter.term_count();
    rep.matches_closed_form = quarter == w_closed_form();
    rep.free_of_x1_x3 = !rep.w.involves("x1") && !rep.w.involves("x3");
    return rep;
}

double nonneg_sampling(const ExactPoly& w, int trials, std::uint64_t seed) {
    double lo = std::numeric_limits<double>::infinity();
    std::vector<double> pt(w.vars().size());
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        for (auto& x : pt) x = rng.normal();
        lo = std::min(lo, w.evaluate_double(pt));
    }
    return lo;
}

HyperbolicityReport hyperbolicity_spot_check(const ExactPoly& p, int trials, std::uint64_t seed) {
    require(p.vars() == rayleigh_vars(), "hyperbolicity_spot_check: expected variables x1, x2, x3, a, b, c");
    const int deg = p.total_degree();
    const std::vector<double> e{1, 1, 1, 0, 0, 0};
    HyperbolicityReport rep;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        std::vector<double> v(6);
        double vmax = 0.0;
        for (auto& x : v) {
            x = rng.normal();
            vmax = std::max(vmax, std::abs(x));
        }
        ++rep.trials;
        auto coeffs_as = [&]<class Real>(Real) {
            std::vector<Real> pt(6);
            auto f = [&](const Real& s) {
                for (int i = 0; i < 6; ++i) pt[i] = Real(v[i]) - s * Real(e[i]);
                return p.evaluate_as<Real>(pt);
            };
            return detail::chebyshev_interpolate<Real>(f, deg, Real(0), Real(1 + 2 * vmax));
        };
        if (real_roots(UniPoly(coeffs_as(0.0))).real_rooted) continue;
        const auto qc = coeffs_as(detail::quad(0));
        const auto hi = detail::real_roots_impl<detail::quad>(qc, detail::quad(kTolImag), detail::quad(kQuadCoeffErr));
        if (hi.real_rooted) continue;
        if (rep.failures == 0) rep.witness = v;
        ++rep.failures;
    }
    return rep;
}

} // namespace lpm
