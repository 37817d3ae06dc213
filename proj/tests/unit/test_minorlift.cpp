#include "doctest.h"

#include "lpm/minorlift.hpp"

#include <Eigen/Dense>

#include <cmath>

using namespace lpm;

namespace {

MultiAffinePoly random_poly(int n, Rng& rng, double density = 0.5) {
    MultiAffinePoly::TermMap terms;
    for (std::uint32_t b = 0; b < (1u << n); ++b)
        if (rng.coin(density)) terms[b] = rng.normal();
    if (terms.empty()) terms[SubsetMask::full_bits(n)] = 1.0;
    return MultiAffinePoly(n, terms);
}

// sum_S a_S det(A_S) with Eigen's determinant
double lift_oracle(const MultiAffinePoly& p, const SymMatrix& a) {
    double total = 0;
    for (const auto& [bits, c] : p.terms()) {
        std::vector<int> idx;
        for (int i = 0; i < a.n(); ++i)
            if ((bits >> i) & 1u) idx.push_back(i);
        Eigen::MatrixXd m(idx.size(), idx.size());
        for (std::size_t r = 0; r < idx.size(); ++r)
            for (std::size_t s = 0; s < idx.size(); ++s) m(r, s) = a(idx[r], idx[s]);
        total += c * (idx.empty() ? 1.0 : m.determinant());
    }
    return total;
}

// P is multiaffine in the diagonal entries, so the mixed partial over the
// diagonal slots outside T is an exact finite difference.
double restriction_oracle(const MultiAffinePoly& p, const SubsetMask& t, const SymMatrix& a) {
    const auto out = t.complement().zero_based();
    double total = 0;
    for (std::uint32_t u = 0; u < (1u << out.size()); ++u) {
        SymMatrix b = a;
        int bits = 0;
        for (std::size_t k = 0; k < out.size(); ++k)
            if ((u >> k) & 1u) {
                b.set(out[k], out[k], a(out[k], out[k]) + 1.0);
                ++bits;
            }
        total += ((static_cast<int>(out.size()) - bits) % 2 ? -1.0 : 1.0) * lift_oracle(p, b);
    }
    return total;
}

} // namespace

TEST_CASE("lift examples") {
    auto a = SymMatrix::from_rows({{2, 1}, {1, 2}});
    CHECK(minor_lift_eval(elementary(2, 2), a) == doctest::Approx(3.0));
    CHECK(minor_lift_eval(elementary(2, 1), a) == doctest::Approx(4.0));
    CHECK(minor_lift_eval(MultiAffinePoly::constant(2, 5.0), a) == 5.0);
    CHECK_THROWS_AS(minor_lift_eval(elementary(3, 1), a), DimensionError);
}

TEST_CASE("lift agrees with Eigen determinants") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(1, 8);
        auto p = random_poly(n, rng);
        auto a = random_symmetric(n, rng);
        const double want = lift_oracle(p, a);
        CHECK(std::abs(minor_lift_eval(p, a) - want) <= 1e-10 * (1 + std::abs(want)) * std::pow(2.0, n));
    }
}

TEST_CASE("lift on diagonal matrices is evaluation") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(1, 7);
        auto p = random_poly(n, rng);
        std::vector<double> d(n);
        for (auto& x : d) x = rng.normal();
        CHECK(minor_lift_eval(p, SymMatrix::diagonal(d)) == doctest::Approx(p.evaluate(d)).epsilon(1e-10));
    }
}

TEST_CASE("restriction examples") {
    auto e2 = elementary(3, 2);
    auto r = lpm_restriction(e2, SubsetMask::from_indices(3, {1, 2}));
    CHECK(r == elementary(2, 1));
    auto x = SymMatrix::from_rows({{1, 0.5, 0.2}, {0.5, 3, -1}, {0.2, -1, 2}});
    CHECK(restriction_value(e2, SubsetMask::from_indices(3, {1, 2}), x) == doctest::Approx(4.0));
    // |T| < n - deg: every coefficient vanishes
    CHECK_THROWS_AS(lpm_restriction(elementary(4, 2), SubsetMask::from_indices(4, {1})), DomainError);
    // T = [n] is the identity
    CHECK(lpm_restriction(e2, SubsetMask::full(3)) == e2);
}

TEST_CASE("restriction is the diagonal mixed partial") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(2, 6);
        auto p = random_poly(n, rng, 0.7);
        auto a = random_symmetric(n, rng);
        std::uint32_t tb = 0;
        for (int i = 0; i < n; ++i)
            if (rng.coin(0.7)) tb |= 1u << i;
        SubsetMask t(n, tb);
        if (t.size() < n - p.degree()) continue;
        const double want = restriction_oracle(p, t, a);
        const double got = restriction_value(p, t, a);
        CHECK(std::abs(got - want) <= 1e-8 * (1 + std::abs(want)) * std::pow(2.0, n));
    }
}

TEST_CASE("matrix pencil examples") {
    auto a = SymMatrix::from_rows({{2, 1}, {1, 2}});
    auto q = matrix_pencil_poly(elementary(2, 2), a);
    REQUIRE(q.degree() == 2);
    CHECK(q.coeff(0) == doctest::Approx(3.0));
    CHECK(q.coeff(1) == doctest::Approx(-4.0));
    CHECK(q.coeff(2) == doctest::Approx(1.0));
}

TEST_CASE("matrix pencil matches pointwise lifts") {
    Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(1, 7);
        auto p = random_poly(n, rng);
        auto a = random_symmetric(n, rng);
        auto q = matrix_pencil_poly(p, a);
        CHECK(q.degree() <= p.degree());
        for (double t : {-1.7, -0.3, 0.0, 0.8, 2.1}) {
            const double want = lift_oracle(p, a.shifted(-t));
            CHECK(std::abs(q(t) - want) <= 1e-8 * (1 + std::abs(want)) * std::pow(3.0, n));
        }
    }
}

TEST_CASE("E_k lift is e_k of the spectrum") {
    Rng rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform_int(2, 7);
        auto a = random_symmetric(n, rng);
        auto lam = eigenvalues_sym(a);
        for (int k = 0; k <= n; ++k) {
            const double lhs = minor_lift_eval(elementary(n, k), a);
            const double rhs = elementary(n, k).evaluate(lam);
            CHECK(std::abs(lhs - rhs) <= 1e-8 * (1 + std::abs(lhs)));
        }
    }
}

TEST_CASE("dual identity") {
    auto r = check_dual_identity(elementary(2, 1), SymMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(r.lhs == doctest::Approx(4.0));
    CHECK(r.rhs == doctest::Approx(4.0));
    CHECK(r.pass);

    Rng rng(26);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.uniform_int(1, 7);
        auto p = random_poly(n, rng, 0.3);
        auto a = random_symmetric(n, rng).shifted(0.5);
        if (std::abs(determinant(a.matrix())) < 1e-3) continue;
        auto rep = check_dual_identity(p, a);
        CHECK(rep.pass);
        CHECK(rep.rel_error <= 1e-8);
    }
    CHECK_THROWS_AS(check_dual_identity(elementary(2, 1), SymMatrix(2)), DomainError);
}
