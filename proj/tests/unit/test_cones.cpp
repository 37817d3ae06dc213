#include "doctest.h"

#include "lpm/cones.hpp"
#include "lpm/graph.hpp"
#include "lpm/minorlift.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

using namespace lpm;

namespace {

// companion eigenvalues via Eigen's general solver
std::vector<std::complex<double>> eigen_roots(const UniPoly& q) {
    const int d = q.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -q.coeff(i) / q.leading();
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

std::vector<double> normal_vec(int n, Rng& rng) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.normal();
    return v;
}

} // namespace

TEST_CASE("real root examples") {
    auto r = real_roots(UniPoly({3, -4, 1}));
    REQUIRE(r.real_rooted);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(1.0));
    CHECK(r.roots[1] == doctest::Approx(3.0));

    r = real_roots(UniPoly({11, -12, 3}));
    CHECK(r.roots[0] == doctest::Approx(2 - 1 / std::sqrt(3.0)));
    CHECK(r.roots[1] == doctest::Approx(2 + 1 / std::sqrt(3.0)));

    CHECK_FALSE(real_roots(UniPoly({1, 0, 1})).real_rooted);
    CHECK(real_roots(UniPoly({5})).roots.empty());
    CHECK_THROWS_AS(real_roots(UniPoly{}), DomainError);
}

TEST_CASE("multiple roots stay real") {
    auto r = real_roots(UniPoly::from_roots({2, 2, 2, -1}));
    REQUIRE(r.real_rooted);
    REQUIRE(r.roots.size() == 4);
    CHECK(r.roots[0] == doctest::Approx(-1.0));
    for (int i = 1; i < 4; ++i) CHECK(r.roots[i] == doctest::Approx(2.0).epsilon(1e-4));
    r = real_roots(UniPoly::from_roots({0, 0}));
    CHECK(r.real_rooted);
}

TEST_CASE("root finder agrees with Eigen on random real-rooted polynomials") {
    Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = rng.uniform_int(1, 8);
        std::vector<double> roots(d);
        for (auto& x : roots) x = rng.uniform(-5, 5);
        auto q = UniPoly::from_roots(roots, rng.uniform(0.5, 3));
        auto got = real_roots(q);
        REQUIRE(got.real_rooted);
        auto want = eigen_roots(q);
        std::vector<double> wr;
        for (auto z : want) wr.push_back(z.real());
        std::sort(wr.begin(), wr.end());
        std::sort(roots.begin(), roots.end());
        for (int i = 0; i < d; ++i) {
            CHECK(std::abs(got.roots[i] - roots[i]) <= 1e-6 * (1 + std::abs(roots[i])));
            CHECK(std::abs(got.roots[i] - wr[i]) <= 1e-6 * (1 + std::abs(roots[i])));
        }
    }
}

TEST_CASE("non-real pairs are reported") {
    Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        // (t^2 - 2 a t + a^2 + b^2) times real factors, b well away from 0
        const double a = rng.uniform(-2, 2), b = rng.uniform(0.1, 2);
        UniPoly quad({a * a + b * b, -2 * a, 1});
        auto extra = UniPoly::from_roots({rng.uniform(-3, 3), rng.uniform(-3, 3)});
        std::vector<double> c(5, 0.0);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) c[i + j] += quad.coeff(i) * extra.coeff(j);
        auto r = real_roots(UniPoly(c));
        CHECK_FALSE(r.real_rooted);
        CHECK(r.max_imag == doctest::Approx(b).epsilon(1e-6));
    }
}

TEST_CASE("vector cone examples") {
    auto e2 = elementary(3, 2);
    auto out = in_cone_vector(e2, {-1, 1, 1});
    CHECK(out.verdict == Verdict::outside);
    REQUIRE(out.roots.size() == 2);
    CHECK(out.roots[0] == doctest::Approx(-1.0 / 3.0));
    CHECK(out.roots[1] == doctest::Approx(1.0));

    auto in = in_cone_vector(e2, {-0.2, 1, 1});
    CHECK(in.verdict == Verdict::inside);
    CHECK(in.roots[0] == doctest::Approx(0.2));
    CHECK(in.roots[1] == doctest::Approx(1.0));

    CHECK(in_cone_vector(e2, {0, 0, 1}).verdict == Verdict::boundary);
    CHECK(in_cone_vector(elementary(3, 3), {0, 1, 1}).verdict == Verdict::boundary);
    CHECK(in_cone_vector(e2, {1, 1, 1}).verdict == Verdict::inside);
    // p(1) = 0
    auto bad = elementary(2, 1) - 2.0 * MultiAffinePoly::monomial(2, SubsetMask::from_indices(2, {1}));
    CHECK_THROWS_AS(in_cone_vector(bad, {1, 1}), DomainError);
}

TEST_CASE("vector cone of e_k is decided by the same roots Eigen finds") {
    Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.uniform_int(2, 7);
        const int k = rng.uniform_int(1, n);
        auto p = elementary(n, k);
        auto v = normal_vec(n, rng);
        for (auto& x : v) x += rng.uniform(-0.5, 1.5);
        auto rep = in_cone_vector(p, v);
        // roots of e_k(v - t 1) via Eigen on the explicit restriction
        auto want = eigen_roots(restrict_line(p, v, std::vector<double>(n, 1.0)));
        double lo = 1e300;
        for (auto z : want) lo = std::min(lo, z.real());
        CHECK(rep.real_rooted);
        if (std::abs(lo) > 1e-6) CHECK(rep.in_closed_cone() == (lo > 0));
    }
}

TEST_CASE("orthant and half-space special cases") {
    Rng rng(34);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(2, 6);
        auto v = normal_vec(n, rng);
        const bool all_pos = std::all_of(v.begin(), v.end(), [](double x) { return x > 0; });
        CHECK((in_cone_vector(elementary(n, n), v).verdict == Verdict::inside) == all_pos);
        double s = 0;
        for (double x : v) s += x;
        CHECK((in_cone_vector(elementary(n, 1), v).verdict == Verdict::inside) == (s > 1e-6));
    }
}

TEST_CASE("matrix cone examples") {
    auto rep = in_cone_matrix(elementary(2, 2), SymMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(rep.verdict == Verdict::inside);
    CHECK(rep.roots[0] == doctest::Approx(1.0));
    CHECK(rep.roots[1] == doctest::Approx(3.0));
    for (int k = 1; k <= 8; ++k) {
        CHECK(in_cone_matrix(elementary(8, k), SymMatrix::identity(8)).verdict == Verdict::inside);
        CHECK(in_cone_matrix(elementary(8, k), SymMatrix(8)).verdict == Verdict::boundary);
    }
}

TEST_CASE("determinant cone is the PSD cone") {
    Rng rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.uniform_int(2, 6);
        auto a = random_symmetric(n, rng).shifted(rng.uniform(-1, 3));
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
        const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues()(0);
        auto rep = in_cone_matrix(elementary(n, n), a);
        CHECK(rep.min_root == doctest::Approx(lmin).epsilon(1e-7));
        if (std::abs(lmin) > 1e-6) CHECK(rep.in_closed_cone() == (lmin > 0));
    }
}

TEST_CASE("verdict matches min root and tolerance") {
    auto r = classify_roots({0.5, -1e-12, 3}, true, 1e-8);
    CHECK(r.roots.front() == -1e-12);
    CHECK(r.verdict == Verdict::boundary);
    CHECK(r.tolerance == doctest::Approx(4e-8));
    CHECK(classify_roots({-1e-3}, true, 1e-8).verdict == Verdict::outside);
    CHECK(classify_roots({1e-3}, true, 1e-8).verdict == Verdict::inside);
    CHECK(classify_roots({1.0}, false, 1e-8).verdict == Verdict::inconclusive);
    CHECK(classify_roots({}, true, 1e-8).verdict == Verdict::inside);
}

TEST_CASE("stability testing") {
    auto mixed = MultiAffinePoly(4, {{0b0011, 1.0}, {0b1100, -1.0}});
    auto r = is_stable_probabilistic(mixed, 50, 1);
    CHECK_FALSE(r.evidence_stable);
    CHECK(r.sign_test_rejected);

    CHECK(is_stable_probabilistic(spanning_tree_poly(Graph::complete(4)), 200, 2).evidence_stable);
    CHECK(is_stable_probabilistic(elementary(5, 3), 200, 3).evidence_stable);

    // x1x2 + x3x4 has same-sign coefficients but is not stable
    auto fake = MultiAffinePoly(4, {{0b0011, 1.0}, {0b1100, 1.0}});
    auto w = is_stable_probabilistic(fake, 500, 4);
    CHECK_FALSE(w.evidence_stable);
    CHECK_FALSE(w.sign_test_rejected);
    REQUIRE(w.witness_v.size() == 4);
    // the witness really gives a non-real restriction
    CHECK_FALSE(real_roots(restrict_line(fake, w.witness_v, w.witness_a)).real_rooted);
}

TEST_CASE("interlacing") {
    auto e2 = elementary(3, 2);
    auto d = directional_derivative(e2, std::vector<double>(3, 1.0));
    auto pr = real_roots(restrict_line(e2, std::vector<double>{1, 2, 3}, std::vector<double>(3, 1.0)));
    auto qr = real_roots(restrict_line(d, std::vector<double>{1, 2, 3}, std::vector<double>(3, 1.0)));
    REQUIRE(qr.roots.size() == 1);
    CHECK(qr.roots[0] == doctest::Approx(2.0));
    CHECK(roots_interlace(qr.roots, pr.roots, 1e-8));
    CHECK_FALSE(roots_interlace({5.0}, pr.roots, 1e-8));

    CHECK(interlaces(d, e2, 100, 5).pass);
    for (int n = 3; n <= 6; ++n)
        for (int k = 2; k <= n; ++k) {
            auto p = elementary(n, k);
            auto q = directional_derivative(p, std::vector<double>(n, 1.0));
            CHECK(interlaces(q, p, 50, 6).pass);
            CHECK(interlaces_matrix(q, p, 50, 7).pass);
        }
    CHECK_THROWS(interlaces(elementary(3, 3), e2, 10, 1));
}

TEST_CASE("Renegar derivative cone contains the cone") {
    CHECK(renegar_nesting_check(elementary(3, 3), 100, 1).violations == 0);
    CHECK(renegar_nesting_check(spanning_tree_poly(Graph::complete(4)), 100, 2).violations == 0);
    // boundary point of e_3 lies in H(e_2)
    CHECK(in_cone_vector(elementary(3, 2), {0, 1, 1}).in_closed_cone());
}

TEST_CASE("cone sampling lands in the cone") {
    Rng rng(36);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(2, 6);
        auto p = elementary(n, rng.uniform_int(1, n));
        auto v = sample_in_cone_vector(p, 0.1, rng);
        CHECK(in_cone_vector(p, v).verdict == Verdict::inside);
        auto a = sample_in_cone_matrix(p, 0.0, rng);
        CHECK(in_cone_matrix(p, a).in_closed_cone());
    }
    CHECK(sample_in_cone_vector(elementary(4, 2), 0.2, 9) == sample_in_cone_vector(elementary(4, 2), 0.2, 9));
}
