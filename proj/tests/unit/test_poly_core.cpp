#include "doctest.h"

#include "lpm/exact.hpp"
#include "lpm/graph.hpp"
#include "lpm/multiaffine.hpp"
#include "lpm/permutation.hpp"
#include "lpm/random.hpp"

#include <cmath>
#include <numeric>

using namespace lpm;

namespace {

MultiAffinePoly random_poly(int n, Rng& rng, double density = 0.6) {
    MultiAffinePoly::TermMap terms;
    for (std::uint32_t b = 0; b < (1u << n); ++b)
        if (rng.coin(density)) terms[b] = rng.normal();
    return MultiAffinePoly(n, terms);
}

// Brute force on the expanded product: p(v - t a) at a few t, fitted by
// solving the Vandermonde system in long double.
std::vector<double> vandermonde_fit(const MultiAffinePoly& p, const std::vector<double>& v,
                                    const std::vector<double>& a) {
    const int d = std::max(p.degree(), 0);
    const int m = d + 1;
    std::vector<std::vector<long double>> aug(m, std::vector<long double>(m + 1));
    for (int r = 0; r < m; ++r) {
        const long double t = -1.0L + 2.0L * r / std::max(d, 1);
        std::vector<double> pt(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) pt[i] = static_cast<double>(v[i] - t * a[i]);
        long double pw = 1;
        for (int c = 0; c < m; ++c, pw *= t) aug[r][c] = pw;
        aug[r][m] = p.evaluate_as<long double>(pt);
    }
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (std::fabs(aug[r][c]) > std::fabs(aug[piv][c])) piv = r;
        std::swap(aug[c], aug[piv]);
        for (int r = 0; r < m; ++r) {
            if (r == c) continue;
            const long double f = aug[r][c] / aug[c][c];
            for (int k = c; k <= m; ++k) aug[r][k] -= f * aug[c][k];
        }
    }
    std::vector<double> out(m);
    for (int c = 0; c < m; ++c) out[c] = static_cast<double>(aug[c][m] / aug[c][c]);
    return out;
}

bool acyclic_bfs(int m, const std::vector<std::pair<int, int>>& edges) {
    // m-1 edges on m vertices form a tree iff connected
    std::vector<std::vector<int>> adj(m);
    for (auto [u, v] : edges) {
        adj[u - 1].push_back(v - 1);
        adj[v - 1].push_back(u - 1);
    }
    std::vector<bool> seen(m, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == m;
}

} // namespace

TEST_CASE("subset masks") {
    auto s = SubsetMask::from_indices(5, {4, 1});
    CHECK(s.indices() == std::vector<int>{1, 4});
    CHECK(s.complement().indices() == std::vector<int>{2, 3, 5});
    CHECK(s.size() == 2);
    CHECK_THROWS_AS(SubsetMask::from_indices(3, {4}), DomainError);
    CHECK_THROWS_AS(SubsetMask::from_indices(3, {1, 1}), DomainError);
    CHECK_THROWS_AS(SubsetMask(3, 0b1000), DomainError);
    CHECK(k_subsets(5, 2).size() == 10);
    CHECK(k_subsets(4, 0) == std::vector<std::uint32_t>{0});
    CHECK(k_subsets(3, 4).empty());
}

TEST_CASE("construction prunes zeros and tracks degree") {
    MultiAffinePoly p(3, {{0b011, 2.0}, {0b100, 0.0}, {0b111, 1e-20}});
    CHECK(p.terms().size() == 1);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(MultiAffinePoly(3).is_zero());
    CHECK_THROWS(MultiAffinePoly(2, {{0b100, 1.0}}));
}

TEST_CASE("elementary symmetric polynomials") {
    auto e2 = elementary(4, 2);
    CHECK(e2.terms().size() == 6);
    const std::vector<double> v{1, 2, 3, 4};
    CHECK(e2.evaluate(v) == doctest::Approx(35.0));  // 2+3+4+6+8+12
    CHECK(elementary(3, 0).evaluate(std::vector<double>{5, 6, 7}) == 1.0);
    CHECK(elementary(3, 3).evaluate(std::vector<double>{2, 3, 4}) == 24.0);
}

TEST_CASE("permutations act on variables") {
    // tau = (12) on x1 x3 gives x2 x3
    auto p = MultiAffinePoly::monomial(3, SubsetMask::from_indices(3, {1, 3}));
    auto q = apply_permutation(p, transposition(3, 0, 1));
    CHECK(q == MultiAffinePoly::monomial(3, SubsetMask::from_indices(3, {2, 3})));
    auto e2 = elementary(4, 2);
    CHECK(apply_permutation(e2, Permutation{2, 0, 3, 1}) == e2);
    CHECK(apply_permutation(p, identity_permutation(3)) == p);
    CHECK_THROWS(apply_permutation(p, Permutation{0, 0, 1}));
}

TEST_CASE("permutation helpers") {
    for (int r = 0; r < 24; ++r) {
        auto p = lehmer_unrank(4, r);
        CHECK(is_permutation(p));
        CHECK(lehmer_rank(p) == static_cast<std::uint64_t>(r));
        CHECK(compose(p, inverse(p)) == identity_permutation(4));
    }
    // permute_vector(tau, v)[tau(i)] = v[i]
    auto v = permute_vector(Permutation{2, 0, 1}, {10, 20, 30});
    CHECK(v == std::vector<double>{20, 30, 10});
}

TEST_CASE("restrict_line examples") {
    auto e2 = elementary(3, 2);
    auto q = restrict_line(e2, std::vector<double>{1, 2, 3}, std::vector<double>{1, 1, 1});
    REQUIRE(q.degree() == 2);
    CHECK(q.coeff(0) == doctest::Approx(11.0));
    CHECK(q.coeff(1) == doctest::Approx(-12.0));
    CHECK(q.coeff(2) == doctest::Approx(3.0));

    auto l = restrict_line(elementary(2, 1), std::vector<double>{1, 1}, std::vector<double>{1, 1});
    CHECK(l.coeff(0) == doctest::Approx(2.0));
    CHECK(l.coeff(1) == doctest::Approx(-2.0));

    auto x1x2 = MultiAffinePoly::monomial(2, SubsetMask::full(2));
    auto sq = restrict_line(x1x2, std::vector<double>{0, 0}, std::vector<double>{1, 1});
    CHECK(sq.coeff(0) == doctest::Approx(0.0));
    CHECK(sq.coeff(1) == doctest::Approx(0.0));
    CHECK(sq.coeff(2) == doctest::Approx(1.0));

    CHECK_THROWS_AS(restrict_line(e2, std::vector<double>{1, 2}, std::vector<double>{1, 1, 1}), DimensionError);
}

TEST_CASE("restrict_line matches a Vandermonde fit") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.uniform_int(1, 7);
        auto p = random_poly(n, rng);
        if (p.is_zero()) continue;
        std::vector<double> v(n), a(n);
        for (int i = 0; i < n; ++i) {
            v[i] = rng.normal();
            a[i] = trial % 2 ? rng.uniform(0.1, 2.0) : rng.normal();
        }
        auto q = restrict_line(p, v, a);
        auto want = vandermonde_fit(p, v, a);
        CHECK(q.degree() <= p.degree());
        const double scale = 1.0 + p.max_abs_coeff() * std::pow(3.0, n);
        for (int i = 0; i <= p.degree(); ++i) CHECK(std::abs(q.coeff(i) - want[i]) <= 1e-9 * scale);
    }
}

TEST_CASE("restrict_line along zero direction is constant") {
    Rng rng(5);
    auto p = random_poly(5, rng, 0.8);
    std::vector<double> v{0.3, -1.0, 2.0, 0.5, 1.5}, zero(5, 0.0);
    auto q = restrict_line(p, v, zero);
    CHECK(q.coeff(0) == doctest::Approx(p.evaluate(v)).epsilon(1e-10));
    for (int i = 1; i <= q.degree(); ++i) CHECK(std::abs(q.coeff(i)) <= 1e-10 * (1 + std::abs(q.coeff(0))));
}

TEST_CASE("dual is an involution and matches the inversion formula") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.uniform_int(1, 8);
        auto p = random_poly(n, rng);
        CHECK(dual(dual(p)) == p);
        std::vector<double> v(n), inv(n);
        double prod = 1;
        for (int i = 0; i < n; ++i) {
            v[i] = rng.uniform(0.3, 2.0) * (rng.coin() ? 1 : -1);
            inv[i] = 1.0 / v[i];
            prod *= v[i];
        }
        const double lhs = dual(p).evaluate(v);
        const double rhs = prod * p.evaluate(inv);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1 + std::abs(lhs)));
    }
}

TEST_CASE("derivatives") {
    auto e3 = elementary(4, 3);
    auto d = partial_subset(e3, SubsetMask::from_indices(4, {1, 2}));
    CHECK(d == elementary(4, 1) - MultiAffinePoly::monomial(4, SubsetMask::from_indices(4, {1}))
                   - MultiAffinePoly::monomial(4, SubsetMask::from_indices(4, {2})));
    // D_1 e_k = (n - k + 1) e_{k-1}
    auto dir = directional_derivative(e3, std::vector<double>(4, 1.0));
    CHECK(dir == 2.0 * elementary(4, 2));
}

TEST_CASE("spanning tree polynomials") {
    auto k3 = spanning_tree_poly(Graph::complete(3));
    CHECK(k3 == elementary(3, 2));

    const auto g = Graph::complete(4);
    auto k4 = spanning_tree_poly(g);
    CHECK(k4.terms().size() == 16);
    CHECK(k4.is_homogeneous());
    CHECK(k4.degree() == 3);
    for (const auto& [bits, c] : k4.terms()) {
        CHECK(c == 1.0);
        std::vector<std::pair<int, int>> chosen;
        for (int i = 0; i < 6; ++i)
            if ((bits >> i) & 1u) chosen.push_back(g.edges()[i]);
        CHECK(acyclic_bfs(4, chosen));
    }
    // Cayley: m^{m-2}
    CHECK(spanning_tree_poly(Graph::complete(5)).terms().size() == 125);
    CHECK(spanning_tree_poly(Graph::path(3)).terms().size() == 1);
    CHECK_THROWS(spanning_tree_poly(Graph(4, {{1, 2}, {3, 4}})));
    CHECK_THROWS(Graph(3, {{1, 1}}));
}

TEST_CASE("exact polynomial arithmetic") {
    const std::vector<std::string> vars{"a", "b"};
    auto a = ExactPoly::variable(vars, "a");
    auto b = ExactPoly::variable(vars, "b");
    CHECK((a + b) * (a - b) == a * a - b * b);
    CHECK((a * a * b).derivative("a") == Rational(2) * a * b);
    CHECK((a + (-a)).is_zero());
    CHECK((a * b + a).substitute("b", Rational(-1)).is_zero());
    CHECK(rational_to_string(Rational(3, 4)) == "3/4");
    CHECK(rational_from_string("-5/10") == Rational(-1, 2));
    auto c = ExactPoly::variable({"c"}, "c");
    auto sum = a + c;  // merged variable sets
    CHECK(sum.vars().size() == 3);
    CHECK(sum.evaluate_double({1.0, 0.0, 2.0}) == 3.0);
}

TEST_CASE("unipoly basics") {
    auto q = UniPoly::from_roots({1.0, 3.0});
    CHECK(q.coeffs() == std::vector<double>{3.0, -4.0, 1.0});
    CHECK(q(2.0) == -1.0);
    CHECK(q.derivative().coeffs() == std::vector<double>{-4.0, 2.0});
    CHECK(UniPoly({1.0, 0.0, 0.0}).degree() == 0);
}
