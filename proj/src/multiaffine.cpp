#include "lpm/multiaffine.hpp"

#include "lpm/detail/interp.hpp"
#include "lpm/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace lpm {

namespace {

void prune(MultiAffinePoly::TermMap& terms) {
    double mx = 0.0;
    for (const auto& [bits, c] : terms) mx = std::max(mx, std::abs(c));
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0.0 || std::abs(it->second) < 1e-14 * mx || !std::isfinite(it->second))
            it = terms.erase(it);
        else
            ++it;
    }
}

} // namespace

MultiAffinePoly::MultiAffinePoly(int n) : MultiAffinePoly(n, {}) {}

MultiAffinePoly::MultiAffinePoly(int n, TermMap terms) : n_(n), terms_(std::move(terms)) {
    require(n >= 0 && n <= kMaxVars, "MultiAffinePoly: variable count must be in [0, 16]");
    for (const auto& [bits, c] : terms_) {
        require((bits >> n) == 0, "MultiAffinePoly: term references a variable > n");
        require(std::isfinite(c), "MultiAffinePoly: non-finite coefficient");
    }
    prune(terms_);
    for (const auto& [bits, c] : terms_) degree_ = std::max(degree_, std::popcount(bits));
}

MultiAffinePoly MultiAffinePoly::constant(int n, double c) { return MultiAffinePoly(n, {{0u, c}}); }

MultiAffinePoly MultiAffinePoly::monomial(int n, const SubsetMask& s, double c) {
    require(s.n() == n, "monomial: subset ground set mismatch");
    return MultiAffinePoly(n, {{s.bits(), c}});
}

double MultiAffinePoly::coeff(std::uint32_t bits) const {
    auto it = terms_.find(bits);
    return it == terms_.end() ? 0.0 : it->second;
}

bool MultiAffinePoly::is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return std::popcount(t.first) == degree_; });
}

double MultiAffinePoly::max_abs_coeff() const {
    double mx = 0.0;
    for (const auto& [bits, c] : terms_) mx = std::max(mx, std::abs(c));
    return mx;
}

double MultiAffinePoly::evaluate(std::span<const double> v) const {
    require_dim(static_cast<int>(v.size()) == n_, "evaluate: point dimension does not match variable count");
    return evaluate_as<double>(v);
}

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
    require_dim(a.n_ == b.n_, "polynomial sum: variable count mismatch");
    auto terms = a.terms_;
    for (const auto& [bits, c] : b.terms_) terms[bits] += c;
    return MultiAffinePoly(a.n_, std::move(terms));
}

MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b) { return a + (-1.0) * b; }

MultiAffinePoly operator*(double s, const MultiAffinePoly& p) {
    auto terms = p.terms_;
    for (auto& [bits, c] : terms) c *= s;
    return MultiAffinePoly(p.n_, std::move(terms));
}

std::string MultiAffinePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const auto& [bits, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const double mag = std::abs(c);
        const bool unit = mag == 1.0 && bits != 0;
        if (!unit) os << mag;
        bool first_var = true;
        for (int i = 0; i < n_; ++i) {
            if (!((bits >> i) & 1u)) continue;
            if (!unit || !first_var) os << "*";
            os << "x" << i + 1;
            first_var = false;
        }
    }
    return os.str();
}

MultiAffinePoly elementary(int n, int k) {
    require(n >= 0 && n <= kMaxVars, "elementary: n must be in [0, 16]");
    require(k >= 0 && k <= n, "elementary: degree k must satisfy 0 <= k <= n");
    MultiAffinePoly::TermMap terms;
    for (auto bits : k_subsets(n, k)) terms[bits] = 1.0;
    return MultiAffinePoly(n, std::move(terms));
}

MultiAffinePoly dual(const MultiAffinePoly& p) {
    const std::uint32_t full = SubsetMask::full_bits(p.n());
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms()) terms[full & ~bits] = c;
    return MultiAffinePoly(p.n(), std::move(terms));
}

MultiAffinePoly partial_subset(const MultiAffinePoly& p, const SubsetMask& s) {
    require(s.n() == p.n(), "partial_subset: subset ground set mismatch");
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms())
        if ((bits & s.bits()) == s.bits()) terms[bits & ~s.bits()] += c;
    return MultiAffinePoly(p.n(), std::move(terms));
}

MultiAffinePoly directional_derivative(const MultiAffinePoly& p, std::span<const double> a) {
    require_dim(static_cast<int>(a.size()) == p.n(), "directional_derivative: direction dimension mismatch");
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms())
        for (int i = 0; i < p.n(); ++i)
            if ((bits >> i) & 1u) terms[bits & ~(1u << i)] += a[i] * c;
    return MultiAffinePoly(p.n(), std::move(terms));
}

MultiAffinePoly apply_permutation(const MultiAffinePoly& p, const Permutation& tau) {
    validate_permutation(tau, p.n());
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms()) {
        std::uint32_t image = 0;
        for (int i = 0; i < p.n(); ++i)
            if ((bits >> i) & 1u) image |= 1u << tau[i];
        terms[image] = c;
    }
    return MultiAffinePoly(p.n(), std::move(terms));
}

UniPoly restrict_line(const MultiAffinePoly& p, std::span<const double> v, std::span<const double> a) {
    require_dim(static_cast<int>(v.size()) == p.n() && static_cast<int>(a.size()) == p.n(),
                "restrict_line: point/direction dimension mismatch");
    if (p.is_zero()) return UniPoly{};
    // For a stable p and a > 0 every root lies in [min v_i/a_i, max v_i/a_i];
    // otherwise fall back to a box scaled by |v|/|a|.
    const bool positive = !a.empty() && std::all_of(a.begin(), a.end(), [](double x) { return x > 0.0; });
    double center = 0.0, radius = 1.0;
    if (positive) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (std::size_t i = 0; i < v.size(); ++i) {
            lo = std::min(lo, v[i] / a[i]);
            hi = std::max(hi, v[i] / a[i]);
        }
        center = 0.5 * (lo + hi);
        radius = std::max(0.5 * (hi - lo), 0.1 * (1.0 + std::abs(center)));
    } else {
        double vmax = 0.0, amax = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            vmax = std::max(vmax, std::abs(v[i]));
            amax = std::max(amax, std::abs(a[i]));
        }
        radius = 1.0 + (amax > 0.0 ? vmax / amax : 0.0);
    }
    std::vector<double> point(v.size());
    auto f = [&](double t) {
        for (std::size_t i = 0; i < v.size(); ++i) point[i] = v[i] - t * a[i];
        return p.evaluate_as<double>(point);
    };
    return UniPoly(detail::chebyshev_interpolate<double>(f, p.degree(), center, radius));
}

MultiAffinePoly rescale_variables(const MultiAffinePoly& p, std::span<const double> d) {
    require_dim(static_cast<int>(d.size()) == p.n(), "rescale_variables: scale vector dimension mismatch");
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms()) {
        double s = c;
        for (int i = 0; i < p.n(); ++i)
            if ((bits >> i) & 1u) s *= d[i];
        terms[bits] = s;
    }
    return MultiAffinePoly(p.n(), std::move(terms));
}

MultiAffinePoly shift_variables(const MultiAffinePoly& p, int new_n, int offset) {
    require(offset >= 0 && p.n() + offset <= new_n, "shift_variables: target too small");
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms()) terms[bits << offset] = c;
    return MultiAffinePoly(new_n, std::move(terms));
}

MultiAffinePoly multiply_variable(const MultiAffinePoly& p, int zero_based) {
    require(zero_based >= 0 && zero_based < p.n(), "multiply_variable: index out of range");
    const std::uint32_t b = 1u << zero_based;
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms()) {
        require((bits & b) == 0, "multiply_variable: result would not be multiaffine");
        terms[bits | b] = c;
    }
    return MultiAffinePoly(p.n(), std::move(terms));
}

double proportionality_to_elementary(const MultiAffinePoly& p, int k) {
    const auto support = k_subsets(p.n(), k);
    if (p.terms().size() != support.size()) return std::numeric_limits<double>::infinity();
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (auto bits : support) {
        auto it = p.terms().find(bits);
        if (it == p.terms().end()) return std::numeric_limits<double>::infinity();
        lo = std::min(lo, it->second);
        hi = std::max(hi, it->second);
    }
    return (hi - lo) / std::max(std::abs(hi), std::abs(lo));
}

} // namespace lpm
