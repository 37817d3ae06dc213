#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lpm/permutation.hpp"
#include "lpm/subset.hpp"
#include "lpm/unipoly.hpp"

namespace lpm {

// Multiaffine polynomial sum_S a_S prod_{i in S} x_i in n <= 16 variables.
// Terms are keyed by subset bitmask; zero coefficients are never stored.
class MultiAffinePoly {
public:
    using TermMap = std::map<std::uint32_t, double>;

    MultiAffinePoly() = default;
    explicit MultiAffinePoly(int n);
    MultiAffinePoly(int n, TermMap terms);

    static MultiAffinePoly constant(int n, double c);
    static MultiAffinePoly monomial(int n, const SubsetMask& s, double c = 1.0);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    double coeff(std::uint32_t bits) const;
    double coeff(const SubsetMask& s) const { return coeff(s.bits()); }
    bool is_zero() const { return terms_.empty(); }
    // Largest subset size among stored terms; -1 for the zero polynomial.
    int degree() const { return degree_; }
    bool is_homogeneous() const;
    double max_abs_coeff() const;

    double evaluate(std::span<const double> v) const;

    template <class Real, class Vec>
    Real evaluate_as(const Vec& v) const {
        Real total = 0;
        for (const auto& [bits, a] : terms_) {
            Real prod = Real(a);
            for (int i = 0; i < n_; ++i)
                if ((bits >> i) & 1u) prod *= Real(v[i]);
            total += prod;
        }
        return total;
    }

    friend MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b);
    friend MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b);
    friend MultiAffinePoly operator*(double s, const MultiAffinePoly& p);
    friend bool operator==(const MultiAffinePoly&, const MultiAffinePoly&) = default;

    std::string to_string() const;

private:
    int n_ = 0;
    TermMap terms_;
    int degree_ = -1;
};

MultiAffinePoly elementary(int n, int k);

// Coefficient of x^S in the dual is the coefficient of x^{[n]\S} in p.
MultiAffinePoly dual(const MultiAffinePoly& p);

// prod_{i in S} d/dx_i applied to p (variables are kept, count stays n).
MultiAffinePoly partial_subset(const MultiAffinePoly& p, const SubsetMask& s);

// D_a p = sum_i a_i dp/dx_i.
MultiAffinePoly directional_derivative(const MultiAffinePoly& p, std::span<const double> a);

// Coefficient of x^{tau(S)} in the result equals the coefficient of x^S in p.
MultiAffinePoly apply_permutation(const MultiAffinePoly& p, const Permutation& tau);

// q(t) = p(v - t a), recovered from deg+1 evaluations.
UniPoly restrict_line(const MultiAffinePoly& p, std::span<const double> v, std::span<const double> a);

// p(d_1 x_1, ..., d_n x_n).
MultiAffinePoly rescale_variables(const MultiAffinePoly& p, std::span<const double> d);

// Re-indexes p into new_n variables with variable i mapped to i + offset.
MultiAffinePoly shift_variables(const MultiAffinePoly& p, int new_n, int offset);

// x_i * p; p must not involve x_i.
MultiAffinePoly multiply_variable(const MultiAffinePoly& p, int zero_based);

// Relative max spread |a_S - a_T| / max|a| over the support of e_k, or +inf
// when p is not supported exactly on the k-subsets.
double proportionality_to_elementary(const MultiAffinePoly& p, int k);

} // namespace lpm
