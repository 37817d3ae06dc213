#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace lpm {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" (or "p" when q == 1).
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Sparse multivariate polynomial with exact rational coefficients over an
// ordered list of named variables. Zero terms are never stored.
class ExactPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    ExactPoly() = default;
    explicit ExactPoly(std::vector<std::string> vars);
    ExactPoly(std::vector<std::string> vars, TermMap terms);

    static ExactPoly constant(std::vector<std::string> vars, const Rational& c);
    static ExactPoly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    int var_index(const std::string& name) const;  // -1 when absent
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;
    bool is_homogeneous() const;
    bool involves(const std::string& name) const;

    ExactPoly derivative(const std::string& name) const;
    // Substitutes a rational value for one variable; the variable list is kept.
    ExactPoly substitute(const std::string& name, const Rational& value) const;
    // Re-expresses over `vars`, which must contain every variable in use.
    ExactPoly with_vars(const std::vector<std::string>& vars) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    double evaluate_double(const std::vector<double>& point) const;

    template <class Real, class Vec>
    Real evaluate_as(const Vec& point) const {
        Real total = 0;
        for (const auto& [exps, c] : terms_) {
            Real term = static_cast<Real>(boost::multiprecision::numerator(c)) /
                        static_cast<Real>(boost::multiprecision::denominator(c));
            for (std::size_t i = 0; i < exps.size(); ++i)
                for (int e = 0; e < exps[i]; ++e) term *= Real(point[i]);
            total += term;
        }
        return total;
    }

    ExactPoly operator-() const;
    friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    friend ExactPoly operator*(const Rational& s, const ExactPoly& p);
    friend bool operator==(const ExactPoly& a, const ExactPoly& b);

    // Graded order: higher total degree first, then lexicographically larger
    // exponent vectors first (variables compared in declaration order).
    std::vector<std::pair<Exponents, Rational>> canonical_terms() const;
    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// Variable list merging two polynomials' variables; throws DomainError when
// shared variables appear in a different relative order.
std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

} // namespace lpm
