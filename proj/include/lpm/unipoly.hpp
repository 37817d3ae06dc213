#pragma once

#include <vector>

namespace lpm {

// Real univariate polynomial, ascending coefficients. High-order coefficients
// below 1e-14 * max|c| are dropped so that the leading coefficient is nonzero
// (the zero polynomial has no coefficients).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const { return coeffs_; }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    double coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : 0.0; }
    double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

    double operator()(double t) const;
    UniPoly derivative() const;

    static UniPoly from_roots(const std::vector<double>& roots, double lead = 1.0);

private:
    std::vector<double> coeffs_;
};

} // namespace lpm
