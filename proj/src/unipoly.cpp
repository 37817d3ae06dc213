#include "lpm/unipoly.hpp"

#include <algorithm>
#include <cmath>

namespace lpm {

UniPoly::UniPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    double mx = 0.0;
    for (double c : coeffs_) mx = std::max(mx, std::abs(c));
    while (!coeffs_.empty() && (coeffs_.back() == 0.0 || std::abs(coeffs_.back()) < 1e-14 * mx))
        coeffs_.pop_back();
}

double UniPoly::operator()(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::from_roots(const std::vector<double>& roots, double lead) {
    std::vector<double> c{lead};
    for (double r : roots) {
        std::vector<double> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return UniPoly(std::move(c));
}

} // namespace lpm
