#include "lpm/minorlift.hpp"

#include "lpm/detail/pencil.hpp"
#include "lpm/error.hpp"

#include <algorithm>
#include <cmath>

namespace lpm {

double minor_lift_eval(const MultiAffinePoly& p, const SymMatrix& a) {
    require_dim(a.n() == p.n(), "minor_lift_eval: matrix size does not match variable count");
    return detail::minor_lift_eval_as<double>(p, a.data(), a.n());
}

MultiAffinePoly lpm_restriction(const MultiAffinePoly& p, const SubsetMask& t) {
    require(t.n() == p.n(), "lpm_restriction: subset ground set mismatch");
    require(!p.is_zero() && t.size() >= p.n() - p.degree(),
            "lpm_restriction: |T| < n - deg p, every coefficient would vanish");
    const std::uint32_t outside = SubsetMask::full_bits(p.n()) & ~t.bits();
    const auto idx = t.zero_based();
    MultiAffinePoly::TermMap terms;
    for (const auto& [bits, c] : p.terms()) {
        if ((bits & outside) != outside) continue;
        std::uint32_t local = 0;
        for (std::size_t k = 0; k < idx.size(); ++k)
            if ((bits >> idx[k]) & 1u) local |= 1u << k;
        terms[local] = c;
    }
    return MultiAffinePoly(t.size(), std::move(terms));
}

double restriction_value(const MultiAffinePoly& p, const SubsetMask& t, const SymMatrix& a) {
    require_dim(a.n() == p.n(), "restriction_value: matrix size does not match variable count");
    return minor_lift_eval(lpm_restriction(p, t), a.principal(t));
}

UniPoly matrix_pencil_poly(const MultiAffinePoly& p, const SymMatrix& a) {
    require_dim(a.n() == p.n(), "matrix_pencil_poly: matrix size does not match variable count");
    if (p.is_zero()) return UniPoly{};
    return UniPoly(detail::pencil_coeffs<double>(p, a.data(), a.n()));
}

DualIdentityReport check_dual_identity(const MultiAffinePoly& p, const SymMatrix& a, double rel_tol) {
    require_dim(a.n() == p.n(), "check_dual_identity: matrix size does not match variable count");
    const SymMatrix inv = inverse(a);
    DualIdentityReport r;
    r.lhs = minor_lift_eval(dual(p), a);
    r.rhs = determinant(a.matrix()) * minor_lift_eval(p, inv);
    const std::uint32_t full = SubsetMask::full_bits(p.n());
    for (const auto& [bits, c] : p.terms())
        r.scale += std::abs(c * principal_minor(a, SubsetMask(p.n(), full & ~bits)));
    r.rel_error = std::abs(r.lhs - r.rhs) / std::max(r.scale, 1e-300);
    if (r.scale == 0.0) r.rel_error = std::abs(r.lhs - r.rhs);
    r.tolerance = rel_tol;
    r.pass = r.rel_error <= rel_tol;
    return r;
}

} // namespace lpm
