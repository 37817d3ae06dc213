#pragma once

#include "lpm/multiaffine.hpp"
#include "lpm/symmat.hpp"
#include "lpm/unipoly.hpp"

namespace lpm {

// P(A) = sum_S a_S det(A_S), where P is the minor lift of p. Only stored
// terms are visited.
double minor_lift_eval(const MultiAffinePoly& p, const SymMatrix& a);

// Multiaffine polynomial in the |T| variables of T (renumbered in ascending
// order) whose coefficient on K is a_{K u ([n] \ T)}. Its lift evaluated at
// A_T is P|_T(A). Throws when |T| < n - deg p.
MultiAffinePoly lpm_restriction(const MultiAffinePoly& p, const SubsetMask& t);
double restriction_value(const MultiAffinePoly& p, const SubsetMask& t, const SymMatrix& a);

// t -> P(A - t I).
UniPoly matrix_pencil_poly(const MultiAffinePoly& p, const SymMatrix& a);

struct DualIdentityReport {
    double lhs = 0;        // P*(A), lift of the dual
    double rhs = 0;        // det(A) P(A^{-1})
    double scale = 0;      // sum_S |a_S det(A_{[n]\S})|
    double rel_error = 0;  // |lhs - rhs| / scale
    double tolerance = 0;
    bool pass = false;
};

// Jacobi's complementary minor identity turned into a check. Throws
// DomainError for singular A.
DualIdentityReport check_dual_identity(const MultiAffinePoly& p, const SymMatrix& a, double rel_tol = 1e-8);

} // namespace lpm
