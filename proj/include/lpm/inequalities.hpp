#pragma once

#include <string>
#include <vector>

#include "lpm/cones.hpp"
#include "lpm/multiaffine.hpp"
#include "lpm/symmat.hpp"

namespace lpm {

enum class Status { pass, violation, precondition_failed };
const char* to_string(Status s);

struct Tolerances {
    double abs = 1e-10;
    double rel = 1e-9;
    double cone = kConeTol;  // used for the membership precondition
};

struct InequalityRecord {
    std::string check;
    double lhs = 0;
    double rhs = 0;
    double slack = 0;  // lhs - rhs
    bool verdict = true;
    Status status = Status::pass;
    std::string context;
};

// verdict = slack >= -abs - rel max(|lhs|, |rhs|)
InequalityRecord make_record(std::string check, double lhs, double rhs, const Tolerances& tol,
                             std::string context = {});
InequalityRecord precondition_record(std::string check, std::string context);

// True when A lies in the closed hyperbolicity cone of P (w.r.t. I).
bool in_closed_matrix_cone(const MultiAffinePoly& p, const SymMatrix& a, const Tolerances& tol);

std::string describe(const Partition& pi);
std::string describe(const SubsetMask& s);

// P(pi(A)) >= P(A).
InequalityRecord check_fischer_hadamard(const MultiAffinePoly& p, const SymMatrix& a, const Partition& pi,
                                        const Tolerances& tol = {});

struct ProjectionRecord {
    Status status = Status::pass;
    ConeReport cone;  // membership of pi(A)
};
ProjectionRecord check_projection_lemma(const MultiAffinePoly& p, const SymMatrix& a, const Partition& pi,
                                        const Tolerances& tol = {});

struct DiagRecord {
    InequalityRecord record;  // p(diag A) >= P(A)
    ConeReport diag_cone;     // diag(A) in H(p)
};
DiagRecord check_diag_corollary(const MultiAffinePoly& p, const SymMatrix& a, const Tolerances& tol = {});

struct MonotoneReport {
    Status status = Status::pass;
    std::vector<double> values;  // g(t_i) on the uniform grid
    double min_difference = 0;   // smallest g(t_{i+1}) - g(t_i)
    double tolerance = 0;
};
// g(t) = P((1 - t) A + t pi(A)) must be nondecreasing on [0, 1].
MonotoneReport check_monotone_segment(const MultiAffinePoly& p, const SymMatrix& a, const Partition& pi,
                                      int grid_points = 101, const Tolerances& tol = {});

// P|_S(A) P|_T(A) >= P|_{S u T}(A) P|_{S n T}(A). Throws DomainError when
// |S n T| < n - deg p (restriction undefined).
InequalityRecord check_koteljanskii(const MultiAffinePoly& p, const SymMatrix& a, const SubsetMask& s,
                                    const SubsetMask& t, const Tolerances& tol = {});

// Every (S, T) pair with defined restrictions, skipping comparable pairs.
std::vector<InequalityRecord> koteljanskii_battery(const MultiAffinePoly& p, const SymMatrix& a,
                                                   const Tolerances& tol = {});

// P_A(x) = P(A + Diag x). The coefficient of x^L is P|_{[n]\L}(A), and zero
// when |L| > deg p.
MultiAffinePoly diagonal_shift_poly(const MultiAffinePoly& p, const SymMatrix& a);

struct NlcReport {
    Status status = Status::pass;
    MultiAffinePoly pa;
    double min_coeff = 0;
    bool coeffs_nonnegative = true;
    std::vector<InequalityRecord> records;  // incomparable pairs S < T
};
// n <= 8.
NlcReport check_nlc_battery(const MultiAffinePoly& p, const SymMatrix& a, const Tolerances& tol = {});

} // namespace lpm
