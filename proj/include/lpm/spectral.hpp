#pragma once

#include <cstdint>
#include <vector>

#include "lpm/cones.hpp"
#include "lpm/multiaffine.hpp"
#include "lpm/permutation.hpp"
#include "lpm/symmat.hpp"

namespace lpm {

struct SpectralResult {
    std::vector<double> eigenvalues;  // ascending
    bool found = false;
    // Arrangement w of the eigenvalues (w = permute_vector(permutation, eigenvalues)).
    Permutation permutation;
    std::vector<double> arrangement;
    ConeReport cone;  // at the found arrangement, or the best one tried
    std::uint64_t permutations_tested = 0;
    bool exhaustive = false;
    // Set when no arrangement passed; true means the best arrangement is
    // outside by more than 100 tol even in 128-bit arithmetic.
    bool counterexample_confirmed = false;
};

// Looks for an ordering of the eigenvalues of A inside H(p). Exhaustive over
// distinct orderings for n <= 9 (eigenvalues within 1e-10 are merged);
// otherwise tries sorted orders plus max_perms random shuffles. Throws
// PreconditionError when A is not in the closed cone of P.
SpectralResult spectral_containment_search(const MultiAffinePoly& p, const SymMatrix& a, double tol = kConeTol,
                                           std::uint64_t max_perms = 20000, std::uint64_t seed = 0);

struct SchurHornResult {
    double perm_max = 0;
    std::vector<double> best_arrangement;
    double orth_max_lower_bound = 0;
    Matrix maximizer;  // U with P(U X U^T) = orth_max_lower_bound
};

// perm_max = max_pi p(pi(lambda)); orth_max is a coordinate ascent over
// Givens rotations, restart 0 starting from the best diagonalising U.
SchurHornResult schur_horn_gap(const MultiAffinePoly& p, const SymMatrix& x, int restarts, int iters,
                               std::uint64_t seed);

struct DerivationMatrix {
    int n = 0, k = 0, d = 0;
    std::vector<std::uint32_t> basis;  // lexicographic k-subsets
    SymMatrix entries;
};

// Matrix of the derivation D^{k,d}X on the k-th exterior power in the basis
// e_{s_1} ^ ... ^ e_{s_k}: the image of a basis wedge is the sum over d-subsets
// R of slots of the wedge with X applied to the slots in R.
DerivationMatrix derivation_matrix(const SymMatrix& x, int k, int d);

// k-th multiplicative compound: entry (T, S) = det X[T, S].
Matrix compound_matrix(const SymMatrix& x, int k);

struct DerivationSpectrumReport {
    double spectrum_error = 0;  // max |sorted eig - sorted e_d(lambda_S)|
    double diagonal_error = 0;  // max |D_SS - E_d(X_S)|
    double scale = 0;
    bool spectrum_ok = false;
    bool diagonal_ok = false;
    bool pass() const { return spectrum_ok && diagonal_ok; }
};
// Errors compared against tol (1 + scale).
DerivationSpectrumReport check_derivation_spectrum(const SymMatrix& x, int k, int d, double tol = 1e-7);

// alpha majorizes beta: equal sums and dominating descending prefix sums,
// both up to tol (1 + max |entry|).
bool majorizes(const std::vector<double>& alpha, const std::vector<double>& beta, double tol = 1e-8);

// Lift of E_k(D^{-1/2} X D^{-1/2}): coefficient prod_{i in S} 1/D_ii on each k-set.
MultiAffinePoly rescaled_elementary(const std::vector<double>& d, int k);

struct MajorizationReport {
    std::vector<double> roots_x, roots_diag;
    bool pass = false;
};
// Roots of P(X - tI) must majorize roots of P(diag X - tI).
MajorizationReport check_majorization_rescaled_ek(const SymMatrix& x, const std::vector<double>& d, int k,
                                                  double tol = 1e-8);

struct IdentityReport {
    double lhs = 0, rhs = 0, rel_error = 0;
    bool pass = false;
};

// Degree n-1 p: P(X) = P*(Adj X) with P* the (linear) lift of the dual.
IdentityReport check_adjugate_route(const MultiAffinePoly& p, const SymMatrix& x, double rel_tol = 1e-8);

// p = x_0 q: P(X) = X_00 Q(X / 0). Throws DomainError on a zero pivot.
IdentityReport check_schur_route(const MultiAffinePoly& q, const SymMatrix& x, double rel_tol = 1e-9);

// x_0 q(x_1..x_n) as a polynomial in n + 1 variables.
MultiAffinePoly times_new_variable(const MultiAffinePoly& q);

} // namespace lpm
