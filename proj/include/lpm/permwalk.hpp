#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpm/cones.hpp"
#include "lpm/exact.hpp"
#include "lpm/multiaffine.hpp"
#include "lpm/permutation.hpp"

namespace lpm {

struct Factor {
    int i = 0, j = 0;  // 1-based, i < j
    Rational lambda;   // 1 / (j - i)
};

struct FactorSchedule {
    int n = 0;
    std::vector<Factor> factors;  // j ascending, then i ascending
};

FactorSchedule factorization_schedule(int n);

// Coefficients (indexed by Lehmer rank) of the ordered product
// prod_k (1 + lambda_k e_{tau_k}) in the group algebra of S_n, exact. n <= 6.
std::vector<Rational> group_algebra_product(int n);
// True iff every coefficient equals 1. n <= 5.
bool verify_factorization(int n);

// h_0 = h, h_k = h_{k-1} + lambda_k tau_k(h_{k-1}); the last entry is a
// multiple of e_d. Throws if it is not (relative spread above 1e-10).
std::vector<MultiAffinePoly> build_h_chain(const MultiAffinePoly& h);

struct WalkStep {
    int factor_index = 0;  // 0-based index into the schedule
    bool swapped = false;
    double slack = 0;  // min root of the accepted membership test
};

struct WalkTrace {
    std::vector<WalkStep> steps;  // in walk order (last factor first)
    Permutation tau;
};

struct WalkResult {
    bool success = false;
    Permutation tau;             // tau(v) = permute_vector(tau, v)
    std::vector<double> image;   // tau(v)
    ConeReport final_check;      // image in H(h)
    WalkTrace trace;
    std::string failure;
};

// Walks the chain from h_r (a multiple of e_d) down to h_0 = h, swapping the
// two coordinates of tau_k whenever v leaves H(h_{k-1}). Throws
// PreconditionError when v is not in H(e_d) or h is certified unstable.
WalkResult permutation_walk(const MultiAffinePoly& h, const std::vector<double>& v, double tol = 1e-7);

// (d/dx_i + d/dx_j) h must interlace both h and tau(h), tau = (i j), on
// random lines. i, j are 0-based.
bool common_interlacer_check(const MultiAffinePoly& h, int i, int j, int trials, std::uint64_t seed);

struct TransconeReport {
    int samples = 0;
    int violations = 0;
};
// Points of H(h_k) must lie in H(h_{k-1}) or in H(tau_k h_{k-1}).
TransconeReport transcone_probe(const MultiAffinePoly& h, int samples_per_step, std::uint64_t seed,
                                double tol = 1e-7);

} // namespace lpm
