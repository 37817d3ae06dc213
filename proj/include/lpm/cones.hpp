#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpm/multiaffine.hpp"
#include "lpm/random.hpp"
#include "lpm/roots.hpp"
#include "lpm/symmat.hpp"

namespace lpm {

enum class Verdict { inside, boundary, outside, inconclusive };
const char* to_string(Verdict v);

inline constexpr double kConeTol = 1e-8;

struct ConeReport {
    Verdict verdict = Verdict::inconclusive;
    std::vector<double> roots;  // ascending
    double min_root = 0;        // +inf when the restriction is constant
    double slack = 0;           // min_root; positive means strictly inside
    double tolerance = 0;       // tol (1 + max|root|)
    bool real_rooted = true;
    bool high_precision = false;  // roots came from the 128-bit recomputation

    bool in_closed_cone() const { return verdict == Verdict::inside || verdict == Verdict::boundary; }
};

// Verdict from pencil roots: inside iff min_root > tolerance, boundary iff
// |min_root| <= tolerance. Non-real roots give inconclusive.
ConeReport classify_roots(std::vector<double> roots, bool real_rooted, double tol);

// Membership of v in the hyperbolicity cone of p with respect to 1, read off
// the roots of t -> p(v - t 1). Throws DomainError if p(1) = 0.
ConeReport in_cone_vector(const MultiAffinePoly& p, const std::vector<double>& v, double tol = kConeTol,
                          double tol_imag = kTolImag);

// Same rule for the minor lift P with respect to I, via t -> P(A - t I).
ConeReport in_cone_matrix(const MultiAffinePoly& p, const SymMatrix& a, double tol = kConeTol,
                          double tol_imag = kTolImag);

struct StabilityReport {
    bool evidence_stable = true;
    bool sign_test_rejected = false;
    int trials_run = 0;
    // Line p(v - t a) that is not real-rooted even in 128-bit arithmetic.
    std::vector<double> witness_v, witness_a;
    double witness_max_imag = 0;
    std::string reason;
};

// One-sided test: a certified failure or statistical evidence. p must be
// homogeneous.
StabilityReport is_stable_probabilistic(const MultiAffinePoly& p, int trials, std::uint64_t seed,
                                        double tol_imag = kTolImag);

struct InterlaceReport {
    bool pass = true;
    int trials_run = 0;
    std::vector<double> witness;  // point v, or row-major matrix A
    std::vector<double> p_roots, q_roots;
    std::string reason;
};

// r_1 <= s_1 <= r_2 <= ... <= s_{d-1} <= r_d up to tol (1 + max|root|).
bool roots_interlace(const std::vector<double>& q_roots, const std::vector<double>& p_roots, double tol);

// Does q interlace p along random lines v - t 1 (deg q = deg p - 1)?
InterlaceReport interlaces(const MultiAffinePoly& q, const MultiAffinePoly& p, int trials, std::uint64_t seed,
                           double tol = kConeTol);
// Matrix version: pencils Q(A - t I), P(A - t I) for random symmetric A.
InterlaceReport interlaces_matrix(const MultiAffinePoly& q, const MultiAffinePoly& p, int trials,
                                  std::uint64_t seed, double tol = kConeTol);

struct NestingReport {
    int samples = 0;
    int violations = 0;
    double min_slack = 0;
    std::vector<double> witness;
};

// Points of H(p) (half of them on the boundary) must lie in H(D_1 p).
NestingReport renegar_nesting_check(const MultiAffinePoly& p, int samples, std::uint64_t seed,
                                    double tol = kConeTol);

// G + s 1 with s = -m + margin (1 + |m|), m the smallest root for G.
// margin 0 lands on the boundary.
std::vector<double> sample_in_cone_vector(const MultiAffinePoly& p, double margin, Rng& rng);
SymMatrix sample_in_cone_matrix(const MultiAffinePoly& p, double margin, Rng& rng);
std::vector<double> sample_in_cone_vector(const MultiAffinePoly& p, double margin, std::uint64_t seed);
SymMatrix sample_in_cone_matrix(const MultiAffinePoly& p, double margin, std::uint64_t seed);

} // namespace lpm
