#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lpm/random.hpp"
#include "lpm/subset.hpp"

namespace lpm {

// Dense square real matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n);
    Matrix(int n, std::vector<double> row_major);
    static Matrix identity(int n);

    int n() const { return n_; }
    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return data_; }

    Matrix transpose() const;
    double max_abs() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

private:
    int n_ = 0;
    std::vector<double> data_;
};

double determinant(const Matrix& a);

// Real symmetric matrix. Construction checks |A_ij - A_ji| <= 1e-12 (1 + max|A|)
// and stores the exactly symmetrised average.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n);
    explicit SymMatrix(const Matrix& m);
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);
    static SymMatrix identity(int n);
    static SymMatrix diagonal(const std::vector<double>& d);

    int n() const { return m_.n(); }
    double operator()(int i, int j) const { return m_(i, j); }
    void set(int i, int j, double v);
    const Matrix& matrix() const { return m_; }
    const std::vector<double>& data() const { return m_.data(); }
    std::vector<double> diag() const;
    double max_abs() const { return m_.max_abs(); }
    double trace() const;

    SymMatrix shifted(double s) const;  // A + s I
    SymMatrix principal(const SubsetMask& s) const;
    // U A U^T
    SymMatrix congruence(const Matrix& u) const;

    friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
    friend SymMatrix operator*(double s, const SymMatrix& a);

private:
    Matrix m_;
};

// Disjoint nonempty blocks covering {0..n-1} (0-based internally).
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);
    static Partition from_one_based(int n, const std::vector<std::vector<int>>& blocks);
    static Partition singletons(int n);
    static Partition single_block(int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int i) const { return owner_[i]; }
    bool same_block(int i, int j) const { return owner_[i] == owner_[j]; }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> owner_;
};

// Chinese-restaurant sequential assignment (concentration 1).
Partition random_partition(int n, Rng& rng);

double principal_minor(const SymMatrix& a, const SubsetMask& s);
// All 2^n principal minors indexed by subset bitmask.
std::vector<double> principal_minor_table(const SymMatrix& a);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j is the eigenvector of values[j]
    int sweeps = 0;
};

// Cyclic Jacobi rotations; stops once the off-diagonal Frobenius norm is at
// most 1e-12 ||A||_F, throws ConvergenceError after 50 sweeps.
EigenDecomposition eigen_sym(const SymMatrix& a);
std::vector<double> eigenvalues_sym(const SymMatrix& a);

SymMatrix adjugate(const SymMatrix& a);
SymMatrix inverse(const SymMatrix& a);
// M - v v^T / A_11 for A = [[A_11, v^T], [v, M]].
SymMatrix schur_complement_0(const SymMatrix& a);
SymMatrix block_project(const SymMatrix& a, const Partition& p);

bool is_k_locally_psd(const SymMatrix& a, int k);
// Smallest eigenvalue over all k x k principal submatrices.
double min_local_eigenvalue(const SymMatrix& a, int k);

// Interval [lo, hi] containing every eigenvalue.
std::pair<double, double> gershgorin_interval(const SymMatrix& a);

SymMatrix random_symmetric(int n, std::uint64_t seed);
SymMatrix random_symmetric(int n, Rng& rng);
Matrix random_orthogonal(int n, std::uint64_t seed);
Matrix random_orthogonal(int n, Rng& rng);
// k-locally PSD matrix G + s I whose smallest local eigenvalue equals margin.
SymMatrix sample_k_locally_psd(int n, int k, double margin, Rng& rng);

// Rotation by theta in the (i, j) coordinate plane.
Matrix givens(int n, int i, int j, double theta);

} // namespace lpm
