#include "lpm/symmat.hpp"

#include "lpm/detail/linalg_kernels.hpp"
#include "lpm/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lpm {

Matrix::Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0.0) { require(n >= 0, "Matrix: negative size"); }

Matrix::Matrix(int n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
    require(n >= 0, "Matrix: negative size");
    require_dim(data_.size() == static_cast<std::size_t>(n) * n, "Matrix: expected n*n entries");
}

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::max_abs() const {
    double mx = 0.0;
    for (double v : data_) mx = std::max(mx, std::abs(v));
    return mx;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_dim(a.n_ == b.n_, "matrix product: size mismatch");
    Matrix c(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_dim(a.n_ == b.n_, "matrix sum: size mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_dim(a.n_ == b.n_, "matrix difference: size mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

double determinant(const Matrix& a) { return detail::det_lu<double>(a.data(), a.n()); }

SymMatrix::SymMatrix(int n) : m_(n) {}

SymMatrix::SymMatrix(const Matrix& m) : m_(m) {
    const int n = m.n();
    const double tol = 1e-12 * (1.0 + m.max_abs());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            require(std::isfinite(m(i, j)) && std::isfinite(m(j, i)), "SymMatrix: non-finite entry");
            require(std::abs(m(i, j) - m(j, i)) <= tol, "SymMatrix: matrix is not symmetric");
            const double avg = 0.5 * (m(i, j) + m(j, i));
            m_(i, j) = avg;
            m_(j, i) = avg;
        }
    for (int i = 0; i < n; ++i) require(std::isfinite(m(i, i)), "SymMatrix: non-finite entry");
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> data;
    data.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& r : rows) {
        require_dim(static_cast<int>(r.size()) == n, "SymMatrix: rows must form a square matrix");
        data.insert(data.end(), r.begin(), r.end());
    }
    return SymMatrix(Matrix(n, std::move(data)));
}

SymMatrix SymMatrix::identity(int n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix a(static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) a.m_(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return a;
}

void SymMatrix::set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
}

std::vector<double> SymMatrix::diag() const {
    std::vector<double> d(n());
    for (int i = 0; i < n(); ++i) d[i] = m_(i, i);
    return d;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n(); ++i) t += m_(i, i);
    return t;
}

SymMatrix SymMatrix::shifted(double s) const {
    SymMatrix out = *this;
    for (int i = 0; i < n(); ++i) out.m_(i, i) += s;
    return out;
}

SymMatrix SymMatrix::principal(const SubsetMask& s) const {
    require(s.n() == n(), "principal: subset ground set mismatch");
    const auto idx = s.zero_based();
    const int k = static_cast<int>(idx.size());
    SymMatrix out(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out.m_(i, j) = m_(idx[i], idx[j]);
    return out;
}

SymMatrix SymMatrix::congruence(const Matrix& u) const {
    Matrix r = u * m_ * u.transpose();
    for (int i = 0; i < r.n(); ++i)
        for (int j = i + 1; j < r.n(); ++j) {
            const double avg = 0.5 * (r(i, j) + r(j, i));
            r(i, j) = avg;
            r(j, i) = avg;
        }
    return SymMatrix(r);
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ + b.m_); }
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) { return SymMatrix(a.m_ - b.m_); }

SymMatrix operator*(double s, const SymMatrix& a) {
    SymMatrix out = a;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out.m_(i, j) *= s;
    return out;
}

Partition::Partition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)), owner_(n, -1) {
    require(n >= 0, "Partition: negative size");
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        require(!blocks_[b].empty(), "Partition: empty block");
        std::sort(blocks_[b].begin(), blocks_[b].end());
        for (int i : blocks_[b]) {
            require(i >= 0 && i < n, "Partition: element out of range");
            require(owner_[i] < 0, "Partition: blocks are not disjoint");
            owner_[i] = static_cast<int>(b);
        }
    }
    require(std::all_of(owner_.begin(), owner_.end(), [](int o) { return o >= 0; }),
            "Partition: blocks do not cover [n]");
}

Partition Partition::from_one_based(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<std::vector<int>> zb;
    for (const auto& b : blocks) {
        std::vector<int> z;
        for (int i : b) z.push_back(i - 1);
        zb.push_back(std::move(z));
    }
    return Partition(n, std::move(zb));
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> b;
    for (int i = 0; i < n; ++i) b.push_back({i});
    return Partition(n, std::move(b));
}

Partition Partition::single_block(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return Partition(n, n > 0 ? std::vector<std::vector<int>>{all} : std::vector<std::vector<int>>{});
}

Partition random_partition(int n, Rng& rng) {
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) {
        // element i joins block b with probability |b|/(i+1), else opens a new one
        const double u = rng.uniform(0.0, static_cast<double>(i + 1));
        double acc = 0.0;
        bool placed = false;
        for (auto& b : blocks) {
            acc += static_cast<double>(b.size());
            if (u < acc) {
                b.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) blocks.push_back({i});
    }
    return Partition(n, std::move(blocks));
}

double principal_minor(const SymMatrix& a, const SubsetMask& s) {
    require(s.n() == a.n(), "principal_minor: subset ground set mismatch");
    const auto idx = s.zero_based();
    return detail::det_lu<double>(detail::principal_block<double>(a.data(), a.n(), idx), static_cast<int>(idx.size()));
}

std::vector<double> principal_minor_table(const SymMatrix& a) {
    const int n = a.n();
    require(n <= kMaxVars, "principal_minor_table: n > 16");
    std::vector<double> table(std::size_t{1} << n);
    for (std::uint32_t bits = 0; bits < table.size(); ++bits)
        table[bits] = principal_minor(a, SubsetMask(n, bits));
    return table;
}

EigenDecomposition eigen_sym(const SymMatrix& a) {
    const int n = a.n();
    Matrix m = a.matrix();
    Matrix v = Matrix::identity(n);
    double norm2 = 0.0;
    for (double x : m.data()) norm2 += x * x;
    const double target = 1e-12 * std::sqrt(norm2);

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += m(i, j) * m(i, j);
        return std::sqrt(s);
    };

    EigenDecomposition out;
    int sweep = 0;
    while (off_norm() > target) {
        if (sweep == 50) throw ConvergenceError("eigen_sym: Jacobi iteration did not converge in 50 sweeps");
        ++sweep;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (apq == 0.0) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double kp = m(k, p), kq = m(k, q);
                    m(k, p) = c * kp - s * kq;
                    m(k, q) = s * kp + c * kq;
                }
                for (int k = 0; k < n; ++k) {
                    const double pk = m(p, k), qk = m(q, k);
                    m(p, k) = c * pk - s * qk;
                    m(q, k) = s * pk + c * qk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double kp = v(k, p), kq = v(k, q);
                    v(k, p) = c * kp - s * kq;
                    v(k, q) = s * kp + c * kq;
                }
            }
        }
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return m(x, x) < m(y, y); });
    out.values.resize(n);
    out.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = m(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    out.sweeps = sweep;
    return out;
}

std::vector<double> eigenvalues_sym(const SymMatrix& a) { return eigen_sym(a).values; }

SymMatrix adjugate(const SymMatrix& a) {
    const int n = a.n();
    SymMatrix out(n);
    if (n == 0) return out;
    if (n == 1) return SymMatrix::identity(1);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            // cofactor C_ji: delete row j and column i
            std::vector<double> minor;
            minor.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
            for (int r = 0; r < n; ++r) {
                if (r == j) continue;
                for (int c = 0; c < n; ++c)
                    if (c != i) minor.push_back(a(r, c));
            }
            const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
            out.set(i, j, sign * detail::det_lu<double>(std::move(minor), n - 1));
        }
    }
    return out;
}

SymMatrix inverse(const SymMatrix& a) {
    const int n = a.n();
    Matrix m = a.matrix();
    Matrix inv = Matrix::identity(n);
    const double tiny = 1e-14 * std::max(a.max_abs(), std::numeric_limits<double>::min());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
        if (std::abs(m(piv, c)) <= tiny) throw DomainError("inverse: matrix is singular");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(c, j), m(piv, j));
                std::swap(inv(c, j), inv(piv, j));
            }
        const double d = m(c, c);
        for (int j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = m(r, c);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = avg;
            inv(j, i) = avg;
        }
    return SymMatrix(inv);
}

SymMatrix schur_complement_0(const SymMatrix& a) {
    const int n = a.n();
    require(n >= 1, "schur_complement_0: empty matrix");
    const double pivot = a(0, 0);
    if (pivot == 0.0 || std::abs(pivot) <= 1e-14 * a.max_abs())
        throw DomainError("schur_complement_0: zero pivot");
    SymMatrix out(n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) out.set(i - 1, j - 1, a(i, j) - a(i, 0) * a(0, j) / pivot);
    return out;
}

SymMatrix block_project(const SymMatrix& a, const Partition& p) {
    require(p.n() == a.n(), "block_project: partition size mismatch");
    SymMatrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = i; j < a.n(); ++j)
            if (p.same_block(i, j)) out.set(i, j, a(i, j));
    return out;
}

double min_local_eigenvalue(const SymMatrix& a, int k) {
    require(k >= 1 && k <= a.n(), "min_local_eigenvalue: need 1 <= k <= n");
    double lo = std::numeric_limits<double>::infinity();
    for (auto bits : k_subsets(a.n(), k))
        lo = std::min(lo, eigenvalues_sym(a.principal(SubsetMask(a.n(), bits))).front());
    return lo;
}

bool is_k_locally_psd(const SymMatrix& a, int k) {
    return min_local_eigenvalue(a, k) >= -1e-10 * a.max_abs();
}

std::pair<double, double> gershgorin_interval(const SymMatrix& a) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int i = 0; i < a.n(); ++i) {
        double r = 0.0;
        for (int j = 0; j < a.n(); ++j)
            if (j != i) r += std::abs(a(i, j));
        lo = std::min(lo, a(i, i) - r);
        hi = std::max(hi, a(i, i) + r);
    }
    if (a.n() == 0) return {0.0, 0.0};
    return {lo, hi};
}

SymMatrix random_symmetric(int n, Rng& rng) {
    require(n >= 1, "random_symmetric: n must be >= 1");
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    Matrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = 0.5 * (g(i, j) + g(j, i));
    return SymMatrix(s);
}

SymMatrix random_symmetric(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_symmetric(n, rng);
}

Matrix random_orthogonal(int n, Rng& rng) {
    require(n >= 1, "random_orthogonal: n must be >= 1");
    Matrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
    // Modified Gram-Schmidt with one reorthogonalisation pass; R has a
    // positive diagonal by construction.
    Matrix q(n);
    for (int j = 0; j < n; ++j) {
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass)
            for (int k = 0; k < j; ++k) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += q(i, k) * col[i];
                for (int i = 0; i < n; ++i) col[i] -= dot * q(i, k);
            }
        double norm = 0.0;
        for (double x : col) norm += x * x;
        norm = std::sqrt(norm);
        require(norm > 0.0, "random_orthogonal: degenerate draw");
        for (int i = 0; i < n; ++i) q(i, j) = col[i] / norm;
    }
    return q;
}

Matrix random_orthogonal(int n, std::uint64_t seed) {
    Rng rng(seed);
    return random_orthogonal(n, rng);
}

SymMatrix sample_k_locally_psd(int n, int k, double margin, Rng& rng) {
    const SymMatrix g = random_symmetric(n, rng);
    return g.shifted(-min_local_eigenvalue(g, k) + margin);
}

Matrix givens(int n, int i, int j, double theta) {
    Matrix r = Matrix::identity(n);
    const double c = std::cos(theta), s = std::sin(theta);
    r(i, i) = c;
    r(j, j) = c;
    r(i, j) = -s;
    r(j, i) = s;
    return r;
}

} // namespace lpm
