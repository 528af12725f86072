#include "lrmc/dense.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lrmc/errors.hpp"

namespace lrmc {

bool DenseMat::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

double DenseMat::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

DenseMat transpose(const DenseMat& a) {
    DenseMat t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

DenseMat matmul(const DenseMat& a, const DenseMat& b) {
    assert(a.cols() == b.rows());
    DenseMat c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

DenseMat matmul_transb(const DenseMat& a, const DenseMat& b) {
    assert(a.cols() == b.cols());
    DenseMat c(a.rows(), b.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j) c(i, j) = dot(a.row(i), b.row(j));
    return c;
}

SpdMat SpdMat::from_symmetric(const DenseMat& a, double rel_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("SpdMat: matrix not square");
    double scale = a.frobenius_norm();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > rel_tol * std::max(1.0, scale))
                throw std::invalid_argument("SpdMat: matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    SpdMat s(a.rows());
    // Mirror the upper triangle so both halves are bitwise equal.
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i; j < a.cols(); ++j) {
            s.full_(i, j) = a(i, j);
            s.full_(j, i) = a(i, j);
        }
    return s;
}

void SpdMat::add_scaled(const SpdMat& other, double c) {
    assert(order() == other.order());
    const int n = order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = full_(i, j) + c * other.full_(i, j);
            full_(i, j) = v;
            full_(j, i) = v;
        }
}

void SpdMat::add_rank1(std::span<const double> u, double alpha) {
    const int n = order();
    assert(static_cast<int>(u.size()) == n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = full_(i, j) + alpha * u[i] * u[j];
            full_(i, j) = v;
            full_(j, i) = v;
        }
}

void SpdMat::scale(double c) {
    const int n = order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) full_(i, j) *= c;
}

SpdMat gram(const DenseMat& m) {
    const int r = m.cols();
    const int k = m.rows();
    SpdMat g(r);
    for (int c1 = 0; c1 < r; ++c1)
        for (int c2 = c1; c2 < r; ++c2) {
            double s = 0.0;
            for (int row = 0; row < k; ++row) s += m(row, c1) * m(row, c2);
            g.full_(c1, c2) = s;
            g.full_(c2, c1) = s;
        }
    return g;
}

SpdMat spd_blend(double ca, const SpdMat& a, double cb, const SpdMat& b) {
    assert(a.order() == b.order());
    SpdMat out(a.order());
    const int n = a.order();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double v = ca * a.full_(i, j) + cb * b.full_(i, j);
            out.full_(i, j) = v;
            out.full_(j, i) = v;
        }
    return out;
}

CholeskyFactor::CholeskyFactor(const SpdMat& a) : lower_(a.order(), a.order()) {
    const int n = a.order();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a.at(i, j);
            for (int k = 0; k < j; ++k) s -= lower_(i, k) * lower_(j, k);
            if (i == j) {
                if (!(s > 0.0) || !std::isfinite(s))
                    throw NotPositiveDefinite("non-positive pivot at index " + std::to_string(i));
                lower_(i, i) = std::sqrt(s);
            } else {
                lower_(i, j) = s / lower_(j, j);
            }
        }
    }
}

void CholeskyFactor::solve_in_place(std::span<double> rhs) const {
    const int n = lower_.rows();
    assert(static_cast<int>(rhs.size()) == n);
    // Forward: C z = rhs.
    for (int i = 0; i < n; ++i) {
        double s = rhs[i];
        for (int k = 0; k < i; ++k) s -= lower_(i, k) * rhs[k];
        rhs[i] = s / lower_(i, i);
    }
    // Backward: C^T y = z.
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int k = i + 1; k < n; ++k) s -= lower_(k, i) * rhs[k];
        rhs[i] = s / lower_(i, i);
    }
}

DenseMat CholeskyFactor::inverse() const {
    const int n = lower_.rows();
    DenseMat inv = DenseMat::identity(n);
    for (int i = 0; i < n; ++i) solve_in_place(inv.row(i));
    // Symmetrize: the row solves agree up to roundoff; average the halves so
    // downstream symmetric updates stay consistent.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    return inv;
}

DenseMat spd_solve(const SpdMat& a, const DenseMat& b) {
    assert(b.cols() == a.order());
    CholeskyFactor chol(a);
    DenseMat x = b;
    for (int i = 0; i < x.rows(); ++i) chol.solve_in_place(x.row(i));
    return x;
}

DenseMat spd_inverse(const SpdMat& a) { return CholeskyFactor(a).inverse(); }

DenseMat rank1_inv_update(const DenseMat& ainv, std::span<const double> u, double alpha) {
    const int n = ainv.rows();
    assert(ainv.cols() == n && static_cast<int>(u.size()) == n);
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i) w[i] = dot(ainv.row(i), u);
    double denom = 1.0 + alpha * dot(std::span<const double>(w), u);
    if (std::abs(denom) < 1e-14) throw SingularUpdate("rank-1 update denominator " + std::to_string(denom));
    const double c = alpha / denom;
    DenseMat out = ainv;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) -= c * w[i] * w[j];
    return out;
}

namespace {

// LU with partial pivoting of a^T, shared by solve_general / invert_general.
struct Lu {
    DenseMat lu;
    std::vector<int> perm;

    explicit Lu(const DenseMat& a) : lu(transpose(a)), perm(a.rows()) {
        const int n = lu.rows();
        double scale = lu.frobenius_norm();
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int i = col + 1; i < n; ++i)
                if (std::abs(lu(i, col)) > std::abs(lu(piv, col))) piv = i;
            if (std::abs(lu(piv, col)) <= 1e-13 * std::max(1.0, scale))
                throw SingularMatrix("negligible pivot at column " + std::to_string(col));
            if (piv != col) {
                for (int j = 0; j < n; ++j) std::swap(lu(piv, j), lu(col, j));
                std::swap(perm[piv], perm[col]);
            }
            for (int i = col + 1; i < n; ++i) {
                double f = lu(i, col) / lu(col, col);
                lu(i, col) = f;
                for (int j = col + 1; j < n; ++j) lu(i, j) -= f * lu(col, j);
            }
        }
    }

    // Solves a^T x = rhs.
    void solve(std::span<double> rhs) const {
        const int n = lu.rows();
        std::vector<double> y(n);
        for (int i = 0; i < n; ++i) y[i] = rhs[perm[i]];
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < i; ++k) y[i] -= lu(i, k) * y[k];
        for (int i = n - 1; i >= 0; --i) {
            for (int k = i + 1; k < n; ++k) y[i] -= lu(i, k) * y[k];
            y[i] /= lu(i, i);
        }
        for (int i = 0; i < n; ++i) rhs[i] = y[i];
    }
};

}  // namespace

DenseMat solve_general(const DenseMat& a, const DenseMat& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_general: matrix not square");
    assert(b.cols() == a.rows());
    Lu lu(a);
    DenseMat x = b;
    for (int i = 0; i < x.rows(); ++i) lu.solve(x.row(i));
    return x;
}

DenseMat invert_general(const DenseMat& a) { return solve_general(a, DenseMat::identity(a.rows())); }

void orthonormalize_columns(DenseMat& m) {
    const int k = m.rows();
    const int r = m.cols();
    for (int j = 0; j < r; ++j) {
        // Two projection passes keep the basis orthogonal to roundoff even
        // for nearly dependent inputs.
        for (int pass = 0; pass < 2; ++pass) {
            for (int p = 0; p < j; ++p) {
                double proj = 0.0;
                for (int i = 0; i < k; ++i) proj += m(i, p) * m(i, j);
                for (int i = 0; i < k; ++i) m(i, j) -= proj * m(i, p);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < k; ++i) norm += m(i, j) * m(i, j);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw SingularMatrix("dependent column " + std::to_string(j));
        for (int i = 0; i < k; ++i) m(i, j) /= norm;
    }
}

}  // namespace lrmc
