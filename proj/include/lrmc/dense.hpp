#pragma once

#include <span>
#include <vector>

namespace lrmc {

// Row-major dense matrix for the small blocks this library moves around:
// factor slices (k x r), r x r Gram and gauge matrices. Not a general BLAS;
// r is small and every routine here is written for that regime.
class DenseMat {
public:
    DenseMat() = default;
    DenseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

    static DenseMat identity(int n) {
        DenseMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::span<double> row(int i) { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    bool all_finite() const;
    double frobenius_norm() const;

    bool operator==(const DenseMat&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Symmetric matrix in full row-major storage. Instances are only built
// through paths that keep the two triangles exactly equal (Gram products,
// scaled sums of other SpdMats), so symmetry is structural, not checked per
// operation.
class SpdMat {
public:
    SpdMat() = default;
    explicit SpdMat(int order) : full_(order, order) {}

    // Validates symmetry to a relative tolerance before adopting the data.
    static SpdMat from_symmetric(const DenseMat& a, double rel_tol = 1e-12);

    static SpdMat identity(int n) {
        SpdMat s(n);
        s.full_ = DenseMat::identity(n);
        return s;
    }

    int order() const { return full_.rows(); }
    double at(int i, int j) const { return full_(i, j); }
    const DenseMat& dense() const { return full_; }

    // this += c * other, preserving exact symmetry.
    void add_scaled(const SpdMat& other, double c);
    // this += alpha * u u^T.
    void add_rank1(std::span<const double> u, double alpha);
    void scale(double c);

    bool operator==(const SpdMat&) const = default;

private:
    friend SpdMat gram(const DenseMat&);
    friend SpdMat spd_blend(double, const SpdMat&, double, const SpdMat&);
    DenseMat full_;
};

DenseMat transpose(const DenseMat& a);
DenseMat matmul(const DenseMat& a, const DenseMat& b);         // a * b
DenseMat matmul_transb(const DenseMat& a, const DenseMat& b);  // a * b^T

// M^T M for a thin k x r block. Entries are accumulated over rows in
// ascending order; tests rely on that order being reproducible. k = 0 gives
// the zero matrix.
SpdMat gram(const DenseMat& m);

// ca * a + cb * b.
SpdMat spd_blend(double ca, const SpdMat& a, double cb, const SpdMat& b);

// Cholesky factorization A = C C^T. Throws NotPositiveDefinite when a pivot
// is not strictly positive.
class CholeskyFactor {
public:
    explicit CholeskyFactor(const SpdMat& a);

    // Solves A y = rhs in place (A symmetric, so this is also rhs A^{-1} for
    // a row vector).
    void solve_in_place(std::span<double> rhs) const;

    DenseMat inverse() const;

private:
    DenseMat lower_;
};

// Solves X A = B row-wise for SPD A: each row of X is A^{-1} applied to the
// matching row of B. One factorization, k triangular solves.
DenseMat spd_solve(const SpdMat& a, const DenseMat& b);

DenseMat spd_inverse(const SpdMat& a);

// Sherman-Morrison: given Ainv = A^{-1} (A symmetric), returns
// (A + alpha u u^T)^{-1}. Throws SingularUpdate when the denominator
// 1 + alpha u^T Ainv u is below 1e-14 in magnitude.
DenseMat rank1_inv_update(const DenseMat& ainv, std::span<const double> u, double alpha);

// Solves X A = B for a general square A (LU with partial pivoting). Throws
// SingularMatrix on a negligible pivot.
DenseMat solve_general(const DenseMat& a, const DenseMat& b);
DenseMat invert_general(const DenseMat& a);

// Modified Gram-Schmidt with a second pass; replaces the columns of m with
// an orthonormal basis of their span. Throws SingularMatrix if a column is
// (numerically) dependent on its predecessors.
void orthonormalize_columns(DenseMat& m);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace lrmc
