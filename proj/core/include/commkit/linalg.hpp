#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>

namespace commkit::lin {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct SymEig {
    Vector values;   // ascending
    Matrix vectors;  // orthonormal columns, vectors.col(i) <-> values(i)
};

struct Svd {
    Matrix u;         // rows x d
    Vector sigma;     // d singular values, descending
    Matrix v;         // cols x d
};

/// Symmetric eigendecomposition. Rejects inputs that are not symmetric
/// within 1e-8 (callers symmetrize first).
SymEig sym_eig(const Matrix& m);

/// Rank-d truncated singular value decomposition.
Svd truncated_svd(const Matrix& m, std::size_t d);

/// Solves M X = B for square nonsingular M; throws NumericalError when the
/// estimated condition number exceeds 1e12.
Matrix solve(const Matrix& m, const Matrix& b);
Matrix inverse(const Matrix& m);

/// M^k by repeated squaring; M^0 = I.
Matrix matpow(const Matrix& m, std::size_t k);

/// Largest |eigenvalue| of a symmetric matrix.
double spectral_radius_sym(const Matrix& m);

/// Throws NumericalError if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* context);

/// Writes n rows x m columns as CSV with 17 significant digits.
void dump_csv(const Matrix& m, std::ostream& out);

}  // namespace commkit::lin
