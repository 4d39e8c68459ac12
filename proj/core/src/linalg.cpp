#include "commkit/linalg.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "commkit/errors.hpp"

namespace commkit::lin {

void require_finite(const Matrix& m, const char* context) {
    if (!m.allFinite())
        throw NumericalError(std::string(context) + ": matrix contains NaN/Inf entries");
}

SymEig sym_eig(const Matrix& m) {
    if (m.rows() != m.cols()) throw ArgumentError("sym_eig: matrix not square");
    require_finite(m, "sym_eig");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-8 * scale)
        throw ArgumentError("sym_eig: input not symmetric within 1e-8");
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.info() != Eigen::Success) throw NumericalError("sym_eig: failed to converge");
    return {es.eigenvalues(), es.eigenvectors()};
}

Svd truncated_svd(const Matrix& m, std::size_t d) {
    require_finite(m, "truncated_svd");
    const std::size_t dmax = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
    if (d < 1 || d > dmax)
        throw ArgumentError("truncated_svd: rank " + std::to_string(d) +
                            " out of range 1.." + std::to_string(dmax));
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Svd out;
    out.u = svd.matrixU().leftCols(d);
    out.sigma = svd.singularValues().head(d);
    out.v = svd.matrixV().leftCols(d);
    return out;
}

Matrix solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != m.cols()) throw ArgumentError("solve: matrix not square");
    if (b.rows() != m.rows()) throw ArgumentError("solve: dimension mismatch");
    require_finite(m, "solve");
    require_finite(b, "solve rhs");
    Eigen::JacobiSVD<Matrix> svd(m);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(svd.singularValues().size() - 1);
    const double cond = (smin > 0.0) ? smax / smin : std::numeric_limits<double>::infinity();
    if (!(cond < 1e12))
        throw NumericalError("solve: matrix singular or ill-conditioned (condition estimate " +
                             std::to_string(cond) + ")");
    Matrix x = m.partialPivLu().solve(b);
    require_finite(x, "solve result");
    return x;
}

Matrix inverse(const Matrix& m) {
    return solve(m, Matrix::Identity(m.rows(), m.cols()));
}

Matrix matpow(const Matrix& m, std::size_t k) {
    if (m.rows() != m.cols()) throw ArgumentError("matpow: matrix not square");
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    require_finite(result, "matpow");
    return result;
}

double spectral_radius_sym(const Matrix& m) {
    const SymEig eig = sym_eig(m);
    return eig.values.cwiseAbs().maxCoeff();
}

void dump_csv(const Matrix& m, std::ostream& out) {
    const auto old_precision = out.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ',';
            out << m(i, j);
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace commkit::lin
