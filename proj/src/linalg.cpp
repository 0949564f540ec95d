#include "driftdecomp/linalg.hpp"

#include "driftdecomp/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace driftdecomp {

TruncatedSVD truncated_svd(const Matrix& M, Index r) {
    if (r < 1 || r > std::min(M.rows(), M.cols()))
        throw DimensionError("truncated_svd: rank " + std::to_string(r) +
                             " exceeds min(" + std::to_string(M.rows()) +
                             ", " + std::to_string(M.cols()) + ")");
    Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    TruncatedSVD out;
    out.U = svd.matrixU().leftCols(r);
    out.S = svd.singularValues().head(r);
    out.V = svd.matrixV().leftCols(r);
    return out;
}

Matrix procrustes_project(const Matrix& B, const Matrix& Bstar,
                          bool* degenerate) {
    if (B.cols() != Bstar.rows() || Bstar.rows() != Bstar.cols())
        throw DimensionError("procrustes_project: B is " +
                             std::to_string(B.rows()) + "x" +
                             std::to_string(B.cols()) + " but Bstar is " +
                             std::to_string(Bstar.rows()) + "x" +
                             std::to_string(Bstar.cols()));
    if (B.rows() < B.cols())
        throw DimensionError("procrustes_project: need rows >= cols");
    const Matrix M = B * Bstar.transpose();
    Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector& s = svd.singularValues();
    if (degenerate != nullptr)
        *degenerate = s(s.size() - 1) <= 1e-12 * std::max(s(0), 1e-300);
    return svd.matrixU() * svd.matrixV().transpose();
}

namespace {

// Condition estimate for a symmetric matrix from its eigenvalue spread.
double symmetric_condition(const Matrix& M, Eigen::SelfAdjointEigenSolver<Matrix>& es) {
    es.compute(M);
    const Vector& ev = es.eigenvalues();
    const double emax = ev.cwiseAbs().maxCoeff();
    const double emin = ev.minCoeff();
    if (emin <= 0.0) return std::numeric_limits<double>::infinity();
    return emax / emin;
}

} // namespace

Matrix regularized_rdiv(const Matrix& N, const Matrix& G, double mu) {
    if (G.rows() != G.cols() || N.cols() != G.rows())
        throw DimensionError("regularized_rdiv: incompatible shapes");
    if (mu < 0.0) throw ConfigError("regularized_rdiv: mu must be >= 0");

    Matrix M = 0.5 * (G + G.transpose());
    M.diagonal().array() += mu;

    Eigen::SelfAdjointEigenSolver<Matrix> es;
    const double cond = symmetric_condition(M, es);
    if (!(cond <= 1e12))
        throw SingularSystemError(
            "regularized_rdiv: system numerically singular (condition " +
                std::to_string(cond) + ")",
            cond);

    Eigen::LDLT<Matrix> ldlt(M);
    Matrix Zt = ldlt.solve(N.transpose());
    // One refinement step keeps the residual near machine precision even
    // for moderately ill-conditioned systems.
    Zt += ldlt.solve(N.transpose() - M * Zt);
    return Zt.transpose();
}

namespace {

// Lawson-Hanson active set on the Gram form: minimize z^T G z - 2 z^T h
// subject to z >= 0.
Vector nnls_row(const Matrix& G, const Vector& h) {
    const Index R = G.rows();
    Vector z = Vector::Zero(R);
    std::vector<bool> passive(static_cast<std::size_t>(R), false);
    Vector w = h;

    const double tol = 1e-12 * std::max({1.0, h.cwiseAbs().maxCoeff(),
                                         G.diagonal().cwiseAbs().maxCoeff()});
    const int max_outer = 50 * static_cast<int>(R) + 50;

    for (int outer = 0; outer < max_outer; ++outer) {
        Index best = -1;
        double best_w = tol;
        for (Index i = 0; i < R; ++i)
            if (!passive[static_cast<std::size_t>(i)] && w(i) > best_w) {
                best_w = w(i);
                best = i;
            }
        if (best < 0) break;
        passive[static_cast<std::size_t>(best)] = true;

        for (int inner = 0; inner < max_outer; ++inner) {
            std::vector<Index> idx;
            for (Index i = 0; i < R; ++i)
                if (passive[static_cast<std::size_t>(i)]) idx.push_back(i);
            const Index p = static_cast<Index>(idx.size());
            Matrix Gpp(p, p);
            Vector hp(p);
            for (Index a = 0; a < p; ++a) {
                hp(a) = h(idx[static_cast<std::size_t>(a)]);
                for (Index b = 0; b < p; ++b)
                    Gpp(a, b) = G(idx[static_cast<std::size_t>(a)],
                                  idx[static_cast<std::size_t>(b)]);
            }
            Vector yp = Gpp.completeOrthogonalDecomposition().solve(hp);

            bool feasible = true;
            for (Index a = 0; a < p; ++a)
                if (yp(a) <= 0.0) feasible = false;
            if (feasible) {
                z.setZero();
                for (Index a = 0; a < p; ++a)
                    z(idx[static_cast<std::size_t>(a)]) = yp(a);
                break;
            }

            double alpha = std::numeric_limits<double>::infinity();
            for (Index a = 0; a < p; ++a) {
                const Index i = idx[static_cast<std::size_t>(a)];
                if (yp(a) <= 0.0 && z(i) != yp(a))
                    alpha = std::min(alpha, z(i) / (z(i) - yp(a)));
            }
            if (!std::isfinite(alpha)) alpha = 0.0;
            for (Index a = 0; a < p; ++a) {
                const Index i = idx[static_cast<std::size_t>(a)];
                z(i) += alpha * (yp(a) - z(i));
            }
            for (Index i = 0; i < R; ++i)
                if (passive[static_cast<std::size_t>(i)] && z(i) <= tol) {
                    passive[static_cast<std::size_t>(i)] = false;
                    z(i) = 0.0;
                }
        }
        w = h - G * z;
    }

    for (Index i = 0; i < R; ++i)
        if (z(i) < 0.0) z(i) = 0.0;
    return z;
}

} // namespace

Matrix nnls_solve(const Matrix& G, const Matrix& H) {
    if (G.rows() != G.cols() || H.cols() != G.rows())
        throw DimensionError("nnls_solve: incompatible shapes");
    const Matrix Gs = 0.5 * (G + G.transpose());
    Eigen::SelfAdjointEigenSolver<Matrix> es(Gs);
    const Vector& ev = es.eigenvalues();
    const double emax = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    if (ev.minCoeff() < -1e-8 * emax)
        throw ConfigError("nnls_solve: Gram matrix is not PSD");

    Matrix Z(H.rows(), G.rows());
    for (Index r = 0; r < H.rows(); ++r)
        Z.row(r) = nnls_row(Gs, H.row(r).transpose()).transpose();
    return Z;
}

} // namespace driftdecomp
