#pragma once

#include "driftdecomp/tensor.hpp"

namespace driftdecomp {

/// Leading r-factor SVD: U (m x r) and V (n x r) have orthonormal columns,
/// S holds the r largest singular values in descending order.
struct TruncatedSVD {
    Matrix U;
    Vector S;
    Matrix V;
};

TruncatedSVD truncated_svd(const Matrix& M, Index r);

/// Orthonormal-column P minimizing ||B - P * Bstar||_F, computed as U*V^T
/// from the SVD of B * Bstar^T. Rank-deficient products still yield a valid
/// orthonormal P; *degenerate is set when that happens.
Matrix procrustes_project(const Matrix& B, const Matrix& Bstar,
                          bool* degenerate = nullptr);

/// Solve Z * (G + mu*I) = N for Z, G symmetric PSD. Throws
/// SingularSystemError when the regularized system's condition estimate
/// exceeds 1e12.
Matrix regularized_rdiv(const Matrix& N, const Matrix& G, double mu);

/// Row-wise non-negative least squares on the Gram form: row z of the
/// result minimizes z^T G z - 2 z^T h over z >= 0, where h is the matching
/// row of H. KKT conditions hold to tolerance; entries are never negative.
Matrix nnls_solve(const Matrix& G, const Matrix& H);

} // namespace driftdecomp
