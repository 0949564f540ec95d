#include "driftdecomp/tensor.hpp"

#include "driftdecomp/errors.hpp"

#include <cmath>
#include <string>

namespace driftdecomp {

DenseTensor4::DenseTensor4(Index i, Index j, Index k, Index l)
    : dims_{i, j, k, l} {
    if (i < 1 || j < 1 || k < 1 || l < 1)
        throw DimensionError("tensor dims must all be >= 1");
    data_.assign(static_cast<std::size_t>(i * j * k * l), 0.0);
}

DenseTensor4::DenseTensor4(std::array<Index, 4> dims, std::vector<double> data)
    : dims_(dims), data_(std::move(data)) {
    if (dims_[0] < 1 || dims_[1] < 1 || dims_[2] < 1 || dims_[3] < 1)
        throw DimensionError("tensor dims must all be >= 1");
    const auto expected = static_cast<std::size_t>(dims_[0] * dims_[1] *
                                                   dims_[2] * dims_[3]);
    if (data_.size() != expected)
        throw DimensionError("tensor data length " +
                             std::to_string(data_.size()) +
                             " does not match dims product " +
                             std::to_string(expected));
}

double DenseTensor4::squared_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return s;
}

bool DenseTensor4::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

const char* unfold_mode_name(UnfoldMode mode) {
    switch (mode) {
        case UnfoldMode::KL: return "KL";
        case UnfoldMode::IL: return "IL";
        case UnfoldMode::L: return "L";
    }
    return "?";
}

double SliceSet::squared_norm() const {
    double s = 0.0;
    for (const auto& m : slices) s += m.squaredNorm();
    return s;
}

Matrix khatri_rao(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.cols())
        throw DimensionError("khatri_rao: column counts differ (" +
                             std::to_string(A.cols()) + " vs " +
                             std::to_string(B.cols()) + ")");
    const Index m = A.rows(), n = B.rows(), R = A.cols();
    Matrix out(m * n, R);
    for (Index r = 0; r < R; ++r)
        for (Index p = 0; p < m; ++p)
            out.col(r).segment(p * n, n) = A(p, r) * B.col(r);
    return out;
}

SliceSet unfold(const DenseTensor4& X, UnfoldMode mode) {
    const Index I = X.dim_i(), J = X.dim_j(), K = X.dim_k(), L = X.dim_l();
    SliceSet S;
    S.mode = mode;
    S.dims = X.dims();

    switch (mode) {
        case UnfoldMode::KL:
            S.slices.reserve(static_cast<std::size_t>(K * L));
            for (Index l = 0; l < L; ++l)
                for (Index k = 0; k < K; ++k) {
                    Matrix m(I, J);
                    for (Index j = 0; j < J; ++j)
                        for (Index i = 0; i < I; ++i) m(i, j) = X(i, j, k, l);
                    S.slices.push_back(std::move(m));
                    S.keys.push_back({k, l});
                }
            break;
        case UnfoldMode::IL:
            S.slices.reserve(static_cast<std::size_t>(I * L));
            for (Index l = 0; l < L; ++l)
                for (Index i = 0; i < I; ++i) {
                    Matrix m(K, J);
                    for (Index j = 0; j < J; ++j)
                        for (Index k = 0; k < K; ++k) m(k, j) = X(i, j, k, l);
                    S.slices.push_back(std::move(m));
                    S.keys.push_back({i, l});
                }
            break;
        case UnfoldMode::L:
            S.slices.reserve(static_cast<std::size_t>(L));
            for (Index l = 0; l < L; ++l) {
                Matrix m(I * K, J);
                for (Index j = 0; j < J; ++j)
                    for (Index k = 0; k < K; ++k)
                        for (Index i = 0; i < I; ++i)
                            m(kr_row(i, k, K), j) = X(i, j, k, l);
                S.slices.push_back(std::move(m));
                S.keys.push_back({0, l});
            }
            break;
    }
    return S;
}

DenseTensor4 fold(const SliceSet& S) {
    const Index I = S.dims[0], J = S.dims[1], K = S.dims[2], L = S.dims[3];
    Index expected_count = 0;
    Index rows = 0, cols = J;
    switch (S.mode) {
        case UnfoldMode::KL: expected_count = K * L; rows = I; break;
        case UnfoldMode::IL: expected_count = I * L; rows = K; break;
        case UnfoldMode::L: expected_count = L; rows = I * K; break;
    }
    if (S.count() != expected_count ||
        S.keys.size() != S.slices.size())
        throw DimensionError("fold: slice count inconsistent with dims");
    for (const auto& m : S.slices)
        if (m.rows() != rows || m.cols() != cols)
            throw DimensionError("fold: slice shape inconsistent with dims");

    DenseTensor4 X(I, J, K, L);
    for (std::size_t s = 0; s < S.slices.size(); ++s) {
        const Matrix& m = S.slices[s];
        const SliceKey key = S.keys[s];
        switch (S.mode) {
            case UnfoldMode::KL:
                for (Index j = 0; j < J; ++j)
                    for (Index i = 0; i < I; ++i)
                        X(i, j, key.a, key.l) = m(i, j);
                break;
            case UnfoldMode::IL:
                for (Index j = 0; j < J; ++j)
                    for (Index k = 0; k < K; ++k)
                        X(key.a, j, k, key.l) = m(k, j);
                break;
            case UnfoldMode::L:
                for (Index j = 0; j < J; ++j)
                    for (Index k = 0; k < K; ++k)
                        for (Index i = 0; i < I; ++i)
                            X(i, j, k, key.l) = m(kr_row(i, k, K), j);
                break;
        }
    }
    return X;
}

std::pair<Matrix, Vector> column_normalize(const Matrix& M) {
    Matrix out = M;
    Vector scales(M.cols());
    for (Index r = 0; r < M.cols(); ++r) {
        const double s = M.col(r).norm();
        scales(r) = s;
        if (s > 0.0) out.col(r) /= s;
    }
    return {std::move(out), std::move(scales)};
}

} // namespace driftdecomp
