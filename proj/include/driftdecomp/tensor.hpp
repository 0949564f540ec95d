#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace driftdecomp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Dense 4-way data cube over (I acquisitions, J mass channels,
/// K modulations, L samples).
///
/// Linear layout is fixed here once for the whole project: the first index
/// varies fastest, offset = i + I*(j + J*(k + K*l)). The mode-L unfolding
/// and the Khatri-Rao product both key off the companion convention that
/// the combined (i,k) row index is i*K + k; see kr_row().
class DenseTensor4 {
  public:
    DenseTensor4() = default;
    DenseTensor4(Index i, Index j, Index k, Index l);
    DenseTensor4(std::array<Index, 4> dims, std::vector<double> data);

    Index dim_i() const { return dims_[0]; }
    Index dim_j() const { return dims_[1]; }
    Index dim_k() const { return dims_[2]; }
    Index dim_l() const { return dims_[3]; }
    const std::array<Index, 4>& dims() const { return dims_; }
    Index size() const { return static_cast<Index>(data_.size()); }

    double operator()(Index i, Index j, Index k, Index l) const {
        return data_[offset(i, j, k, l)];
    }
    double& operator()(Index i, Index j, Index k, Index l) {
        return data_[offset(i, j, k, l)];
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    double squared_norm() const;
    bool all_finite() const;

    Index offset(Index i, Index j, Index k, Index l) const {
        return i + dims_[0] * (j + dims_[1] * (k + dims_[2] * l));
    }

  private:
    std::array<Index, 4> dims_{0, 0, 0, 0};
    std::vector<double> data_;
};

enum class UnfoldMode { KL, IL, L };

const char* unfold_mode_name(UnfoldMode mode);

/// Tensor indices a slice came from. `a` is k for mode KL, i for mode IL,
/// and 0 for mode L; `l` is always the sample.
struct SliceKey {
    Index a = 0;
    Index l = 0;
};

/// One unfolding of a DenseTensor4: an ordered list of matrices plus the
/// map back to tensor indices. Slices are ordered l-major (all slabs of
/// sample 0, then sample 1, ...).
struct SliceSet {
    UnfoldMode mode = UnfoldMode::KL;
    std::array<Index, 4> dims{0, 0, 0, 0};
    std::vector<Matrix> slices;
    std::vector<SliceKey> keys;

    Index count() const { return static_cast<Index>(slices.size()); }
    double squared_norm() const;
};

/// Row index of the combined (i,k) mode used by unfold(L) and khatri_rao.
inline Index kr_row(Index i, Index k, Index K) { return i * K + k; }

/// Column-wise Kronecker product of A (m x R) and B (n x R); column r of
/// the result is kron(A_col_r, B_col_r) with A's index varying slowest,
/// row (p, q) -> p*n + q.
Matrix khatri_rao(const Matrix& A, const Matrix& B);

SliceSet unfold(const DenseTensor4& X, UnfoldMode mode);
DenseTensor4 fold(const SliceSet& S);

/// Rescale each column of M to unit Euclidean norm. Returns the normalized
/// matrix and the original column norms; zero columns pass through with
/// scale 0, never NaN.
std::pair<Matrix, Vector> column_normalize(const Matrix& M);

} // namespace driftdecomp
