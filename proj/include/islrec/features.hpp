#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "islrec/image.hpp"

namespace islrec {

inline constexpr int kFeatureSide = 70;
inline constexpr int kTopEigenpairs = 5;

/// Dense row-major square matrix of doubles.
class SquareMatrix {
public:
    explicit SquareMatrix(int order);
    SquareMatrix(int order, std::vector<double> data);

    static SquareMatrix identity(int order);

    int order() const noexcept { return order_; }
    double& operator()(int r, int c) noexcept { return data_[index(r, c)]; }
    double operator()(int r, int c) const noexcept { return data_[index(r, c)]; }
    std::span<const double> data() const noexcept { return data_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t index(int r, int c) const noexcept {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(order_) +
               static_cast<std::size_t>(c);
    }

    int order_;
    std::vector<double> data_;
};

/// Eigenpairs sorted by descending eigenvalue; `vectors[i]` belongs to
/// `values[i]` and has `order` components.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-12;
    int max_sweeps = 100;
    double symmetry_tolerance = 1e-9;
};

/// Full spectral decomposition of a symmetric matrix by cyclic Jacobi
/// rotations.
///
/// Sweeps continue until every off-diagonal entry is below
/// `off_diagonal_tolerance`. Throws InvalidArgument for an asymmetric input
/// and ConvergenceError (carrying the residual off-diagonal Frobenius norm)
/// when `max_sweeps` is exhausted. Equal eigenvalues keep their diagonal
/// order.
EigenDecomposition eig_sym(const SquareMatrix& c, const JacobiOptions& options = {});

/// Leading eigenpairs of a frame's covariance.
///
/// Eigenvalues are descending and clamped at 0. Each eigenvector is scaled
/// so that its largest-magnitude component (lowest index on ties) is
/// positive; distances between feature vectors depend on that convention.
struct FeatureVector {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;

    std::size_t count() const noexcept { return eigenvalues.size(); }
    std::size_t dimension() const noexcept {
        return eigenvectors.empty() ? 0 : eigenvectors.front().size();
    }
    void validate() const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Column means, each row being one observation. Requires a square frame.
std::vector<double> row_mean(const GrayFrame& x);

/// (1/N) sum_r (x_r - M)(x_r - M)^T over the N rows of a square frame.
SquareMatrix covariance(const GrayFrame& x);

/// Flips `v` so that its largest-magnitude component is positive.
void canonicalize_sign(std::span<double> v) noexcept;

/// Covariance -> eigen decomposition -> first `top_k` pairs, sign
/// canonicalized. `top_k` is capped at the frame side.
FeatureVector extract_features(const GrayFrame& x, int top_k = kTopEigenpairs);

}  // namespace islrec
