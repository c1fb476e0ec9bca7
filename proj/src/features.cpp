#include "islrec/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace islrec {

SquareMatrix::SquareMatrix(int order)
    : order_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {
    if (order < 1) throw InvalidArgument("matrix order must be at least 1");
}

SquareMatrix::SquareMatrix(int order, std::vector<double> data)
    : order_(order), data_(std::move(data)) {
    if (order < 1) throw InvalidArgument("matrix order must be at least 1");
    if (data_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order))
        throw InvalidArgument("matrix data length must equal order squared");
}

SquareMatrix SquareMatrix::identity(int order) {
    SquareMatrix m(order);
    for (int i = 0; i < order; ++i) m(i, i) = 1.0;
    return m;
}

namespace {

double off_diagonal_norm(const SquareMatrix& a) {
    double sum = 0.0;
    for (int p = 0; p < a.order(); ++p)
        for (int q = p + 1; q < a.order(); ++q) sum += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(sum);
}

double max_off_diagonal(const SquareMatrix& a) {
    double m = 0.0;
    for (int p = 0; p < a.order(); ++p)
        for (int q = p + 1; q < a.order(); ++q) m = std::max(m, std::abs(a(p, q)));
    return m;
}

// Annihilates a(p, q) with one plane rotation, updating the accumulated
// eigenvector matrix `v` (eigenvectors are its columns).
void rotate(SquareMatrix& a, SquareMatrix& v, int p, int q) {
    const int n = a.order();
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);

    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = a(q, p) = 0.0;

    for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p), akq = a(k, q);
        const double np = akp - s * (akq + tau * akp);
        const double nq = akq + s * (akp - tau * akq);
        a(k, p) = a(p, k) = np;
        a(k, q) = a(q, k) = nq;
    }
    for (int k = 0; k < n; ++k) {
        const double vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp - s * (vkq + tau * vkp);
        v(k, q) = vkq + s * (vkp - tau * vkq);
    }
}

}  // namespace

EigenDecomposition eig_sym(const SquareMatrix& c, const JacobiOptions& options) {
    const int n = c.order();
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (!(std::abs(c(p, q) - c(q, p)) <= options.symmetry_tolerance))
                throw InvalidArgument("eig_sym requires a symmetric matrix");

    // Work on the exactly symmetrized input.
    SquareMatrix a(n);
    for (int p = 0; p < n; ++p) {
        a(p, p) = c(p, p);
        for (int q = p + 1; q < n; ++q) a(p, q) = a(q, p) = 0.5 * (c(p, q) + c(q, p));
    }
    SquareMatrix v = SquareMatrix::identity(n);

    int sweep = 0;
    while (max_off_diagonal(a) >= options.off_diagonal_tolerance) {
        if (sweep == options.max_sweeps) throw ConvergenceError(sweep, off_diagonal_norm(a));
        ++sweep;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = std::abs(a(p, q));
                if (apq == 0.0) continue;
                // Below the rounding floor of both diagonal entries the
                // rotation is a no-op; drop the entry instead.
                if (sweep > 3 && std::abs(a(p, p)) + 100.0 * apq == std::abs(a(p, p)) &&
                    std::abs(a(q, q)) + 100.0 * apq == std::abs(a(q, q))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](int i, int j) { return a(i, i) > a(j, j); });

    EigenDecomposition out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (int idx : order) {
        out.values.push_back(a(idx, idx));
        std::vector<double> vec(n);
        for (int k = 0; k < n; ++k) vec[k] = v(k, idx);
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

namespace {

void require_square(const GrayFrame& x) {
    if (x.width() != x.height())
        throw InvalidArgument("feature extraction requires a square frame");
}

}  // namespace

std::vector<double> row_mean(const GrayFrame& x) {
    require_square(x);
    const int n = x.width();
    std::vector<double> mean(n, 0.0), lo(n), hi(n);
    for (int j = 0; j < n; ++j) lo[j] = hi[j] = x.at(j, 0);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) {
            const double v = x.at(j, r);
            mean[j] += v;
            lo[j] = std::min(lo[j], v);
            hi[j] = std::max(hi[j], v);
        }
    // Rounded sums can land outside the column range; clamping keeps the
    // mean of a constant column exact.
    for (int j = 0; j < n; ++j) mean[j] = std::clamp(mean[j] / n, lo[j], hi[j]);
    return mean;
}

SquareMatrix covariance(const GrayFrame& x) {
    const std::vector<double> mean = row_mean(x);
    const int n = x.width();

    std::vector<double> centered(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) centered[static_cast<std::size_t>(r) * n + j] = x.at(j, r) - mean[j];

    SquareMatrix cov(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            double sum = 0.0;
            for (int r = 0; r < n; ++r) {
                const double* row = &centered[static_cast<std::size_t>(r) * n];
                sum += row[i] * row[j];
            }
            cov(i, j) = cov(j, i) = sum / n;
        }
    }
    return cov;
}

void canonicalize_sign(std::span<double> v) noexcept {
    if (v.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    if (v[best] < 0.0)
        for (double& x : v) x = -x;
}

void FeatureVector::validate() const {
    if (eigenvalues.size() != eigenvectors.size())
        throw InvalidArgument("feature vector has mismatched eigenvalue/eigenvector counts");
    for (std::size_t i = 1; i < eigenvalues.size(); ++i)
        if (eigenvalues[i] > eigenvalues[i - 1])
            throw InvalidArgument("feature eigenvalues must be in descending order");
    for (const auto& v : eigenvectors)
        if (v.size() != dimension())
            throw InvalidArgument("feature eigenvectors have inconsistent lengths");
}

FeatureVector extract_features(const GrayFrame& x, int top_k) {
    if (top_k < 1) throw InvalidArgument("top_k must be at least 1");
    EigenDecomposition eig = eig_sym(covariance(x));
    const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(top_k), eig.values.size());

    FeatureVector f;
    f.eigenvalues.reserve(keep);
    f.eigenvectors.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        // Covariance is PSD; negative values are round-off.
        f.eigenvalues.push_back(std::max(eig.values[i], 0.0));
        canonicalize_sign(eig.vectors[i]);
        f.eigenvectors.push_back(std::move(eig.vectors[i]));
    }
    return f;
}

}  // namespace islrec
