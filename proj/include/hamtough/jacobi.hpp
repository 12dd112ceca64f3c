#ifndef HAMTOUGH_JACOBI_HPP
#define HAMTOUGH_JACOBI_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace hamtough {

/// Dense real symmetric matrix. Entries are written in mirrored pairs, so the
/// stored matrix is symmetric by construction.
template <typename Scalar>
class SymmetricMatrix {
public:
    using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    explicit SymmetricMatrix(Eigen::Index n) : m_(Dense::Zero(n, n)) {}

    Eigen::Index order() const { return m_.rows(); }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    void set(Eigen::Index i, Eigen::Index j, Scalar value) {
        m_(i, j) = value;
        m_(j, i) = value;
    }

    const Dense& dense() const { return m_; }

private:
    Dense m_;
};

/// Eigen-decomposition returned by `jacobi_eigen`: values nonincreasing,
/// vectors(:, i) paired with values(i).
template <typename Scalar>
struct SymmetricEigen {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> vectors;
    int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix until every off-diagonal
/// entry is below `tol` times the max-norm of the input.
template <typename Scalar>
SymmetricEigen<Scalar> jacobi_eigen(const SymmetricMatrix<Scalar>& mat, Scalar tol = Scalar(1e-10),
                                    int max_sweeps = 100) {
    using Dense = typename SymmetricMatrix<Scalar>::Dense;
    const Eigen::Index n = mat.order();
    Dense a = mat.dense();
    Dense v = Dense::Identity(n, n);
    const Scalar scale = n == 0 ? Scalar(1) : std::max(a.cwiseAbs().maxCoeff(), Scalar(1));
    const Scalar threshold = tol * scale;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        Scalar off = 0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= threshold) break;

        for (Eigen::Index p = 0; p < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const Scalar apq = a(p, q);
                if (std::abs(apq) <= threshold * Scalar(1e-3)) continue;
                // Rotation angle zeroing a(p, q); t = tan(theta) of smaller magnitude.
                const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * apq);
                const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) /
                                 (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
                const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
                const Scalar s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const Scalar vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<Eigen::Index> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), Eigen::Index{0});
    std::stable_sort(idx.begin(), idx.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) > a(j, j); });

    SymmetricEigen<Scalar> out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.values(i) = a(idx[i], idx[i]);
        out.vectors.col(i) = v.col(idx[i]);
    }
    out.sweeps = sweep;
    return out;
}

/// Nonincreasing eigenvalues of a symmetric matrix.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> symmetric_eigenvalues(const SymmetricMatrix<Scalar>& mat,
                                                               Scalar tol = Scalar(1e-10)) {
    return jacobi_eigen(mat, tol).values;
}

/// ||M x - lambda x|| for a unit eigenpair.
template <typename Scalar>
Scalar eigen_residual(const SymmetricMatrix<Scalar>& mat, Scalar lambda,
                      const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
    return (mat.dense() * x - lambda * x).norm();
}

}  // namespace hamtough

#endif  // HAMTOUGH_JACOBI_HPP
