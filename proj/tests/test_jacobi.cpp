#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "hamtough/jacobi.hpp"

using namespace hamtough;

namespace {

template <typename Scalar>
SymmetricMatrix<Scalar> random_symmetric(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    SymmetricMatrix<Scalar> m(n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) m.set(i, j, static_cast<Scalar>(entry(rng)));
    return m;
}

}  // namespace

TEST_CASE_TEMPLATE("eigenvalues match Eigen's self-adjoint solver", Scalar, double, long double) {
    std::mt19937_64 rng(42);
    for (Eigen::Index n : {1, 2, 3, 5, 8, 13, 30}) {
        const auto m = random_symmetric<Scalar>(n, rng);
        const auto mine = jacobi_eigen(m, Scalar(1e-12));
        Eigen::SelfAdjointEigenSolver<typename SymmetricMatrix<Scalar>::Dense> ref(m.dense());
        REQUIRE(ref.info() == Eigen::Success);
        for (Eigen::Index i = 0; i < n; ++i) {
            CHECK(static_cast<double>(mine.values(i)) ==
                  doctest::Approx(static_cast<double>(ref.eigenvalues()(n - 1 - i))).epsilon(1e-9));
            const auto x = mine.vectors.col(i);
            CHECK(static_cast<double>((m.dense() * x - mine.values(i) * x).norm()) < 1e-8);
        }
        for (Eigen::Index i = 1; i < n; ++i) CHECK(mine.values(i - 1) >= mine.values(i));
        const auto gram = (mine.vectors.transpose() * mine.vectors).eval();
        CHECK(static_cast<double>((gram - decltype(gram)::Identity(n, n)).norm()) < 1e-9);
    }
}

TEST_CASE("float scalar converges at its own precision") {
    std::mt19937_64 rng(1);
    const auto m = random_symmetric<float>(10, rng);
    const auto mine = jacobi_eigen(m, 1e-6f);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXf> ref(m.dense());
    for (int i = 0; i < 10; ++i) CHECK(mine.values(i) == doctest::Approx(ref.eigenvalues()(9 - i)).epsilon(1e-4));
}

TEST_CASE("trace and diagonal inputs") {
    SymmetricMatrix<double> d(4);
    d.set(0, 0, 1);
    d.set(1, 1, 7);
    d.set(2, 2, -3);
    d.set(3, 3, 2);
    const auto e = jacobi_eigen(d);
    CHECK(e.sweeps == 0);
    CHECK(e.values(0) == 7);
    CHECK(e.values(3) == -3);

    std::mt19937_64 rng(9);
    const auto m = random_symmetric<double>(12, rng);
    CHECK(symmetric_eigenvalues(m).sum() == doctest::Approx(m.dense().trace()));
    const auto top = symmetric_eigenvalues(m)(0);
    CHECK(eigen_residual(m, top, jacobi_eigen(m).vectors.col(0).eval()) < 1e-8);
    CHECK(jacobi_eigen(SymmetricMatrix<double>(0)).values.size() == 0);
}
