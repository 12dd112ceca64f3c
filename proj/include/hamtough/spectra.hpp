#ifndef HAMTOUGH_SPECTRA_HPP
#define HAMTOUGH_SPECTRA_HPP

#include <optional>
#include <vector>

#include "hamtough/graph.hpp"
#include "hamtough/jacobi.hpp"

namespace hamtough {

inline constexpr double kEigenTolerance = 1e-10;
inline constexpr double kEqualityTolerance = 1e-8;

SymmetricMatrix<int> adjacency_matrix(const Graph& g);
/// Q = Diag(degrees) + A.
SymmetricMatrix<int> signless_laplacian(const Graph& g);
/// All-pairs BFS distances. Throws NotConnected.
SymmetricMatrix<int> distance_matrix(const Graph& g);
/// Q_D = Diag(Tr) + D. Throws NotConnected.
SymmetricMatrix<long long> distance_signless_laplacian(const Graph& g);

template <typename To, typename From>
SymmetricMatrix<To> cast(const SymmetricMatrix<From>& m) {
    SymmetricMatrix<To> out(m.order());
    for (Eigen::Index i = 0; i < m.order(); ++i)
        for (Eigen::Index j = i; j < m.order(); ++j) out.set(i, j, static_cast<To>(m(i, j)));
    return out;
}

/// Largest eigenvalue of an integer symmetric matrix.
template <typename Int>
double spectral_radius(const SymmetricMatrix<Int>& m) {
    if (m.order() == 0) return 0.0;
    return symmetric_eigenvalues(cast<double>(m), kEigenTolerance)(0);
}

double adjacency_spectral_radius(const Graph& g);
double signless_laplacian_spectral_radius(const Graph& g);
double distance_spectral_radius(const Graph& g);
double distance_signless_laplacian_spectral_radius(const Graph& g);

struct Transmissions {
    long long wiener = 0;
    std::vector<long long> per_vertex;
    bool regular = false;
};

/// W(G), Tr(v) and transmission regularity from BFS distances. Throws NotConnected.
Transmissions wiener_and_transmissions(const Graph& g);

struct SpectralSummary {
    double lambda1_A = 0;
    double q1 = 0;
    // Distance quantities exist for connected graphs only.
    std::optional<double> lambda1_D;
    std::optional<double> eta1;
    std::optional<Transmissions> transmissions;
};

SpectralSummary spectral_summary(const Graph& g);

/// One inequality `value <= bound` or `value >= bound`; slack is signed so
/// that slack >= 0 means the inequality holds.
struct BoundCheck {
    double value = 0;
    double bound = 0;
    double slack = 0;

    bool holds() const { return slack >= -kEqualityTolerance; }
    bool equality() const { return std::abs(slack) <= kEqualityTolerance; }
};

struct LemmaReport {
    BoundCheck adjacency;                  // lambda1 <= sqrt(2m - n + 1)
    std::optional<BoundCheck> signless;    // q <= 2m/(n-1) + n - 2; needs n >= 2
    BoundCheck distance;                   // lambda1(D) >= 2W/n
    BoundCheck distance_signless;          // eta1 >= 4W/n
    long long min_transmission_slack = 0;  // min_v Tr(v) - (2(n-1) - d(v))
    long long wiener_slack = 0;            // W - (n(n-1) - m)
    bool transmission_regular = false;

    int violations() const;
};

/// Evaluates the four spectral bounds and the two transmission inequalities.
/// Throws NotConnected.
LemmaReport lemma_bounds_report(const Graph& g);

}  // namespace hamtough

#endif  // HAMTOUGH_SPECTRA_HPP
