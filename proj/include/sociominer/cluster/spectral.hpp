#pragma once

#include "sociominer/cluster/assignment.hpp"
#include "sociominer/cluster/kmeans.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <string>
#include <vector>

namespace sociominer::cluster {

struct IsolatedRows : std::runtime_error {
    std::vector<std::string> ids;
    explicit IsolatedRows(std::vector<std::string> isolated)
        : std::runtime_error("affinity matrix has isolated rows"),
          ids(std::move(isolated)) {}
};

// Symmetric normalized embedding: zero the diagonal, L = D^(-1/2) A
// D^(-1/2), eigenvectors of the k largest eigenvalues stacked as n x k,
// rows normalized to unit length (zero rows left as zero). Throws
// IsolatedRows when a row degree is zero; `ids` entries name the rows
// (row index used when ids is empty).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> spectral_embedding(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& affinity, int k,
    const std::vector<std::string>& ids = {}) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = affinity.rows();
    if (k < 1) throw InvalidK("k must be >= 1");
    if (k > n) throw InvalidK("k exceeds the number of rows");

    Matrix a = affinity;
    a.diagonal().setZero();

    Vector degree = a.rowwise().sum();
    std::vector<std::string> isolated;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (degree[i] <= Scalar(0))
            isolated.push_back(ids.empty() ? std::to_string(i)
                                           : ids[static_cast<std::size_t>(i)]);
    }
    if (!isolated.empty()) throw IsolatedRows(std::move(isolated));

    Vector d_inv_sqrt = degree.array().rsqrt();
    Matrix laplacian = d_inv_sqrt.asDiagonal() * a * d_inv_sqrt.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Matrix> solver(laplacian);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigensolver failed to converge");

    // Eigenvalues come back ascending; the k largest are the last columns.
    Matrix embedding = solver.eigenvectors().rightCols(k);
    for (Eigen::Index i = 0; i < n; ++i) {
        Scalar norm = embedding.row(i).norm();
        if (norm > Scalar(0)) embedding.row(i) /= norm;
    }
    return embedding;
}

// Embedding plus k-means over its rows.
template <typename Scalar>
KMeansResult<Scalar> spectral_kmeans(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& affinity, int k,
    std::uint64_t seed, int restarts = 10, const std::vector<std::string>& ids = {}) {
    auto embedding = spectral_embedding<Scalar>(affinity, k, ids);
    return kmeans<Scalar>(embedding, k, seed, restarts);
}

ClusterAssignment spectral_cluster(const Eigen::MatrixXd& affinity,
                                   const std::vector<std::string>& ids, int k,
                                   std::uint64_t seed, int restarts = 10);

} // namespace sociominer::cluster
