#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace sociominer::cluster {

struct InvalidK : std::runtime_error {
    explicit InvalidK(const std::string& what)
        : std::runtime_error("invalid k: " + what) {}
};

template <typename Scalar>
struct KMeansResult {
    Eigen::VectorXi labels;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> centroids; // k x dim
    Scalar sse = Scalar(0);
    // SSE after each assignment step of the winning restart; Lloyd
    // iterations never increase it.
    std::vector<Scalar> sse_trace;
    int best_restart = 0;
    std::vector<int> empty_clusters; // empty in the final assignment
};

namespace detail {

inline std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint64_t>(0x5eed0000u), seed, stream};
    return std::mt19937_64(seq);
}

template <typename Matrix>
Eigen::Index count_distinct_rows(const Matrix& pts) {
    std::set<std::vector<typename Matrix::Scalar>> seen;
    for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        std::vector<typename Matrix::Scalar> row(static_cast<std::size_t>(pts.cols()));
        for (Eigen::Index j = 0; j < pts.cols(); ++j)
            row[static_cast<std::size_t>(j)] = pts(i, j);
        seen.insert(std::move(row));
    }
    return static_cast<Eigen::Index>(seen.size());
}

// k-means++ seeding: first center uniform, the rest sampled with
// probability proportional to squared distance to the nearest chosen
// center. Cannot pick a duplicate while distinct points remain.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kmeanspp_init(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& pts, int k,
    std::mt19937_64& rng) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = pts.rows();

    Matrix centers(k, pts.cols());
    std::uniform_int_distribution<Eigen::Index> first(0, n - 1);
    centers.row(0) = pts.row(first(rng));

    Vector dist2 = (pts.rowwise() - centers.row(0)).rowwise().squaredNorm();
    for (int c = 1; c < k; ++c) {
        Scalar total = dist2.sum();
        Eigen::Index chosen = 0;
        if (total > Scalar(0)) {
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            Scalar target = static_cast<Scalar>(unit(rng)) * total;
            Scalar acc = Scalar(0);
            chosen = n - 1;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += dist2[i];
                if (acc > target) {
                    chosen = i;
                    break;
                }
            }
        } else {
            // All remaining points coincide with chosen centers; keep
            // the first index (k <= distinct rows rules this out).
            chosen = first(rng);
        }
        centers.row(c) = pts.row(chosen);
        dist2 = dist2.cwiseMin(
            (pts.rowwise() - centers.row(c)).rowwise().squaredNorm());
    }
    return centers;
}

} // namespace detail

// Lloyd iterations with k-means++ restarts. Deterministic for a given
// (points, k, seed, restarts): each restart draws from its own
// generator and the best SSE wins, ties to the lowest restart index.
// Points tie-break to the lowest cluster index; an empty cluster is
// reseeded at the point farthest from its assigned centroid.
template <typename Scalar>
KMeansResult<Scalar> kmeans(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& pts, int k,
    std::uint64_t seed, int restarts = 10, int max_iter = 300,
    Scalar tol = Scalar(1e-6)) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::Index n = pts.rows();

    if (k < 1) throw InvalidK("k must be >= 1");
    if (n == 0) throw InvalidK("no points");
    if (static_cast<Eigen::Index>(k) > detail::count_distinct_rows(pts))
        throw InvalidK("k exceeds the number of distinct points");
    if (restarts < 1) restarts = 1;

    KMeansResult<Scalar> best;
    best.sse = std::numeric_limits<Scalar>::infinity();

    for (int restart = 0; restart < restarts; ++restart) {
        auto rng = detail::seeded_rng(seed, static_cast<std::uint64_t>(restart));
        Matrix centers = detail::kmeanspp_init<Scalar>(pts, k, rng);

        Eigen::VectorXi labels = Eigen::VectorXi::Constant(n, -1);
        std::vector<Scalar> trace;

        auto assign = [&](Eigen::VectorXi& out) {
            bool changed = false;
            Scalar sse = Scalar(0);
            for (Eigen::Index i = 0; i < n; ++i) {
                Scalar best_d = std::numeric_limits<Scalar>::infinity();
                int best_c = 0;
                for (int c = 0; c < k; ++c) {
                    Scalar d = (pts.row(i) - centers.row(c)).squaredNorm();
                    if (d < best_d) { // strict: ties keep the lowest index
                        best_d = d;
                        best_c = c;
                    }
                }
                if (out[i] != best_c) changed = true;
                out[i] = best_c;
                sse += best_d;
            }
            trace.push_back(sse);
            return changed;
        };

        (void)assign(labels);
        for (int iter = 0; iter < max_iter; ++iter) {
            // Update step: means of each cluster.
            Matrix sums = Matrix::Zero(k, pts.cols());
            Eigen::VectorXi counts = Eigen::VectorXi::Zero(k);
            for (Eigen::Index i = 0; i < n; ++i) {
                sums.row(labels[i]) += pts.row(i);
                ++counts[labels[i]];
            }
            for (int c = 0; c < k; ++c)
                if (counts[c] > 0) centers.row(c) = sums.row(c) / Scalar(counts[c]);
            // Reseed empty clusters at the point farthest from its
            // centroid; a point steals at most one cluster per pass.
            std::vector<bool> stolen(static_cast<std::size_t>(n), false);
            for (int c = 0; c < k; ++c) {
                if (counts[c] > 0) continue;
                Eigen::Index farthest = -1;
                Scalar far_d = Scalar(-1);
                for (Eigen::Index i = 0; i < n; ++i) {
                    if (stolen[static_cast<std::size_t>(i)]) continue;
                    Scalar d = (pts.row(i) - centers.row(labels[i])).squaredNorm();
                    if (d > far_d) {
                        far_d = d;
                        farthest = i;
                    }
                }
                if (farthest < 0) break;
                stolen[static_cast<std::size_t>(farthest)] = true;
                centers.row(c) = pts.row(farthest);
            }

            Scalar prev = trace.back();
            bool changed = assign(labels);
            if (!changed) break;
            Scalar cur = trace.back();
            if (prev > Scalar(0) && (prev - cur) / prev < tol) break;
        }

        Scalar sse = trace.back();
        if (sse < best.sse) {
            best.labels = labels;
            best.centroids = centers;
            best.sse = sse;
            best.sse_trace = std::move(trace);
            best.best_restart = restart;
        }
    }

    best.empty_clusters.clear();
    std::vector<bool> present(static_cast<std::size_t>(k), false);
    for (Eigen::Index i = 0; i < n; ++i)
        present[static_cast<std::size_t>(best.labels[i])] = true;
    for (int c = 0; c < k; ++c)
        if (!present[static_cast<std::size_t>(c)]) best.empty_clusters.push_back(c);
    return best;
}

} // namespace sociominer::cluster
