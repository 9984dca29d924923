#pragma once

#include "sociominer/cluster/kmeans.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sociominer::cluster {

struct CurveTooShort : std::runtime_error {
    CurveTooShort() : std::runtime_error("SSE curve needs at least 3 points") {}
};

// (k, sse) pairs, k ascending and consecutive.
using SSECurve = std::vector<std::pair<int, double>>;

enum class SweepMode {
    raw_kmeans,         // k-means on the data rows as given
    spectral_embedding, // rebuild the k-dim spectral embedding per k
};

// SSE of the k-means stage for each k in [k_min, k_max]. In
// spectral_embedding mode `data` is an affinity matrix.
SSECurve sse_sweep(const Eigen::MatrixXd& data, int k_min, int k_max,
                   SweepMode mode, std::uint64_t seed, int restarts = 10);

// Knee heuristic: the k whose curve point lies farthest (perpendicular
// distance) from the chord between the first and last points; ties and
// a collinear curve resolve to the smallest k. Advisory only.
int suggest_knee(const SSECurve& curve);

// k,sse
std::string sse_curve_to_csv(const SSECurve& curve);

} // namespace sociominer::cluster
