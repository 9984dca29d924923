#include "sociominer/cluster/elbow.hpp"

#include "sociominer/cluster/spectral.hpp"
#include "sociominer/common.hpp"

#include <cmath>

namespace sociominer::cluster {

SSECurve sse_sweep(const Eigen::MatrixXd& data, int k_min, int k_max,
                   SweepMode mode, std::uint64_t seed, int restarts) {
    const Eigen::Index n = data.rows();
    if (k_min < 1 || k_min > k_max || static_cast<Eigen::Index>(k_max) > n)
        throw InvalidK("sweep requires 1 <= k_min <= k_max <= n");

    SSECurve curve;
    curve.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (int k = k_min; k <= k_max; ++k) {
        double sse = 0.0;
        if (mode == SweepMode::raw_kmeans) {
            sse = kmeans<double>(data, k, seed, restarts).sse;
        } else {
            sse = spectral_kmeans<double>(data, k, seed, restarts).sse;
        }
        curve.emplace_back(k, sse);
    }
    return curve;
}

int suggest_knee(const SSECurve& curve) {
    if (curve.size() < 3) throw CurveTooShort();

    const double x0 = curve.front().first, y0 = curve.front().second;
    const double x1 = curve.back().first, y1 = curve.back().second;
    const double dx = x1 - x0, dy = y1 - y0;
    const double chord = std::sqrt(dx * dx + dy * dy);

    int best_k = curve.front().first;
    double best_dist = -1.0;
    for (const auto& [k, sse] : curve) {
        double dist = chord == 0.0
                          ? 0.0
                          : std::abs(dx * (sse - y0) - dy * (k - x0)) / chord;
        if (dist > best_dist) { // strict: ties keep the smallest k
            best_dist = dist;
            best_k = k;
        }
    }
    return best_k;
}

std::string sse_curve_to_csv(const SSECurve& curve) {
    std::string out = "k,sse\n";
    for (const auto& [k, sse] : curve)
        out += std::to_string(k) + "," + format_fixed(sse) + "\n";
    return out;
}

} // namespace sociominer::cluster
