#pragma once

#include "sociominer/analysis/centroids.hpp"

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sociominer::analysis {

struct InvalidN : std::runtime_error {
    explicit InvalidN(const std::string& what)
        : std::runtime_error("invalid n: " + what) {}
};

// Base-2 Shannon entropy of a nonnegative vector after normalizing it
// to sum 1; an all-zero vector scores log2(size) (maximally
// uninformative). 0 * log2(0) counts as 0. Invariant under positive
// scaling of the input.
template <typename Derived>
double shannon_entropy(const Eigen::MatrixBase<Derived>& values) {
    const Eigen::Index n = values.size();
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) total += static_cast<double>(values(i));
    if (total <= 0.0) return std::log2(static_cast<double>(n));
    double h = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        double p = static_cast<double>(values(i)) / total;
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h < 0.0 ? 0.0 : h; // normalize -0
}

// All 52 traits sorted ascending by entropy (most discriminative
// first), ties broken by canonical trait order.
struct EntropyRanking {
    std::vector<std::pair<std::string, double>> entries; // (trait key, entropy)
};

EntropyRanking trait_entropy_ranking(const ClusterTraitTable& table);

// Lowest-n slice (ranking order) and highest-n slice (descending).
std::pair<std::vector<std::pair<std::string, double>>,
          std::vector<std::pair<std::string, double>>>
top_bottom(const EntropyRanking& ranking, std::size_t n = 10);

// trait,entropy,rank
std::string entropy_to_csv(const EntropyRanking& ranking);
EntropyRanking entropy_from_csv(const std::string& text);

} // namespace sociominer::analysis
