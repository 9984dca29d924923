#pragma once

#include "sociominer/cluster/assignment.hpp"
#include "sociominer/traits/lexicon.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace sociominer::analysis {

// 52 traits (canonical order) x clusters; cells are mean trait
// fractions over the cluster's committers. Empty clusters hold NaN and
// are listed in empty_clusters.
struct ClusterTraitTable {
    Eigen::MatrixXd values; // kTraitCount x k
    int k = 0;
    std::vector<int> empty_clusters;
    std::vector<std::string> excluded_ids; // assigned but no trait vector

    bool cluster_present(int c) const;
};

ClusterTraitTable trait_centroids(const std::vector<traits::TraitVector>& traits,
                                  const cluster::ClusterAssignment& assignment);

// trait,cluster_0,...,cluster_<k-1>; empty cells for absent clusters.
std::string centroids_to_csv(const ClusterTraitTable& table);
ClusterTraitTable centroids_from_csv(const std::string& text);

} // namespace sociominer::analysis
