#include "sociominer/cluster/spectral.hpp"

namespace sociominer::cluster {

ClusterAssignment spectral_cluster(const Eigen::MatrixXd& affinity,
                                   const std::vector<std::string>& ids, int k,
                                   std::uint64_t seed, int restarts) {
    if (static_cast<std::size_t>(affinity.rows()) != ids.size())
        throw std::invalid_argument("affinity rows and ids disagree");
    KMeansResult<double> result = spectral_kmeans<double>(affinity, k, seed, restarts, ids);

    ClusterAssignment assignment;
    assignment.algorithm = "spectral";
    assignment.k = k;
    assignment.seed = seed;
    assignment.restarts = restarts;
    for (std::size_t i = 0; i < ids.size(); ++i)
        assignment.labels[ids[i]] = result.labels[static_cast<Eigen::Index>(i)];
    return assignment;
}

} // namespace sociominer::cluster
