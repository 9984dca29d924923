#pragma once

#include "sociominer/cluster/assignment.hpp"
#include "sociominer/cluster/touch_matrix.hpp"
#include "sociominer/ingest/records.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace sociominer::analysis {

// Rows = technical clusters, columns = components. A cell is the mean,
// over cluster members, of the member's per-component touch fraction
// (each member's fractions sum to 1 before averaging). The mask
// threshold is metadata; raw values stay auditable and masking happens
// at render time only.
struct ParticipationTable {
    std::vector<std::string> components; // sorted
    Eigen::MatrixXd values;              // k x components, NaN for empty clusters
    int k = 0;
    double threshold = 0.07;
    std::vector<int> empty_clusters;
};

// Same axes, cell = number of cluster members with >= 1 touch in the
// component.
struct CrossTab {
    std::vector<std::string> components;
    Eigen::MatrixXi counts; // k x components
    int k = 0;
};

ParticipationTable participation_table(const cluster::TouchMatrix& m,
                                       const cluster::ClusterAssignment& assignment,
                                       const ingest::ComponentMap& map,
                                       double threshold = 0.07);

CrossTab committer_component_counts(const cluster::TouchMatrix& m,
                                    const cluster::ClusterAssignment& assignment,
                                    const ingest::ComponentMap& map);

// cluster,<component columns>; raw values, 6 decimal places.
std::string participation_to_csv(const ParticipationTable& table);
ParticipationTable participation_from_csv(const std::string& text,
                                          double threshold);
// Rendered view: cells below the threshold print "*".
std::string participation_to_csv_masked(const ParticipationTable& table);
std::string crosstab_to_csv(const CrossTab& table);

} // namespace sociominer::analysis
