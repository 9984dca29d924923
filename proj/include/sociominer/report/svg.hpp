#pragma once

#include "sociominer/analysis/entropy.hpp"

#include <string>
#include <vector>

namespace sociominer::report {

// Stamped into every SVG so an artifact names its own inputs.
struct Provenance {
    std::string backend;       // "lexicon" | "remote"
    std::uint64_t seed = 0;
    std::string config_digest; // hex
};

// Trait rows selected for the heatmap: the n lowest-entropy traits
// followed by the n highest, per the ranking's order.
struct HeatmapData {
    std::vector<std::string> trait_keys; // selected, in display order
    Eigen::MatrixXd values;              // traits x clusters
    int k = 0;
};

HeatmapData select_heatmap_rows(const analysis::ClusterTraitTable& table,
                                const analysis::EntropyRanking& ranking,
                                std::size_t n = 10);

// trait,<cluster columns>
std::string heatmap_to_csv(const HeatmapData& data);

// Rect-grid heatmap with a linear grayscale legend. Always well-formed
// XML; an empty selection renders a "no data" banner.
std::string heatmap_to_svg(const HeatmapData& data, const Provenance& prov);

// One radar polygon over the given trait subset for a single cluster
// column. NaN columns (empty clusters) render the "no data" banner.
std::string radar_to_svg(const std::vector<std::string>& trait_keys,
                         const Eigen::VectorXd& values, int cluster,
                         const Provenance& prov);

std::string radar_to_csv(const std::vector<std::string>& trait_keys,
                         const Eigen::VectorXd& values);

// Default radar trait subset (a documented fixed selection of
// dimensions, facets, needs and values), as taxonomy keys.
const std::vector<std::string>& default_radar_traits();

} // namespace sociominer::report
