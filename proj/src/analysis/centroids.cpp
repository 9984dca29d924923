#include "sociominer/analysis/centroids.hpp"

#include "sociominer/common.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sociominer::analysis {

bool ClusterTraitTable::cluster_present(int c) const {
    for (int e : empty_clusters)
        if (e == c) return false;
    return true;
}

ClusterTraitTable trait_centroids(const std::vector<traits::TraitVector>& traits_in,
                                  const cluster::ClusterAssignment& assignment) {
    std::map<std::string, const traits::TraitVector*> by_id;
    for (const auto& tv : traits_in) by_id[tv.identity_id] = &tv;

    ClusterTraitTable table;
    table.k = assignment.k;
    const Eigen::Index rows = static_cast<Eigen::Index>(traits::kTraitCount);
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(rows, assignment.k);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(assignment.k);

    for (const auto& [id, label] : assignment.labels) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            table.excluded_ids.push_back(id);
            continue;
        }
        sums.col(label) += it->second->values;
        ++counts[label];
    }

    table.values.resize(rows, assignment.k);
    for (int c = 0; c < assignment.k; ++c) {
        if (counts[c] == 0) {
            table.empty_clusters.push_back(c);
            table.values.col(c).setConstant(std::numeric_limits<double>::quiet_NaN());
        } else {
            table.values.col(c) = sums.col(c) / static_cast<double>(counts[c]);
        }
    }
    return table;
}

ClusterTraitTable centroids_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("centroids csv: missing header");
    int k = -1;
    for (char c : line) k += c == ',';
    ++k;
    if (k < 0) throw std::runtime_error("centroids csv: bad header");

    ClusterTraitTable table;
    table.k = k;
    table.values.resize(static_cast<Eigen::Index>(traits::kTraitCount), k);
    table.values.setConstant(std::numeric_limits<double>::quiet_NaN());

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');
        auto idx = traits::trait_index(field);
        if (!idx) throw std::runtime_error("centroids csv: unknown trait " + field);
        for (int c = 0; c < k; ++c) {
            if (!std::getline(row, field, ',')) field.clear();
            if (!field.empty())
                table.values(static_cast<Eigen::Index>(*idx), c) = std::stod(field);
        }
    }
    for (int c = 0; c < k; ++c)
        if (std::isnan(table.values(0, c))) table.empty_clusters.push_back(c);
    return table;
}

std::string centroids_to_csv(const ClusterTraitTable& table) {
    std::string out = "trait";
    for (int c = 0; c < table.k; ++c) out += ",cluster_" + std::to_string(c);
    out += '\n';
    for (std::size_t t = 0; t < traits::kTraitCount; ++t) {
        out += traits::trait_at(t).key;
        for (int c = 0; c < table.k; ++c) {
            double v = table.values(static_cast<Eigen::Index>(t), c);
            out += ',';
            if (!std::isnan(v)) out += format_fixed(v);
        }
        out += '\n';
    }
    return out;
}

} // namespace sociominer::analysis
