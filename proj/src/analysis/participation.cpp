#include "sociominer/analysis/participation.hpp"

#include "sociominer/common.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sociominer::analysis {

namespace {

// Component name per touch-matrix column, plus the sorted component
// universe observed in the matrix.
struct ColumnAttribution {
    std::vector<std::string> components;   // sorted unique
    std::vector<int> component_of_column;  // per matrix column
};

ColumnAttribution attribute_columns(const cluster::TouchMatrix& m,
                                    const ingest::ComponentMap& map) {
    ColumnAttribution out;
    std::set<std::string> seen;
    std::vector<std::string> names(m.col_count());
    for (std::size_t c = 0; c < m.col_count(); ++c) {
        names[c] = ingest::attribute_component(m.col_paths[c], map);
        seen.insert(names[c]);
    }
    out.components.assign(seen.begin(), seen.end());
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < out.components.size(); ++i)
        index[out.components[i]] = static_cast<int>(i);
    out.component_of_column.resize(m.col_count());
    for (std::size_t c = 0; c < m.col_count(); ++c)
        out.component_of_column[c] = index.at(names[c]);
    return out;
}

int label_of(const cluster::ClusterAssignment& assignment, const std::string& id) {
    auto it = assignment.labels.find(id);
    if (it == assignment.labels.end())
        throw std::runtime_error("assignment does not cover matrix row: " + id);
    return it->second;
}

} // namespace

ParticipationTable participation_table(const cluster::TouchMatrix& m,
                                       const cluster::ClusterAssignment& assignment,
                                       const ingest::ComponentMap& map,
                                       double threshold) {
    ColumnAttribution attr = attribute_columns(m, map);
    const int n_comp = static_cast<int>(attr.components.size());

    ParticipationTable table;
    table.components = attr.components;
    table.k = assignment.k;
    table.threshold = threshold;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(assignment.k, n_comp);
    Eigen::VectorXi member_count = Eigen::VectorXi::Zero(assignment.k);

    for (std::size_t r = 0; r < m.row_count(); ++r) {
        const auto& row = m.rows[r];
        Eigen::VectorXd fractions = Eigen::VectorXd::Zero(n_comp);
        for (int col : row)
            fractions[attr.component_of_column[static_cast<std::size_t>(col)]] += 1.0;
        fractions /= static_cast<double>(row.size()); // sums to 1 per committer
        int label = label_of(assignment, m.row_ids[r]);
        sums.row(label) += fractions.transpose();
        ++member_count[label];
    }

    table.values.resize(assignment.k, n_comp);
    for (int c = 0; c < assignment.k; ++c) {
        if (member_count[c] == 0) {
            table.empty_clusters.push_back(c);
            table.values.row(c).setConstant(std::numeric_limits<double>::quiet_NaN());
        } else {
            table.values.row(c) = sums.row(c) / static_cast<double>(member_count[c]);
        }
    }
    return table;
}

CrossTab committer_component_counts(const cluster::TouchMatrix& m,
                                    const cluster::ClusterAssignment& assignment,
                                    const ingest::ComponentMap& map) {
    ColumnAttribution attr = attribute_columns(m, map);
    const int n_comp = static_cast<int>(attr.components.size());

    CrossTab table;
    table.components = attr.components;
    table.k = assignment.k;
    table.counts = Eigen::MatrixXi::Zero(assignment.k, n_comp);

    for (std::size_t r = 0; r < m.row_count(); ++r) {
        std::set<int> touched;
        for (int col : m.rows[r])
            touched.insert(attr.component_of_column[static_cast<std::size_t>(col)]);
        int label = label_of(assignment, m.row_ids[r]);
        for (int comp : touched) ++table.counts(label, comp);
    }
    return table;
}

namespace {

std::string table_csv(const std::vector<std::string>& components, int k,
                      const std::function<std::string(int, int)>& cell) {
    std::string out = "cluster";
    for (const auto& comp : components) out += "," + csv_field(comp);
    out += '\n';
    for (int r = 0; r < k; ++r) {
        out += std::to_string(r);
        for (int c = 0; c < static_cast<int>(components.size()); ++c)
            out += "," + cell(r, c);
        out += '\n';
    }
    return out;
}

} // namespace

std::string participation_to_csv(const ParticipationTable& table) {
    return table_csv(table.components, table.k, [&](int r, int c) {
        double v = table.values(r, c);
        return std::isnan(v) ? std::string() : format_fixed(v);
    });
}

std::string participation_to_csv_masked(const ParticipationTable& table) {
    return table_csv(table.components, table.k, [&](int r, int c) -> std::string {
        double v = table.values(r, c);
        if (std::isnan(v)) return std::string();
        if (v < table.threshold) return "*";
        return format_fixed(v);
    });
}

std::string crosstab_to_csv(const CrossTab& table) {
    return table_csv(table.components, table.k, [&](int r, int c) {
        return std::to_string(table.counts(r, c));
    });
}

ParticipationTable participation_from_csv(const std::string& text,
                                          double threshold) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("participation csv: missing header");
    std::vector<std::string> header = csv_split(line);
    if (header.empty() || header[0] != "cluster")
        throw std::runtime_error("participation csv: bad header");

    ParticipationTable table;
    table.threshold = threshold;
    table.components.assign(header.begin() + 1, header.end());

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = csv_split(line);
        if (fields.size() != header.size())
            throw std::runtime_error("participation csv: ragged row");
        std::vector<double> row;
        for (std::size_t i = 1; i < fields.size(); ++i)
            row.push_back(fields[i].empty()
                              ? std::numeric_limits<double>::quiet_NaN()
                              : std::stod(fields[i]));
        rows.push_back(std::move(row));
    }
    table.k = static_cast<int>(rows.size());
    table.values.resize(table.k, static_cast<Eigen::Index>(table.components.size()));
    for (int r = 0; r < table.k; ++r) {
        bool all_nan = true;
        for (std::size_t c = 0; c < rows[static_cast<std::size_t>(r)].size(); ++c) {
            double v = rows[static_cast<std::size_t>(r)][c];
            table.values(r, static_cast<Eigen::Index>(c)) = v;
            if (!std::isnan(v)) all_nan = false;
        }
        if (all_nan) table.empty_clusters.push_back(r);
    }
    return table;
}

} // namespace sociominer::analysis
