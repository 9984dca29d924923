#pragma once

#include "sociominer/identity/resolver.hpp"
#include "sociominer/ingest/records.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace sociominer::cluster {

// Sparse binary committer x file matrix ("touched or not"), stored as
// per-row sorted column-index sets. Every row has at least one nonzero;
// committers without touches are excluded at build time and reported.
struct TouchMatrix {
    std::vector<std::string> row_ids;   // committer identity ids, sorted
    std::vector<std::string> col_paths; // file paths, sorted
    std::vector<std::vector<int>> rows; // sorted column indices per row

    std::size_t row_count() const { return row_ids.size(); }
    std::size_t col_count() const { return col_paths.size(); }
    std::vector<std::pair<int, int>> triplets() const;
};

struct TouchBuildResult {
    TouchMatrix matrix;
    std::vector<std::string> excluded_ids; // identities with no touches
    std::vector<std::string> unresolved_authors;
};

TouchBuildResult build_touch_matrix(const std::vector<ingest::CommitRecord>& commits,
                                    const identity::IdentityMap& map);

// Collapse columns to parent directories (touch granularity
// "directory"); duplicate touches within a directory merge.
TouchMatrix collapse_to_directories(const TouchMatrix& m);

// A[i][j] = |rows_i n rows_j| / |rows_i u rows_j| over touched-column
// sets; unit diagonal. Symmetric with values in [0,1].
Eigen::MatrixXd jaccard_affinity(const TouchMatrix& m);

} // namespace sociominer::cluster
