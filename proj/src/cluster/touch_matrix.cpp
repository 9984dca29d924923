#include "sociominer/cluster/touch_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sociominer::cluster {

std::vector<std::pair<int, int>> TouchMatrix::triplets() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int c : rows[r]) out.emplace_back(static_cast<int>(r), c);
    return out;
}

TouchBuildResult build_touch_matrix(const std::vector<ingest::CommitRecord>& commits,
                                    const identity::IdentityMap& map) {
    std::map<std::string, std::set<std::string>> touches; // identity id -> paths
    std::set<std::string> unresolved;
    std::set<std::string> seen_ids;

    for (const auto& c : commits) {
        const identity::Identity* id = map.lookup(c.author_email);
        if (!id) {
            unresolved.insert(c.author_email);
            continue;
        }
        seen_ids.insert(id->id);
        for (const auto& f : c.files) touches[id->id].insert(f);
    }

    TouchBuildResult result;
    std::set<std::string> paths;
    for (const auto& [id, files] : touches) paths.insert(files.begin(), files.end());
    result.matrix.col_paths.assign(paths.begin(), paths.end());

    std::map<std::string, int> col_index;
    for (std::size_t i = 0; i < result.matrix.col_paths.size(); ++i)
        col_index[result.matrix.col_paths[i]] = static_cast<int>(i);

    for (const auto& [id, files] : touches) {
        std::vector<int> cols;
        cols.reserve(files.size());
        for (const auto& f : files) cols.push_back(col_index.at(f));
        result.matrix.row_ids.push_back(id);
        result.matrix.rows.push_back(std::move(cols)); // already sorted
    }
    for (const auto& id : seen_ids)
        if (!touches.count(id)) result.excluded_ids.push_back(id);
    result.unresolved_authors.assign(unresolved.begin(), unresolved.end());
    return result;
}

TouchMatrix collapse_to_directories(const TouchMatrix& m) {
    auto dirname = [](const std::string& path) {
        std::size_t slash = path.find_last_of('/');
        return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
    };

    std::set<std::string> dirs;
    for (const auto& p : m.col_paths) dirs.insert(dirname(p));

    TouchMatrix out;
    out.row_ids = m.row_ids;
    out.col_paths.assign(dirs.begin(), dirs.end());
    std::map<std::string, int> dir_index;
    for (std::size_t i = 0; i < out.col_paths.size(); ++i)
        dir_index[out.col_paths[i]] = static_cast<int>(i);

    for (const auto& row : m.rows) {
        std::set<int> cols;
        for (int c : row)
            cols.insert(dir_index.at(dirname(m.col_paths[static_cast<std::size_t>(c)])));
        out.rows.emplace_back(cols.begin(), cols.end());
    }
    return out;
}

Eigen::MatrixXd jaccard_affinity(const TouchMatrix& m) {
    const Eigen::Index n = static_cast<Eigen::Index>(m.row_count());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        a(i, i) = 1.0;
        const auto& ri = m.rows[static_cast<std::size_t>(i)];
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const auto& rj = m.rows[static_cast<std::size_t>(j)];
            std::size_t inter = 0, ai = 0, bj = 0;
            while (ai < ri.size() && bj < rj.size()) {
                if (ri[ai] == rj[bj]) {
                    ++inter;
                    ++ai;
                    ++bj;
                } else if (ri[ai] < rj[bj]) {
                    ++ai;
                } else {
                    ++bj;
                }
            }
            std::size_t uni = ri.size() + rj.size() - inter;
            double v = uni == 0 ? 0.0
                                : static_cast<double>(inter) / static_cast<double>(uni);
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return a;
}

} // namespace sociominer::cluster
