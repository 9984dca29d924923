#include "sociominer/analysis/entropy.hpp"

#include "sociominer/common.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sociominer::analysis {

EntropyRanking trait_entropy_ranking(const ClusterTraitTable& table) {
    // Only present clusters enter the entropy computation.
    std::vector<int> present;
    for (int c = 0; c < table.k; ++c)
        if (table.cluster_present(c)) present.push_back(c);

    struct Entry {
        std::size_t trait;
        double entropy;
    };
    std::vector<Entry> entries;
    entries.reserve(traits::kTraitCount);
    for (std::size_t t = 0; t < traits::kTraitCount; ++t) {
        Eigen::VectorXd v(static_cast<Eigen::Index>(present.size()));
        for (std::size_t i = 0; i < present.size(); ++i)
            v[static_cast<Eigen::Index>(i)] =
                table.values(static_cast<Eigen::Index>(t), present[i]);
        entries.push_back({t, shannon_entropy(v)});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.entropy != b.entropy) return a.entropy < b.entropy;
        return a.trait < b.trait; // canonical order breaks ties
    });

    EntropyRanking ranking;
    for (const auto& e : entries)
        ranking.entries.emplace_back(std::string(traits::trait_at(e.trait).key),
                                     e.entropy);
    return ranking;
}

std::pair<std::vector<std::pair<std::string, double>>,
          std::vector<std::pair<std::string, double>>>
top_bottom(const EntropyRanking& ranking, std::size_t n) {
    if (n > ranking.entries.size())
        throw InvalidN("n exceeds the number of ranked traits");
    std::vector<std::pair<std::string, double>> lowest(ranking.entries.begin(),
                                                       ranking.entries.begin() +
                                                           static_cast<std::ptrdiff_t>(n));
    std::vector<std::pair<std::string, double>> highest(
        ranking.entries.end() - static_cast<std::ptrdiff_t>(n), ranking.entries.end());
    std::reverse(highest.begin(), highest.end());
    return {std::move(lowest), std::move(highest)};
}

std::string entropy_to_csv(const EntropyRanking& ranking) {
    std::string out = "trait,entropy,rank\n";
    std::size_t rank = 1;
    for (const auto& [key, entropy] : ranking.entries) {
        out += key + "," + format_fixed(entropy) + "," + std::to_string(rank) + "\n";
        ++rank;
    }
    return out;
}

EntropyRanking entropy_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("entropy csv: missing header");
    EntropyRanking ranking;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string key, value;
        std::getline(row, key, ',');
        std::getline(row, value, ',');
        ranking.entries.emplace_back(key, std::stod(value));
    }
    return ranking;
}

} // namespace sociominer::analysis
