#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sociominer::cluster {

struct ClusterAssignment {
    std::string algorithm; // "kmeans" | "spectral"
    int k = 0;
    std::uint64_t seed = 0;
    int restarts = 0;
    std::map<std::string, int> labels; // id -> cluster index in [0, k)

    std::vector<std::string> members_of(int cluster) const;

    std::string to_json() const;
    static ClusterAssignment from_json(const std::string& text);
};

} // namespace sociominer::cluster
