#include "sociominer/cluster/assignment.hpp"

#include <json.hpp>

namespace sociominer::cluster {

using nlohmann::json;

std::vector<std::string> ClusterAssignment::members_of(int cluster) const {
    std::vector<std::string> out;
    for (const auto& [id, label] : labels)
        if (label == cluster) out.push_back(id);
    return out;
}

std::string ClusterAssignment::to_json() const {
    json j;
    j["algorithm"] = algorithm;
    j["k"] = k;
    j["seed"] = seed;
    j["restarts"] = restarts;
    j["labels"] = json::object();
    for (const auto& [id, label] : labels) j["labels"][id] = label;
    return j.dump(2) + "\n";
}

ClusterAssignment ClusterAssignment::from_json(const std::string& text) {
    json j = json::parse(text);
    ClusterAssignment a;
    a.algorithm = j.at("algorithm").get<std::string>();
    a.k = j.at("k").get<int>();
    a.seed = j.at("seed").get<std::uint64_t>();
    a.restarts = j.at("restarts").get<int>();
    for (const auto& [id, label] : j.at("labels").items())
        a.labels[id] = label.get<int>();
    return a;
}

} // namespace sociominer::cluster
