#pragma once

#include "sociominer/cluster/assignment.hpp"
#include "sociominer/identity/resolver.hpp"
#include "sociominer/ingest/records.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sociominer::graph {

enum class ThresholdMode {
    per_list, // included iff some list received more than min_messages
    total,    // included iff the total across lists exceeds min_messages
};

struct CommitterNode {
    std::optional<int> personality_cluster;
    std::optional<int> technical_cluster;
    int total_messages = 0; // equals the sum of the node's edge weights
};

// Bipartite committer <-> mailing-list graph; edge weight = message
// count. Included committers keep all their positive-weight edges.
struct CommGraph {
    std::map<std::string, CommitterNode> committers;        // by identity id
    std::set<std::string> lists;                            // list names
    std::map<std::pair<std::string, std::string>, int> edges; // (id, list) -> weight

    std::size_t node_count() const { return committers.size() + lists.size(); }
};

struct CommGraphBuild {
    CommGraph graph;
    std::vector<std::string> unresolved_senders;
    std::size_t excluded_committers = 0; // senders below the threshold
};

// The inclusion rule is strict ("more than" min_messages).
CommGraphBuild build_comm_graph(const std::vector<ingest::EmailMessage>& messages,
                                const identity::IdentityMap& map,
                                const cluster::ClusterAssignment* personality = nullptr,
                                const cluster::ClusterAssignment* technical = nullptr,
                                int min_messages = 10,
                                ThresholdMode mode = ThresholdMode::per_list);

// GraphML 1.0, nodes sorted by id and edges by (source, target) so the
// output is byte-stable. Node keys: type, personality_cluster,
// technical_cluster, total_messages; edge key: weight.
std::string export_graphml(const CommGraph& g);

// Undirected DOT graph. Edge penwidth = 1 + 4 * weight / max_weight;
// committer fill color indexed by personality cluster from a fixed
// palette; list nodes use shape=box.
std::string export_dot(const CommGraph& g);

} // namespace sociominer::graph
