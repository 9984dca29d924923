#include "sociominer/graph/comm_graph.hpp"

#include "sociominer/common.hpp"

#include <algorithm>

namespace sociominer::graph {

CommGraphBuild build_comm_graph(const std::vector<ingest::EmailMessage>& messages,
                                const identity::IdentityMap& map,
                                const cluster::ClusterAssignment* personality,
                                const cluster::ClusterAssignment* technical,
                                int min_messages, ThresholdMode mode) {
    std::map<std::string, std::map<std::string, int>> counts; // id -> list -> n
    std::set<std::string> unresolved;
    for (const auto& m : messages) {
        const identity::Identity* id = map.lookup(m.sender_email);
        if (!id) {
            unresolved.insert(m.sender_email);
            continue;
        }
        ++counts[id->id][m.list_name];
    }

    CommGraphBuild build;
    for (const auto& [id, per_list] : counts) {
        int max_count = 0, total = 0;
        for (const auto& [list, n] : per_list) {
            max_count = std::max(max_count, n);
            total += n;
        }
        bool included = mode == ThresholdMode::per_list ? max_count > min_messages
                                                        : total > min_messages;
        if (!included) {
            ++build.excluded_committers;
            continue;
        }
        CommitterNode node;
        node.total_messages = total;
        if (personality) {
            auto it = personality->labels.find(id);
            if (it != personality->labels.end()) node.personality_cluster = it->second;
        }
        if (technical) {
            auto it = technical->labels.find(id);
            if (it != technical->labels.end()) node.technical_cluster = it->second;
        }
        build.graph.committers[id] = node;
        for (const auto& [list, n] : per_list) {
            build.graph.lists.insert(list);
            build.graph.edges[{id, list}] = n;
        }
    }
    build.unresolved_senders.assign(unresolved.begin(), unresolved.end());
    return build;
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Fixed committer palette, indexed by personality cluster.
constexpr const char* kPalette[] = {"#7b3294", "#c2a5cf", "#a6dba0",
                                    "#008837", "#fdae61", "#2c7bb6"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

} // namespace

std::string export_graphml(const CommGraph& g) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d0\" for=\"node\" attr.name=\"type\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d1\" for=\"node\" attr.name=\"personality_cluster\" attr.type=\"int\"/>\n";
    out += "  <key id=\"d2\" for=\"node\" attr.name=\"technical_cluster\" attr.type=\"int\"/>\n";
    out += "  <key id=\"d3\" for=\"node\" attr.name=\"total_messages\" attr.type=\"int\"/>\n";
    out += "  <key id=\"d4\" for=\"edge\" attr.name=\"weight\" attr.type=\"int\"/>\n";
    out += "  <graph id=\"G\" edgedefault=\"undirected\">\n";

    // All nodes sorted by id; committer and list ids share one order.
    struct NodeRef {
        const std::string* id;
        const CommitterNode* committer; // null for list nodes
    };
    std::vector<NodeRef> nodes;
    for (const auto& [id, node] : g.committers) nodes.push_back({&id, &node});
    for (const auto& list : g.lists) nodes.push_back({&list, nullptr});
    std::sort(nodes.begin(), nodes.end(),
              [](const NodeRef& a, const NodeRef& b) { return *a.id < *b.id; });

    for (const auto& n : nodes) {
        out += "    <node id=\"" + xml_escape(*n.id) + "\">\n";
        if (n.committer) {
            out += "      <data key=\"d0\">committer</data>\n";
            if (n.committer->personality_cluster)
                out += "      <data key=\"d1\">" +
                       std::to_string(*n.committer->personality_cluster) + "</data>\n";
            if (n.committer->technical_cluster)
                out += "      <data key=\"d2\">" +
                       std::to_string(*n.committer->technical_cluster) + "</data>\n";
            out += "      <data key=\"d3\">" +
                   std::to_string(n.committer->total_messages) + "</data>\n";
        } else {
            out += "      <data key=\"d0\">list</data>\n";
        }
        out += "    </node>\n";
    }
    // std::map keeps edges sorted by (source, target) already.
    for (const auto& [key, weight] : g.edges) {
        out += "    <edge source=\"" + xml_escape(key.first) + "\" target=\"" +
               xml_escape(key.second) + "\">\n";
        out += "      <data key=\"d4\">" + std::to_string(weight) + "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n</graphml>\n";
    return out;
}

std::string export_dot(const CommGraph& g) {
    int max_weight = 0;
    for (const auto& [key, weight] : g.edges) max_weight = std::max(max_weight, weight);

    std::string out = "graph comm {\n";
    for (const auto& [id, node] : g.committers) {
        std::string color = "#999999";
        if (node.personality_cluster)
            color = kPalette[static_cast<std::size_t>(*node.personality_cluster) %
                             kPaletteSize];
        out += "  " + dot_quote(id) + " [type=committer, style=filled, fillcolor=" +
               dot_quote(color) +
               ", total_messages=" + std::to_string(node.total_messages) + "];\n";
    }
    for (const auto& list : g.lists)
        out += "  " + dot_quote(list) + " [type=list, shape=box];\n";
    for (const auto& [key, weight] : g.edges) {
        double penwidth =
            max_weight == 0 ? 1.0 : 1.0 + 4.0 * weight / static_cast<double>(max_weight);
        out += "  " + dot_quote(key.first) + " -- " + dot_quote(key.second) +
               " [weight=" + std::to_string(weight) +
               ", penwidth=" + format_fixed(penwidth, 2) + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace sociominer::graph
