#include "sociominer/ingest/records.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace sociominer::ingest {

using nlohmann::json;

std::string attribute_component(const std::string& path, const ComponentMap& map) {
    for (const auto& [prefix, component] : map.prefixes) {
        if (path.rfind(prefix, 0) == 0) return component;
    }
    return map.default_component;
}

namespace {

json commit_to_json(const CommitRecord& c) {
    return json{{"commit_id", c.commit_id},
                {"author_name", c.author_name},
                {"author_email", c.author_email},
                {"timestamp", format_iso8601(c.timestamp)},
                {"files", c.files}};
}

CommitRecord commit_from_json(const json& j) {
    CommitRecord c;
    c.commit_id = j.at("commit_id").get<std::string>();
    c.author_name = j.at("author_name").get<std::string>();
    c.author_email = j.at("author_email").get<std::string>();
    auto t = parse_iso8601(j.at("timestamp").get<std::string>());
    if (!t) throw std::runtime_error("bad timestamp in commit record");
    c.timestamp = *t;
    c.files = j.at("files").get<std::vector<std::string>>();
    return c;
}

json message_to_json(const EmailMessage& m) {
    return json{{"message_id", m.message_id},
                {"list_name", m.list_name},
                {"sender_name", m.sender_name},
                {"sender_email", m.sender_email},
                {"timestamp", format_iso8601(m.timestamp)},
                {"subject", m.subject},
                {"body_raw", m.body_raw},
                {"body_clean", m.body_clean}};
}

EmailMessage message_from_json(const json& j) {
    EmailMessage m;
    m.message_id = j.at("message_id").get<std::string>();
    m.list_name = j.at("list_name").get<std::string>();
    m.sender_name = j.at("sender_name").get<std::string>();
    m.sender_email = j.at("sender_email").get<std::string>();
    auto t = parse_iso8601(j.at("timestamp").get<std::string>());
    if (!t) throw std::runtime_error("bad timestamp in email message");
    m.timestamp = *t;
    m.subject = j.at("subject").get<std::string>();
    m.body_raw = j.at("body_raw").get<std::string>();
    m.body_clean = j.at("body_clean").get<std::string>();
    return m;
}

} // namespace

std::string commits_to_jsonl(const std::vector<CommitRecord>& commits) {
    std::string out;
    for (const auto& c : commits) {
        out += commit_to_json(c).dump();
        out += '\n';
    }
    return out;
}

std::vector<CommitRecord> commits_from_jsonl(const std::string& text) {
    std::vector<CommitRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(commit_from_json(json::parse(line)));
    }
    return out;
}

std::string messages_to_jsonl(const std::vector<EmailMessage>& messages) {
    std::string out;
    for (const auto& m : messages) {
        out += message_to_json(m).dump();
        out += '\n';
    }
    return out;
}

std::vector<EmailMessage> messages_from_jsonl(const std::string& text) {
    std::vector<EmailMessage> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(message_from_json(json::parse(line)));
    }
    return out;
}

ComponentMap component_map_from_json(const std::string& text) {
    json j = json::parse(text);
    ComponentMap map;
    if (j.contains("default_component"))
        map.default_component = j.at("default_component").get<std::string>();
    for (const auto& entry : j.at("prefixes")) {
        std::string prefix = entry.at(0).get<std::string>();
        std::string component = entry.at(1).get<std::string>();
        if (prefix.empty())
            throw std::runtime_error("component map: empty prefix");
        map.prefixes.emplace_back(std::move(prefix), std::move(component));
    }
    return map;
}

} // namespace sociominer::ingest
