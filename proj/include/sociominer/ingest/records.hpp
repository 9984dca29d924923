#pragma once

#include "sociominer/time.hpp"

#include <string>
#include <vector>

namespace sociominer::ingest {

struct CommitRecord {
    std::string commit_id;
    std::string author_name;
    std::string author_email;
    UtcInstant timestamp;
    std::vector<std::string> files;
};

struct EmailMessage {
    std::string message_id;
    std::string list_name;
    std::string sender_name;
    std::string sender_email;
    UtcInstant timestamp;
    std::string subject;
    std::string body_raw;
    std::string body_clean;
};

// Ordered prefix -> component table; first matching prefix wins.
struct ComponentMap {
    std::vector<std::pair<std::string, std::string>> prefixes;
    std::string default_component = "unattributed";
};

// Total: every path maps to exactly one component.
std::string attribute_component(const std::string& path, const ComponentMap& map);

// One JSON object per line, UTF-8, LF.
std::string commits_to_jsonl(const std::vector<CommitRecord>& commits);
std::vector<CommitRecord> commits_from_jsonl(const std::string& text);
std::string messages_to_jsonl(const std::vector<EmailMessage>& messages);
std::vector<EmailMessage> messages_from_jsonl(const std::string& text);

ComponentMap component_map_from_json(const std::string& text);

} // namespace sociominer::ingest
