#include "sociominer/pipeline/manifest.hpp"

#include <json.hpp>

namespace sociominer::pipeline {

using nlohmann::json;

std::string Manifest::to_json() const {
    json j;
    j["tool_version"] = tool_version;
    j["config_digest"] = config_digest;
    j["config_snapshot"] = config_snapshot;
    j["stages"] = json::object();
    for (const auto& [name, rec] : stages) {
        json s;
        s["inputs"] = rec.inputs;
        s["outputs"] = rec.outputs;
        s["status"] = rec.status;
        if (!rec.error.empty()) s["error"] = rec.error;
        j["stages"][name] = s;
    }
    j["warnings"] = warnings;
    j["assumptions"] = assumptions;
    return j.dump(2) + "\n";
}

Manifest Manifest::from_json(const std::string& text) {
    json j = json::parse(text);
    Manifest m;
    m.tool_version = j.value("tool_version", "");
    m.config_digest = j.value("config_digest", "");
    m.config_snapshot = j.value("config_snapshot", "");
    if (j.contains("stages")) {
        for (const auto& [name, s] : j["stages"].items()) {
            StageRecord rec;
            if (s.contains("inputs"))
                rec.inputs = s["inputs"].get<std::map<std::string, std::string>>();
            if (s.contains("outputs"))
                rec.outputs = s["outputs"].get<std::map<std::string, std::string>>();
            rec.status = s.value("status", "");
            rec.error = s.value("error", "");
            m.stages[name] = std::move(rec);
        }
    }
    if (j.contains("warnings"))
        m.warnings =
            j["warnings"].get<std::map<std::string, std::vector<std::string>>>();
    if (j.contains("assumptions"))
        m.assumptions = j["assumptions"].get<std::vector<std::string>>();
    return m;
}

std::string runlog_to_json(const std::vector<RunLogEntry>& entries) {
    json j = json::array();
    for (const auto& e : entries) {
        j.push_back({{"stage", e.stage},
                     {"action", e.action},
                     {"started_at", e.started_at},
                     {"finished_at", e.finished_at},
                     {"duration_ms", e.duration_ms}});
    }
    return j.dump(2) + "\n";
}

std::vector<RunLogEntry> runlog_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<RunLogEntry> out;
    for (const auto& e : j) {
        RunLogEntry entry;
        entry.stage = e.at("stage").get<std::string>();
        entry.action = e.at("action").get<std::string>();
        entry.started_at = e.value("started_at", "");
        entry.finished_at = e.value("finished_at", "");
        entry.duration_ms = e.value("duration_ms", 0LL);
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace sociominer::pipeline
