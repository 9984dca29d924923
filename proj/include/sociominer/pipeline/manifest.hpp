#pragma once

#include <map>
#include <string>
#include <vector>

namespace sociominer::pipeline {

inline constexpr const char* kToolVersion = "0.1.0";

struct StageRecord {
    std::map<std::string, std::string> inputs;  // path -> digest
    std::map<std::string, std::string> outputs; // path -> digest
    std::string status; // "ok" | "failed"
    std::string error;
};

// Deterministic run metadata: digests, config snapshot, warnings and
// the assumption log. Timestamps live in the separate run log so two
// identical runs produce byte-identical manifests.
struct Manifest {
    std::string tool_version = kToolVersion;
    std::string config_digest;
    std::string config_snapshot; // config file bytes
    std::map<std::string, StageRecord> stages;
    std::map<std::string, std::vector<std::string>> warnings; // per stage
    std::vector<std::string> assumptions;

    std::string to_json() const;
    static Manifest from_json(const std::string& text);
};

// Wall-clock side channel: stage timings and ran/skipped status.
struct RunLogEntry {
    std::string stage;
    std::string action; // "ran" | "skipped" | "failed"
    std::string started_at;
    std::string finished_at;
    long long duration_ms = 0;
};

std::string runlog_to_json(const std::vector<RunLogEntry>& entries);
std::vector<RunLogEntry> runlog_from_json(const std::string& text);

} // namespace sociominer::pipeline
