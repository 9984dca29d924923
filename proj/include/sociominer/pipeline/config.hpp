#pragma once

#include "sociominer/graph/comm_graph.hpp"
#include "sociominer/ingest/records.hpp"
#include "sociominer/time.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sociominer::pipeline {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what)
        : std::runtime_error("config: " + what) {}
};

enum class ScorerMode { lexicon, remote };
enum class TouchGranularity { file, directory };

struct ScorerConfig {
    ScorerMode mode = ScorerMode::lexicon;
    std::string endpoint;     // remote mode
    std::string lexicon_path; // lexicon mode
    double timeout_seconds = 30.0;
    unsigned concurrency = 4;
};

struct Thresholds {
    double participation = 0.07;
    std::size_t min_words = 3500;
    int min_messages = 10;
};

struct InputsConfig {
    std::string git_log;  // plain-text export
    std::string mbox_dir; // *.mbox files; the stem is the list name
    std::string overrides; // optional alias override file
};

struct RunConfig {
    std::string workspace;
    DateRange date_range; // default 2003-01-01 .. 2015-01-01
    int k_technical = 5;
    int k_personality = 3;
    std::uint64_t seed = 42;
    int restarts = 10;
    Thresholds thresholds;
    ScorerConfig scorer;
    ingest::ComponentMap component_map;
    TouchGranularity touch_granularity = TouchGranularity::file;
    graph::ThresholdMode threshold_mode = graph::ThresholdMode::per_list;
    InputsConfig inputs;
    std::vector<std::string> radar_traits; // empty = built-in default

    std::string raw_json;      // config file bytes, for the manifest snapshot
    std::string config_digest; // digest of raw_json
};

// Parses and validates the JSON config file. The SOCIOMINER_WORKSPACE
// environment variable overrides the workspace path when set.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

} // namespace sociominer::pipeline
