#include "sociominer/pipeline/config.hpp"

#include "sociominer/common.hpp"
#include "sociominer/traits/taxonomy.hpp"

#include <json.hpp>

#include <cstdlib>

namespace sociominer::pipeline {

using nlohmann::json;

RunConfig load_config(const std::string& path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return parse_config(text);
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("not valid JSON: ") + e.what());
    }

    RunConfig cfg;
    cfg.raw_json = text;
    cfg.config_digest = fnv1a64_hex(text);

    cfg.date_range.start = *parse_iso8601("2003-01-01");
    cfg.date_range.end = *parse_iso8601("2015-01-01");

    try {
        if (j.contains("workspace")) cfg.workspace = j["workspace"].get<std::string>();
        if (const char* env = std::getenv("SOCIOMINER_WORKSPACE"); env && *env)
            cfg.workspace = env;
        if (cfg.workspace.empty()) throw ConfigError("workspace is required");

        if (j.contains("date_range")) {
            const auto& dr = j["date_range"];
            auto start = parse_iso8601(dr.at("start").get<std::string>());
            auto end = parse_iso8601(dr.at("end").get<std::string>());
            if (!start || !end) throw ConfigError("date_range bounds must be ISO-8601");
            if (!(*start < *end)) throw ConfigError("date_range start must precede end");
            cfg.date_range = {*start, *end};
        }

        if (j.contains("k_technical")) cfg.k_technical = j["k_technical"].get<int>();
        if (j.contains("k_personality"))
            cfg.k_personality = j["k_personality"].get<int>();
        if (cfg.k_technical < 1 || cfg.k_personality < 1)
            throw ConfigError("k values must be >= 1");

        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("restarts")) cfg.restarts = j["restarts"].get<int>();
        if (cfg.restarts < 1) throw ConfigError("restarts must be >= 1");

        if (j.contains("thresholds")) {
            const auto& t = j["thresholds"];
            if (t.contains("participation"))
                cfg.thresholds.participation = t["participation"].get<double>();
            if (t.contains("min_words"))
                cfg.thresholds.min_words = t["min_words"].get<std::size_t>();
            if (t.contains("min_messages"))
                cfg.thresholds.min_messages = t["min_messages"].get<int>();
            if (cfg.thresholds.participation <= 0.0 || cfg.thresholds.min_words == 0 ||
                cfg.thresholds.min_messages <= 0)
                throw ConfigError("thresholds must be positive");
        }

        if (j.contains("scorer")) {
            const auto& s = j["scorer"];
            std::string mode = s.value("mode", "lexicon");
            if (mode == "lexicon") {
                cfg.scorer.mode = ScorerMode::lexicon;
            } else if (mode == "remote") {
                cfg.scorer.mode = ScorerMode::remote;
            } else {
                throw ConfigError("scorer.mode must be lexicon or remote");
            }
            if (s.contains("endpoint")) cfg.scorer.endpoint = s["endpoint"].get<std::string>();
            if (s.contains("lexicon_path"))
                cfg.scorer.lexicon_path = s["lexicon_path"].get<std::string>();
            if (s.contains("timeout_seconds"))
                cfg.scorer.timeout_seconds = s["timeout_seconds"].get<double>();
            if (s.contains("concurrency"))
                cfg.scorer.concurrency = s["concurrency"].get<unsigned>();
        }
        if (cfg.scorer.mode == ScorerMode::remote && cfg.scorer.endpoint.empty())
            throw ConfigError("scorer.endpoint is required in remote mode");
        if (cfg.scorer.mode == ScorerMode::lexicon && cfg.scorer.lexicon_path.empty())
            throw ConfigError("scorer.lexicon_path is required in lexicon mode");

        if (j.contains("component_map")) {
            cfg.component_map =
                ingest::component_map_from_json(j["component_map"].dump());
        }

        if (j.contains("touch_granularity")) {
            std::string g = j["touch_granularity"].get<std::string>();
            if (g == "file") {
                cfg.touch_granularity = TouchGranularity::file;
            } else if (g == "directory") {
                cfg.touch_granularity = TouchGranularity::directory;
            } else {
                throw ConfigError("touch_granularity must be file or directory");
            }
        }
        if (j.contains("threshold_mode")) {
            std::string m = j["threshold_mode"].get<std::string>();
            if (m == "per_list") {
                cfg.threshold_mode = graph::ThresholdMode::per_list;
            } else if (m == "total") {
                cfg.threshold_mode = graph::ThresholdMode::total;
            } else {
                throw ConfigError("threshold_mode must be per_list or total");
            }
        }

        if (j.contains("inputs")) {
            const auto& in = j["inputs"];
            if (in.contains("git_log")) cfg.inputs.git_log = in["git_log"].get<std::string>();
            if (in.contains("mbox_dir")) cfg.inputs.mbox_dir = in["mbox_dir"].get<std::string>();
            if (in.contains("overrides"))
                cfg.inputs.overrides = in["overrides"].get<std::string>();
        }

        if (j.contains("radar_traits")) {
            for (const auto& key : j["radar_traits"]) {
                std::string k = key.get<std::string>();
                if (!traits::trait_index(k))
                    throw ConfigError("radar_traits: unknown trait key " + k);
                cfg.radar_traits.push_back(k);
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad field: ") + e.what());
    }
    return cfg;
}

} // namespace sociominer::pipeline
