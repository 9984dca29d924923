#include "sociominer/traits/remote.hpp"

#include <httplib.h>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace sociominer::traits {

using nlohmann::json;

namespace {

struct ParsedUrl {
    std::string host_port; // "http://host:port"
    std::string path;
};

ParsedUrl parse_endpoint(const std::string& endpoint) {
    const std::string scheme = "http://";
    if (endpoint.rfind(scheme, 0) != 0)
        throw TransportError("endpoint must start with http://: " + endpoint);
    std::size_t path_start = endpoint.find('/', scheme.size());
    if (path_start == std::string::npos)
        return {endpoint, "/"};
    return {endpoint.substr(0, path_start), endpoint.substr(path_start)};
}

} // namespace

TraitVector score_traits_remote(const AuthorCorpus& corpus,
                                const std::string& endpoint,
                                double timeout_seconds) {
    if (!corpus.eligible) throw IneligibleCorpus(corpus.identity_id);

    ParsedUrl url = parse_endpoint(endpoint);
    httplib::Client client(url.host_port);
    auto secs = static_cast<time_t>(timeout_seconds);
    auto usecs = static_cast<time_t>((timeout_seconds - std::floor(timeout_seconds)) * 1e6);
    client.set_connection_timeout(secs, usecs);
    client.set_read_timeout(secs, usecs);
    client.set_write_timeout(secs, usecs);

    json request = {{"text", corpus.text}};
    auto res = client.Post(url.path, request.dump(), "application/json");
    if (!res) throw TransportError(httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300) throw ServiceError(res->status);

    json body;
    try {
        body = json::parse(res->body);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("response is not JSON: ") + e.what());
    }
    if (!body.contains("traits") || !body["traits"].is_object())
        throw SchemaError("response missing \"traits\" object");
    const json& traits = body["traits"];

    TraitVector tv;
    tv.identity_id = corpus.identity_id;
    tv.source = TraitSource::remote;
    tv.values.resize(static_cast<Eigen::Index>(kTraitCount));
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        std::string key(trait_at(i).key);
        if (!traits.contains(key)) throw SchemaError("missing trait key: " + key);
        if (!traits[key].is_number())
            throw SchemaError("trait value is not a number: " + key);
        double v = traits[key].get<double>();
        if (v < 0.0 || v > 1.0)
            throw SchemaError("trait value out of [0,1]: " + key);
        tv.values[static_cast<Eigen::Index>(i)] = v;
    }
    return tv;
}

std::vector<TraitVector> score_corpora_remote(const std::vector<AuthorCorpus>& corpora,
                                              const std::string& endpoint,
                                              double timeout_seconds,
                                              unsigned concurrency) {
    if (concurrency == 0) concurrency = 1;
    std::vector<TraitVector> results(corpora.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= corpora.size()) return;
            try {
                results[i] = score_traits_remote(corpora[i], endpoint, timeout_seconds);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };

    unsigned n_threads =
        std::min<unsigned>(concurrency, static_cast<unsigned>(corpora.size()));
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace sociominer::traits
