#pragma once

#include "sociominer/traits/lexicon.hpp"

#include <stdexcept>
#include <string>

namespace sociominer::traits {

struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what)
        : std::runtime_error("trait service transport error: " + what) {}
};

struct ServiceError : std::runtime_error {
    int status;
    explicit ServiceError(int status_code)
        : std::runtime_error("trait service returned HTTP " +
                             std::to_string(status_code)),
          status(status_code) {}
};

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what)
        : std::runtime_error("trait service schema error: " + what) {}
};

// POST {"text": ...} to the endpoint; the response must map all 52
// canonical trait keys to fractions in [0,1]:
//   {"traits": {"openness": 0.42, ...}}
// http:// endpoints only.
TraitVector score_traits_remote(const AuthorCorpus& corpus,
                                const std::string& endpoint,
                                double timeout_seconds = 30.0);

// Score many corpora with a bounded worker pool (politeness limit for
// remote endpoints); results come back in input order regardless of
// completion order. Exceptions from workers are rethrown.
std::vector<TraitVector> score_corpora_remote(const std::vector<AuthorCorpus>& corpora,
                                              const std::string& endpoint,
                                              double timeout_seconds,
                                              unsigned concurrency);

} // namespace sociominer::traits
