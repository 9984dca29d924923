#pragma once

#include "sociominer/identity/resolver.hpp"
#include "sociominer/ingest/records.hpp"

#include <vector>

namespace sociominer::traits {

inline constexpr std::size_t kDefaultMinWords = 3500;

struct AuthorCorpus {
    std::string identity_id;
    std::string text; // cleaned bodies, concatenated in timestamp order
    std::size_t word_count = 0;
    std::size_t message_count = 0;
    bool eligible = false; // word_count >= min_words
};

// One corpus per identity that sent at least one message. Messages are
// concatenated in (timestamp, message_id) order with single newline
// separators. Ineligibility is a flag, never a silent drop. Senders
// that do not resolve to an identity are reported in `unresolved`.
struct CorpusBuildResult {
    std::vector<AuthorCorpus> corpora; // sorted by identity_id
    std::vector<std::string> unresolved_senders;
};

CorpusBuildResult build_author_corpus(const std::vector<ingest::EmailMessage>& messages,
                                      const identity::IdentityMap& map,
                                      std::size_t min_words = kDefaultMinWords);

// identity_id,word_count,message_count,eligible
std::string corpus_stats_to_csv(const std::vector<AuthorCorpus>& corpora);

} // namespace sociominer::traits
