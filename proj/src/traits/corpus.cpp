#include "sociominer/traits/corpus.hpp"

#include "sociominer/common.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sociominer::traits {

CorpusBuildResult build_author_corpus(const std::vector<ingest::EmailMessage>& messages,
                                      const identity::IdentityMap& map,
                                      std::size_t min_words) {
    struct Keyed {
        UtcInstant ts;
        std::string message_id;
        const std::string* body;
    };
    std::map<std::string, std::vector<Keyed>> by_identity;
    std::set<std::string> unresolved;

    for (const auto& m : messages) {
        const identity::Identity* id = map.lookup(m.sender_email);
        if (!id) {
            unresolved.insert(m.sender_email);
            continue;
        }
        by_identity[id->id].push_back({m.timestamp, m.message_id, &m.body_clean});
    }

    CorpusBuildResult result;
    for (auto& [identity_id, items] : by_identity) {
        std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) {
            if (a.ts != b.ts) return a.ts < b.ts;
            return a.message_id < b.message_id;
        });
        AuthorCorpus corpus;
        corpus.identity_id = identity_id;
        corpus.message_count = items.size();
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i > 0) corpus.text += '\n';
            corpus.text += *items[i].body;
        }
        corpus.word_count = count_words(corpus.text);
        corpus.eligible = corpus.word_count >= min_words;
        result.corpora.push_back(std::move(corpus));
    }
    result.unresolved_senders.assign(unresolved.begin(), unresolved.end());
    return result;
}

std::string corpus_stats_to_csv(const std::vector<AuthorCorpus>& corpora) {
    std::string out = "identity_id,word_count,message_count,eligible\n";
    for (const auto& c : corpora) {
        out += c.identity_id + "," + std::to_string(c.word_count) + "," +
               std::to_string(c.message_count) + "," +
               (c.eligible ? "true" : "false") + "\n";
    }
    return out;
}

} // namespace sociominer::traits
