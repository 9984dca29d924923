#pragma once

#include "sociominer/traits/corpus.hpp"
#include "sociominer/traits/taxonomy.hpp"

#include <Eigen/Core>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sociominer::traits {

enum class TraitSource { lexicon, remote };

struct TraitVector {
    std::string identity_id;
    Eigen::VectorXd values; // 52 fractions in [0,1], canonical order
    TraitSource source = TraitSource::lexicon;
};

struct UnknownTrait : std::runtime_error {
    explicit UnknownTrait(const std::string& key)
        : std::runtime_error("lexicon references unknown trait: " + key) {}
};

struct IneligibleCorpus : std::runtime_error {
    explicit IneligibleCorpus(const std::string& identity_id)
        : std::runtime_error("corpus below the word gate: " + identity_id) {}
};

struct Lexicon {
    // word -> [(trait index, signed weight)]
    std::map<std::string, std::vector<std::pair<std::size_t, double>>> entries;
    Eigen::VectorXd mu;    // 52
    Eigen::VectorXd sigma; // 52, all > 0
};

Lexicon lexicon_from_json(const std::string& text);

// Per trait t: r_t = (sum of weights of matched lowercase tokens) /
// word_count. Tokens are matched after trimming surrounding
// punctuation. Returns the raw r vector.
Eigen::VectorXd raw_lexicon_scores(const AuthorCorpus& corpus, const Lexicon& lex);

// value_t = logistic((r_t - mu_t) / sigma_t). Deterministic; requires
// an eligible corpus.
TraitVector score_traits_lexicon(const AuthorCorpus& corpus, const Lexicon& lex);

// traits.csv: identity_id,<52 canonical trait keys>; 6 decimal places.
std::string trait_vectors_to_csv(const std::vector<TraitVector>& vectors);
std::vector<TraitVector> trait_vectors_from_csv(const std::string& text);

} // namespace sociominer::traits
