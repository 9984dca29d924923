#include "sociominer/traits/taxonomy.hpp"

#include <map>

namespace sociominer::traits {

namespace {

using G = TraitGroup;

constexpr std::array<TraitDescriptor, kTraitCount> kTaxonomy = {{
    // Big Five dimensions
    {"openness", "Openness", G::dimension, ""},
    {"conscientiousness", "Conscientiousness", G::dimension, ""},
    {"extraversion", "Extraversion", G::dimension, ""},
    {"agreeableness", "Agreeableness", G::dimension, ""},
    {"neuroticism", "Neuroticism", G::dimension, ""},
    // Openness facets
    {"adventurousness", "Adventurousness", G::facet, "openness"},
    {"artistic_interests", "Artistic interests", G::facet, "openness"},
    {"emotionality", "Emotionality", G::facet, "openness"},
    {"imagination", "Imagination", G::facet, "openness"},
    {"intellect", "Intellect", G::facet, "openness"},
    {"liberalism", "Liberalism", G::facet, "openness"},
    // Conscientiousness facets
    {"achievement_striving", "Achievement striving", G::facet, "conscientiousness"},
    {"cautiousness", "Cautiousness", G::facet, "conscientiousness"},
    {"dutifulness", "Dutifulness", G::facet, "conscientiousness"},
    {"orderliness", "Orderliness", G::facet, "conscientiousness"},
    {"self_discipline", "Self-discipline", G::facet, "conscientiousness"},
    {"self_efficacy", "Self-efficacy", G::facet, "conscientiousness"},
    // Extraversion facets
    {"activity_level", "Activity level", G::facet, "extraversion"},
    {"assertiveness", "Assertiveness", G::facet, "extraversion"},
    {"cheerfulness", "Cheerfulness", G::facet, "extraversion"},
    {"excitement_seeking", "Excitement-seeking", G::facet, "extraversion"},
    {"friendliness", "Friendliness", G::facet, "extraversion"},
    {"gregariousness", "Gregariousness", G::facet, "extraversion"},
    // Agreeableness facets
    {"altruism", "Altruism", G::facet, "agreeableness"},
    {"cooperation", "Cooperation", G::facet, "agreeableness"},
    {"modesty", "Modesty", G::facet, "agreeableness"},
    {"morality", "Morality", G::facet, "agreeableness"},
    {"sympathy", "Sympathy", G::facet, "agreeableness"},
    {"trust", "Trust", G::facet, "agreeableness"},
    // Neuroticism facets
    {"anger", "Anger", G::facet, "neuroticism"},
    {"anxiety", "Anxiety", G::facet, "neuroticism"},
    {"depression", "Depression", G::facet, "neuroticism"},
    {"immoderation", "Immoderation", G::facet, "neuroticism"},
    {"self_consciousness", "Self-consciousness", G::facet, "neuroticism"},
    {"vulnerability", "Vulnerability", G::facet, "neuroticism"},
    // Needs
    {"challenge", "Challenge", G::need, ""},
    {"closeness", "Closeness", G::need, ""},
    {"curiosity", "Curiosity", G::need, ""},
    {"excitement", "Excitement", G::need, ""},
    {"harmony", "Harmony", G::need, ""},
    {"ideal", "Ideal", G::need, ""},
    {"liberty", "Liberty", G::need, ""},
    {"love", "Love", G::need, ""},
    {"practicality", "Practicality", G::need, ""},
    {"self_expression", "Self-expression", G::need, ""},
    {"stability", "Stability", G::need, ""},
    {"structure", "Structure", G::need, ""},
    // Values
    {"conservation", "Conservation", G::value, ""},
    {"hedonism", "Hedonism", G::value, ""},
    {"openness_to_change", "Openness to change", G::value, ""},
    {"self_enhancement", "Self-enhancement", G::value, ""},
    {"self_transcendence", "Self-transcendence", G::value, ""},
}};

const std::map<std::string_view, std::size_t>& index_map() {
    static const std::map<std::string_view, std::size_t> map = [] {
        std::map<std::string_view, std::size_t> m;
        for (std::size_t i = 0; i < kTraitCount; ++i) m[kTaxonomy[i].key] = i;
        return m;
    }();
    return map;
}

} // namespace

const std::array<TraitDescriptor, kTraitCount>& taxonomy() { return kTaxonomy; }

std::optional<std::size_t> trait_index(std::string_view key) {
    auto it = index_map().find(key);
    if (it == index_map().end()) return std::nullopt;
    return it->second;
}

const TraitDescriptor& trait_at(std::size_t index) { return kTaxonomy.at(index); }

} // namespace sociominer::traits
