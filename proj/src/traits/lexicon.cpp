#include "sociominer/traits/lexicon.hpp"

#include "sociominer/common.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <sstream>

namespace sociominer::traits {

using nlohmann::json;

Lexicon lexicon_from_json(const std::string& text) {
    json j = json::parse(text);
    Lexicon lex;
    lex.mu = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(kTraitCount));
    lex.sigma = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(kTraitCount), 1.0);

    for (const auto& [key, cal] : j.at("calibration").items()) {
        auto idx = trait_index(key);
        if (!idx) throw UnknownTrait(key);
        double mu = cal.at("mu").get<double>();
        double sigma = cal.at("sigma").get<double>();
        if (sigma <= 0.0)
            throw std::runtime_error("lexicon calibration: sigma must be > 0 for " +
                                     key);
        lex.mu[static_cast<Eigen::Index>(*idx)] = mu;
        lex.sigma[static_cast<Eigen::Index>(*idx)] = sigma;
    }
    for (const auto& [word, weights] : j.at("entries").items()) {
        std::vector<std::pair<std::size_t, double>> ws;
        for (const auto& pair : weights) {
            std::string key = pair.at(0).get<std::string>();
            auto idx = trait_index(key);
            if (!idx) throw UnknownTrait(key);
            ws.emplace_back(*idx, pair.at(1).get<double>());
        }
        lex.entries[to_lower(word)] = std::move(ws);
    }
    return lex;
}

namespace {

// Lowercase and trim surrounding punctuation so "Great!" matches "great".
std::string match_token(const std::string& token) {
    std::size_t b = 0, e = token.size();
    while (b < e && !std::isalnum(static_cast<unsigned char>(token[b]))) ++b;
    while (e > b && !std::isalnum(static_cast<unsigned char>(token[e - 1]))) --e;
    return to_lower(std::string_view(token).substr(b, e - b));
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

} // namespace

Eigen::VectorXd raw_lexicon_scores(const AuthorCorpus& corpus, const Lexicon& lex) {
    Eigen::VectorXd raw = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(kTraitCount));
    if (corpus.word_count == 0) return raw;
    for (const std::string& token : split_words(corpus.text)) {
        auto it = lex.entries.find(match_token(token));
        if (it == lex.entries.end()) continue;
        for (const auto& [idx, weight] : it->second)
            raw[static_cast<Eigen::Index>(idx)] += weight;
    }
    raw /= static_cast<double>(corpus.word_count);
    return raw;
}

TraitVector score_traits_lexicon(const AuthorCorpus& corpus, const Lexicon& lex) {
    if (!corpus.eligible) throw IneligibleCorpus(corpus.identity_id);
    Eigen::VectorXd raw = raw_lexicon_scores(corpus, lex);
    TraitVector tv;
    tv.identity_id = corpus.identity_id;
    tv.source = TraitSource::lexicon;
    tv.values = ((raw - lex.mu).array() / lex.sigma.array())
                    .unaryExpr([](double x) { return logistic(x); })
                    .matrix();
    return tv;
}

std::string trait_vectors_to_csv(const std::vector<TraitVector>& vectors) {
    std::string out = "identity_id";
    for (const auto& t : taxonomy()) {
        out += ',';
        out += t.key;
    }
    out += '\n';
    for (const auto& v : vectors) {
        out += v.identity_id;
        for (Eigen::Index i = 0; i < v.values.size(); ++i)
            out += "," + format_fixed(v.values[i]);
        out += '\n';
    }
    return out;
}

std::vector<TraitVector> trait_vectors_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("traits csv: missing header");
    std::vector<TraitVector> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TraitVector tv;
        tv.values.resize(static_cast<Eigen::Index>(kTraitCount));
        std::istringstream row(line);
        std::string field;
        if (!std::getline(row, field, ','))
            throw std::runtime_error("traits csv: bad row");
        tv.identity_id = field;
        for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(kTraitCount); ++i) {
            if (!std::getline(row, field, ','))
                throw std::runtime_error("traits csv: row with fewer than 53 columns");
            tv.values[i] = std::stod(field);
        }
        out.push_back(std::move(tv));
    }
    return out;
}

} // namespace sociominer::traits
