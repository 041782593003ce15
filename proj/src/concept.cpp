#include "cvp/concept.hpp"

#include <cmath>

#include "cvp/error.hpp"
#include "cvp/stats.hpp"
#include "cvp/text_output.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace cvp {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kUnitTolerance = 1e-9;

std::string_view short_label(PolarityLabel l) {
    switch (l) {
        case PolarityLabel::negative: return "neg";
        case PolarityLabel::neutral: return "neut";
        case PolarityLabel::positive: return "pos";
    }
    return "?";
}

ConceptVector from_centroids(const std::vector<double>& source_centroid, const std::vector<double>& target_centroid,
                             const EmbeddingCorpus& corpus, AffectDimension dimension, Contrast contrast,
                             std::size_t n_source, std::size_t n_target) {
    std::vector<double> diff(source_centroid.size());
    double norm2 = 0.0;
    for (std::size_t j = 0; j < diff.size(); ++j) {
        diff[j] = target_centroid[j] - source_centroid[j];
        norm2 += diff[j] * diff[j];
    }
    const double norm = std::sqrt(norm2);
    if (!(norm > 0.0))
        throw DegenerateError("degenerate contrast " + contrast_name(contrast) + " on corpus '" + corpus.name() +
                              "': class centroids coincide");
    for (auto& c : diff) c /= norm;
    return ConceptVector(std::move(diff), corpus.name(), dimension, contrast, n_source, n_target);
}

void check_view(const EmbeddingCorpus& corpus, const LabeledView& view) {
    if (!view.matches(corpus))
        throw DataError("labeled view for corpus '" + view.corpus_ref() + "' does not match corpus '" +
                        corpus.name() + "'");
}

}  // namespace

std::string contrast_name(const Contrast& c) {
    return std::string(short_label(c.source)) + "_" + std::string(short_label(c.target));
}

ConceptVector::ConceptVector(std::vector<double> direction, std::string source_corpus, AffectDimension dimension,
                             Contrast contrast, std::size_t n_source, std::size_t n_target)
    : direction_(std::move(direction)),
      source_corpus_(std::move(source_corpus)),
      dimension_(dimension),
      contrast_(contrast),
      n_source_(n_source),
      n_target_(n_target) {
    if (direction_.empty()) throw DataError("concept vector has no components");
    if (!stats::all_finite(direction_)) throw DataError("concept vector has non-finite components");
    double norm2 = 0.0;
    for (double c : direction_) norm2 += c * c;
    if (std::abs(std::sqrt(norm2) - 1.0) > kUnitTolerance)
        throw DataError("concept vector direction is not unit length (norm " + format_double(std::sqrt(norm2)) + ")");
    if (n_source_ < 1 || n_target_ < 1) throw DataError("concept vector class counts must be at least 1");
    if (contrast_.source == contrast_.target) throw DataError("concept vector contrast classes must differ");
}

std::string ConceptVector::provenance() const {
    return source_corpus_ + ":" + std::string(to_string(dimension_)) + ":" + std::string(to_string(contrast_.source)) +
           "->" + std::string(to_string(contrast_.target));
}

double dot(std::span<const float> embedding, std::span<const double> direction) {
    double s = 0.0;
    for (std::size_t j = 0; j < direction.size(); ++j) s += static_cast<double>(embedding[j]) * direction[j];
    return s;
}

std::vector<double> class_centroid(const EmbeddingCorpus& corpus, const LabeledView& view, PolarityLabel label) {
    check_view(corpus, view);
    std::vector<double> sum(corpus.dim(), 0.0);
    std::size_t n = 0;
    for (const auto& e : view.entries()) {
        if (e.label != label) continue;
        const auto& emb = corpus[e.index].embedding;
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += emb[j];
        ++n;
    }
    if (n == 0)
        throw DegenerateError("no " + std::string(to_string(label)) + " records in corpus '" + corpus.name() +
                              "' for dimension '" + std::string(to_string(view.dimension())) + "'");
    for (auto& c : sum) c /= static_cast<double>(n);
    return sum;
}

ConceptVector fit_concept_vector(const EmbeddingCorpus& corpus, const LabeledView& view,
                                 PolarityLabel target_class, PolarityLabel source_class) {
    if (target_class == source_class) throw DataError("target and source classes must differ");
    const auto target = class_centroid(corpus, view, target_class);
    const auto source = class_centroid(corpus, view, source_class);
    return from_centroids(source, target, corpus, view.dimension(), {source_class, target_class},
                          view.count(source_class), view.count(target_class));
}

PairwiseVectors fit_pairwise_vectors(const EmbeddingCorpus& corpus, const LabeledView& view) {
    using enum PolarityLabel;
    const auto c_neg = class_centroid(corpus, view, negative);
    const auto c_neu = class_centroid(corpus, view, neutral);
    const auto c_pos = class_centroid(corpus, view, positive);
    const std::size_t n_neg = view.count(negative);
    const std::size_t n_neu = view.count(neutral);
    const std::size_t n_pos = view.count(positive);
    const auto d = view.dimension();
    return {from_centroids(c_neg, c_pos, corpus, d, {negative, positive}, n_neg, n_pos),
            from_centroids(c_neg, c_neu, corpus, d, {negative, neutral}, n_neg, n_neu),
            from_centroids(c_neu, c_pos, corpus, d, {neutral, positive}, n_neu, n_pos)};
}

ScoreSeries::ScoreSeries(std::string corpus_ref, std::string vector_ref, std::vector<std::string> ids,
                         std::vector<double> scores, bool normalized)
    : corpus_ref_(std::move(corpus_ref)),
      vector_ref_(std::move(vector_ref)),
      ids_(std::move(ids)),
      scores_(std::move(scores)),
      normalized_(normalized) {
    if (ids_.size() != scores_.size()) throw DataError("score series ids and scores differ in length");
    index_.reserve(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (!index_.emplace(ids_[i], i).second) throw DataError("score series has duplicate id '" + ids_[i] + "'");
}

std::optional<double> ScoreSeries::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return scores_[it->second];
}

ScoreSeries project_scores(const EmbeddingCorpus& corpus, const ConceptVector& vector) {
    if (corpus.dim() != vector.dim())
        throw DataError("dimensionality mismatch: corpus '" + corpus.name() + "' has dim " +
                        std::to_string(corpus.dim()) + ", vector has dim " + std::to_string(vector.dim()));
    std::vector<std::string> ids(corpus.size());
    std::vector<double> scores(corpus.size());
    detail::parallel_for(
        corpus.size(),
        [&](std::size_t i) {
            ids[i] = corpus[i].id;
            scores[i] = dot(corpus[i].embedding, vector.direction());
        },
        256);
    return ScoreSeries(corpus.name(), vector.provenance(), std::move(ids), std::move(scores), false);
}

ScoreSeries zscore(const ScoreSeries& series) {
    if (series.size() < 2) throw DegenerateError("z-score needs at least 2 scores");
    const auto x = series.scores();
    const double m = stats::mean(x);
    const double sd = stats::population_stddev(x);
    if (!(sd > 0.0)) throw DegenerateError("z-score of a constant series");
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] - m) / sd;
    return ScoreSeries(series.corpus_ref(), series.vector_ref(),
                       std::vector<std::string>(series.ids().begin(), series.ids().end()), std::move(z), true);
}

ScoreSeries rating_series(const EmbeddingCorpus& corpus, AffectDimension dimension) {
    std::vector<std::string> ids;
    std::vector<double> values;
    for (const auto& r : corpus.records()) {
        if (auto v = r.rating(dimension)) {
            ids.push_back(r.id);
            values.push_back(*v);
        }
    }
    return ScoreSeries(corpus.name(), "human:" + std::string(to_string(dimension)), std::move(ids),
                       std::move(values), false);
}

std::string vector_to_json(const ConceptVector& v) {
    ojson j;
    j["format"] = "cvp-vector";
    j["version"] = 1;
    j["dim"] = v.dim();
    j["dimension"] = std::string(to_string(v.dimension()));
    j["contrast"] = {std::string(to_string(v.contrast().source)), std::string(to_string(v.contrast().target))};
    j["source_corpus"] = v.source_corpus();
    j["n_source"] = v.n_source();
    j["n_target"] = v.n_target();
    j["direction"] = std::vector<double>(v.direction().begin(), v.direction().end());
    return j.dump() + "\n";
}

ConceptVector vector_from_json(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::exception& e) {
        throw DataError(std::string("malformed vector file: ") + e.what());
    }
    auto field = [&](const char* key) -> const ojson& {
        auto it = j.find(key);
        if (it == j.end()) throw DataError(std::string("vector file missing field '") + key + "'");
        return *it;
    };
    auto label = [](const ojson& v) {
        auto l = v.is_string() ? parse_polarity(v.get<std::string>()) : std::nullopt;
        if (!l) throw DataError("vector file has an invalid contrast label");
        return *l;
    };
    auto count = [&](const char* key) {
        const ojson& v = field(key);
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw DataError(std::string("vector file field '") + key + "' must be a positive integer");
        return static_cast<std::size_t>(v.get<long long>());
    };

    if (!j.is_object()) throw DataError("vector file must hold a JSON object");
    if (field("format") != "cvp-vector") throw DataError("not a cvp-vector file");
    if (field("version") != 1) throw DataError("unsupported vector file version");
    const ojson& dim = field("dim");
    const ojson& dimension = field("dimension");
    const ojson& contrast = field("contrast");
    const ojson& source_corpus = field("source_corpus");
    const ojson& direction = field("direction");
    if (!dimension.is_string() || !parse_dimension(dimension.get<std::string>()))
        throw DataError("vector file has an invalid dimension");
    if (!contrast.is_array() || contrast.size() != 2) throw DataError("vector file contrast must be a pair");
    if (!source_corpus.is_string()) throw DataError("vector file source_corpus must be a string");
    if (!direction.is_array()) throw DataError("vector file direction must be an array");
    if (!dim.is_number_integer() || dim.get<long long>() != static_cast<long long>(direction.size()))
        throw DataError("vector file dim does not match direction length");

    std::vector<double> comps;
    comps.reserve(direction.size());
    for (const auto& c : direction) {
        if (!c.is_number()) throw DataError("vector file direction components must be numbers");
        comps.push_back(c.get<double>());
    }
    return ConceptVector(std::move(comps), source_corpus.get<std::string>(),
                         *parse_dimension(dimension.get<std::string>()), {label(contrast[0]), label(contrast[1])},
                         count("n_source"), count("n_target"));
}

void save_vector(const ConceptVector& v, const std::filesystem::path& path) {
    write_text_file(path, vector_to_json(v));
}

ConceptVector load_vector(const std::filesystem::path& path) {
    return vector_from_json(read_text_file(path));
}

}  // namespace cvp
