#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cvp/affect.hpp"
#include "cvp/corpus.hpp"
#include "cvp/labeling.hpp"

namespace cvp {

// Ordered class pair; the direction points from source toward target.
struct Contrast {
    PolarityLabel source;
    PolarityLabel target;

    friend bool operator==(const Contrast&, const Contrast&) = default;
};

// Short name used in file names and labels, e.g. "neg_pos".
std::string contrast_name(const Contrast& c);

// A fitted unit direction in embedding space with its provenance.
class ConceptVector {
public:
    // Throws DataError unless |direction| = 1 within 1e-9 and both counts >= 1.
    ConceptVector(std::vector<double> direction, std::string source_corpus, AffectDimension dimension,
                  Contrast contrast, std::size_t n_source, std::size_t n_target);

    std::span<const double> direction() const noexcept { return direction_; }
    std::size_t dim() const noexcept { return direction_.size(); }
    const std::string& source_corpus() const noexcept { return source_corpus_; }
    AffectDimension dimension() const noexcept { return dimension_; }
    const Contrast& contrast() const noexcept { return contrast_; }
    std::size_t n_source() const noexcept { return n_source_; }
    std::size_t n_target() const noexcept { return n_target_; }

    // "<corpus>:<dimension>:<source>-><target>"
    std::string provenance() const;

    friend bool operator==(const ConceptVector&, const ConceptVector&) = default;

private:
    std::vector<double> direction_;
    std::string source_corpus_;
    AffectDimension dimension_;
    Contrast contrast_;
    std::size_t n_source_;
    std::size_t n_target_;
};

// Unweighted mean embedding of the records carrying `label` in the view.
// Throws DegenerateError if the class is empty.
std::vector<double> class_centroid(const EmbeddingCorpus& corpus, const LabeledView& view, PolarityLabel label);

// direction = unit(mean(target) - mean(source)).
// Throws DataError if target == source or the view does not belong to the
// corpus; DegenerateError on an empty class or coincident centroids.
ConceptVector fit_concept_vector(const EmbeddingCorpus& corpus, const LabeledView& view,
                                 PolarityLabel target_class, PolarityLabel source_class);

struct PairwiseVectors {
    ConceptVector neg_pos;
    ConceptVector neg_neut;
    ConceptVector neut_pos;
};

PairwiseVectors fit_pairwise_vectors(const EmbeddingCorpus& corpus, const LabeledView& view);

// Per-record scores aligned to corpus order (or to a subset of it).
class ScoreSeries {
public:
    ScoreSeries(std::string corpus_ref, std::string vector_ref, std::vector<std::string> ids,
                std::vector<double> scores, bool normalized);

    const std::string& corpus_ref() const noexcept { return corpus_ref_; }
    const std::string& vector_ref() const noexcept { return vector_ref_; }
    std::span<const std::string> ids() const noexcept { return ids_; }
    std::span<const double> scores() const noexcept { return scores_; }
    std::size_t size() const noexcept { return scores_.size(); }
    bool normalized() const noexcept { return normalized_; }
    std::optional<double> find(std::string_view id) const;

private:
    std::string corpus_ref_;
    std::string vector_ref_;
    std::vector<std::string> ids_;
    std::vector<double> scores_;
    bool normalized_;
    std::unordered_map<std::string, std::size_t> index_;
};

// score(id) = embedding(id) . direction, for every record.
ScoreSeries project_scores(const EmbeddingCorpus& corpus, const ConceptVector& vector);

// (x - mean) / population std. Throws DegenerateError when fewer than 2
// scores or the series is constant.
ScoreSeries zscore(const ScoreSeries& series);

// Human ratings on one dimension as a raw series (rated records only).
ScoreSeries rating_series(const EmbeddingCorpus& corpus, AffectDimension dimension);

// "cvp-vector" JSON file, version 1.
std::string vector_to_json(const ConceptVector& v);
ConceptVector vector_from_json(std::string_view text);
void save_vector(const ConceptVector& v, const std::filesystem::path& path);
ConceptVector load_vector(const std::filesystem::path& path);

double dot(std::span<const float> embedding, std::span<const double> direction);

}  // namespace cvp
