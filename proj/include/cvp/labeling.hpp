#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvp/affect.hpp"
#include "cvp/corpus.hpp"

namespace cvp {

struct LabeledRecord {
    std::size_t index;  // position in the corpus
    double rating;
    PolarityLabel label;
};

// Polarity labels for the records of one corpus that carry a rating on one
// dimension, with the mean and population standard deviation they came from.
class LabeledView {
public:
    LabeledView(std::string corpus_ref, std::size_t corpus_size, AffectDimension dimension,
                std::vector<LabeledRecord> entries, double mu, double sigma);

    const std::string& corpus_ref() const noexcept { return corpus_ref_; }
    std::size_t corpus_size() const noexcept { return corpus_size_; }
    AffectDimension dimension() const noexcept { return dimension_; }
    double mu() const noexcept { return mu_; }
    double sigma() const noexcept { return sigma_; }
    double upper_threshold() const noexcept { return mu_ + sigma_; }
    double lower_threshold() const noexcept { return mu_ - sigma_; }

    std::span<const LabeledRecord> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t count(PolarityLabel l) const;
    std::optional<PolarityLabel> label_of(std::size_t corpus_index) const;

    // True when the view was built over a corpus with this name and size.
    bool matches(const EmbeddingCorpus& corpus) const;

private:
    std::string corpus_ref_;
    std::size_t corpus_size_;
    AffectDimension dimension_;
    std::vector<LabeledRecord> entries_;
    std::vector<std::optional<PolarityLabel>> by_index_;
    double mu_;
    double sigma_;
};

// positive iff v >= mu + sigma, negative iff v <= mu - sigma, else neutral,
// with sigma the population standard deviation over rated records. A
// constant-rated corpus (sigma = 0) is labeled all neutral.
// Throws DataError when fewer than 2 records carry the dimension.
LabeledView assign_polarity(const EmbeddingCorpus& corpus, AffectDimension dimension);

// Computes each (corpus, dimension) view once. Keys on corpus address, so
// cached corpora must outlive the cache and stay at a fixed address.
class PolarityCache {
public:
    std::shared_ptr<const LabeledView> get(const EmbeddingCorpus& corpus, AffectDimension dimension);

private:
    std::mutex mutex_;
    std::map<std::pair<const EmbeddingCorpus*, AffectDimension>, std::shared_ptr<const LabeledView>> views_;
};

}  // namespace cvp
