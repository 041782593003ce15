#include "cvp/labeling.hpp"

#include <algorithm>

#include "cvp/error.hpp"
#include "cvp/stats.hpp"

namespace cvp {

LabeledView::LabeledView(std::string corpus_ref, std::size_t corpus_size, AffectDimension dimension,
                         std::vector<LabeledRecord> entries, double mu, double sigma)
    : corpus_ref_(std::move(corpus_ref)),
      corpus_size_(corpus_size),
      dimension_(dimension),
      entries_(std::move(entries)),
      by_index_(corpus_size),
      mu_(mu),
      sigma_(sigma) {
    for (const auto& e : entries_) {
        if (e.index >= corpus_size_)
            throw DataError("labeled record index " + std::to_string(e.index) + " outside corpus of size " +
                            std::to_string(corpus_size_));
        if (by_index_[e.index]) throw DataError("record " + std::to_string(e.index) + " labeled twice");
        by_index_[e.index] = e.label;
    }
}

std::size_t LabeledView::count(PolarityLabel l) const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [l](const LabeledRecord& e) { return e.label == l; }));
}

std::optional<PolarityLabel> LabeledView::label_of(std::size_t corpus_index) const {
    if (corpus_index >= by_index_.size()) return std::nullopt;
    return by_index_[corpus_index];
}

bool LabeledView::matches(const EmbeddingCorpus& corpus) const {
    return corpus.name() == corpus_ref_ && corpus.size() == corpus_size_;
}

LabeledView assign_polarity(const EmbeddingCorpus& corpus, AffectDimension dimension) {
    std::vector<std::size_t> idx;
    std::vector<double> values;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (auto v = corpus[i].rating(dimension)) {
            idx.push_back(i);
            values.push_back(*v);
        }
    }
    if (values.empty())
        throw DataError("corpus '" + corpus.name() + "' has no ratings for dimension '" +
                        std::string(to_string(dimension)) + "'");
    if (values.size() < 2)
        throw DataError("corpus '" + corpus.name() + "' has fewer than 2 records rated for dimension '" +
                        std::string(to_string(dimension)) + "'");

    const bool constant =
        std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); });
    const double mu = constant ? values.front() : stats::mean(values);
    const double sigma = constant ? 0.0 : stats::population_stddev(values);

    std::vector<LabeledRecord> entries;
    entries.reserve(values.size());
    const double upper = mu + sigma;
    const double lower = mu - sigma;
    for (std::size_t k = 0; k < values.size(); ++k) {
        PolarityLabel label = PolarityLabel::neutral;
        if (sigma > 0.0) {
            if (values[k] >= upper)
                label = PolarityLabel::positive;
            else if (values[k] <= lower)
                label = PolarityLabel::negative;
        }
        entries.push_back({idx[k], values[k], label});
    }
    return LabeledView(corpus.name(), corpus.size(), dimension, std::move(entries), mu, sigma);
}

std::shared_ptr<const LabeledView> PolarityCache::get(const EmbeddingCorpus& corpus, AffectDimension dimension) {
    const auto key = std::make_pair(&corpus, dimension);
    {
        std::lock_guard lock(mutex_);
        if (auto it = views_.find(key); it != views_.end()) return it->second;
    }
    auto view = std::make_shared<const LabeledView>(assign_polarity(corpus, dimension));
    std::lock_guard lock(mutex_);
    return views_.emplace(key, std::move(view)).first->second;
}

}  // namespace cvp
