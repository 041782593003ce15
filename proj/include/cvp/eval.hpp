#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvp/affect.hpp"
#include "cvp/concept.hpp"
#include "cvp/corpus.hpp"
#include "cvp/labeling.hpp"

namespace cvp {

// Spearman's rho: Pearson correlation of average ranks.
// Throws DataError on length mismatch, n < 2 or non-finite input;
// DegenerateError when either input is constant.
double spearman(std::span<const double> x, std::span<const double> y);

struct Correlation {
    double rho;
    std::size_t n;
};

// Spearman between a score series and the corpus's human ratings, over the
// records that have both a score and a rating (in corpus order).
Correlation correlate_with_ratings(const ScoreSeries& scores, const EmbeddingCorpus& corpus,
                                   AffectDimension dimension);

struct TransferCell {
    std::optional<double> rho;  // empty when the cell failed
    std::size_t n = 0;
    std::string error;
};

// Rows are test corpora, columns are train corpora.
struct TransferReport {
    AffectDimension dimension;
    std::vector<std::string> train_corpora;
    std::vector<std::string> test_corpora;
    std::vector<TransferCell> cells;  // row-major, test x train

    const TransferCell& at(std::size_t test, std::size_t train) const {
        return cells[test * train_corpora.size() + train];
    }
};

// Fits the negative->positive vector on each train corpus and correlates its
// projection of every test corpus with that corpus's ratings. Failures of a
// cell are recorded in the cell, tagged with the (train, test) pair.
// Throws DataError for an empty list, duplicate names or mixed dimensionality.
TransferReport transfer_matrix(std::span<const EmbeddingCorpus> corpora, AffectDimension dimension,
                               PolarityCache* cache = nullptr);

// Negative->positive vector fitted on `train`, as used by transfer_matrix.
ConceptVector fit_polarity_axis(const EmbeddingCorpus& train, AffectDimension dimension,
                                PolarityCache* cache = nullptr);

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double pearson_r = 0.0;
    std::size_t n = 0;
    bool degenerate = false;  // y constant: pearson_r reported as 0
};

// Ordinary least squares y = slope * x + intercept.
// Throws DataError on length mismatch, n < 2 or non-finite input;
// DegenerateError when x is constant.
RegressionFit ols_fit(std::span<const double> x, std::span<const double> y);

struct ValenceArousalReport {
    RegressionFit raw;       // arousal on valence
    RegressionFit absolute;  // arousal on |valence|
};

// Regresses arousal on valence and on |valence| over the ids present in
// both series. The valence series must be z-score normalized so that its
// absolute value is the distance from the mean; the arousal series may be
// in either state and sets the units of the slopes.
ValenceArousalReport abs_valence_arousal_report(const EmbeddingCorpus& corpus, const ScoreSeries& valence_scores,
                                                const ScoreSeries& arousal_scores);

}  // namespace cvp
