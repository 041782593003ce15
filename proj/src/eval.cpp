#include "cvp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "cvp/error.hpp"
#include "cvp/stats.hpp"
#include "parallel.hpp"

namespace cvp {

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DataError("spearman: inputs differ in length (" + std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()) + ")");
    if (x.size() < 2) throw DataError("spearman: needs at least 2 pairs");
    if (!stats::all_finite(x) || !stats::all_finite(y)) throw DataError("spearman: non-finite input");
    const auto rx = stats::average_ranks(x);
    const auto ry = stats::average_ranks(y);
    return stats::pearson(rx, ry);
}

Correlation correlate_with_ratings(const ScoreSeries& scores, const EmbeddingCorpus& corpus,
                                   AffectDimension dimension) {
    std::vector<double> predicted, human;
    for (const auto& r : corpus.records()) {
        auto rating = r.rating(dimension);
        if (!rating) continue;
        auto score = scores.find(r.id);
        if (!score) continue;
        predicted.push_back(*score);
        human.push_back(*rating);
    }
    if (predicted.size() < 2)
        throw DataError("fewer than 2 records of corpus '" + corpus.name() + "' have both a score and a " +
                        std::string(to_string(dimension)) + " rating");
    return {spearman(predicted, human), predicted.size()};
}

ConceptVector fit_polarity_axis(const EmbeddingCorpus& train, AffectDimension dimension, PolarityCache* cache) {
    if (cache) {
        auto view = cache->get(train, dimension);
        return fit_concept_vector(train, *view, PolarityLabel::positive, PolarityLabel::negative);
    }
    const auto view = assign_polarity(train, dimension);
    return fit_concept_vector(train, view, PolarityLabel::positive, PolarityLabel::negative);
}

TransferReport transfer_matrix(std::span<const EmbeddingCorpus> corpora, AffectDimension dimension,
                               PolarityCache* cache) {
    if (corpora.empty()) throw DataError("transfer matrix needs at least one corpus");
    std::set<std::string> names;
    for (const auto& c : corpora) {
        if (!names.insert(c.name()).second) throw DataError("duplicate corpus name '" + c.name() + "'");
        if (c.dim() != corpora.front().dim())
            throw DataError("corpora differ in embedding dimensionality ('" + corpora.front().name() + "' has " +
                            std::to_string(corpora.front().dim()) + ", '" + c.name() + "' has " +
                            std::to_string(c.dim()) + ")");
    }

    const std::size_t k = corpora.size();
    TransferReport report{dimension, {}, {}, std::vector<TransferCell>(k * k)};
    for (const auto& c : corpora) {
        report.train_corpora.push_back(c.name());
        report.test_corpora.push_back(c.name());
    }

    std::vector<std::optional<ConceptVector>> vectors(k);
    std::vector<std::string> fit_errors(k);
    detail::parallel_for(k, [&](std::size_t t) {
        try {
            vectors[t] = fit_polarity_axis(corpora[t], dimension, cache);
        } catch (const Error& e) {
            fit_errors[t] = e.what();
        }
    });

    // Diagonal cells take the same path as off-diagonal ones.
    detail::parallel_for(k * k, [&](std::size_t cell) {
        const std::size_t test = cell / k;
        const std::size_t train = cell % k;
        TransferCell& out = report.cells[cell];
        const std::string tag = "train '" + corpora[train].name() + "' -> test '" + corpora[test].name() + "': ";
        if (!vectors[train]) {
            out.error = tag + fit_errors[train];
            return;
        }
        try {
            const auto scores = project_scores(corpora[test], *vectors[train]);
            const auto c = correlate_with_ratings(scores, corpora[test], dimension);
            out.rho = c.rho;
            out.n = c.n;
        } catch (const Error& e) {
            out.error = tag + e.what();
        }
    });
    return report;
}

RegressionFit ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw DataError("regression: inputs differ in length (" + std::to_string(x.size()) + " vs " +
                        std::to_string(y.size()) + ")");
    if (x.size() < 2) throw DataError("regression: needs at least 2 points");
    if (!stats::all_finite(x) || !stats::all_finite(y)) throw DataError("regression: non-finite input");

    const double mx = stats::mean(x);
    const double my = stats::mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw DegenerateError("regression: x is constant, slope undefined");

    RegressionFit fit;
    fit.n = x.size();
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.slope = 0.0;
        fit.intercept = y[0];
        fit.degenerate = true;
    } else {
        fit.pearson_r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    }
    return fit;
}

ValenceArousalReport abs_valence_arousal_report(const EmbeddingCorpus& corpus, const ScoreSeries& valence_scores,
                                                const ScoreSeries& arousal_scores) {
    for (const ScoreSeries* s : {&valence_scores, &arousal_scores})
        if (s->corpus_ref() != corpus.name())
            throw DataError("score series '" + s->vector_ref() + "' belongs to corpus '" + s->corpus_ref() +
                            "', not '" + corpus.name() + "'");
    if (!valence_scores.normalized())
        throw DataError("valence series must be z-score normalized before taking absolute values");

    std::vector<double> v, a;
    for (const auto& r : corpus.records()) {
        auto vs = valence_scores.find(r.id);
        auto as = arousal_scores.find(r.id);
        if (!vs || !as) continue;
        v.push_back(*vs);
        a.push_back(*as);
    }
    if (v.empty()) throw DataError("valence and arousal series share no record ids");

    std::vector<double> abs_v(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) abs_v[i] = std::abs(v[i]);
    return {ols_fit(v, a), ols_fit(abs_v, a)};
}

}  // namespace cvp
