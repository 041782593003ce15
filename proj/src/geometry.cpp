#include "cvp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvp/error.hpp"
#include "cvp/stats.hpp"
#include "parallel.hpp"

namespace cvp {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void check_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw DataError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
}

std::vector<double> zscore_axis(const std::vector<double>& v, const char* axis) {
    const double m = stats::mean(v);
    const double sd = stats::population_stddev(v);
    if (!(sd > 0.0)) throw DegenerateError(std::string("planar projection: ") + axis + " axis is constant");
    std::vector<double> z(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) z[i] = (v[i] - m) / sd;
    return z;
}

}  // namespace

double cosine(std::span<const double> u, std::span<const double> v) {
    check_same_dim(u.size(), v.size(), "cosine");
    const double nu = norm(u);
    const double nv = norm(v);
    if (!(nu > 0.0) || !(nv > 0.0)) throw DegenerateError("cosine of a zero vector");
    return std::clamp(dot(u, v) / (nu * nv), -1.0, 1.0);
}

CosineMatrix::CosineMatrix(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
    if (values_.size() != labels_.size() * labels_.size())
        throw DataError("cosine matrix values do not match its labels");
}

CosineMatrix cosine_matrix(std::span<const NamedVector> vectors) {
    if (vectors.empty()) throw DataError("cosine matrix needs at least one vector");
    const std::size_t n = vectors.size();
    std::vector<std::string> labels;
    for (const auto& [label, v] : vectors) {
        check_same_dim(v.dim(), vectors.front().second.dim(), "cosine matrix");
        labels.push_back(label);
    }
    std::vector<double> values(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double c = cosine(vectors[i].second.direction(), vectors[j].second.direction());
            values[i * n + j] = c;
            values[j * n + i] = c;
        }
    }
    return CosineMatrix(std::move(labels), std::move(values));
}

CosineMatrix cosine_matrix(const PairwiseVectors& vectors, const std::string& label_prefix) {
    const std::vector<NamedVector> named = {
        {label_prefix + "neg_pos", vectors.neg_pos},
        {label_prefix + "neg_neut", vectors.neg_neut},
        {label_prefix + "neut_pos", vectors.neut_pos},
    };
    return cosine_matrix(named);
}

std::vector<double> Basis2D::neutral_projection() const {
    std::vector<double> p(c_neg.size());
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = c_neg[j] + k * v_np[j];
    return p;
}

Basis2D neutral_component_basis(std::span<const double> c_neg, std::span<const double> c_pos,
                                std::span<const double> c_neu) {
    check_same_dim(c_neg.size(), c_pos.size(), "neutral component basis");
    check_same_dim(c_neg.size(), c_neu.size(), "neutral component basis");
    if (c_neg.empty()) throw DataError("neutral component basis: empty centroids");

    Basis2D b;
    b.c_neg.assign(c_neg.begin(), c_neg.end());
    b.c_pos.assign(c_pos.begin(), c_pos.end());
    b.c_neu.assign(c_neu.begin(), c_neu.end());

    const std::size_t d = c_neg.size();
    b.v_np.resize(d);
    for (std::size_t j = 0; j < d; ++j) b.v_np[j] = c_pos[j] - c_neg[j];
    const double span_len = norm(b.v_np);
    if (!(span_len > 0.0)) throw DegenerateError("neutral component basis: negative and positive centroids coincide");
    for (auto& c : b.v_np) c /= span_len;

    std::vector<double> rel(d);
    for (std::size_t j = 0; j < d; ++j) rel[j] = c_neu[j] - c_neg[j];
    b.k = dot(rel, b.v_np);

    b.v_nc.resize(d);
    for (std::size_t j = 0; j < d; ++j) b.v_nc[j] = c_neu[j] - (c_neg[j] + b.k * b.v_np[j]);
    b.nc_norm = norm(b.v_nc);
    b.collinear = b.nc_norm <= kCollinearTolerance * span_len;
    if (!b.collinear) {
        b.v_nc_hat = b.v_nc;
        for (auto& c : b.v_nc_hat) c /= b.nc_norm;
    }
    return b;
}

Basis2D neutral_component_basis(const EmbeddingCorpus& corpus, const LabeledView& view) {
    using enum PolarityLabel;
    const auto c_neg = class_centroid(corpus, view, negative);
    const auto c_neu = class_centroid(corpus, view, neutral);
    const auto c_pos = class_centroid(corpus, view, positive);
    return neutral_component_basis(c_neg, c_pos, c_neu);
}

std::pair<double, double> planar_coordinates(std::span<const double> embedding, const Basis2D& basis) {
    check_same_dim(embedding.size(), basis.v_np.size(), "planar projection");
    if (basis.collinear) throw DegenerateError("planar projection: basis is collinear (no neutral component)");
    return {dot(embedding, basis.v_np), dot(embedding, basis.v_nc_hat)};
}

PlanarProjection project_to_basis(const EmbeddingCorpus& corpus, const Basis2D& basis, const LabeledView& view) {
    check_same_dim(corpus.dim(), basis.v_np.size(), "planar projection");
    if (basis.collinear) throw DegenerateError("planar projection: basis is collinear (no neutral component)");
    if (!view.matches(corpus))
        throw DataError("labeled view for corpus '" + view.corpus_ref() + "' does not match corpus '" +
                        corpus.name() + "'");
    if (corpus.size() < 2) throw DegenerateError("planar projection needs at least 2 records");

    std::vector<double> xs(corpus.size()), ys(corpus.size());
    detail::parallel_for(
        corpus.size(),
        [&](std::size_t i) {
            xs[i] = cvp::dot(corpus[i].embedding, basis.v_np);
            ys[i] = cvp::dot(corpus[i].embedding, basis.v_nc_hat);
        },
        256);
    const auto zx = zscore_axis(xs, "x");
    const auto zy = zscore_axis(ys, "y");

    PlanarProjection out{corpus.name(), {}};
    out.points.reserve(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i)
        out.points.push_back({corpus[i].id, zx[i], zy[i], view.label_of(i)});
    return out;
}

double silverman_bandwidth(std::span<const double> samples) {
    if (samples.size() < 2) throw DegenerateError("automatic bandwidth needs at least 2 samples");
    const double sd = stats::sample_stddev(samples);
    const double iqr = stats::quantile(samples, 0.75) - stats::quantile(samples, 0.25);
    const double spread = iqr > 0.0 ? std::min(sd, iqr / 1.34) : sd;
    if (!(spread > 0.0)) throw DegenerateError("automatic bandwidth of constant samples");
    return 0.9 * spread * std::pow(static_cast<double>(samples.size()), -0.2);
}

std::vector<double> kde_1d(std::span<const double> samples, std::span<const double> grid,
                           std::optional<double> bandwidth) {
    if (samples.empty()) throw DataError("kde: no samples");
    if (grid.empty()) throw DataError("kde: empty grid");
    if (!stats::all_finite(samples) || !stats::all_finite(grid)) throw DataError("kde: non-finite input");
    const double h = bandwidth ? *bandwidth : silverman_bandwidth(samples);
    if (!(h > 0.0) || !std::isfinite(h)) throw DataError("kde: bandwidth must be positive");

    const double norm_const = 1.0 / (static_cast<double>(samples.size()) * h * std::sqrt(2.0 * std::numbers::pi));
    std::vector<double> density(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        double s = 0.0;
        for (double x : samples) {
            const double u = (grid[g] - x) / h;
            s += std::exp(-0.5 * u * u);
        }
        density[g] = s * norm_const;
    }
    return density;
}

}  // namespace cvp
