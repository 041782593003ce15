#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvp/affect.hpp"
#include "cvp/concept.hpp"
#include "cvp/corpus.hpp"
#include "cvp/labeling.hpp"

namespace cvp {

// u.v / (|u||v|), clamped to [-1, 1].
// Throws DataError on dimension mismatch, DegenerateError on a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

class CosineMatrix {
public:
    CosineMatrix(std::vector<std::string> labels, std::vector<double> values);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * labels_.size() + j]; }

private:
    std::vector<std::string> labels_;
    std::vector<double> values_;
};

using NamedVector = std::pair<std::string, ConceptVector>;

CosineMatrix cosine_matrix(std::span<const NamedVector> vectors);

// 3x3 matrix over neg_pos, neg_neut, neut_pos (labels optionally prefixed).
CosineMatrix cosine_matrix(const PairwiseVectors& vectors, const std::string& label_prefix = "");

// Orthogonal pair {negative->positive axis, neutral component}.
//
//   v_np = unit(C_pos - C_neg)
//   k    = (C_neu - C_neg) . v_np
//   proj = C_neg + k v_np
//   v_nc = C_neu - proj           (points toward the neutral centroid)
//
// When |v_nc| <= 1e-9 |C_pos - C_neg| the centroids are flagged collinear and
// v_nc_hat is left empty.
struct Basis2D {
    std::vector<double> v_np;
    std::vector<double> v_nc;
    std::vector<double> v_nc_hat;
    double k = 0.0;
    double nc_norm = 0.0;
    bool collinear = false;
    std::vector<double> c_neg;
    std::vector<double> c_neu;
    std::vector<double> c_pos;

    std::vector<double> neutral_projection() const;
};

inline constexpr double kCollinearTolerance = 1e-9;

// Throws DegenerateError when C_neg and C_pos coincide.
Basis2D neutral_component_basis(std::span<const double> c_neg, std::span<const double> c_pos,
                                std::span<const double> c_neu);

// Basis from the class centroids of a labeled corpus.
Basis2D neutral_component_basis(const EmbeddingCorpus& corpus, const LabeledView& view);

// Raw (un-normalized) planar coordinates (e.v_np, e.v_nc_hat).
std::pair<double, double> planar_coordinates(std::span<const double> embedding, const Basis2D& basis);

struct PlanarPoint {
    std::string id;
    double x;
    double y;
    std::optional<PolarityLabel> label;
};

struct PlanarProjection {
    std::string corpus_ref;
    std::vector<PlanarPoint> points;  // corpus order, each axis z-scored
};

// Projects every record onto the basis and z-scores each axis over the corpus.
// Throws DegenerateError for a collinear basis or a constant axis.
PlanarProjection project_to_basis(const EmbeddingCorpus& corpus, const Basis2D& basis, const LabeledView& view);

// 0.9 * min(sample std, IQR / 1.34) * n^(-1/5); falls back to the sample
// std when the IQR is zero. Throws DegenerateError when the spread is zero.
double silverman_bandwidth(std::span<const double> samples);

// Gaussian kernel density estimate at each grid point; bandwidth defaults to
// silverman_bandwidth(samples).
std::vector<double> kde_1d(std::span<const double> samples, std::span<const double> grid,
                           std::optional<double> bandwidth = std::nullopt);

}  // namespace cvp
