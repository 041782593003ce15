#pragma once

#include <span>
#include <string>
#include <vector>

#include "cvp/eval.hpp"
#include "cvp/geometry.hpp"
#include "json.hpp"

// CSV and JSON renderings of evaluation and geometry results. Column layouts
// are listed in docs/FORMATS.md.
namespace cvp::report {

using Json = nlohmann::ordered_json;

// test_corpus,train_corpus,dimension,rho,n  (rho empty for a failed cell)
std::string transfer_csv(const TransferReport& r);
Json to_json(const TransferReport& r);

Json to_json(const RegressionFit& f);

// Header row ",<label>...", then one "<label>,<values>..." row per vector.
std::string cosine_csv(const CosineMatrix& m);
Json to_json(const CosineMatrix& m);

// id,x,y,label
std::string planar_csv(const PlanarProjection& p);

struct KdeCurve {
    std::string label;
    std::vector<double> grid;
    std::vector<double> density;
};

// grid,density,label
std::string kde_csv(std::span<const KdeCurve> curves);

// Scalars of the basis construction and its sign convention.
Json basis_summary(const Basis2D& b);

}  // namespace cvp::report
