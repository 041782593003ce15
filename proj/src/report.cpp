#include "cvp/report.hpp"

#include <cmath>

#include "cvp/text_output.hpp"

namespace cvp::report {

std::string transfer_csv(const TransferReport& r) {
    std::string out = "test_corpus,train_corpus,dimension,rho,n\n";
    for (std::size_t t = 0; t < r.test_corpora.size(); ++t) {
        for (std::size_t s = 0; s < r.train_corpora.size(); ++s) {
            const auto& cell = r.at(t, s);
            out += csv_field(r.test_corpora[t]) + "," + csv_field(r.train_corpora[s]) + "," +
                   std::string(to_string(r.dimension)) + "," + (cell.rho ? format_double(*cell.rho) : "") + "," +
                   std::to_string(cell.n) + "\n";
        }
    }
    return out;
}

Json to_json(const TransferReport& r) {
    Json j;
    j["dimension"] = std::string(to_string(r.dimension));
    j["layout"] = "rows are test corpora, columns are train corpora";
    j["train_corpora"] = r.train_corpora;
    j["test_corpora"] = r.test_corpora;
    Json rho = Json::array(), n = Json::array(), errors = Json::array();
    for (std::size_t t = 0; t < r.test_corpora.size(); ++t) {
        Json rho_row = Json::array(), n_row = Json::array();
        for (std::size_t s = 0; s < r.train_corpora.size(); ++s) {
            const auto& cell = r.at(t, s);
            rho_row.push_back(cell.rho ? Json(*cell.rho) : Json(nullptr));
            n_row.push_back(cell.n);
            if (!cell.rho)
                errors.push_back({{"test_corpus", r.test_corpora[t]},
                                  {"train_corpus", r.train_corpora[s]},
                                  {"error", cell.error}});
        }
        rho.push_back(std::move(rho_row));
        n.push_back(std::move(n_row));
    }
    j["rho"] = std::move(rho);
    j["n"] = std::move(n);
    j["errors"] = std::move(errors);
    return j;
}

Json to_json(const RegressionFit& f) {
    return {{"slope", f.slope},
            {"intercept", f.intercept},
            {"pearson_r", f.pearson_r},
            {"n", f.n},
            {"degenerate", f.degenerate}};
}

std::string cosine_csv(const CosineMatrix& m) {
    std::string out;
    for (const auto& l : m.labels()) out += "," + csv_field(l);
    out += "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += csv_field(m.labels()[i]);
        for (std::size_t j = 0; j < m.size(); ++j) out += "," + format_double(m.at(i, j));
        out += "\n";
    }
    return out;
}

Json to_json(const CosineMatrix& m) {
    Json values = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
        values.push_back(std::move(row));
    }
    return {{"labels", m.labels()}, {"values", std::move(values)}};
}

std::string planar_csv(const PlanarProjection& p) {
    std::string out = "id,x,y,label\n";
    for (const auto& pt : p.points)
        out += csv_field(pt.id) + "," + format_double(pt.x) + "," + format_double(pt.y) + "," +
               (pt.label ? std::string(to_string(*pt.label)) : "") + "\n";
    return out;
}

std::string kde_csv(std::span<const KdeCurve> curves) {
    std::string out = "grid,density,label\n";
    for (const auto& c : curves)
        for (std::size_t i = 0; i < c.grid.size(); ++i)
            out += format_double(c.grid[i]) + "," + format_double(c.density[i]) + "," + csv_field(c.label) + "\n";
    return out;
}

Json basis_summary(const Basis2D& b) {
    double np_len2 = 0.0;
    for (std::size_t j = 0; j < b.c_neg.size(); ++j) np_len2 += (b.c_pos[j] - b.c_neg[j]) * (b.c_pos[j] - b.c_neg[j]);
    return {{"k", b.k},
            {"neutral_component_norm", b.nc_norm},
            {"neg_pos_distance", std::sqrt(np_len2)},
            {"collinear", b.collinear},
            {"sign_convention", "v_nc = C_neu - proj(C_neu); planar y grows toward the neutral centroid"}};
}

}  // namespace cvp::report
