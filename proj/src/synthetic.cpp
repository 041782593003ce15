#include "cvp/synthetic.hpp"

#include <cmath>
#include <cstdio>

#include "cvp/error.hpp"

namespace cvp {

double GaussianSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSource::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double scale = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * scale;
    has_spare_ = true;
    return u * scale;
}

std::vector<double> random_unit_vector(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) throw DataError("random_unit_vector: dim must be positive");
    GaussianSource g(seed);
    std::vector<double> u(dim);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& c : u) {
            c = g.normal();
            norm2 += c * c;
        }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : u) c *= inv;
    return u;
}

SyntheticCorpus generate_synthetic_corpus(const SyntheticSpec& spec) {
    if (spec.n < 2) throw DataError("synthetic corpus needs n >= 2");
    if (spec.dim < 2) throw DataError("synthetic corpus needs dim >= 2");
    if (!(spec.noise_sigma >= 0.0) || !std::isfinite(spec.noise_sigma))
        throw DataError("noise_sigma must be finite and non-negative");

    std::vector<double> u = random_unit_vector(spec.dim, spec.direction_seed);
    GaussianSource g(spec.rng_seed);

    const int width = static_cast<int>(std::to_string(spec.n - 1).size());
    std::vector<SentenceRecord> records;
    records.reserve(spec.n);
    char id[48];
    for (std::size_t i = 0; i < spec.n; ++i) {
        SentenceRecord r;
        std::snprintf(id, sizeof id, "syn-%0*zu", width, i);
        r.id = id;
        const double t = g.uniform(-1.0, 1.0);
        r.ratings[index_of(AffectDimension::valence)] = t;
        r.embedding.resize(spec.dim);
        for (std::size_t j = 0; j < spec.dim; ++j) {
            const double noise = spec.noise_sigma > 0.0 ? spec.noise_sigma * g.normal() : 0.0;
            r.embedding[j] = static_cast<float>(t * u[j] + noise);
        }
        records.push_back(std::move(r));
    }

    return {EmbeddingCorpus(spec.name, spec.dim, "synthetic", {AffectDimension::valence}, std::move(records)),
            std::move(u)};
}

}  // namespace cvp
