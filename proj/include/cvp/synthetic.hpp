#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cvp/corpus.hpp"

namespace cvp {

// Portable standard-normal source: std::mt19937_64 (fully specified by the
// standard) feeding 53-bit uniforms into the Marsaglia polar method. Unlike
// std::normal_distribution its output is identical across standard libraries.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) with 53 random bits.
    double uniform();
    // Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct SyntheticSpec {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::uint64_t direction_seed = 0;
    double noise_sigma = 0.0;
    std::uint64_t rng_seed = 0;
    std::string name = "synthetic";
};

struct SyntheticCorpus {
    EmbeddingCorpus corpus;
    std::vector<double> direction;  // ground truth, unit length
};

// embedding_i = t_i * u + eps_i, with u a random unit vector drawn from
// direction_seed, t_i ~ U[-1, 1] stored as the valence rating, and eps_i
// having independent N(0, noise_sigma^2) components drawn from rng_seed.
// Embeddings are rounded to float after the sum. Requires n >= 2, dim >= 2.
SyntheticCorpus generate_synthetic_corpus(const SyntheticSpec& spec);

// Unit vector with Gaussian components from the given seed.
std::vector<double> random_unit_vector(std::size_t dim, std::uint64_t seed);

}  // namespace cvp
