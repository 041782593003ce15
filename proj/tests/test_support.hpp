#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "cvp/corpus.hpp"

namespace testing {

class TempDir {
public:
    TempDir() {
        static std::uint64_t counter = 0;
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("cvp-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline cvp::SentenceRecord record(std::string id, std::vector<float> embedding, std::optional<double> valence,
                                  std::optional<double> arousal = std::nullopt,
                                  std::optional<double> dominance = std::nullopt) {
    cvp::SentenceRecord r;
    r.id = std::move(id);
    r.embedding = std::move(embedding);
    r.ratings = {valence, arousal, dominance};
    return r;
}

inline cvp::EmbeddingCorpus corpus(std::string name, std::vector<cvp::SentenceRecord> records,
                                   std::vector<cvp::AffectDimension> dims = {cvp::AffectDimension::valence}) {
    const std::size_t dim = records.empty() ? 2 : records.front().embedding.size();
    return cvp::EmbeddingCorpus(std::move(name), dim, "test-model", std::move(dims), std::move(records));
}

// Equality that also distinguishes -0.0f from 0.0f.
inline bool bitwise_equal(const cvp::EmbeddingCorpus& a, const cvp::EmbeddingCorpus& b) {
    if (!(a == b)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& ea = a[i].embedding;
        const auto& eb = b[i].embedding;
        if (std::memcmp(ea.data(), eb.data(), ea.size() * sizeof(float)) != 0) return false;
        for (std::size_t d = 0; d < cvp::kDimensionCount; ++d) {
            const auto& ra = a[i].ratings[d];
            const auto& rb = b[i].ratings[d];
            if (ra && std::memcmp(&*ra, &*rb, sizeof(double)) != 0) return false;
        }
    }
    return true;
}

// Random corpus with arbitrary bit patterns for embeddings (finite only),
// random ratings, optional text, and some missing ratings.
inline cvp::EmbeddingCorpus random_corpus(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
    std::uniform_int_distribution<std::uint32_t> bits;
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<cvp::SentenceRecord> records;
    for (std::size_t i = 0; i < n; ++i) {
        cvp::SentenceRecord r;
        r.id = "r" + std::to_string(i) + (i % 7 == 0 ? ",\"q\"" : "");
        if (i % 3 == 0) r.text = "sætning \"" + std::to_string(i) + "\"\n\ttab";
        for (std::size_t j = 0; j < dim; ++j) {
            float f;
            do {
                std::uint32_t u = bits(rng);
                std::memcpy(&f, &u, sizeof f);
            } while (!std::isfinite(f));
            if (j % 2 == 0) f = static_cast<float>(unit(rng));
            r.embedding.push_back(f);
        }
        r.ratings[0] = unit(rng) * 4.0 + 5.0;
        if (i % 5 != 0) r.ratings[1] = std::ldexp(unit(rng), static_cast<int>(i % 60) - 30);
        records.push_back(std::move(r));
    }
    return cvp::EmbeddingCorpus("random", dim, "model/x", {cvp::AffectDimension::valence, cvp::AffectDimension::arousal},
                                std::move(records));
}

}  // namespace testing
