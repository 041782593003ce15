#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cvp/affect.hpp"

namespace cvp {

// One optional rating per affect dimension, on the source scale.
using Ratings = std::array<std::optional<double>, kDimensionCount>;

struct SentenceRecord {
    std::string id;
    std::optional<std::string> text;
    Ratings ratings{};
    std::vector<float> embedding;

    std::optional<double> rating(AffectDimension d) const { return ratings[index_of(d)]; }

    friend bool operator==(const SentenceRecord&, const SentenceRecord&) = default;
};

// A validated, immutable set of embedded sentences.
//
// Construction enforces: dim > 0, every embedding has length dim, ids are
// unique, every rating and embedding component is finite, and every rating
// key is one of the declared dimensions. Violations throw DataError naming
// the 1-based record number.
class EmbeddingCorpus {
public:
    EmbeddingCorpus(std::string name, std::size_t dim, std::string model_id,
                    std::vector<AffectDimension> declared_dimensions,
                    std::vector<SentenceRecord> records);

    const std::string& name() const noexcept { return name_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::string& model_id() const noexcept { return model_id_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    std::span<const SentenceRecord> records() const noexcept { return records_; }
    const SentenceRecord& operator[](std::size_t i) const { return records_[i]; }

    // Dimensions listed in the file header; every rating key is one of these.
    const std::vector<AffectDimension>& declared_dimensions() const noexcept { return declared_; }
    // Declared dimensions rated on every record.
    const std::vector<AffectDimension>& available_dimensions() const noexcept { return available_; }
    bool is_available(AffectDimension d) const;

    std::size_t rated_count(AffectDimension d) const;
    std::optional<std::size_t> find(std::string_view id) const;

    friend bool operator==(const EmbeddingCorpus& a, const EmbeddingCorpus& b) {
        return a.name_ == b.name_ && a.dim_ == b.dim_ && a.model_id_ == b.model_id_ &&
               a.declared_ == b.declared_ && a.records_ == b.records_;
    }

private:
    std::string name_;
    std::size_t dim_;
    std::string model_id_;
    std::vector<AffectDimension> declared_;
    std::vector<AffectDimension> available_;
    std::vector<SentenceRecord> records_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Line-delimited JSON corpus format ("cvp-corpus", version 1). The first line
// is a header object; each further line is one record. Embedding components
// are written as the shortest decimal that reads back to the same float.
EmbeddingCorpus read_corpus(std::istream& in);
void write_corpus(const EmbeddingCorpus& corpus, std::ostream& out);

EmbeddingCorpus load_corpus(const std::filesystem::path& path);
void save_corpus(const EmbeddingCorpus& corpus, const std::filesystem::path& path);

}  // namespace cvp
