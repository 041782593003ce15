#include "cvp/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "cvp/error.hpp"
#include "cvp/text_output.hpp"
#include "json.hpp"

namespace cvp {

namespace {

using json = nlohmann::json;

constexpr std::string_view kFormatTag = "cvp-corpus";
constexpr int kFormatVersion = 1;

std::string record_tag(std::size_t record_no) { return "record " + std::to_string(record_no); }

// Throws DataError with a message prefixed by the 1-based record number.
void validate_record(const SentenceRecord& r, std::size_t record_no, std::size_t dim,
                     const std::vector<AffectDimension>& declared) {
    if (r.id.empty()) throw DataError(record_tag(record_no) + ": empty id");
    if (r.embedding.size() != dim)
        throw DataError(record_tag(record_no) + " ('" + r.id + "'): embedding has " +
                        std::to_string(r.embedding.size()) + " components, corpus dim is " +
                        std::to_string(dim));
    for (std::size_t j = 0; j < r.embedding.size(); ++j)
        if (!std::isfinite(r.embedding[j]))
            throw DataError(record_tag(record_no) + " ('" + r.id +
                            "'): non-finite embedding component at index " + std::to_string(j));
    for (auto d : kAllDimensions) {
        const auto& v = r.ratings[index_of(d)];
        if (!v) continue;
        if (std::find(declared.begin(), declared.end(), d) == declared.end())
            throw DataError(record_tag(record_no) + " ('" + r.id + "'): rating for undeclared dimension '" +
                            std::string(to_string(d)) + "'");
        if (!std::isfinite(*v))
            throw DataError(record_tag(record_no) + " ('" + r.id + "'): non-finite " +
                            std::string(to_string(d)) + " rating");
    }
}

const json& require(const json& obj, const char* key, std::size_t line) {
    auto it = obj.find(key);
    if (it == obj.end()) throw FormatError(line, std::string("missing field '") + key + "'");
    return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
    const json& v = require(obj, key, line);
    if (!v.is_string()) throw FormatError(line, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

// DOM parser that additionally decodes the top-level "embedding" array
// straight from the number text to float. Going through double first
// misrounds a few values (e.g. 7.038531e-26) whose shortest float text sits
// on a double-rounding boundary.
class RecordSax : public nlohmann::detail::json_sax_dom_parser<json> {
    using Base = nlohmann::detail::json_sax_dom_parser<json>;

public:
    explicit RecordSax(json& root) : Base(root, true) {}

    std::vector<float> embedding;
    bool saw_embedding = false;

    bool start_object(std::size_t n) {
        ++depth_;
        return Base::start_object(n);
    }
    bool end_object() {
        --depth_;
        return Base::end_object();
    }
    bool key(json::string_t& k) {
        if (depth_ == 1) top_key_ = k;
        return Base::key(k);
    }
    bool start_array(std::size_t n) {
        ++depth_;
        if (depth_ == 2 && top_key_ == "embedding") {
            capturing_ = true;
            saw_embedding = true;
            embedding.clear();
        }
        return Base::start_array(n);
    }
    bool end_array() {
        if (depth_ == 2) capturing_ = false;
        --depth_;
        return Base::end_array();
    }
    bool number_integer(json::number_integer_t v) {
        if (in_embedding()) embedding.push_back(static_cast<float>(v));
        return Base::number_integer(v);
    }
    bool number_unsigned(json::number_unsigned_t v) {
        if (in_embedding()) embedding.push_back(static_cast<float>(v));
        return Base::number_unsigned(v);
    }
    bool number_float(json::number_float_t v, const json::string_t& text) {
        if (in_embedding()) {
            float f = 0.0f;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), f);
            if (ec != std::errc{} || ptr != text.data() + text.size()) f = static_cast<float>(v);
            embedding.push_back(f);
        }
        return Base::number_float(v, text);
    }

private:
    bool in_embedding() const { return capturing_ && depth_ == 2; }

    int depth_ = 0;
    bool capturing_ = false;
    std::string top_key_;
};

json parse_line(const std::string& text, std::size_t line) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(line, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError(line, "expected a JSON object");
    return j;
}

struct Header {
    std::string name;
    std::size_t dim = 0;
    std::string model_id;
    std::vector<AffectDimension> dimensions;
};

Header parse_header(const std::string& text) {
    const json j = parse_line(text, 1);
    Header h;
    if (require_string(j, "format", 1) != kFormatTag)
        throw FormatError(1, "not a cvp-corpus file (format tag mismatch)");
    const json& version = require(j, "version", 1);
    if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
        throw FormatError(1, "unsupported corpus format version");
    h.name = require_string(j, "name", 1);
    h.model_id = require_string(j, "model_id", 1);
    const json& dim = require(j, "dim", 1);
    if (!dim.is_number_integer() || dim.get<long long>() <= 0)
        throw FormatError(1, "field 'dim' must be a positive integer");
    h.dim = static_cast<std::size_t>(dim.get<long long>());
    const json& dims = require(j, "dimensions", 1);
    if (!dims.is_array()) throw FormatError(1, "field 'dimensions' must be an array");
    for (const auto& d : dims) {
        if (!d.is_string()) throw FormatError(1, "dimension names must be strings");
        auto parsed = parse_dimension(d.get<std::string>());
        if (!parsed) throw FormatError(1, "unknown dimension '" + d.get<std::string>() + "'");
        if (std::find(h.dimensions.begin(), h.dimensions.end(), *parsed) != h.dimensions.end())
            throw FormatError(1, "dimension '" + d.get<std::string>() + "' listed twice");
        h.dimensions.push_back(*parsed);
    }
    return h;
}

SentenceRecord parse_record(const std::string& text, std::size_t line, std::size_t record_no,
                            const Header& h) {
    json j;
    RecordSax sax(j);
    try {
        json::sax_parse(text, &sax);
    } catch (const json::exception& e) {
        throw FormatError(line, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError(line, "expected a JSON object");
    SentenceRecord r;
    r.id = require_string(j, "id", line);

    if (auto it = j.find("text"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw FormatError(line, "field 'text' must be a string or null");
        r.text = it->get<std::string>();
    }

    const json& ratings = require(j, "ratings", line);
    if (!ratings.is_object()) throw FormatError(line, "field 'ratings' must be an object");
    for (const auto& [key, value] : ratings.items()) {
        auto d = parse_dimension(key);
        if (!d) throw FormatError(line, record_tag(record_no) + ": unknown rating dimension '" + key + "'");
        if (!value.is_number())
            throw FormatError(line, record_tag(record_no) + ": rating '" + key + "' is not a number");
        r.ratings[index_of(*d)] = value.get<double>();
    }

    const json& emb = require(j, "embedding", line);
    if (!emb.is_array()) throw FormatError(line, "field 'embedding' must be an array");
    for (const auto& v : emb)
        if (!v.is_number())
            throw FormatError(line, record_tag(record_no) + ": embedding component is not a number");
    r.embedding = std::move(sax.embedding);

    try {
        validate_record(r, record_no, h.dim, h.dimensions);
    } catch (const DataError& e) {
        throw FormatError(line, e.what());
    }
    return r;
}

}  // namespace

EmbeddingCorpus::EmbeddingCorpus(std::string name, std::size_t dim, std::string model_id,
                                 std::vector<AffectDimension> declared_dimensions,
                                 std::vector<SentenceRecord> records)
    : name_(std::move(name)),
      dim_(dim),
      model_id_(std::move(model_id)),
      declared_(std::move(declared_dimensions)),
      records_(std::move(records)) {
    if (dim_ == 0) throw DataError("corpus dimensionality must be positive");
    for (std::size_t i = 0; i < declared_.size(); ++i)
        for (std::size_t k = 0; k < i; ++k)
            if (declared_[i] == declared_[k])
                throw DataError("dimension '" + std::string(to_string(declared_[i])) + "' declared twice");

    index_.reserve(records_.size());
    for (std::size_t i = 0; i < records_.size(); ++i) {
        validate_record(records_[i], i + 1, dim_, declared_);
        if (!index_.emplace(records_[i].id, i).second)
            throw DataError(record_tag(i + 1) + ": duplicate id '" + records_[i].id + "'");
    }

    for (auto d : declared_) {
        const bool everywhere = std::all_of(records_.begin(), records_.end(),
                                            [d](const SentenceRecord& r) { return r.rating(d).has_value(); });
        if (everywhere) available_.push_back(d);
    }
}

bool EmbeddingCorpus::is_available(AffectDimension d) const {
    return std::find(available_.begin(), available_.end(), d) != available_.end();
}

std::size_t EmbeddingCorpus::rated_count(AffectDimension d) const {
    return static_cast<std::size_t>(std::count_if(
        records_.begin(), records_.end(), [d](const SentenceRecord& r) { return r.rating(d).has_value(); }));
}

std::optional<std::size_t> EmbeddingCorpus::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EmbeddingCorpus read_corpus(std::istream& in) {
    std::string text;
    if (!std::getline(in, text)) throw FormatError(1, "missing header line");
    Header h = parse_header(text);

    std::vector<SentenceRecord> records;
    std::unordered_set<std::string> seen;
    std::size_t line = 1;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty()) {
            if (in.peek() == std::char_traits<char>::eof()) break;
            throw FormatError(line, "empty line");
        }
        const std::size_t record_no = records.size() + 1;
        SentenceRecord r = parse_record(text, line, record_no, h);
        if (!seen.insert(r.id).second)
            throw FormatError(line, record_tag(record_no) + ": duplicate id '" + r.id + "'");
        records.push_back(std::move(r));
    }
    if (in.bad()) throw DataError("read error");
    return EmbeddingCorpus(std::move(h.name), h.dim, std::move(h.model_id), std::move(h.dimensions),
                           std::move(records));
}

void write_corpus(const EmbeddingCorpus& corpus, std::ostream& out) {
    std::string buf;
    buf += "{\"format\":\"cvp-corpus\",\"version\":1,\"name\":";
    buf += json_quote(corpus.name());
    buf += ",\"dim\":" + std::to_string(corpus.dim());
    buf += ",\"model_id\":" + json_quote(corpus.model_id());
    buf += ",\"dimensions\":[";
    for (std::size_t i = 0; i < corpus.declared_dimensions().size(); ++i) {
        if (i) buf += ',';
        buf += '"';
        buf += to_string(corpus.declared_dimensions()[i]);
        buf += '"';
    }
    buf += "]}\n";
    out << buf;

    for (const auto& r : corpus.records()) {
        buf.clear();
        buf += "{\"id\":" + json_quote(r.id);
        buf += ",\"text\":";
        buf += r.text ? json_quote(*r.text) : std::string("null");
        buf += ",\"ratings\":{";
        bool first = true;
        for (auto d : kAllDimensions) {
            if (!r.rating(d)) continue;
            if (!first) buf += ',';
            first = false;
            buf += '"';
            buf += to_string(d);
            buf += "\":";
            buf += format_double(*r.rating(d));
        }
        buf += "},\"embedding\":[";
        for (std::size_t j = 0; j < r.embedding.size(); ++j) {
            if (j) buf += ',';
            buf += format_float(r.embedding[j]);
        }
        buf += "]}\n";
        out << buf;
    }
}

EmbeddingCorpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file '" + path.string() + "'");
    return read_corpus(in);
}

void save_corpus(const EmbeddingCorpus& corpus, const std::filesystem::path& path) {
    std::ostringstream ss;
    write_corpus(corpus, ss);
    write_text_file(path, ss.str());
}

}  // namespace cvp
