#include "cvp/cli.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvp/concept.hpp"
#include "cvp/corpus.hpp"
#include "cvp/error.hpp"
#include "cvp/eval.hpp"
#include "cvp/geometry.hpp"
#include "cvp/labeling.hpp"
#include "cvp/report.hpp"
#include "cvp/stats.hpp"
#include "cvp/synthetic.hpp"
#include "cvp/text_output.hpp"

namespace cvp {

namespace {

namespace fs = std::filesystem;
using report::Json;

constexpr const char* kVersion = "0.1.0";

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

AffectDimension dimension_arg(const std::string& s) {
    auto d = parse_dimension(s);
    if (!d) throw DataError("unknown dimension '" + s + "'");
    return *d;
}

void require_dimension(const EmbeddingCorpus& c, AffectDimension d) {
    if (c.rated_count(d) == 0)
        throw DataError("corpus '" + c.name() + "' has no ratings for dimension '" + std::string(to_string(d)) + "'");
}

Json metadata(bool timestamp) {
    Json meta = {{"tool", "cvp"}, {"version", kVersion}};
    if (timestamp) {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        meta["generated_at"] = buf;
    }
    return meta;
}

// Keeps [A-Za-z0-9._-]; anything else becomes '_'.
std::string file_stem(const std::string& name) {
    std::string s = name.empty() ? std::string("corpus") : name;
    for (char& c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_' || c == '-')) c = '_';
    return s;
}

fs::path prepare_dir(const std::string& dir) {
    fs::path p(dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec) throw DataError("cannot create output directory '" + dir + "': " + ec.message());
    return p;
}

void emit(const std::string& content, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-")
        out << content;
    else
        write_text_file(path, content);
}

std::vector<EmbeddingCorpus> load_all(const std::vector<std::string>& paths) {
    std::vector<EmbeddingCorpus> corpora;
    corpora.reserve(paths.size());
    for (const auto& p : paths) {
        try {
            corpora.push_back(load_corpus(p));
        } catch (const DataError& e) {
            throw DataError(p + ": " + e.what());
        }
    }
    return corpora;
}

// ---------------------------------------------------------------------------
// scores CSV (id,score)

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    fields.back() += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw FormatError(line_no, "unterminated quoted field");
    return fields;
}

ScoreSeries read_score_csv(std::istream& in, const std::string& corpus_ref, const std::string& source) {
    std::string line;
    if (!std::getline(in, line) || line != "id,score") throw FormatError(1, "expected header 'id,score'");
    std::vector<std::string> ids;
    std::vector<double> scores;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv_line(line, line_no);
        if (fields.size() != 2) throw FormatError(line_no, "expected 2 fields");
        double v = 0.0;
        const auto& f = fields[1];
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || ptr != f.data() + f.size() || !std::isfinite(v))
            throw FormatError(line_no, "invalid score '" + f + "'");
        ids.push_back(std::move(fields[0]));
        scores.push_back(v);
    }
    return ScoreSeries(corpus_ref, source, std::move(ids), std::move(scores), false);
}

// ---------------------------------------------------------------------------
// commands

struct CommonOpts {
    std::string dimension = "valence";
    std::string output_dir = ".";
    std::string out;
    bool no_timestamp = false;
};

int cmd_label(const std::string& corpus_path, const CommonOpts& o, Io io) {
    const auto d = dimension_arg(o.dimension);
    const auto corpus = load_all({corpus_path}).front();
    require_dimension(corpus, d);
    const auto view = assign_polarity(corpus, d);
    std::string csv = "id,rating,label\n";
    for (const auto& e : view.entries())
        csv += csv_field(corpus[e.index].id) + "," + format_double(e.rating) + "," +
               std::string(to_string(e.label)) + "\n";
    emit(csv, o.out, io.out);
    return kExitOk;
}

int cmd_fit(const std::string& corpus_path, const std::string& contrast, const CommonOpts& o, Io) {
    const auto d = dimension_arg(o.dimension);
    const auto corpus = load_all({corpus_path}).front();
    require_dimension(corpus, d);
    const auto view = assign_polarity(corpus, d);
    using enum PolarityLabel;

    if (contrast == "all") {
        const auto dir = prepare_dir(o.output_dir);
        const auto v = fit_pairwise_vectors(corpus, view);
        save_vector(v.neg_pos, dir / "neg_pos.json");
        save_vector(v.neg_neut, dir / "neg_neut.json");
        save_vector(v.neut_pos, dir / "neut_pos.json");
        return kExitOk;
    }

    Contrast c{negative, positive};
    if (contrast == "neg-neut") c = {negative, neutral};
    if (contrast == "neut-pos") c = {neutral, positive};
    const auto v = fit_concept_vector(corpus, view, c.target, c.source);
    const std::string path = o.out.empty() ? (prepare_dir(o.output_dir) / (contrast_name(c) + ".json")).string() : o.out;
    save_vector(v, path);
    return kExitOk;
}

int cmd_score(const std::string& corpus_path, const std::string& vector_path, bool normalize, const CommonOpts& o,
              Io io) {
    const auto corpus = load_all({corpus_path}).front();
    const auto vector = load_vector(vector_path);
    auto scores = project_scores(corpus, vector);
    if (normalize) scores = zscore(scores);
    std::string csv = "id,score\n";
    for (std::size_t i = 0; i < scores.size(); ++i)
        csv += csv_field(scores.ids()[i]) + "," + format_double(scores.scores()[i]) + "\n";
    emit(csv, o.out, io.out);
    return kExitOk;
}

int cmd_eval(const std::string& corpus_path, const std::string& scores_path, const CommonOpts& o, Io io) {
    const auto d = dimension_arg(o.dimension);
    const auto corpus = load_all({corpus_path}).front();
    require_dimension(corpus, d);
    ScoreSeries scores = [&] {
        if (scores_path == "-") return read_score_csv(io.in, corpus.name(), "stdin");
        std::ifstream f(scores_path);
        if (!f) throw DataError("cannot open scores file '" + scores_path + "'");
        return read_score_csv(f, corpus.name(), scores_path);
    }();
    const auto c = correlate_with_ratings(scores, corpus, d);
    std::string csv = "corpus,dimension,rho,n\n" + csv_field(corpus.name()) + "," + std::string(to_string(d)) + "," +
                      format_double(c.rho) + "," + std::to_string(c.n) + "\n";
    emit(csv, o.out, io.out);
    return kExitOk;
}

int cmd_transfer(const std::vector<std::string>& paths, bool scatter, const CommonOpts& o, Io io) {
    const auto d = dimension_arg(o.dimension);
    const auto corpora = load_all(paths);
    PolarityCache cache;
    const auto r = transfer_matrix(corpora, d, &cache);
    const auto dir = prepare_dir(o.output_dir);
    const std::string stem = "transfer_" + std::string(to_string(d));
    write_text_file(dir / (stem + ".csv"), report::transfer_csv(r));
    Json j = {{"meta", metadata(!o.no_timestamp)}};
    j.update(report::to_json(r));
    write_text_file(dir / (stem + ".json"), j.dump(2) + "\n");

    for (const auto& cell : r.cells)
        if (!cell.rho) io.err << "cvp: warning: " << cell.error << "\n";

    if (scatter) {
        for (std::size_t s = 0; s < corpora.size(); ++s) {
            std::optional<ConceptVector> v;
            try {
                v = fit_polarity_axis(corpora[s], d, &cache);
            } catch (const Error&) {
                continue;
            }
            for (std::size_t t = 0; t < corpora.size(); ++t) {
                if (!r.at(t, s).rho) continue;
                const auto projected = project_scores(corpora[t], *v);
                std::vector<std::string> ids;
                std::vector<double> human, pred;
                for (const auto& rec : corpora[t].records()) {
                    if (!rec.rating(d)) continue;
                    ids.push_back(rec.id);
                    human.push_back(*rec.rating(d));
                    pred.push_back(*projected.find(rec.id));
                }
                const auto hz = zscore(ScoreSeries(corpora[t].name(), "human", ids, human, false));
                const auto pz = zscore(ScoreSeries(corpora[t].name(), v->provenance(), ids, pred, false));
                std::string csv = "id,human_z,projected_z\n";
                for (std::size_t i = 0; i < ids.size(); ++i)
                    csv += csv_field(ids[i]) + "," + format_double(hz.scores()[i]) + "," +
                           format_double(pz.scores()[i]) + "\n";
                write_text_file(dir / ("scatter_" + file_stem(corpora[s].name()) + "__" +
                                       file_stem(corpora[t].name()) + "_" + std::string(to_string(d)) + ".csv"),
                                csv);
            }
        }
    }
    return kExitOk;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return g;
}

// One KDE curve per polarity class over a grid shared by all classes.
std::vector<report::KdeCurve> class_kdes(const PlanarProjection& p, bool x_axis, std::size_t grid_points,
                                         std::optional<double> bandwidth, Json& skipped) {
    std::vector<std::pair<PolarityLabel, std::vector<double>>> groups;
    std::vector<double> all;
    for (auto l : kAllLabels) groups.push_back({l, {}});
    for (const auto& pt : p.points) {
        const double v = x_axis ? pt.x : pt.y;
        all.push_back(v);
        if (pt.label) groups[static_cast<std::size_t>(*pt.label)].second.push_back(v);
    }
    std::vector<std::pair<std::string, double>> usable;
    double max_h = 0.0;
    for (const auto& [label, values] : groups) {
        try {
            const double h = bandwidth ? *bandwidth : silverman_bandwidth(values);
            usable.push_back({std::string(to_string(label)), h});
            max_h = std::max(max_h, h);
        } catch (const DegenerateError& e) {
            skipped.push_back({{"axis", x_axis ? "x" : "y"}, {"label", to_string(label)}, {"reason", e.what()}});
        }
    }
    const auto [lo, hi] = std::minmax_element(all.begin(), all.end());
    const auto grid = linspace(*lo - 3.0 * max_h, *hi + 3.0 * max_h, grid_points);
    std::vector<report::KdeCurve> curves;
    for (const auto& [label, h] : usable) {
        const auto& values = groups[static_cast<std::size_t>(*parse_polarity(label))].second;
        curves.push_back({label, grid, kde_1d(values, grid, h)});
    }
    return curves;
}

int cmd_geometry(const std::vector<std::string>& paths, std::size_t grid_points, std::optional<double> bandwidth,
                 const CommonOpts& o, Io) {
    const auto d = dimension_arg(o.dimension);
    const auto corpora = load_all(paths);
    const auto dir = prepare_dir(o.output_dir);
    const std::string dim_tag = std::string(to_string(d));

    Json j = {{"meta", metadata(!o.no_timestamp)}, {"dimension", dim_tag}};
    Json per_corpus = Json::array();
    std::vector<NamedVector> all_vectors;

    for (const auto& corpus : corpora) {
        require_dimension(corpus, d);
        const auto view = assign_polarity(corpus, d);
        const auto vectors = fit_pairwise_vectors(corpus, view);
        const auto m = cosine_matrix(vectors);
        const std::string stem = file_stem(corpus.name()) + "_" + dim_tag;
        write_text_file(dir / ("cosine_" + stem + ".csv"), report::cosine_csv(m));
        write_text_file(dir / ("cosine_" + stem + ".json"), report::to_json(m).dump(2) + "\n");
        for (const auto& [label, v] :
             {std::pair{"neg_pos", &vectors.neg_pos}, {"neg_neut", &vectors.neg_neut}, {"neut_pos", &vectors.neut_pos}})
            all_vectors.push_back({corpus.name() + ":" + label, *v});

        const auto basis = neutral_component_basis(corpus, view);
        Json entry = {{"corpus", corpus.name()},
                      {"class_counts",
                       {{"negative", view.count(PolarityLabel::negative)},
                        {"neutral", view.count(PolarityLabel::neutral)},
                        {"positive", view.count(PolarityLabel::positive)}}},
                      {"thresholds", {{"mu", view.mu()}, {"sigma", view.sigma()}}},
                      {"cosine", report::to_json(m)},
                      {"basis", report::basis_summary(basis)}};

        if (!basis.collinear) {
            const auto planar = project_to_basis(corpus, basis, view);
            write_text_file(dir / ("planar_" + stem + ".csv"), report::planar_csv(planar));

            Json centroids = Json::object();
            for (const auto& [label, c] : {std::pair{"negative", &basis.c_neg}, {"neutral", &basis.c_neu},
                                           {"positive", &basis.c_pos}}) {
                const auto [x, y] = planar_coordinates(*c, basis);
                centroids[label] = {{"x", x}, {"y", y}};
            }
            entry["raw_centroid_coordinates"] = std::move(centroids);

            Json class_means = Json::object();
            for (auto l : kAllLabels) {
                double sx = 0.0, sy = 0.0;
                std::size_t n = 0;
                for (const auto& pt : planar.points)
                    if (pt.label == l) {
                        sx += pt.x;
                        sy += pt.y;
                        ++n;
                    }
                if (n) class_means[std::string(to_string(l))] = {{"x", sx / n}, {"y", sy / n}};
            }
            entry["class_means_z"] = std::move(class_means);

            Json skipped = Json::array();
            const auto kx = class_kdes(planar, true, grid_points, bandwidth, skipped);
            const auto ky = class_kdes(planar, false, grid_points, bandwidth, skipped);
            write_text_file(dir / ("kde_x_" + stem + ".csv"), report::kde_csv(kx));
            write_text_file(dir / ("kde_y_" + stem + ".csv"), report::kde_csv(ky));
            entry["kde_skipped"] = std::move(skipped);
        }
        per_corpus.push_back(std::move(entry));
    }
    j["corpora"] = std::move(per_corpus);

    if (corpora.size() > 1) {
        const auto m = cosine_matrix(all_vectors);
        write_text_file(dir / ("cosine_all_" + dim_tag + ".csv"), report::cosine_csv(m));
        write_text_file(dir / ("cosine_all_" + dim_tag + ".json"), report::to_json(m).dump(2) + "\n");
        j["cross_corpus_cosine"] = report::to_json(m);
    }
    write_text_file(dir / ("geometry_" + dim_tag + ".json"), j.dump(2) + "\n");
    return kExitOk;
}

Json vad_section(const EmbeddingCorpus& corpus, const ScoreSeries& valence, const ScoreSeries& arousal) {
    const auto r = abs_valence_arousal_report(corpus, valence, arousal);
    return {{"valence_source", valence.vector_ref()},
            {"arousal_source", arousal.vector_ref()},
            {"raw", report::to_json(r.raw)},
            {"absolute", report::to_json(r.absolute)}};
}

int cmd_vadcheck(const std::string& corpus_path, const CommonOpts& o, Io io) {
    const auto corpus = load_all({corpus_path}).front();
    require_dimension(corpus, AffectDimension::valence);
    require_dimension(corpus, AffectDimension::arousal);

    const auto human_v = zscore(rating_series(corpus, AffectDimension::valence));
    const auto human_a = zscore(rating_series(corpus, AffectDimension::arousal));
    const auto proj_v = zscore(project_scores(corpus, fit_polarity_axis(corpus, AffectDimension::valence)));
    const auto proj_a = zscore(project_scores(corpus, fit_polarity_axis(corpus, AffectDimension::arousal)));

    Json j = {{"meta", metadata(!o.no_timestamp)},
              {"corpus", corpus.name()},
              {"note", "scores are z-scored within the corpus; absolute valence is distance from the mean"},
              {"human", vad_section(corpus, human_v, human_a)},
              {"projected", vad_section(corpus, proj_v, proj_a)}};
    emit(j.dump(2) + "\n", o.out, io.out);
    return kExitOk;
}

int cmd_synth(const SyntheticSpec& spec, const std::string& out, const std::string& truth_out) {
    const auto s = generate_synthetic_corpus(spec);
    save_corpus(s.corpus, out);
    if (!truth_out.empty()) {
        Json j = {{"format", "cvp-direction"}, {"dim", s.direction.size()}, {"direction", s.direction}};
        write_text_file(truth_out, j.dump() + "\n");
    }
    return kExitOk;
}

std::string single_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Concept vector projection toolkit: polarity labeling, concept vectors, transfer and geometry analysis",
                 "cvp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    const std::vector<std::string> dims = {"valence", "arousal", "dominance"};
    CommonOpts o;
    std::string corpus_path, vector_path, scores_path, contrast = "neg-pos", truth_out;
    std::vector<std::string> corpus_paths;
    bool normalize = false, scatter = false;
    std::size_t grid_points = 256;
    std::optional<double> bandwidth;
    SyntheticSpec spec;
    spec.n = 1000;
    spec.dim = 64;
    spec.noise_sigma = 0.5;
    spec.direction_seed = 1;
    spec.rng_seed = 2;

    auto add_dimension = [&](CLI::App* sub) {
        sub->add_option("-d,--dimension", o.dimension, "Affect dimension")->check(CLI::IsMember(dims))->capture_default_str();
    };
    auto add_timestamp = [&](CLI::App* sub) {
        sub->add_flag("--no-timestamp", o.no_timestamp, "Omit the generation time from JSON report metadata");
    };

    auto* label = app.add_subcommand("label", "Assign polarity labels (CSV id,rating,label)");
    label->add_option("corpus", corpus_path, "Corpus file")->required()->check(CLI::ExistingFile);
    add_dimension(label);
    label->add_option("-o,--out", o.out, "Output file (default stdout)");

    auto* fit = app.add_subcommand("fit", "Fit concept vector(s) on a corpus");
    fit->add_option("corpus", corpus_path, "Training corpus file")->required()->check(CLI::ExistingFile);
    add_dimension(fit);
    fit->add_option("-c,--contrast", contrast, "neg-pos, neg-neut, neut-pos or all")
        ->check(CLI::IsMember({"neg-pos", "neg-neut", "neut-pos", "all"}))
        ->capture_default_str();
    fit->add_option("-o,--out", o.out, "Vector file (single contrast)");
    fit->add_option("--output-dir", o.output_dir, "Directory for vector files")->capture_default_str();

    auto* score = app.add_subcommand("score", "Project a corpus onto a concept vector (CSV id,score)");
    score->add_option("corpus", corpus_path, "Corpus file")->required()->check(CLI::ExistingFile);
    score->add_option("vector", vector_path, "Vector file")->required()->check(CLI::ExistingFile);
    score->add_flag("-z,--normalize", normalize, "z-score the projections");
    score->add_option("-o,--out", o.out, "Output file (default stdout)");

    auto* eval = app.add_subcommand("eval", "Spearman correlation of a score CSV against corpus ratings");
    eval->add_option("corpus", corpus_path, "Corpus file")->required()->check(CLI::ExistingFile);
    eval->add_option("scores", scores_path, "Scores CSV (id,score) or - for stdin")
        ->required()
        ->check(CLI::ExistingFile | CLI::IsMember({"-"}));
    add_dimension(eval);
    eval->add_option("-o,--out", o.out, "Output file (default stdout)");

    auto* transfer = app.add_subcommand("transfer", "Cross-corpus transfer matrix of Spearman correlations");
    transfer->add_option("corpora", corpus_paths, "Corpus files")->required()->check(CLI::ExistingFile);
    add_dimension(transfer);
    transfer->add_option("--output-dir", o.output_dir, "Output directory")->capture_default_str();
    transfer->add_flag("--scatter", scatter, "Also export z-scored human vs projected scores per pair");
    add_timestamp(transfer);

    auto* geometry = app.add_subcommand("geometry", "Cosine matrices, neutral-component basis, planar projection, KDEs");
    geometry->add_option("corpora", corpus_paths, "Corpus files")->required()->check(CLI::ExistingFile);
    add_dimension(geometry);
    geometry->add_option("--output-dir", o.output_dir, "Output directory")->capture_default_str();
    geometry->add_option("--grid-points", grid_points, "KDE grid size")->check(CLI::Range(2, 100000))->capture_default_str();
    geometry->add_option("--bandwidth", bandwidth, "KDE bandwidth (default: Silverman's rule)")
        ->check(CLI::PositiveNumber);
    add_timestamp(geometry);

    auto* vadcheck = app.add_subcommand("vadcheck", "Arousal vs raw and absolute valence regressions");
    vadcheck->add_option("corpus", corpus_path, "Corpus with valence and arousal ratings")
        ->required()
        ->check(CLI::ExistingFile);
    vadcheck->add_option("-o,--out", o.out, "Output file (default stdout)");
    add_timestamp(vadcheck);

    auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus along a random direction");
    synth->add_option("--n", spec.n, "Record count")->check(CLI::Range(std::size_t{2}, std::size_t{100000000}))->capture_default_str();
    synth->add_option("--dim", spec.dim, "Embedding dimensionality")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))->capture_default_str();
    synth->add_option("--direction-seed", spec.direction_seed, "Seed of the ground-truth direction")->capture_default_str();
    synth->add_option("--noise", spec.noise_sigma, "Per-component Gaussian noise std")->check(CLI::NonNegativeNumber)->capture_default_str();
    synth->add_option("--seed", spec.rng_seed, "Seed of ratings and noise")->capture_default_str();
    synth->add_option("--name", spec.name, "Corpus name")->capture_default_str();
    std::string synth_out;
    synth->add_option("-o,--out", synth_out, "Corpus file")->required();
    synth->add_option("--truth-out", truth_out, "Write the ground-truth direction as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Io io{in, out, err};
    try {
        if (*label) return cmd_label(corpus_path, o, io);
        if (*fit) {
            if (contrast == "all" && !o.out.empty())
                throw CLI::ValidationError("--out", "use --output-dir with --contrast all");
            return cmd_fit(corpus_path, contrast, o, io);
        }
        if (*score) return cmd_score(corpus_path, vector_path, normalize, o, io);
        if (*eval) return cmd_eval(corpus_path, scores_path, o, io);
        if (*transfer) return cmd_transfer(corpus_paths, scatter, o, io);
        if (*geometry) return cmd_geometry(corpus_paths, grid_points, bandwidth, o, io);
        if (*vadcheck) return cmd_vadcheck(corpus_path, o, io);
        if (*synth) return cmd_synth(spec, synth_out, truth_out);
    } catch (const CLI::Error& e) {
        err << "cvp: usage error: " << single_line(e.what()) << "\n";
        return kExitUsage;
    } catch (const DegenerateError& e) {
        err << "cvp: degenerate input: " << single_line(e.what()) << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "cvp: error: " << single_line(e.what()) << "\n";
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace cvp
