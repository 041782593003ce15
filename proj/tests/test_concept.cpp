#include <cmath>
#include <random>

#include "cvp/concept.hpp"
#include "cvp/error.hpp"
#include "cvp/eval.hpp"
#include "cvp/geometry.hpp"
#include "cvp/synthetic.hpp"
#include "cvp/text_output.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cvp;
using testing::record;
using L = PolarityLabel;

namespace {

// Corpus with one record per embedding and the given explicit labels.
struct Labeled {
    EmbeddingCorpus corpus;
    LabeledView view;
};

Labeled labeled(const std::vector<std::vector<float>>& embeddings, const std::vector<L>& labels) {
    std::vector<SentenceRecord> recs;
    std::vector<LabeledRecord> entries;
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        recs.push_back(record("e" + std::to_string(i), embeddings[i], static_cast<double>(i)));
        entries.push_back({i, static_cast<double>(i), labels[i]});
    }
    auto c = testing::corpus("fixture", std::move(recs));
    LabeledView v(c.name(), c.size(), AffectDimension::valence, std::move(entries), 0.0, 1.0);
    return {std::move(c), std::move(v)};
}

double norm(std::span<const double> v) {
    double s = 0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("axis-aligned centroids") {
    const auto f = labeled({{1, 0}, {1, 0}, {-1, 0}}, {L::positive, L::positive, L::negative});
    const auto v = fit_concept_vector(f.corpus, f.view, L::positive, L::negative);
    CHECK(std::vector<double>(v.direction().begin(), v.direction().end()) == std::vector<double>{1.0, 0.0});
    CHECK(v.n_target() == 2);
    CHECK(v.n_source() == 1);
    CHECK(v.contrast() == Contrast{L::negative, L::positive});
    CHECK(v.source_corpus() == "fixture");
    CHECK(v.provenance() == "fixture:valence:negative->positive");
}

TEST_CASE("fit errors") {
    const auto f = labeled({{1, 0}, {1, 0}, {1, 0}}, {L::positive, L::negative, L::positive});
    CHECK_THROWS_AS(fit_concept_vector(f.corpus, f.view, L::positive, L::negative), DegenerateError);
    CHECK_THROWS_AS(fit_concept_vector(f.corpus, f.view, L::positive, L::neutral), DegenerateError);
    CHECK_THROWS_AS(fit_concept_vector(f.corpus, f.view, L::positive, L::positive), DataError);
    const auto other = labeled({{1, 0}, {0, 1}}, {L::positive, L::negative});
    CHECK_THROWS_AS(fit_concept_vector(f.corpus, other.view, L::positive, L::negative), DataError);
    CHECK_THROWS_AS(fit_pairwise_vectors(other.corpus, other.view), DegenerateError);
}

TEST_CASE("unit norm and antisymmetry over random fits") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto s = generate_synthetic_corpus({60, 2 + static_cast<std::size_t>(trial) % 30,
                                                  static_cast<std::uint64_t>(trial), 0.3,
                                                  static_cast<std::uint64_t>(trial) + 100});
        const auto view = assign_polarity(s.corpus, AffectDimension::valence);
        const auto a = fit_concept_vector(s.corpus, view, L::positive, L::negative);
        const auto b = fit_concept_vector(s.corpus, view, L::negative, L::positive);
        CHECK(std::abs(norm(a.direction()) - 1.0) <= 1e-9);
        for (std::size_t j = 0; j < a.dim(); ++j) CHECK(std::abs(a.direction()[j] + b.direction()[j]) <= 1e-12);
    }
}

TEST_CASE("direction recovery on a noisy synthetic corpus") {
    const auto s = generate_synthetic_corpus({2000, 64, 17, 0.5, 18});
    const auto view = assign_polarity(s.corpus, AffectDimension::valence);
    const auto v = fit_concept_vector(s.corpus, view, L::positive, L::negative);
    const double c = oracle::cosine(std::vector<double>(v.direction().begin(), v.direction().end()), s.direction);
    CHECK(std::abs(c) >= 0.95);
}

TEST_CASE("pairwise vectors") {
    SUBCASE("collinear centroids") {
        const auto f = labeled({{0, 0}, {1, 0}, {2, 0}}, {L::negative, L::neutral, L::positive});
        const auto p = fit_pairwise_vectors(f.corpus, f.view);
        for (const auto* v : {&p.neg_pos, &p.neg_neut, &p.neut_pos}) {
            CHECK(v->direction()[0] == 1.0);
            CHECK(v->direction()[1] == 0.0);
        }
        const auto m = cosine_matrix(p);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) CHECK(m.at(i, j) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("right triangle") {
        const auto f = labeled({{0, 0}, {1, 1}, {2, 0}}, {L::negative, L::neutral, L::positive});
        const auto p = fit_pairwise_vectors(f.corpus, f.view);
        CHECK(p.neg_neut.contrast() == Contrast{L::negative, L::neutral});
        CHECK(p.neut_pos.contrast() == Contrast{L::neutral, L::positive});
        CHECK(cosine(p.neg_pos.direction(), p.neg_neut.direction()) == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(cosine(p.neg_pos.direction(), p.neut_pos.direction()) == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(cosine(p.neg_neut.direction(), p.neut_pos.direction()) == doctest::Approx(0.0));
        CHECK(p.neg_neut.n_source() == 1);
    }
}

TEST_CASE("projection") {
    const auto f = labeled({{0.6f, 0.8f}, {-0.8f, 0.6f}, {0, 0}}, {L::positive, L::negative, L::neutral});
    const std::vector<double> dir = {static_cast<double>(0.6f), static_cast<double>(0.8f)};
    const double n = norm(dir);
    const ConceptVector v({dir[0] / n, dir[1] / n}, "x", AffectDimension::valence, {L::negative, L::positive}, 1, 1);
    const auto s = project_scores(f.corpus, v);
    CHECK_FALSE(s.normalized());
    CHECK(s.find("e0").value() == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::abs(s.find("e1").value()) <= 1e-7);
    CHECK(s.find("e2").value() == 0.0);
    CHECK(s.vector_ref() == "x:valence:negative->positive");

    const ConceptVector wrong({1, 0, 0}, "x", AffectDimension::valence, {L::negative, L::positive}, 1, 1);
    CHECK_THROWS_AS(project_scores(f.corpus, wrong), DataError);
}

TEST_CASE("projection matches an elementwise dot product") {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    const std::size_t dim = 48;
    std::vector<SentenceRecord> recs;
    for (int i = 0; i < 100; ++i) {
        std::vector<float> e(dim);
        for (auto& c : e) c = static_cast<float>(g(rng));
        recs.push_back(record("r" + std::to_string(i), e, 0.0));
    }
    const auto c = testing::corpus("rand", std::move(recs));
    std::vector<double> d(dim);
    for (auto& x : d) x = g(rng);
    const double n = norm(d);
    for (auto& x : d) x /= n;
    const ConceptVector v(d, "rand", AffectDimension::valence, {L::negative, L::positive}, 1, 1);
    const auto s = project_scores(c, v);
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(s.scores()[i] - oracle::dot(c[i].embedding, d)) <= 1e-12);
}

TEST_CASE("projection is linear in the embedding") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> small(-100, 100);
    const std::size_t dim = 16;
    std::vector<double> d(dim);
    for (auto& x : d) x = small(rng);
    const double n = norm(d);
    for (auto& x : d) x /= n;
    const ConceptVector v(d, "lin", AffectDimension::valence, {L::negative, L::positive}, 1, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<float> e1(dim), e2(dim), mix(dim);
        const int alpha = small(rng) / 10, beta = small(rng) / 10;
        for (std::size_t j = 0; j < dim; ++j) {
            e1[j] = static_cast<float>(small(rng));
            e2[j] = static_cast<float>(small(rng));
            mix[j] = static_cast<float>(alpha) * e1[j] + static_cast<float>(beta) * e2[j];  // exact in float
        }
        const auto c = testing::corpus("lin", {record("a", e1, 0.0), record("b", e2, 0.0), record("m", mix, 0.0)});
        const auto s = project_scores(c, v);
        CHECK(std::abs(s.scores()[2] - (alpha * s.scores()[0] + beta * s.scores()[1])) <= 1e-9);
    }
}

TEST_CASE("noiseless synthetic corpus ranks perfectly") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto s = generate_synthetic_corpus({1500, 32, seed, 0.0, seed * 7});
        const auto view = assign_polarity(s.corpus, AffectDimension::valence);
        const auto v = fit_concept_vector(s.corpus, view, L::positive, L::negative);
        const auto c = correlate_with_ratings(project_scores(s.corpus, v), s.corpus, AffectDimension::valence);
        CHECK(c.rho == 1.0);
        CHECK(c.n == 1500);
    }
}

TEST_CASE("z-score") {
    const ScoreSeries two("c", "v", {"a", "b"}, {0, 2}, false);
    const auto z = zscore(two);
    CHECK(z.normalized());
    CHECK(std::vector<double>(z.scores().begin(), z.scores().end()) == std::vector<double>{-1, 1});

    CHECK_THROWS_AS(zscore(ScoreSeries("c", "v", {"a", "b"}, {3, 3}, false)), DegenerateError);
    CHECK_THROWS_AS(zscore(ScoreSeries("c", "v", {"a"}, {3}, false)), DegenerateError);

    std::mt19937_64 rng(21);
    std::lognormal_distribution<double> g(1.0, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::string> ids;
        std::vector<double> x;
        for (int i = 0; i < 500; ++i) {
            ids.push_back(std::to_string(i));
            x.push_back(g(rng) - 3.0);
        }
        const ScoreSeries s("c", "v", ids, x, false);
        const auto zs = zscore(s);
        double m = 0, v = 0;
        for (double c : zs.scores()) m += c;
        m /= 500;
        for (double c : zs.scores()) v += (c - m) * (c - m);
        CHECK(std::abs(m) <= 1e-12);
        CHECK(std::abs(std::sqrt(v / 500) - 1.0) <= 1e-12);

        const auto again = zscore(zs);
        for (std::size_t i = 0; i < 500; ++i) CHECK(std::abs(again.scores()[i] - zs.scores()[i]) <= 1e-12);

        std::vector<double> ref(500);
        for (auto& r : ref) r = g(rng);
        CHECK(spearman(s.scores(), ref) == spearman(zs.scores(), ref));
        CHECK(spearman(s.scores(), zs.scores()) == 1.0);
    }
}

TEST_CASE("score series lookups") {
    const ScoreSeries s("c", "v", {"a", "b"}, {1, 2}, false);
    CHECK(s.find("b") == std::optional<double>(2));
    CHECK_FALSE(s.find("z").has_value());
    CHECK_THROWS_AS(ScoreSeries("c", "v", {"a", "a"}, {1, 2}, false), DataError);
    CHECK_THROWS_AS(ScoreSeries("c", "v", {"a"}, {1, 2}, false), DataError);
}

TEST_CASE("concept vector invariants") {
    CHECK_THROWS_AS(ConceptVector({1, 1}, "x", AffectDimension::valence, {L::negative, L::positive}, 1, 1), DataError);
    CHECK_THROWS_AS(ConceptVector({1, 0}, "x", AffectDimension::valence, {L::negative, L::positive}, 0, 1), DataError);
    CHECK_THROWS_AS(ConceptVector({1, 0}, "x", AffectDimension::valence, {L::neutral, L::neutral}, 1, 1), DataError);
    CHECK_THROWS_AS(ConceptVector({}, "x", AffectDimension::valence, {L::negative, L::positive}, 1, 1), DataError);
}

TEST_CASE("vector file") {
    const auto s = generate_synthetic_corpus({400, 24, 5, 0.2, 6, "vec \"src\""});
    const auto view = assign_polarity(s.corpus, AffectDimension::valence);
    const auto v = fit_concept_vector(s.corpus, view, L::neutral, L::negative);

    SUBCASE("round trip") {
        testing::TempDir dir;
        save_vector(v, dir / "v.json");
        const auto back = load_vector(dir / "v.json");
        CHECK(back == v);
    }
    SUBCASE("layout and schema") {
        const std::string text = vector_to_json(v);
        CHECK(text.rfind(R"({"format":"cvp-vector","version":1,"dim":24,"dimension":"valence",)"
                         R"("contrast":["negative","neutral"],"source_corpus":"vec \"src\"",)",
                         0) == 0);
        const auto j = nlohmann::ordered_json::parse(text);
        const std::vector<std::string> keys = {"format", "version", "dim", "dimension", "contrast",
                                               "source_corpus", "n_source", "n_target", "direction"};
        std::vector<std::string> got;
        for (const auto& [k, _] : j.items()) got.push_back(k);
        CHECK(got == keys);
        CHECK(j["n_source"].is_number_unsigned());
        CHECK(j["direction"].size() == 24);
        for (const auto& c : j["direction"]) CHECK(c.is_number_float());
    }
    SUBCASE("rejects malformed files") {
        auto j = nlohmann::ordered_json::parse(vector_to_json(v));
        auto broken = [&](auto mutate) {
            auto copy = j;
            mutate(copy);
            return copy.dump();
        };
        CHECK_THROWS_AS(vector_from_json("not json"), DataError);
        CHECK_THROWS_AS(vector_from_json(broken([](auto& x) { x["format"] = "cvp-corpus"; })), DataError);
        CHECK_THROWS_AS(vector_from_json(broken([](auto& x) { x["dim"] = 3; })), DataError);
        CHECK_THROWS_AS(vector_from_json(broken([](auto& x) { x["direction"][0] = 5.0; })), DataError);
        CHECK_THROWS_AS(vector_from_json(broken([](auto& x) { x["contrast"][0] = "up"; })), DataError);
        CHECK_THROWS_AS(vector_from_json(broken([](auto& x) { x["n_target"] = 0; })), DataError);
        CHECK_THROWS_AS(vector_from_json(broken([](auto& x) { x.erase("dimension"); })), DataError);
    }
}
