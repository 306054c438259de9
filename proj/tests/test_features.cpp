#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "docalign/errors.hpp"
#include "docalign/features.hpp"
#include "docalign/random.hpp"

using namespace docalign;

namespace {

Page make_page(std::vector<std::string> texts) {
    Page p;
    p.page_width = 2000;
    p.page_height = 1500;
    int i = 0;
    for (std::string& t : texts) {
        RawWord w;
        w.text = std::move(t);
        w.left = (i % 15) * 100;
        w.top = 10 + (i / 15) * 30;
        w.width = 80;
        w.height = 20;
        ++i;
        p.words.push_back(std::move(w));
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("features");

TEST_CASE("normalize_token: casefold and edge punctuation") {
    CHECK(normalize_token("Court,") == "court");
    CHECK(normalize_token("---") == "");
    CHECK(normalize_token("o'clock") == "o'clock");
    CHECK(normalize_token("(hello)") == "hello");
    CHECK(normalize_token("WORD") == "word");
    CHECK(normalize_token("co-op.") == "co-op");
    CHECK(normalize_token("$3.50") == "3.50");
    CHECK(normalize_token("") == "");
    CHECK(normalize_token("...") == "");
    CHECK(normalize_token("a") == "a");
    CHECK(normalize_token("1984") == "1984");  // numbers are kept
}

TEST_CASE("normalize_token: non-ASCII input") {
    CHECK(normalize_token("Caf\xC3\xA9") == "caf\xC3\xA9");      // É stays é
    CHECK(normalize_token("\xC3\x89TAT") == "\xC3\xA9tat");      // ÉTAT
    CHECK(normalize_token("Stra\xC3\x9F""e") == "strasse");      // ß -> ss
    // Curly quotes (U+201C/U+201D) strip like ASCII quotes.
    CHECK(normalize_token("\xE2\x80\x9Cquote\xE2\x80\x9D") == "quote");
    // Interior whitespace never survives.
    CHECK(normalize_token("a b") == "ab");
}

TEST_CASE("extract_features: stopword filtering") {
    const Page p = make_page({"the", "Court", "of"});
    const FeatureSet fs = extract_features(p, StopwordList::default_english());
    REQUIRE(fs.features.size() == 1);
    CHECK(fs.features[0].token == "court");
    CHECK(fs.features[0].raw_text == "Court");
}

TEST_CASE("extract_features: empty page") {
    const FeatureSet fs =
        extract_features(make_page({}), StopwordList::default_english());
    CHECK(fs.features.empty());
}

TEST_CASE("extract_features: centroid arithmetic") {
    Page p;
    p.page_width = 2000;
    p.page_height = 1500;
    p.words.push_back({"word", 100, 50, 80, 20, std::nullopt});
    const FeatureSet fs = extract_features(p, StopwordList::default_english());
    REQUIRE(fs.features.size() == 1);
    CHECK(fs.features[0].centroid.x == 140.0);
    CHECK(fs.features[0].centroid.y == 60.0);
}

TEST_CASE("extract_features: punctuation-only words vanish") {
    const Page p = make_page({"---", "***", "real"});
    const FeatureSet fs = extract_features(p, StopwordList::default_english());
    REQUIRE(fs.features.size() == 1);
    CHECK(fs.features[0].token == "real");
}

TEST_CASE("extract_features: document-frequency cap") {
    // 12 occurrences of "invoice" among 20 words: cap = max(5, 0.4) = 5.
    std::vector<std::string> texts;
    for (int i = 0; i < 12; ++i) texts.push_back("invoice");
    for (int i = 0; i < 8; ++i) texts.push_back("unique" + std::to_string(i));
    const Page p = make_page(texts);

    const FeatureSet filtered =
        extract_features(p, StopwordList::default_english());
    CHECK(filtered.features.size() == 8);

    ExtractConfig keep_all;
    keep_all.frequency_filter = false;
    const FeatureSet unfiltered =
        extract_features(p, StopwordList::default_english(), keep_all);
    CHECK(unfiltered.features.size() == 20);
}

TEST_CASE("extract_features: token count never exceeds word count") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::string> texts;
        const std::size_t n = uniform_index(rng, 30);
        for (std::size_t i = 0; i < n; ++i) {
            std::string t;
            const std::size_t len = 1 + uniform_index(rng, 8);
            for (std::size_t k = 0; k < len; ++k) {
                t.push_back(static_cast<char>('a' + uniform_index(rng, 26)));
            }
            texts.push_back(std::move(t));
        }
        const Page p = make_page(texts);
        const FeatureSet fs =
            extract_features(p, StopwordList::default_english());
        CHECK(fs.features.size() <= p.words.size());
        for (const WordFeature& f : fs.features) {
            CHECK(normalize_token(f.raw_text) == f.token);
            CHECK(f.centroid.x == f.bbox.left + f.bbox.width / 2.0);
            CHECK(f.centroid.y == f.bbox.top + f.bbox.height / 2.0);
        }
    }
}

TEST_CASE("extract_features: idempotent on its own output") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        // Tokens kept below the frequency cap so re-extraction sees the same
        // decisions.
        std::vector<std::string> texts;
        const std::size_t n = 4 + uniform_index(rng, 30);
        for (std::size_t i = 0; i < n; ++i) {
            texts.push_back("w" + std::to_string(uniform_index(rng, 40)));
        }
        const Page p = make_page(texts);
        const FeatureSet once =
            extract_features(p, StopwordList::default_english());

        Page implied;
        implied.page_width = p.page_width;
        implied.page_height = p.page_height;
        for (const WordFeature& f : once.features) {
            implied.words.push_back({f.raw_text,
                                     static_cast<int>(f.bbox.left),
                                     static_cast<int>(f.bbox.top),
                                     static_cast<int>(f.bbox.width),
                                     static_cast<int>(f.bbox.height),
                                     f.confidence});
        }
        const FeatureSet twice =
            extract_features(implied, StopwordList::default_english());
        CHECK(once.features == twice.features);
    }
}

TEST_CASE("stopword list: defaults and file override") {
    const StopwordList& def = StopwordList::default_english();
    CHECK(def.contains("the"));
    CHECK(def.contains("of"));
    CHECK(def.size() > 150);
    CHECK_FALSE(def.contains("court"));

    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "docalign_stopwords_test.txt";
    {
        std::ofstream out(path);
        out << "# custom list\n";
        out << "alpha\n";
        out << "beta # trailing comment\n";
        out << "\n";
    }
    const StopwordList custom = StopwordList::from_file(path);
    CHECK(custom.contains("alpha"));
    CHECK(custom.contains("beta"));
    CHECK_FALSE(custom.contains("the"));
    CHECK(custom.size() == 2);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(StopwordList::from_file("/nonexistent/stopwords.txt"),
                    IoError);
}

TEST_SUITE_END();
