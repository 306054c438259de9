#include <doctest.h>

#include <random>
#include <set>

#include "docalign/errors.hpp"
#include "docalign/matching.hpp"
#include "docalign/random.hpp"

using namespace docalign;

namespace {

FeatureSet set_of(std::vector<std::pair<std::string, Point2>> entries,
                  double pw = 1000.0, double ph = 1000.0) {
    FeatureSet fs;
    fs.page_width = pw;
    fs.page_height = ph;
    for (auto& [token, c] : entries) {
        WordFeature f;
        f.token = token;
        f.raw_text = token;
        f.centroid = c;
        f.bbox = {c.x - 10.0, c.y - 5.0, 20.0, 10.0};
        fs.features.push_back(std::move(f));
    }
    return fs;
}

FeatureSet random_set(std::mt19937_64& rng, std::size_t n,
                      std::size_t token_pool) {
    std::vector<std::pair<std::string, Point2>> entries;
    for (std::size_t i = 0; i < n; ++i) {
        entries.push_back({"t" + std::to_string(uniform_index(rng, token_pool)),
                           {uniform_real(rng, 0, 1000), uniform_real(rng, 0, 1000)}});
    }
    return set_of(std::move(entries));
}

}  // namespace

TEST_SUITE_BEGIN("matching");

TEST_CASE("unique tokens pair directly") {
    const FeatureSet a =
        set_of({{"court", {140, 60}}, {"signed", {300, 400}}});
    const FeatureSet b =
        set_of({{"court", {150, 65}}, {"signed", {310, 410}}});
    const auto matches = match_features(a, b);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].token == "court");
    CHECK(matches[0].src == Point2{140, 60});
    CHECK(matches[0].dst == Point2{150, 65});
    CHECK(matches[0].ambiguity_degree == 1);
    CHECK(matches[1].token == "signed");
    CHECK(matches[1].ambiguity_degree == 1);
}

TEST_CASE("duplicate tokens: greedy nearest pairing") {
    const FeatureSet a = set_of({{"date", {100, 100}}, {"date", {500, 500}}});
    const FeatureSet b = set_of({{"date", {110, 105}}, {"date", {505, 495}}});
    const auto matches = match_features(a, b);
    REQUIRE(matches.size() == 2);
    // Hand enumeration of the two pairings: nearest pairs are
    // (100,100)-(110,105) and (500,500)-(505,495).
    CHECK(matches[0].src == Point2{100, 100});
    CHECK(matches[0].dst == Point2{110, 105});
    CHECK(matches[1].src == Point2{500, 500});
    CHECK(matches[1].dst == Point2{505, 495});
    CHECK(matches[0].ambiguity_degree == 4);
    CHECK(matches[1].ambiguity_degree == 4);
}

TEST_CASE("duplicate tokens: drop_ambiguous removes them") {
    const FeatureSet a = set_of({{"date", {100, 100}},
                                 {"date", {500, 500}},
                                 {"title", {50, 40}}});
    const FeatureSet b = set_of({{"date", {110, 105}},
                                 {"date", {505, 495}},
                                 {"title", {55, 42}}});
    MatchConfig config;
    config.ambiguity_policy = AmbiguityPolicy::kDropAmbiguous;
    const auto matches = match_features(a, b, config);
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].token == "title");
    CHECK(matches[0].ambiguity_degree == 1);
}

TEST_CASE("uneven multiplicity pairs min(m, n) and degree m*n") {
    const FeatureSet a = set_of({{"x", {0, 0}}, {"x", {100, 0}}, {"x", {200, 0}}});
    const FeatureSet b = set_of({{"x", {1, 0}}, {"x", {201, 0}}});
    const auto matches = match_features(a, b);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].ambiguity_degree == 6);
    CHECK(matches[0].src == Point2{0, 0});
    CHECK(matches[1].src == Point2{200, 0});
}

TEST_CASE("unit-normalized frame compensates resolution differences") {
    // Same layout at 1x and 2x resolution. In raw pixels the nearest cross
    // pair would be (300,100)-(220,200); in the unit frame the true pairing
    // wins.
    const FeatureSet a =
        set_of({{"page", {100, 100}}, {"page", {300, 100}}}, 1000, 1000);
    const FeatureSet b =
        set_of({{"page", {220, 200}}, {"page", {620, 200}}}, 2000, 2000);
    const auto matches = match_features(a, b);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].src == Point2{100, 100});
    CHECK(matches[0].dst == Point2{220, 200});
    CHECK(matches[1].src == Point2{300, 100});
    CHECK(matches[1].dst == Point2{620, 200});

    MatchConfig pixels;
    pixels.coordinate_frame = CoordinateFrame::kPixels;
    const auto pixel_matches = match_features(a, b, pixels);
    REQUIRE(pixel_matches.size() == 2);
    CHECK(pixel_matches[0].src == Point2{100, 100});
    CHECK(pixel_matches[0].dst == Point2{620, 200});  // greedy cross-pairing
}

TEST_CASE("output ordering is (token, src.x, src.y)") {
    const FeatureSet a = set_of(
        {{"zz", {1, 1}}, {"aa", {5, 5}}, {"mm", {3, 3}}, {"aa", {2, 9}}});
    const FeatureSet b = set_of(
        {{"zz", {1, 1}}, {"aa", {5, 5}}, {"mm", {3, 3}}, {"aa", {2, 9}}});
    const auto matches = match_features(a, b);
    REQUIRE(matches.size() == 4);
    CHECK(matches[0].token == "aa");
    CHECK(matches[0].src.x == 2);
    CHECK(matches[1].token == "aa");
    CHECK(matches[1].src.x == 5);
    CHECK(matches[2].token == "mm");
    CHECK(matches[3].token == "zz");
}

TEST_CASE("injectivity: no endpoint is used twice") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const FeatureSet a = random_set(rng, 1 + uniform_index(rng, 30), 8);
        const FeatureSet b = random_set(rng, 1 + uniform_index(rng, 30), 8);
        const auto matches = match_features(a, b);
        std::set<std::pair<double, double>> src_seen, dst_seen;
        for (const Correspondence& m : matches) {
            CHECK(src_seen.insert({m.src.x, m.src.y}).second);
            CHECK(dst_seen.insert({m.dst.x, m.dst.y}).second);
        }
    }
}

TEST_CASE("symmetry for unique tokens") {
    std::mt19937_64 rng(43);
    const FeatureSet a = random_set(rng, 20, 1000);  // tokens ~unique
    const FeatureSet b = random_set(rng, 20, 1000);
    const auto ab = match_features(a, b);
    const auto ba = match_features(b, a);
    REQUIRE(ab.size() == ba.size());
    std::set<std::tuple<std::string, double, double, double, double>> lhs, rhs;
    for (const Correspondence& m : ab) {
        lhs.insert({m.token, m.src.x, m.src.y, m.dst.x, m.dst.y});
    }
    for (const Correspondence& m : ba) {
        rhs.insert({m.token, m.dst.x, m.dst.y, m.src.x, m.src.y});
    }
    CHECK(lhs == rhs);
}

TEST_CASE("monotone degradation under min_distance") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        FeatureSet a = random_set(rng, 4 + uniform_index(rng, 20), 6);
        const FeatureSet b = random_set(rng, 4 + uniform_index(rng, 20), 6);
        const std::size_t before = match_features(a, b).size();
        a.features.erase(a.features.begin() +
                         static_cast<std::ptrdiff_t>(
                             uniform_index(rng, a.features.size())));
        const std::size_t after = match_features(a, b).size();
        CHECK(after <= before);
    }
}

TEST_CASE("drop_ambiguous output has only degree-1 pairs") {
    std::mt19937_64 rng(53);
    MatchConfig config;
    config.ambiguity_policy = AmbiguityPolicy::kDropAmbiguous;
    for (int trial = 0; trial < 20; ++trial) {
        const FeatureSet a = random_set(rng, 20, 5);
        const FeatureSet b = random_set(rng, 20, 5);
        for (const Correspondence& m : match_features(a, b, config)) {
            CHECK(m.ambiguity_degree == 1);
        }
    }
}

TEST_CASE("match_statistics") {
    std::vector<Correspondence> matches;
    for (int i = 0; i < 8; ++i) {
        matches.push_back({{1.0 * i, 0}, {1.0 * i, 1}, "t" + std::to_string(i), 1});
    }
    matches.push_back({{100, 0}, {100, 1}, "dup", 4});
    matches.push_back({{200, 0}, {200, 1}, "dup", 4});
    const MatchStats s = match_statistics(matches);
    CHECK(s.total == 10);
    CHECK(s.unambiguous == 8);
    CHECK(s.ambiguous == 2);
    CHECK(s.distinct_tokens == 9);
    CHECK(s.fraction_ambiguous == doctest::Approx(0.2));

    const MatchStats empty = match_statistics({});
    CHECK(empty.total == 0);
    CHECK(empty.fraction_ambiguous == 0.0);
}

TEST_CASE("flyer-scale fixture: 20 shared unique tokens give 20 matches") {
    std::vector<std::pair<std::string, Point2>> entries_a, entries_b;
    for (int i = 0; i < 20; ++i) {
        const std::string token = "flyer" + std::to_string(i);
        const Point2 pa{50.0 + 90.0 * (i % 5), 40.0 + 60.0 * (i / 5)};
        entries_a.push_back({token, pa});
        entries_b.push_back({token, {pa.x + 12.0, pa.y + 7.0}});
    }
    const auto matches =
        match_features(set_of(entries_a), set_of(entries_b));
    CHECK(matches.size() == 20);
    CHECK(match_statistics(matches).fraction_ambiguous == 0.0);
}

TEST_CASE("match line round-trip") {
    const FeatureSet a = set_of({{"court", {140.25, 60.5}},
                                 {"date", {10, 20}},
                                 {"date", {700, 800}}});
    const FeatureSet b = set_of({{"court", {150.125, 65.75}},
                                 {"date", {12, 22}},
                                 {"date", {702, 798}}});
    const auto matches = match_features(a, b);
    const std::string text = write_match_lines(matches);
    const auto parsed = read_match_lines(text);
    CHECK(parsed == matches);

    CHECK_THROWS_AS(read_match_lines("only\ttwo\n"), RowError);
    CHECK_THROWS_AS(read_match_lines("t\tx\t1\t2\t3\t1\n"), RowError);
}

TEST_SUITE_END();
