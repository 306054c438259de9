#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "docalign/geometry.hpp"
#include "docalign/ocr_ingest.hpp"

namespace docalign {

// Continuous word box (the synthetic generator produces subpixel geometry).
struct BoxF {
    double left = 0.0;
    double top = 0.0;
    double width = 0.0;
    double height = 0.0;

    friend bool operator==(const BoxF&, const BoxF&) = default;
};

// A matchable word: normalized token as the match key, box centroid as the
// keypoint location.
struct WordFeature {
    std::string token;
    std::string raw_text;
    Point2 centroid;  // centroid.x = left + width/2, centroid.y = top + height/2
    BoxF bbox;
    std::optional<float> confidence;

    friend bool operator==(const WordFeature&, const WordFeature&) = default;
};

struct FeatureSet {
    std::vector<WordFeature> features;
    double page_width = 0.0;
    double page_height = 0.0;
    std::string source_label;

    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;
};

class StopwordList {
  public:
    // The embedded default English list (~170 function words).
    static const StopwordList& default_english();
    // One pre-normalized token per line, '#' starts a comment.
    static StopwordList from_file(const std::filesystem::path& path);
    static StopwordList from_tokens(std::vector<std::string> tokens);
    static StopwordList empty();

    bool contains(std::string_view token) const;
    std::size_t size() const { return tokens_.size(); }

  private:
    std::unordered_set<std::string> tokens_;
};

struct ExtractConfig {
    // Also filter tokens occurring more than
    // max(frequency_min_count, frequency_fraction * word count) times.
    bool frequency_filter = true;
    std::size_t frequency_min_count = 5;
    double frequency_fraction = 0.02;
};

// Casefolds, strips leading/trailing punctuation and symbols, removes any
// whitespace. Returns "" when nothing remains; interior punctuation
// (hyphens, apostrophes) is retained. Total function.
std::string normalize_token(std::string_view raw);

// One WordFeature per word whose normalized token is non-empty and not a
// stopword; page order is preserved.
FeatureSet extract_features(const Page& page, const StopwordList& stopwords,
                            const ExtractConfig& config = {});

// Subpixel-geometry variant used by the synthetic generator.
struct SubpixelWord {
    std::string text;
    BoxF box;
    std::optional<float> confidence;
};
FeatureSet extract_features(const std::vector<SubpixelWord>& words,
                            double page_width, double page_height,
                            std::string source_label,
                            const StopwordList& stopwords,
                            const ExtractConfig& config = {});

}  // namespace docalign
