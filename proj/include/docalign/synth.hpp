#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "docalign/features.hpp"
#include "docalign/geometry.hpp"
#include "docalign/ocr_ingest.hpp"

namespace docalign {

enum class HomographyKind {
    kTranslation,
    kSimilarity,   // + rotation up to 15 deg, scale in [0.8, 1.25]
    kAffine,       // + shear up to 0.1
    kPerspective,  // + projective row, corners kept at w > 0.1
};

struct SynthConfig {
    std::size_t word_count = 200;
    // Tokens are drawn with replacement from the first vocabulary_size
    // entries of the embedded vocabulary; smaller than word_count forces
    // duplicate tokens.
    std::size_t vocabulary_size = 1000;
    int page_width = 2200;
    int page_height = 1700;
    double centroid_noise_sigma = 0.0;   // pixels, truncated at 4 sigma
    double char_substitution_rate = 0.0; // per character of each B word
    double word_drop_rate = 0.0;         // per B word
    double outlier_injection_rate = 0.0; // extra B words per original word
    HomographyKind kind = HomographyKind::kPerspective;
    std::uint64_t seed = 0;
};

// Two feature sets with a known generating homography. h_true maps the
// doc_a frame to the doc_b frame. true_correspondences holds (doc_a index,
// doc_b index) pairs for words that survived mapping and corruption;
// before centroid jitter the paired centroids satisfy
// doc_b = apply(h_true, doc_a) up to double rounding, and after jitter they
// stay within 4 * centroid_noise_sigma.
struct GroundTruthPair {
    FeatureSet doc_a;
    FeatureSet doc_b;
    Homography h_true;
    std::vector<std::pair<std::size_t, std::size_t>> true_correspondences;
};

// Deterministic in config.seed. Corruption order is fixed:
// word drop, character substitution, centroid jitter, outlier injection.
// Throws PlacementError when non-overlapping placement fails.
GroundTruthPair generate_pair(const SynthConfig& config);

// Random transform of the given kind; each kind adds parameters on top of
// the previous one (shift up to 20% of the page, then rotation/scale, then
// shear, then the projective row). Deterministic in seed.
Homography make_random_homography(HomographyKind kind, int page_width,
                                  int page_height, std::uint64_t seed);

// The embedded vocabulary: common English non-stopword tokens, already
// normalized.
const std::vector<std::string>& synth_vocabulary();

// Integer-quantized Page for Words-JSON emission. Subpixel boxes are rounded
// and clamped to the page; rounding moves centroids by up to ~0.75 px.
Page feature_set_to_page(const FeatureSet& fs, std::string source_label);

const char* to_string(HomographyKind kind);
HomographyKind homography_kind_from_string(std::string_view name);

}  // namespace docalign
