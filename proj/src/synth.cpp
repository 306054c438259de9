#include "docalign/synth.hpp"

#include <algorithm>
#include <cmath>

#include "docalign/errors.hpp"
#include "docalign/random.hpp"

namespace docalign {

namespace {

constexpr double kCharWidth = 12.0;  // pixels per character, A side
constexpr double kWordHeight = 20.0;

struct PlacedBox {
    double left, top, width, height;
};

bool boxes_overlap(const PlacedBox& a, const PlacedBox& b) {
    return a.left < b.left + b.width && b.left < a.left + a.width &&
           a.top < b.top + b.height && b.top < a.top + a.height;
}

void check_config(const SynthConfig& c) {
    auto rate_ok = [](double r) { return r >= 0.0 && r < 1.0; };
    if (c.centroid_noise_sigma < 0.0) {
        throw DomainError("centroid_noise_sigma must be non-negative");
    }
    if (!rate_ok(c.char_substitution_rate) || !rate_ok(c.word_drop_rate) ||
        !rate_ok(c.outlier_injection_rate)) {
        throw DomainError("corruption rates must be in [0,1)");
    }
    if (c.word_count < 4) throw DomainError("word_count must be at least 4");
    if (c.page_width <= 0 || c.page_height <= 0) {
        throw DomainError("page dimensions must be positive");
    }
    if (c.vocabulary_size < 1) {
        throw DomainError("vocabulary_size must be at least 1");
    }
}

// Feature construction with the same filtering the extraction stage applies
// (stopwords and empty tokens; the document-frequency cap stays off because
// small synthetic vocabularies intentionally create heavy duplication).
// Returns the surviving input indices alongside the feature set.
FeatureSet featurize(const std::vector<SubpixelWord>& words, double page_width,
                     double page_height, std::string label,
                     std::vector<std::size_t>* survivors) {
    const StopwordList& stop = StopwordList::default_english();
    FeatureSet out;
    out.page_width = page_width;
    out.page_height = page_height;
    out.source_label = std::move(label);
    survivors->clear();
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::string token = normalize_token(words[i].text);
        if (token.empty() || stop.contains(token)) continue;
        WordFeature f;
        f.token = std::move(token);
        f.raw_text = words[i].text;
        f.bbox = words[i].box;
        f.centroid = {words[i].box.left + words[i].box.width / 2.0,
                      words[i].box.top + words[i].box.height / 2.0};
        f.confidence = words[i].confidence;
        out.features.push_back(std::move(f));
        survivors->push_back(i);
    }
    return out;
}

}  // namespace

Homography make_random_homography(HomographyKind kind, int page_width,
                                  int page_height, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const double pw = page_width;
    const double ph = page_height;

    const double tx = uniform_real(rng, -0.2, 0.2) * pw;
    const double ty = uniform_real(rng, -0.2, 0.2) * ph;
    double theta = 0.0, scale = 1.0, shear = 0.0;
    if (kind != HomographyKind::kTranslation) {
        theta = uniform_real(rng, -15.0, 15.0) * 3.14159265358979323846 / 180.0;
        scale = uniform_real(rng, 0.8, 1.25);
    }
    if (kind == HomographyKind::kAffine || kind == HomographyKind::kPerspective) {
        shear = uniform_real(rng, -0.1, 0.1);
    }

    // Linear part applied about the page center so content stays near the page.
    Eigen::Matrix2d lin;
    lin << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    Eigen::Matrix2d sh;
    sh << 1.0, shear, 0.0, 1.0;
    lin = scale * lin * sh;

    const Eigen::Vector2d center(pw / 2.0, ph / 2.0);
    const Eigen::Vector2d offset =
        center + Eigen::Vector2d(tx, ty) - lin * center;
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m.block<2, 2>(0, 0) = lin;
    m(0, 2) = offset(0);
    m(1, 2) = offset(1);

    if (kind == HomographyKind::kPerspective) {
        const double range = 1.5 / std::max(pw, ph);
        const Point2 corners[4] = {{0, 0}, {pw, 0}, {pw, ph}, {0, ph}};
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const double g1 = uniform_real(rng, -range, range);
            const double g2 = uniform_real(rng, -range, range);
            bool ok = true;
            for (const Point2& c : corners) {
                if (g1 * c.x + g2 * c.y + 1.0 <= 0.1) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            Eigen::Matrix3d p = m;
            p(2, 0) = g1;
            p(2, 1) = g2;
            if (std::abs(p.determinant()) <= 1e-12) continue;
            return Homography::from_matrix(p);
        }
        // Unreachable for sane page sizes; fall through to the affine part.
    }
    return Homography::from_matrix(m);
}

GroundTruthPair generate_pair(const SynthConfig& config) {
    check_config(config);
    std::mt19937_64 rng(config.seed);
    const double pw = config.page_width;
    const double ph = config.page_height;

    const std::vector<std::string>& vocab = synth_vocabulary();
    const std::size_t vocab_size = std::min(config.vocabulary_size, vocab.size());

    // Token draw, then non-overlapping integral placement on page A.
    std::vector<SubpixelWord> a_words(config.word_count);
    std::vector<PlacedBox> placed;
    placed.reserve(config.word_count);
    for (std::size_t i = 0; i < config.word_count; ++i) {
        const std::string& text = vocab[uniform_index(rng, vocab_size)];
        const double w = kCharWidth * static_cast<double>(text.size());
        const double h = kWordHeight;
        if (w >= pw || h >= ph) {
            throw PlacementError("page too small for word boxes");
        }
        bool ok = false;
        for (int attempt = 0; attempt < 1000 && !ok; ++attempt) {
            const double left = static_cast<double>(
                uniform_index(rng, static_cast<std::uint64_t>(pw - w) + 1));
            const double top = static_cast<double>(
                uniform_index(rng, static_cast<std::uint64_t>(ph - h) + 1));
            const PlacedBox box{left, top, w, h};
            ok = std::none_of(placed.begin(), placed.end(),
                              [&](const PlacedBox& other) {
                                  return boxes_overlap(box, other);
                              });
            if (ok) {
                placed.push_back(box);
                a_words[i] = {text, {left, top, w, h}, std::nullopt};
            }
        }
        if (!ok) {
            throw PlacementError("could not place word " + std::to_string(i) +
                                 " without overlap after 1000 attempts");
        }
    }

    GroundTruthPair pair;
    pair.h_true =
        make_random_homography(config.kind, config.page_width,
                               config.page_height, rng());

    // Map word boxes to page B. The B box takes the size of the axis-aligned
    // hull of the four mapped corners; its center is pinned to the exactly
    // mapped centroid. Words whose mapped centroid leaves the page are gone,
    // as they would be for a real scan.
    std::vector<SubpixelWord> b_words;
    std::vector<std::size_t> b_origin;  // index into a_words; npos = injected
    constexpr std::size_t kInjected = static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i < a_words.size(); ++i) {
        const BoxF& box = a_words[i].box;
        const Point2 corners[4] = {
            {box.left, box.top},
            {box.left + box.width, box.top},
            {box.left + box.width, box.top + box.height},
            {box.left, box.top + box.height}};
        double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
        Point2 centroid;
        try {
            centroid = apply(pair.h_true,
                             {box.left + box.width / 2.0,
                              box.top + box.height / 2.0});
            for (int k = 0; k < 4; ++k) {
                const Point2 p = apply(pair.h_true, corners[k]);
                min_x = k == 0 ? p.x : std::min(min_x, p.x);
                max_x = k == 0 ? p.x : std::max(max_x, p.x);
                min_y = k == 0 ? p.y : std::min(min_y, p.y);
                max_y = k == 0 ? p.y : std::max(max_y, p.y);
            }
        } catch (const PointAtInfinityError&) {
            continue;
        }
        if (centroid.x < 0.0 || centroid.x > pw || centroid.y < 0.0 ||
            centroid.y > ph) {
            continue;
        }
        const double bw = max_x - min_x;
        const double bh = max_y - min_y;
        b_words.push_back({a_words[i].text,
                           {centroid.x - bw / 2.0, centroid.y - bh / 2.0, bw, bh},
                           std::nullopt});
        b_origin.push_back(i);
    }

    // Corruption pass 1: word drop.
    {
        std::vector<SubpixelWord> kept;
        std::vector<std::size_t> kept_origin;
        for (std::size_t i = 0; i < b_words.size(); ++i) {
            if (uniform_unit(rng) < config.word_drop_rate) continue;
            kept.push_back(std::move(b_words[i]));
            kept_origin.push_back(b_origin[i]);
        }
        b_words = std::move(kept);
        b_origin = std::move(kept_origin);
    }

    // Pass 2: character substitution.
    if (config.char_substitution_rate > 0.0) {
        for (SubpixelWord& w : b_words) {
            for (char& c : w.text) {
                if (uniform_unit(rng) < config.char_substitution_rate) {
                    c = static_cast<char>('a' + uniform_index(rng, 26));
                }
            }
        }
    }

    // Pass 3: centroid jitter, truncated at 4 sigma, clamped to the page.
    if (config.centroid_noise_sigma > 0.0) {
        const double sigma = config.centroid_noise_sigma;
        const double limit_sq = 16.0 * sigma * sigma;
        for (SubpixelWord& w : b_words) {
            double dx = 0.0, dy = 0.0;
            for (int attempt = 0; attempt < 100; ++attempt) {
                dx = gaussian(rng, sigma);
                dy = gaussian(rng, sigma);
                if (dx * dx + dy * dy <= limit_sq) break;
                dx = dy = 0.0;
            }
            const double cx = w.box.left + w.box.width / 2.0;
            const double cy = w.box.top + w.box.height / 2.0;
            const double nx = std::clamp(cx + dx, 0.0, pw);
            const double ny = std::clamp(cy + dy, 0.0, ph);
            w.box.left += nx - cx;
            w.box.top += ny - cy;
        }
    }

    // Pass 4: outlier injection, duplicating existing tokens at random spots.
    const auto injected_count = static_cast<std::size_t>(
        std::llround(config.outlier_injection_rate *
                     static_cast<double>(config.word_count)));
    if (injected_count > 0 && !b_words.empty()) {
        const std::size_t existing = b_words.size();
        for (std::size_t k = 0; k < injected_count; ++k) {
            const std::string text = b_words[uniform_index(rng, existing)].text;
            const double w =
                std::min(kCharWidth * static_cast<double>(text.size()), pw - 1.0);
            const double h = std::min(kWordHeight, ph - 1.0);
            const double left = uniform_real(rng, 0.0, pw - w);
            const double top = uniform_real(rng, 0.0, ph - h);
            b_words.push_back({text, {left, top, w, h}, std::nullopt});
            b_origin.push_back(kInjected);
        }
    }

    std::vector<std::size_t> a_survivors, b_survivors;
    pair.doc_a = featurize(a_words, pw, ph, "synth-a", &a_survivors);
    pair.doc_b = featurize(b_words, pw, ph, "synth-b", &b_survivors);

    // The vocabulary contains no stopwords, so page A loses nothing.
    std::vector<std::size_t> a_feature_of(a_words.size(),
                                          static_cast<std::size_t>(-1));
    for (std::size_t f = 0; f < a_survivors.size(); ++f) {
        a_feature_of[a_survivors[f]] = f;
    }
    for (std::size_t f = 0; f < b_survivors.size(); ++f) {
        const std::size_t origin = b_origin[b_survivors[f]];
        if (origin == kInjected) continue;
        const std::size_t a_f = a_feature_of[origin];
        if (a_f == static_cast<std::size_t>(-1)) continue;
        pair.true_correspondences.emplace_back(a_f, f);
    }
    return pair;
}

Page feature_set_to_page(const FeatureSet& fs, std::string source_label) {
    Page page;
    page.source_label = std::move(source_label);
    page.page_width = static_cast<int>(std::lround(fs.page_width));
    page.page_height = static_cast<int>(std::lround(fs.page_height));
    for (const WordFeature& f : fs.features) {
        RawWord w;
        w.text = f.raw_text;
        w.left = std::clamp(static_cast<int>(std::lround(f.bbox.left)), 0,
                            page.page_width - 1);
        w.top = std::clamp(static_cast<int>(std::lround(f.bbox.top)), 0,
                           page.page_height - 1);
        w.width = std::clamp(static_cast<int>(std::lround(f.bbox.width)), 1,
                             page.page_width - w.left);
        w.height = std::clamp(static_cast<int>(std::lround(f.bbox.height)), 1,
                              page.page_height - w.top);
        w.confidence = f.confidence;
        page.words.push_back(std::move(w));
    }
    return page;
}

const char* to_string(HomographyKind kind) {
    switch (kind) {
        case HomographyKind::kTranslation: return "translation";
        case HomographyKind::kSimilarity: return "similarity";
        case HomographyKind::kAffine: return "affine";
        case HomographyKind::kPerspective: return "perspective";
    }
    return "unknown";
}

HomographyKind homography_kind_from_string(std::string_view name) {
    if (name == "translation") return HomographyKind::kTranslation;
    if (name == "similarity") return HomographyKind::kSimilarity;
    if (name == "affine") return HomographyKind::kAffine;
    if (name == "perspective") return HomographyKind::kPerspective;
    throw DomainError("unknown homography kind '" + std::string(name) + "'");
}

}  // namespace docalign
