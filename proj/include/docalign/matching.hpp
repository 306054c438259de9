#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "docalign/features.hpp"
#include "docalign/geometry.hpp"

namespace docalign {

// A matched word pair. Coordinates are pixel centroids in each document's
// own frame; ambiguity_degree is the product of the token's multiplicities
// in the two documents (1 = the token was unique in both).
struct Correspondence {
    Point2 src;
    Point2 dst;
    std::string token;
    int ambiguity_degree = 1;

    friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

enum class AmbiguityPolicy {
    kMinDistance,    // greedily pair duplicate tokens by nearest centroids
    kDropAmbiguous,  // emit nothing for tokens that are duplicated anywhere
};

enum class CoordinateFrame {
    kPixels,
    kUnitNormalized,  // x/page_width, y/page_height of the respective document
};

struct MatchConfig {
    AmbiguityPolicy ambiguity_policy = AmbiguityPolicy::kMinDistance;
    // Documents may differ in resolution, so duplicate resolution defaults to
    // unit-normalized distances.
    CoordinateFrame coordinate_frame = CoordinateFrame::kUnitNormalized;
};

struct MatchStats {
    std::size_t total = 0;
    std::size_t unambiguous = 0;
    std::size_t ambiguous = 0;
    std::size_t distinct_tokens = 0;
    double fraction_ambiguous = 0.0;
};

// Bipartite token matching. Each feature on either side appears in at most
// one correspondence; output is ordered by (token, src.x, src.y).
std::vector<Correspondence> match_features(const FeatureSet& a,
                                           const FeatureSet& b,
                                           const MatchConfig& config = {});

MatchStats match_statistics(const std::vector<Correspondence>& matches);

// Line format for CLI piping:
// token\tsrc_x\tsrc_y\tdst_x\tdst_y\tambiguity (pixel coordinates).
std::string write_match_lines(const std::vector<Correspondence>& matches);
std::vector<Correspondence> read_match_lines(std::string_view input);

}  // namespace docalign
