#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "docalign/estimation.hpp"
#include "docalign/geometry.hpp"
#include "docalign/ocr_ingest.hpp"

namespace docalign {

// {"h": [[h11,h12,h13],[h21,h22,h23],[h31,h32,h33]]}, full double precision.
std::string homography_to_json(const Homography& h);
Homography homography_from_json(std::string_view text);

// Homography plus inlier indices, iterations_run, mean_sqrt_ste, converged.
std::string estimation_result_to_json(const EstimationResult& r);
EstimationResult estimation_result_from_json(std::string_view text);

// Ground-truth sidecar for synthetic pairs: h_true, the page dimensions the
// corner metric is evaluated on, and the surviving correspondence indices.
struct GroundTruthFile {
    Homography h_true;
    double page_width = 0.0;
    double page_height = 0.0;
    std::vector<std::pair<std::size_t, std::size_t>> true_correspondences;
};
std::string ground_truth_to_json(const GroundTruthFile& gt);
GroundTruthFile ground_truth_from_json(std::string_view text);

// Words-JSON document (the parse_words_json schema).
std::string page_to_words_json(const Page& page);

}  // namespace docalign
