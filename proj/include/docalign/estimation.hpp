#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "docalign/geometry.hpp"
#include "docalign/matching.hpp"

namespace docalign {

struct RansacConfig {
    double confidence = 0.99;        // p
    double assumed_error_rate = 0.5; // e, the initial outlier-rate estimate
    double inlier_threshold = 3.0;   // tau, pixels, on sqrt of the symmetric transfer error
    std::int64_t max_iterations = 10000;
    bool adaptive = true;  // re-estimate e from the best inlier ratio
    // Enumerate every 4-subset in lexicographic order instead of sampling;
    // equivalent to forcing N = C(n, 4) without repetition.
    bool exhaustive = false;
    std::uint64_t seed = 0;
};

struct EstimationResult {
    Homography homography;
    // Indices into the input match list, ascending. `inliers` is the final
    // set after the refit's single re-classification pass;
    // pre_refit_inliers is the selection-stage set of the best sampled model.
    std::vector<std::size_t> inliers;
    std::vector<std::size_t> pre_refit_inliers;
    std::int64_t iterations_run = 0;
    double mean_sqrt_ste = std::numeric_limits<double>::quiet_NaN();
    bool converged = false;
};

// Normalized direct linear transform on n >= 4 correspondences: Hartley
// normalization of both point sets, SVD of the 2n x 9 system, denormalize,
// scale-normalize. Throws DegenerateConfigurationError /
// RankDeficientError / InsufficientMatchesError.
Homography dlt_homography(const std::vector<Correspondence>& matches);

// ceil(log(1-p) / log(1 - (1-e)^s)); 1 for e = 0. Throws DomainError
// outside 0 < p < 1, 0 <= e < 1, s >= 1.
std::int64_t ransac_iterations(double p, double e, int s);

// RANSAC over 4-correspondence samples with final refit on the best model's
// inliers and one re-classification pass. Deterministic in config.seed.
EstimationResult estimate_ransac(const std::vector<Correspondence>& matches,
                                 const RansacConfig& config);

// Test oracle: evaluates every non-degenerate 4-subset (|matches| <= 20) and
// returns the best model under the same scoring as estimate_ransac, without
// the refit step. Throws SizeGuardError above 20 matches.
EstimationResult exhaustive_best_model(const std::vector<Correspondence>& matches,
                                       double inlier_threshold);

}  // namespace docalign
