#pragma once

#include <vector>

#include "docalign/geometry.hpp"
#include "docalign/matching.hpp"

namespace docalign {

struct ErrorReport {
    std::vector<double> per_point;  // sqrt of per-correspondence STE, pixels
    double mean = 0.0;              // mean of roots (the headline number)
    double median = 0.0;
    double max = 0.0;
    double rms = 0.0;  // root of mean STE, reported as an alternative
    std::size_t count = 0;
};

// ||dst - H src||^2 + ||src - H^-1 dst||^2, squared pixels.
double symmetric_transfer_error(const Homography& h, const Correspondence& c);

// Per-point sqrt-STE statistics. Throws EmptyInputError on no matches.
ErrorReport error_report(const Homography& h,
                         const std::vector<Correspondence>& matches);

// Max distance between the four page corners mapped by the two homographies.
double max_corner_reprojection_error(const Homography& estimated,
                                     const Homography& reference,
                                     double page_width, double page_height);

}  // namespace docalign
