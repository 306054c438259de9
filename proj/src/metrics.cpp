#include "docalign/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

double squared_residual(const Eigen::Matrix3d& m, Point2 from, Point2 to) {
    const double w = m(2, 0) * from.x + m(2, 1) * from.y + m(2, 2);
    if (std::abs(w) <= 1e-12) {
        throw PointAtInfinityError("correspondence maps to infinity");
    }
    const double x = (m(0, 0) * from.x + m(0, 1) * from.y + m(0, 2)) / w;
    const double y = (m(1, 0) * from.x + m(1, 1) * from.y + m(1, 2)) / w;
    const double dx = to.x - x;
    const double dy = to.y - y;
    return dx * dx + dy * dy;
}

}  // namespace

double symmetric_transfer_error(const Homography& h, const Correspondence& c) {
    const Homography hi = invert(h);
    return squared_residual(h.matrix(), c.src, c.dst) +
           squared_residual(hi.matrix(), c.dst, c.src);
}

ErrorReport error_report(const Homography& h,
                         const std::vector<Correspondence>& matches) {
    if (matches.empty()) {
        throw EmptyInputError("error_report requires at least one match");
    }
    ErrorReport r;
    r.per_point.reserve(matches.size());
    double sum = 0.0;
    double sum_sq = 0.0;
    for (const Correspondence& c : matches) {
        const double ste = symmetric_transfer_error(h, c);
        const double root = std::sqrt(ste);
        r.per_point.push_back(root);
        sum += root;
        sum_sq += ste;
        r.max = std::max(r.max, root);
    }
    r.count = r.per_point.size();
    r.mean = sum / static_cast<double>(r.count);
    r.rms = std::sqrt(sum_sq / static_cast<double>(r.count));
    std::vector<double> sorted = r.per_point;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    r.median = sorted.size() % 2 == 1
                   ? sorted[mid]
                   : (sorted[mid - 1] + sorted[mid]) / 2.0;
    return r;
}

double max_corner_reprojection_error(const Homography& estimated,
                                     const Homography& reference,
                                     double page_width, double page_height) {
    const Point2 corners[4] = {{0.0, 0.0},
                               {page_width, 0.0},
                               {page_width, page_height},
                               {0.0, page_height}};
    double worst = 0.0;
    for (const Point2& c : corners) {
        const Point2 pe = apply(estimated, c);
        const Point2 pr = apply(reference, c);
        worst = std::max(worst, std::hypot(pe.x - pr.x, pe.y - pr.y));
    }
    return worst;
}

}  // namespace docalign
