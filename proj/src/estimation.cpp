#include "docalign/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SVD>

#include "docalign/errors.hpp"
#include "docalign/metrics.hpp"

namespace docalign {

namespace {

// Hartley normalization: centroid to origin, mean distance sqrt(2).
Eigen::Matrix3d hartley_transform(const std::vector<Point2>& pts) {
    double cx = 0.0, cy = 0.0;
    for (const Point2& p : pts) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    double mean_dist = 0.0;
    for (const Point2& p : pts) {
        mean_dist += std::hypot(p.x - cx, p.y - cy);
    }
    mean_dist /= static_cast<double>(pts.size());
    if (mean_dist <= 0.0) {
        throw DegenerateConfigurationError("all points coincide");
    }
    const double s = std::sqrt(2.0) / mean_dist;
    Eigen::Matrix3d t;
    t << s, 0, -s * cx, 0, s, -s * cy, 0, 0, 1;
    return t;
}

Point2 transform(const Eigen::Matrix3d& t, Point2 p) {
    return {t(0, 0) * p.x + t(0, 1) * p.y + t(0, 2),
            t(1, 0) * p.x + t(1, 1) * p.y + t(1, 2)};
}

Homography dlt_impl(const std::vector<Correspondence>& matches,
                    const std::vector<std::size_t>& idx) {
    const std::size_t n = idx.size();
    if (n < 4) {
        throw InsufficientMatchesError(
            "homography estimation needs at least 4 correspondences, got " +
            std::to_string(n));
    }
    std::vector<Point2> src(n), dst(n);
    for (std::size_t i = 0; i < n; ++i) {
        src[i] = matches[idx[i]].src;
        dst[i] = matches[idx[i]].dst;
    }
    if (n == 4) {
        if (sample_is_degenerate({src[0], src[1], src[2], src[3]})) {
            throw DegenerateConfigurationError(
                "minimal sample has collinear source points");
        }
        if (sample_is_degenerate({dst[0], dst[1], dst[2], dst[3]})) {
            throw DegenerateConfigurationError(
                "minimal sample has collinear destination points");
        }
    }

    const Eigen::Matrix3d ts = hartley_transform(src);
    const Eigen::Matrix3d td = hartley_transform(dst);

    Eigen::MatrixXd a(2 * n, 9);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 s = transform(ts, src[i]);
        const Point2 d = transform(td, dst[i]);
        a.row(2 * i) << -s.x, -s.y, -1, 0, 0, 0, d.x * s.x, d.x * s.y, d.x;
        a.row(2 * i + 1) << 0, 0, 0, -s.x, -s.y, -1, d.y * s.x, d.y * s.y, d.y;
    }

    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv(7) - sv(8) <= 1e-12) {
        throw RankDeficientError(
            "DLT system does not determine a unique homography");
    }
    const Eigen::VectorXd h = svd.matrixV().col(8);
    Eigen::Matrix3d hm;
    hm << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);
    return Homography::from_matrix(td.inverse() * hm * ts);
}

// sqrt of the symmetric transfer error, +inf when either direction maps to
// infinity (such a correspondence can never be an inlier).
double sqrt_ste_or_inf(const Eigen::Matrix3d& fwd, const Eigen::Matrix3d& bwd,
                       const Correspondence& c) {
    double total = 0.0;
    const Point2 ends[2] = {c.src, c.dst};
    const Eigen::Matrix3d* mats[2] = {&fwd, &bwd};
    for (int dir = 0; dir < 2; ++dir) {
        const Eigen::Matrix3d& m = *mats[dir];
        const Point2 from = ends[dir];
        const Point2 to = ends[1 - dir];
        const double w = m(2, 0) * from.x + m(2, 1) * from.y + m(2, 2);
        if (std::abs(w) <= 1e-12) {
            return std::numeric_limits<double>::infinity();
        }
        const double x = (m(0, 0) * from.x + m(0, 1) * from.y + m(0, 2)) / w;
        const double y = (m(1, 0) * from.x + m(1, 1) * from.y + m(1, 2)) / w;
        total += (to.x - x) * (to.x - x) + (to.y - y) * (to.y - y);
    }
    return std::sqrt(total);
}

struct Score {
    std::vector<std::size_t> inliers;
    double mean_sqrt_ste = std::numeric_limits<double>::infinity();

    // More inliers wins; ties go to the lower mean sqrt STE.
    bool better_than(const Score& other) const {
        if (inliers.size() != other.inliers.size()) {
            return inliers.size() > other.inliers.size();
        }
        return mean_sqrt_ste < other.mean_sqrt_ste;
    }
};

Score score_model(const Homography& h,
                  const std::vector<Correspondence>& matches, double tau) {
    Score s;
    if (!h.invertible()) return s;
    const Eigen::Matrix3d& fwd = h.matrix();
    const Eigen::Matrix3d bwd = invert(h).matrix();
    double sum = 0.0;
    for (std::size_t i = 0; i < matches.size(); ++i) {
        const double e = sqrt_ste_or_inf(fwd, bwd, matches[i]);
        if (e <= tau) {
            s.inliers.push_back(i);
            sum += e;
        }
    }
    if (!s.inliers.empty()) {
        s.mean_sqrt_ste = sum / static_cast<double>(s.inliers.size());
    }
    return s;
}

bool subset_degenerate(const std::vector<Correspondence>& matches,
                       const std::vector<std::size_t>& idx) {
    const std::array<Point2, 4> src = {matches[idx[0]].src, matches[idx[1]].src,
                                       matches[idx[2]].src, matches[idx[3]].src};
    const std::array<Point2, 4> dst = {matches[idx[0]].dst, matches[idx[1]].dst,
                                       matches[idx[2]].dst, matches[idx[3]].dst};
    return sample_is_degenerate(src) || sample_is_degenerate(dst);
}

// Visits 4-subsets either by seeded sampling or by lexicographic enumeration.
class SubsetSource {
  public:
    SubsetSource(std::size_t n, bool exhaustive, std::uint64_t seed)
        : n_(n), exhaustive_(exhaustive), rng_(seed), combo_{0, 1, 2, 3} {}

    bool next(std::vector<std::size_t>* idx) {
        if (exhaustive_) {
            if (combo_[0] + 4 > n_) return false;
            *idx = {combo_[0], combo_[1], combo_[2], combo_[3]};
            advance();
            return true;
        }
        idx->clear();
        while (idx->size() < 4) {
            // Modulo draw keeps sampling identical across platforms; the bias
            // is negligible for any realistic match count.
            const std::size_t k = static_cast<std::size_t>(rng_() % n_);
            if (std::find(idx->begin(), idx->end(), k) == idx->end()) {
                idx->push_back(k);
            }
        }
        return true;
    }

    std::int64_t exhaustive_count() const {
        const auto n = static_cast<std::int64_t>(n_);
        return n * (n - 1) * (n - 2) * (n - 3) / 24;
    }

  private:
    void advance() {
        int i = 3;
        while (i >= 0 && combo_[i] == n_ - 4 + static_cast<std::size_t>(i)) --i;
        if (i < 0) {
            combo_[0] = n_;  // sentinel: exhausted
            return;
        }
        ++combo_[i];
        for (int j = i + 1; j < 4; ++j) combo_[j] = combo_[j - 1] + 1;
    }

    std::size_t n_;
    bool exhaustive_;
    std::mt19937_64 rng_;
    std::array<std::size_t, 4> combo_;
};

void check_config(const RansacConfig& c) {
    if (!(c.confidence > 0.0 && c.confidence < 1.0)) {
        throw DomainError("confidence must be in (0,1)");
    }
    if (!(c.assumed_error_rate >= 0.0 && c.assumed_error_rate < 1.0)) {
        throw DomainError("assumed error rate must be in [0,1)");
    }
    if (!(c.inlier_threshold > 0.0)) {
        throw DomainError("inlier threshold must be positive");
    }
    if (c.max_iterations < 1) {
        throw DomainError("max_iterations must be at least 1");
    }
}

}  // namespace

Homography dlt_homography(const std::vector<Correspondence>& matches) {
    std::vector<std::size_t> idx(matches.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return dlt_impl(matches, idx);
}

std::int64_t ransac_iterations(double p, double e, int s) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must be in (0,1)");
    if (!(e >= 0.0 && e < 1.0)) throw DomainError("e must be in [0,1)");
    if (s < 1) throw DomainError("s must be at least 1");
    if (e == 0.0) return 1;
    const double q = std::pow(1.0 - e, s);  // P(one sample is all-inlier)
    if (q <= 0.0) return std::numeric_limits<std::int64_t>::max();
    if (q >= 1.0) return 1;
    const double n = std::log(1.0 - p) / std::log(1.0 - q);
    if (!(n < 9e18)) return std::numeric_limits<std::int64_t>::max();
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(n)));
}

EstimationResult estimate_ransac(const std::vector<Correspondence>& matches,
                                 const RansacConfig& config) {
    check_config(config);
    const std::size_t n = matches.size();
    if (n < 4) {
        throw InsufficientMatchesError(
            "RANSAC needs at least 4 matches, got " + std::to_string(n));
    }

    std::int64_t target = std::min(
        config.max_iterations,
        ransac_iterations(config.confidence, config.assumed_error_rate, 4));
    SubsetSource source(n, config.exhaustive, config.seed);
    if (config.exhaustive) target = source.exhaustive_count();

    // Degenerate samples are skipped and do not count toward the budget;
    // the attempt cap bounds the loop when (almost) all subsets are bad.
    const std::int64_t attempt_cap =
        target > (std::numeric_limits<std::int64_t>::max() - 1000) / 50
            ? std::numeric_limits<std::int64_t>::max()
            : target * 50 + 1000;

    Homography best_model;
    Score best;
    bool have_model = false;
    std::int64_t iterations = 0;
    std::int64_t attempts = 0;
    std::vector<std::size_t> idx;

    while (iterations < target && attempts < attempt_cap) {
        if (!source.next(&idx)) break;  // exhaustive enumeration finished
        ++attempts;
        if (subset_degenerate(matches, idx)) continue;
        Homography model;
        try {
            model = dlt_impl(matches, idx);
        } catch (const Error&) {
            continue;  // numerically degenerate; treat like a skipped sample
        }
        ++iterations;
        Score s = score_model(model, matches, config.inlier_threshold);
        if (!have_model || s.better_than(best)) {
            best = std::move(s);
            best_model = model;
            have_model = true;
            if (config.adaptive && !config.exhaustive) {
                const double inlier_ratio =
                    static_cast<double>(best.inliers.size()) /
                    static_cast<double>(n);
                const double e_est = 1.0 - inlier_ratio;
                const std::int64_t updated =
                    e_est <= 0.0 ? 1
                                 : ransac_iterations(config.confidence,
                                                     std::min(e_est, 0.999999), 4);
                // Only ever shrink, and never below what has already run.
                target = std::max(iterations, std::min(target, updated));
            }
        }
    }

    if (!have_model) {
        throw NoModelError("every sampled 4-subset was degenerate");
    }

    EstimationResult result;
    result.iterations_run = iterations;
    result.pre_refit_inliers = best.inliers;

    Homography final_model = best_model;
    if (best.inliers.size() >= 4) {
        try {
            final_model = dlt_impl(matches, best.inliers);
        } catch (const Error&) {
            final_model = best_model;  // keep the sampled model
        }
    }
    Score final_score =
        score_model(final_model, matches, config.inlier_threshold);
    // The refit is accepted unconditionally (single re-classification pass,
    // no further iteration), per the estimation contract.
    result.homography = final_model;
    result.inliers = std::move(final_score.inliers);
    result.mean_sqrt_ste = result.inliers.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : final_score.mean_sqrt_ste;
    result.converged = result.inliers.size() >= 4;
    return result;
}

EstimationResult exhaustive_best_model(const std::vector<Correspondence>& matches,
                                       double inlier_threshold) {
    if (matches.size() > 20) {
        throw SizeGuardError(
            "exhaustive search is limited to 20 matches, got " +
            std::to_string(matches.size()));
    }
    if (matches.size() < 4) {
        throw InsufficientMatchesError(
            "exhaustive search needs at least 4 matches, got " +
            std::to_string(matches.size()));
    }
    if (!(inlier_threshold > 0.0)) {
        throw DomainError("inlier threshold must be positive");
    }

    SubsetSource source(matches.size(), /*exhaustive=*/true, 0);
    Homography best_model;
    Score best;
    bool have_model = false;
    std::int64_t evaluated = 0;
    std::vector<std::size_t> idx;
    while (source.next(&idx)) {
        if (subset_degenerate(matches, idx)) continue;
        Homography model;
        try {
            model = dlt_impl(matches, idx);
        } catch (const Error&) {
            continue;
        }
        ++evaluated;
        Score s = score_model(model, matches, inlier_threshold);
        if (!have_model || s.better_than(best)) {
            best = std::move(s);
            best_model = model;
            have_model = true;
        }
    }
    if (!have_model) {
        throw NoModelError("every 4-subset was degenerate");
    }

    EstimationResult result;
    result.homography = best_model;
    result.inliers = best.inliers;
    result.pre_refit_inliers = best.inliers;
    result.iterations_run = evaluated;
    result.mean_sqrt_ste = result.inliers.empty()
                               ? std::numeric_limits<double>::quiet_NaN()
                               : best.mean_sqrt_ste;
    result.converged = result.inliers.size() >= 4;
    return result;
}

}  // namespace docalign
