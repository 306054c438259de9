#include <doctest.h>

#include <algorithm>
#include <random>

#include "docalign/errors.hpp"
#include "docalign/estimation.hpp"
#include "docalign/metrics.hpp"
#include "docalign/random.hpp"

using namespace docalign;

namespace {

std::vector<Correspondence> exact_matches(const Homography& h,
                                          const std::vector<Point2>& pts) {
    std::vector<Correspondence> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out.push_back({pts[i], apply(h, pts[i]), "t" + std::to_string(i), 1});
    }
    return out;
}

std::vector<Point2> grid_points(std::size_t n) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back({100.0 + 400.0 * static_cast<double>(i % 5),
                       80.0 + 300.0 * static_cast<double>(i / 5)});
    }
    return pts;
}

double relative_matrix_error(const Homography& a, const Homography& b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() /
           b.matrix().cwiseAbs().maxCoeff();
}

Homography perspective_fixture() {
    Eigen::Matrix3d m;
    m << 1.02, 0.03, 25.0, -0.02, 0.98, -14.0, 1e-4, -6e-5, 1.0;
    return Homography::from_matrix(m);
}

// 14 noisy inliers + 6 outliers on a 2200x1700 page, deterministic.
std::vector<Correspondence> noisy_instance(std::uint64_t seed,
                                           const Homography& h_true) {
    std::mt19937_64 rng(seed);
    std::vector<Correspondence> matches;
    for (int i = 0; i < 14; ++i) {
        const Point2 src{uniform_real(rng, 100, 2100),
                         uniform_real(rng, 100, 1600)};
        Point2 dst = apply(h_true, src);
        dst.x += gaussian(rng, 1.0);
        dst.y += gaussian(rng, 1.0);
        matches.push_back({src, dst, "in" + std::to_string(i), 1});
    }
    for (int i = 0; i < 6; ++i) {
        matches.push_back({{uniform_real(rng, 0, 2200), uniform_real(rng, 0, 1700)},
                           {uniform_real(rng, 0, 2200), uniform_real(rng, 0, 1700)},
                           "out" + std::to_string(i),
                           2});
    }
    return matches;
}

}  // namespace

TEST_SUITE_BEGIN("estimation");

TEST_CASE("dlt: exact minimal translation") {
    const Homography t = Homography::translation(37.0, -12.0);
    const auto matches = exact_matches(
        t, {{0, 0}, {2200, 0}, {2200, 1700}, {0, 1700}});
    const Homography est = dlt_homography(matches);
    CHECK(relative_matrix_error(est, t) < 1e-9);
}

TEST_CASE("dlt: exact minimal perspective") {
    const Homography h = perspective_fixture();
    const auto matches = exact_matches(
        h, {{10, 20}, {2100, 60}, {2150, 1600}, {40, 1650}});
    const Homography est = dlt_homography(matches);
    CHECK(relative_matrix_error(est, h) < 1e-9);
}

TEST_CASE("dlt: collinear source points are rejected") {
    const auto matches = exact_matches(
        Homography::identity(), {{0, 0}, {10, 10}, {20, 20}, {100, 0}});
    CHECK_THROWS_AS(dlt_homography(matches), DegenerateConfigurationError);
}

TEST_CASE("dlt: fewer than four matches") {
    const auto matches =
        exact_matches(Homography::identity(), {{0, 0}, {10, 10}, {20, 0}});
    CHECK_THROWS_AS(dlt_homography(matches), InsufficientMatchesError);
}

TEST_CASE("dlt: overdetermined noiseless fit has ~zero residual") {
    const Homography h = perspective_fixture();
    const auto matches = exact_matches(h, grid_points(20));
    const Homography est = dlt_homography(matches);
    const ErrorReport report = error_report(est, matches);
    CHECK(report.mean < 1e-7);
}

TEST_CASE("dlt: translation conjugation (Hartley invariance)") {
    const Homography h = perspective_fixture();
    const auto base = exact_matches(h, grid_points(12));

    const Homography src_shift = Homography::translation(317.0, -45.0);
    const Homography dst_shift = Homography::translation(-122.0, 260.0);
    std::vector<Correspondence> shifted = base;
    for (Correspondence& c : shifted) {
        c.src = {c.src.x + 317.0, c.src.y - 45.0};
        c.dst = {c.dst.x - 122.0, c.dst.y + 260.0};
    }

    const Homography est_base = dlt_homography(base);
    const Homography est_shifted = dlt_homography(shifted);
    // est_shifted should equal dst_shift . est_base . src_shift^-1; compare
    // through corner reprojection on the page scale.
    const Homography expected =
        compose(dst_shift, compose(est_base, invert(src_shift)));
    CHECK(max_corner_reprojection_error(est_shifted, expected, 2200, 1700) <
          1e-7);
}

TEST_CASE("ransac_iterations: frozen values") {
    CHECK(ransac_iterations(0.99, 0.0, 4) == 1);
    CHECK(ransac_iterations(0.99, 0.1, 4) == 5);
    CHECK(ransac_iterations(0.99, 0.3, 4) == 17);
    CHECK(ransac_iterations(0.99, 0.5, 4) == 72);
    CHECK(ransac_iterations(0.99, 0.7, 4) == 567);
    // The paper's iteration table matches the formula at s = 8 for its
    // first row; the table is illustrative, not a target.
    CHECK(ransac_iterations(0.99, 0.1, 8) == 9);
}

TEST_CASE("ransac_iterations: domain errors") {
    CHECK_THROWS_AS(ransac_iterations(0.0, 0.5, 4), DomainError);
    CHECK_THROWS_AS(ransac_iterations(1.0, 0.5, 4), DomainError);
    CHECK_THROWS_AS(ransac_iterations(0.99, -0.1, 4), DomainError);
    CHECK_THROWS_AS(ransac_iterations(0.99, 1.0, 4), DomainError);
    CHECK_THROWS_AS(ransac_iterations(0.99, 0.5, 0), DomainError);
}

TEST_CASE("ransac_iterations: monotone in e and p") {
    std::int64_t prev = 0;
    for (int i = 0; i < 100; ++i) {
        const double e = 0.0098 * i;
        const std::int64_t n = ransac_iterations(0.99, e, 4);
        CHECK(n >= prev);
        prev = n;
    }
    prev = 0;
    for (int i = 1; i < 100; ++i) {
        const double p = 0.01 * i;
        const std::int64_t n = ransac_iterations(p, 0.5, 4);
        CHECK(n >= prev);
        prev = n;
    }
}

TEST_CASE("estimate_ransac: clean data recovers the model") {
    const Homography h = perspective_fixture();
    const auto matches = exact_matches(h, grid_points(20));
    RansacConfig config;
    config.seed = 99;
    const EstimationResult r = estimate_ransac(matches, config);
    CHECK(r.converged);
    CHECK(r.inliers.size() == 20);
    CHECK(relative_matrix_error(r.homography, h) < 1e-6);
    CHECK(r.mean_sqrt_ste < 1e-7);
}

TEST_CASE("estimate_ransac: all seeds agree on clean data") {
    const Homography h = Homography::translation(50, 20);
    const auto matches = exact_matches(h, grid_points(15));
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        RansacConfig config;
        config.seed = seed;
        const EstimationResult r = estimate_ransac(matches, config);
        CHECK(r.converged);
        CHECK(r.inliers.size() == 15);
    }
}

TEST_CASE("estimate_ransac: deterministic in the seed") {
    const auto matches = noisy_instance(7, perspective_fixture());
    RansacConfig config;
    config.seed = 1234;
    const EstimationResult a = estimate_ransac(matches, config);
    const EstimationResult b = estimate_ransac(matches, config);
    CHECK(a.homography.matrix() == b.homography.matrix());  // bit-for-bit
    CHECK(a.inliers == b.inliers);
    CHECK(a.iterations_run == b.iterations_run);
    CHECK(a.mean_sqrt_ste == b.mean_sqrt_ste);
}

TEST_CASE("estimate_ransac: noisy instance with outliers") {
    const Homography h_true = perspective_fixture();
    const auto matches = noisy_instance(21, h_true);
    RansacConfig config;
    config.seed = 5;
    const EstimationResult r = estimate_ransac(matches, config);
    CHECK(r.converged);
    CHECK(r.inliers.size() >= 12);
    CHECK(max_corner_reprojection_error(r.homography, h_true, 2200, 1700) <=
          2.0);
    // Outliers stay out.
    for (const std::size_t idx : r.inliers) {
        CHECK(matches[idx].token.substr(0, 2) == "in");
    }
}

TEST_CASE("estimate_ransac: fewer than four matches") {
    const auto matches =
        exact_matches(Homography::identity(), {{0, 0}, {10, 10}, {20, 0}});
    RansacConfig config;
    CHECK_THROWS_AS(estimate_ransac(matches, config), InsufficientMatchesError);
}

TEST_CASE("estimate_ransac: all-collinear matches give no model") {
    std::vector<Correspondence> matches;
    for (int i = 0; i < 6; ++i) {
        matches.push_back({{10.0 * i, 10.0 * i},
                           {10.0 * i + 5, 10.0 * i + 5},
                           "t" + std::to_string(i),
                           1});
    }
    RansacConfig config;
    CHECK_THROWS_AS(estimate_ransac(matches, config), NoModelError);
}

TEST_CASE("estimate_ransac: non-adaptive honors the iteration formula") {
    const auto matches = exact_matches(perspective_fixture(), grid_points(12));
    RansacConfig config;
    config.adaptive = false;
    config.assumed_error_rate = 0.5;
    config.confidence = 0.99;
    const EstimationResult r = estimate_ransac(matches, config);
    CHECK(r.iterations_run == 72);
}

TEST_CASE("estimate_ransac: config validation") {
    const auto matches = exact_matches(perspective_fixture(), grid_points(8));
    RansacConfig config;
    config.inlier_threshold = 0.0;
    CHECK_THROWS_AS(estimate_ransac(matches, config), DomainError);
    config = {};
    config.confidence = 1.0;
    CHECK_THROWS_AS(estimate_ransac(matches, config), DomainError);
}

TEST_CASE("exhaustive_best_model: basics") {
    const Homography h = Homography::translation(12, -8);
    const auto four = exact_matches(h, {{0, 0}, {100, 0}, {100, 80}, {0, 80}});
    const EstimationResult r = exhaustive_best_model(four, 3.0);
    CHECK(r.converged);
    CHECK(r.inliers.size() == 4);
    CHECK(relative_matrix_error(r.homography, h) < 1e-9);

    std::vector<Correspondence> collinear;
    for (int i = 0; i < 5; ++i) {
        collinear.push_back({{5.0 * i, 5.0 * i}, {5.0 * i, 5.0 * i}, "c", 1});
    }
    CHECK_THROWS_AS(exhaustive_best_model(collinear, 3.0), NoModelError);

    const auto many = exact_matches(h, grid_points(21));
    CHECK_THROWS_AS(exhaustive_best_model(many, 3.0), SizeGuardError);
}

TEST_CASE("oracle equivalence under an exhaustive budget") {
    const Homography h_true = perspective_fixture();
    for (std::uint64_t seed : {3u, 11u, 29u}) {
        const auto matches = noisy_instance(seed, h_true);
        const EstimationResult oracle = exhaustive_best_model(matches, 3.0);
        RansacConfig config;
        config.exhaustive = true;
        const EstimationResult r = estimate_ransac(matches, config);
        CHECK(r.pre_refit_inliers == oracle.inliers);
    }
}

TEST_SUITE_END();
