#include <doctest.h>

#include <random>

#include "docalign/errors.hpp"
#include "docalign/metrics.hpp"
#include "docalign/random.hpp"

using namespace docalign;

namespace {

Correspondence corr(Point2 src, Point2 dst) {
    return {src, dst, "token", 1};
}

Homography random_h(std::mt19937_64& rng) {
    Eigen::Matrix3d m;
    m << uniform_real(rng, 0.8, 1.2), uniform_real(rng, -0.1, 0.1),
        uniform_real(rng, -40, 40), uniform_real(rng, -0.1, 0.1),
        uniform_real(rng, 0.8, 1.2), uniform_real(rng, -40, 40),
        uniform_real(rng, -1e-4, 1e-4), uniform_real(rng, -1e-4, 1e-4), 1.0;
    return Homography::from_matrix(m);
}

}  // namespace

TEST_SUITE_BEGIN("metrics");

TEST_CASE("symmetric_transfer_error: fixed values") {
    CHECK(symmetric_transfer_error(Homography::identity(),
                                   corr({0, 0}, {3, 4})) == 50.0);
    CHECK(symmetric_transfer_error(Homography::translation(3, 4),
                                   corr({0, 0}, {3, 4})) == 0.0);
    // A correspondence generated by its own homography has zero error.
    const Homography h = Homography::translation(-7.5, 2.25);
    const Point2 src{120, 340};
    CHECK(symmetric_transfer_error(h, corr(src, apply(h, src))) == 0.0);
}

TEST_CASE("symmetric_transfer_error: exact symmetry under inversion") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 50; ++i) {
        const Homography h = random_h(rng);
        const Correspondence c = corr({uniform_real(rng, 0, 2200),
                                       uniform_real(rng, 0, 1700)},
                                      {uniform_real(rng, 0, 2200),
                                       uniform_real(rng, 0, 1700)});
        const Correspondence swapped = {c.dst, c.src, c.token, c.ambiguity_degree};
        // Bit-exact: invert carries the forward matrix along.
        CHECK(symmetric_transfer_error(h, c) ==
              symmetric_transfer_error(invert(h), swapped));
    }
}

TEST_CASE("symmetric_transfer_error: nonnegative, zero iff both residuals zero") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        const Homography h = random_h(rng);
        const Point2 src{uniform_real(rng, 0, 2000), uniform_real(rng, 0, 1500)};
        const Point2 mapped = apply(h, src);
        const double off = symmetric_transfer_error(
            h, corr(src, {mapped.x + 0.5, mapped.y}));
        CHECK(off > 0.0);
        const double exact = symmetric_transfer_error(h, corr(src, mapped));
        CHECK(exact >= 0.0);
        CHECK(exact < 1e-12);  // only inverse-mapping rounding remains
    }
}

TEST_CASE("error_report: fixed fixtures") {
    const ErrorReport single =
        error_report(Homography::identity(), {corr({0, 0}, {3, 4})});
    CHECK(single.count == 1);
    CHECK(single.mean == doctest::Approx(std::sqrt(50.0)).epsilon(1e-15));

    // Two matches with sqrt-STE 1 and 3. Under identity, each residual is
    // counted in both directions, so offsets of 1/sqrt(2) and 3/sqrt(2)
    // give per-point roots of exactly 1 and 3 up to rounding.
    const double a = 1.0 / std::sqrt(2.0);
    const double b = 3.0 / std::sqrt(2.0);
    const ErrorReport two = error_report(
        Homography::identity(),
        {corr({0, 0}, {a, 0}), corr({10, 10}, {10 + b, 10})});
    CHECK(two.count == 2);
    CHECK(two.per_point[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(two.per_point[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(two.mean == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.median == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(two.max == doctest::Approx(3.0).epsilon(1e-12));
    // RMS of roots 1 and 3 is sqrt(5) ~ 2.236: mean-of-roots stays the
    // headline number, RMS is reported alongside.
    CHECK(two.rms == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    const ErrorReport exact = error_report(
        Homography::translation(3, 4),
        {corr({0, 0}, {3, 4}), corr({5, 5}, {8, 9})});
    CHECK(exact.mean == 0.0);
}

TEST_CASE("error_report: empty input") {
    CHECK_THROWS_AS(error_report(Homography::identity(), {}), EmptyInputError);
}

TEST_CASE("error_report: mean is permutation-invariant") {
    std::mt19937_64 rng(67);
    const Homography h = random_h(rng);
    std::vector<Correspondence> matches;
    for (int i = 0; i < 20; ++i) {
        matches.push_back(corr({uniform_real(rng, 0, 2000),
                                uniform_real(rng, 0, 1500)},
                               {uniform_real(rng, 0, 2000),
                                uniform_real(rng, 0, 1500)}));
    }
    const double mean1 = error_report(h, matches).mean;
    std::reverse(matches.begin(), matches.end());
    const double mean2 = error_report(h, matches).mean;
    CHECK(mean1 == doctest::Approx(mean2).epsilon(1e-12));
}

TEST_CASE("max_corner_reprojection_error") {
    CHECK(max_corner_reprojection_error(Homography::identity(),
                                        Homography::identity(), 2200,
                                        1700) == 0.0);
    CHECK(max_corner_reprojection_error(Homography::translation(3, 4),
                                        Homography::identity(), 2200, 1700) ==
          doctest::Approx(5.0).epsilon(1e-12));
}

TEST_SUITE_END();
