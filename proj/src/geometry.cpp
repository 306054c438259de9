#include "docalign/geometry.hpp"

#include <cmath>

#include "docalign/errors.hpp"

namespace docalign {

namespace {

constexpr double kScaleEps = 1e-8;     // m33 vs Frobenius norm
constexpr double kDetEps = 1e-12;      // invertibility
constexpr double kInfinityEps = 1e-12; // homogeneous w

struct Normalized {
    Eigen::Matrix3d m;
    bool scale_degenerate;
};

Normalized normalize_impl(const Eigen::Matrix3d& m) {
    const double frob = m.norm();
    if (frob == 0.0) {
        throw ZeroMatrixError("cannot normalize the zero matrix");
    }
    const double m33 = m(2, 2);
    if (std::abs(m33) > kScaleEps * frob) {
        return {m / m33, false};
    }
    // m33 ~ 0: scale by the signed largest-magnitude entry instead.
    double pivot = m(0, 0);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            if (std::abs(m(r, c)) > std::abs(pivot)) pivot = m(r, c);
        }
    }
    return {m / pivot, true};
}

}  // namespace

Homography::Homography() : Homography(Homography::identity()) {}

Homography Homography::identity() {
    return from_matrix(Eigen::Matrix3d::Identity());
}

Homography Homography::translation(double tx, double ty) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(0, 2) = tx;
    m(1, 2) = ty;
    return from_matrix(m);
}

Homography Homography::from_matrix(const Eigen::Matrix3d& m) {
    const Normalized n = normalize_impl(m);
    Homography h;
    h.fwd_ = n.m;
    h.scale_degenerate_ = n.scale_degenerate;
    h.invertible_ = std::abs(n.m.determinant()) > kDetEps;
    h.inv_scale_degenerate_ = false;
    if (h.invertible_) {
        const Normalized ni = normalize_impl(Eigen::Matrix3d(n.m.inverse()));
        h.inv_ = ni.m;
        h.inv_scale_degenerate_ = ni.scale_degenerate;
    } else {
        h.inv_.setZero();
    }
    return h;
}

Point2 apply(const Homography& h, Point2 p) {
    const Eigen::Matrix3d& m = h.matrix();
    const double w = m(2, 0) * p.x + m(2, 1) * p.y + m(2, 2);
    if (std::abs(w) <= kInfinityEps) {
        throw PointAtInfinityError("point maps to infinity (w ~ 0)");
    }
    return {(m(0, 0) * p.x + m(0, 1) * p.y + m(0, 2)) / w,
            (m(1, 0) * p.x + m(1, 1) * p.y + m(1, 2)) / w};
}

Homography invert(const Homography& h) {
    if (!h.invertible_) {
        throw SingularMatrixError("homography is singular");
    }
    Homography out;
    out.fwd_ = h.inv_;
    out.inv_ = h.fwd_;
    out.invertible_ = true;
    out.scale_degenerate_ = h.inv_scale_degenerate_;
    out.inv_scale_degenerate_ = h.scale_degenerate_;
    return out;
}

Homography compose(const Homography& a, const Homography& b) {
    return Homography::from_matrix(a.matrix() * b.matrix());
}

Homography normalize_scale(const Eigen::Matrix3d& m) {
    return Homography::from_matrix(m);
}

bool sample_is_degenerate(const std::array<Point2, 4>& pts) {
    double min_x = pts[0].x, max_x = pts[0].x;
    double min_y = pts[0].y, max_y = pts[0].y;
    for (const Point2& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double scale_sq = (max_x - min_x) * (max_x - min_x) +
                            (max_y - min_y) * (max_y - min_y);
    const double tol = 1e-6 * scale_sq;
    for (int skip = 0; skip < 4; ++skip) {
        Point2 tri[3];
        int k = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != skip) tri[k++] = pts[i];
        }
        const double cross = (tri[1].x - tri[0].x) * (tri[2].y - tri[0].y) -
                             (tri[1].y - tri[0].y) * (tri[2].x - tri[0].x);
        if (std::abs(cross) <= tol) return true;
    }
    return false;
}

}  // namespace docalign
