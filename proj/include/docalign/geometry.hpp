#pragma once

#include <Eigen/Dense>
#include <array>

namespace docalign {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

// 3x3 projective transform. Scale-normalized so h33 = 1, unless the source
// matrix had m33 ~ 0 relative to its Frobenius norm; then the largest-magnitude
// entry is scaled to 1 instead and scale_degenerate() reports it.
//
// The inverse matrix is computed once at construction and carried along, so
// invert() is a constant-time swap and invert(invert(h)) is bit-identical
// to h. That makes symmetric transfer error exactly symmetric in the two
// mapping directions.
class Homography {
  public:
    Homography();  // identity

    static Homography identity();
    static Homography translation(double tx, double ty);
    // Scale-normalizes an arbitrary matrix (see normalize_scale below).
    static Homography from_matrix(const Eigen::Matrix3d& m);

    const Eigen::Matrix3d& matrix() const { return fwd_; }
    bool scale_degenerate() const { return scale_degenerate_; }
    // |det| > 1e-12 after normalization.
    bool invertible() const { return invertible_; }

    friend Homography invert(const Homography& h);
    friend bool operator==(const Homography& a, const Homography& b) {
        return a.fwd_ == b.fwd_;
    }

  private:
    Eigen::Matrix3d fwd_;
    Eigen::Matrix3d inv_;
    bool invertible_;
    bool scale_degenerate_;
    bool inv_scale_degenerate_;
};

// p' = H p in homogeneous coordinates, dehomogenized. Throws
// PointAtInfinityError when |h31*x + h32*y + h33| <= 1e-12.
Point2 apply(const Homography& h, Point2 p);

// Throws SingularMatrixError when the matrix is not invertible.
Homography invert(const Homography& h);

// apply(compose(a, b), p) == apply(a, apply(b, p)).
Homography compose(const Homography& a, const Homography& b);

// Divides by m33 when |m33| > 1e-8 * ||m||_F; otherwise divides by the signed
// largest-magnitude entry and flags the result scale-degenerate. Throws
// ZeroMatrixError on the zero matrix.
Homography normalize_scale(const Eigen::Matrix3d& m);

// True iff any 3 of the 4 points are collinear within a relative tolerance:
// |cross| <= 1e-6 * scale^2, scale = bounding-box diagonal of the points.
bool sample_is_degenerate(const std::array<Point2, 4>& pts);

}  // namespace docalign
