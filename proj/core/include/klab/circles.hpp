#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "klab/connection.hpp"
#include "klab/point.hpp"

namespace klab {

enum class CurveKind { circle, line };

/// Result of fitting a circle or line to an R^4 point sample. For circles,
/// `center` and `radius` describe the fit and `center` lies in the fitted
/// plane; for lines, `center` is a point on the line and plane[0] its
/// direction. Residuals are full R^4 distances; relative_residual divides by
/// the radius (circle) or the sample diameter (line).
struct CircleFit {
    CurveKind kind = CurveKind::line;
    Point4 center{};
    double radius = 0.0;
    std::array<Point4, 2> plane{};
    double rms_residual = 0.0;
    double relative_residual = 0.0;
};

/// Centroid plus principal-plane projection, algebraic circle fit with Pratt
/// normalization, one guarded Gauss-Newton refinement on geometric distance.
/// Falls back to a line when the best-fit curvature is below
/// 1e-9 / (sample diameter) or the line fit has smaller residual.
CircleFit fit_circle(std::span<const Point4> points);

/// Osculating circle from position, velocity and acceleration.
CircleFit circle_from_jet(const Point4& p, const Point4& v, const Point4& a);

/// max over samples of the distance to the complex affine line
/// {base + c dir : c complex}, normalized by the sample diameter.
double complex_line_defect(std::span<const Point4> points, const Point4& base, const Point4& dir);
double complex_line_defect(const Trajectory& traj);

std::string to_json(const CircleFit& fit);

/// Exact circle samples, used by tests and the family generators.
std::vector<Point4> sample_circle(const Point4& center, const Point4& u1, const Point4& u2,
                                  double radius, int n, double angle0 = 0.0,
                                  double angle1 = 6.283185307179586476925286766559);

} // namespace klab
