#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "klab/connection.hpp"
#include "klab/point.hpp"
#include "klab/projective.hpp"

namespace klab {

/// Parametric plane curve, at(0) is the through-point.
struct PlanarCurve {
    std::function<Complex(double)> at;
    double t_min = -1.0;
    double t_max = 1.0;
};

/// Moebius map P = L1 / L2 stored by the coefficients of the two affine
/// functions L1(z) = a1 z + b1, L2(z) = a2 z + b2.
struct MoebiusPair {
    Complex a1{}, b1{}, a2{}, b2{};

    Complex l1(Complex z) const { return a1 * z + b1; }
    Complex l2(Complex z) const { return a2 * z + b2; }
    Complex apply(Complex z) const { return l1(z) / l2(z); }
};

/// A point-wise rectifiable family of circles in a plane domain U: a curve
/// through every (point, direction) pair and a rectifying Moebius map at
/// every point.
struct PlanarFamily {
    std::function<bool(Complex)> domain;
    /// (z0 in U, unit direction theta) -> curve through z0 tangent to theta.
    std::function<PlanarCurve(Complex, Complex)> curve;
    std::function<MoebiusPair(Complex)> rectifier;
};

/// Geodesics of the upper half-plane: vertical rays and semicircles centered
/// on the real axis; the rectifier at z0 is 1 / (z - conj(z0)).
PlanarFamily poincare_family();

/// Parametric space curve in C^2, at(0) is the through-point.
struct SpaceCurve {
    std::function<Point4(double)> at;
    double t_min = -1.0;
    double t_max = 1.0;
};

/// The lift of a planar family to U x C, defined complex line by complex
/// line through the projection to U; vertical lines carry real lines.
struct SuspensionFamily {
    PlanarFamily base;

    bool in_domain(const Point4& a) const { return base.domain(a.z1()); }
    /// Curve through a in the real direction dir (nonzero).
    SpaceCurve curve(const Point4& a, const Point4& dir) const;
};

SuspensionFamily suspend(PlanarFamily base);

/// The map (z, w) -> (P(z), w / L2(z)) built from the base rectifier at the
/// projection of a, as a projective transformation of C^2.
ProjectiveMap suspension_rectifier(const SuspensionFamily& fam, const Point4& a);

/// Geodesic of the indefinite exterior-ball metric. Requires |z|^2 > 1+1e-6
/// and aborts with DomainExitError if the trajectory reaches that margin.
Trajectory exterior_ball_curve(const Point4& p, const Point4& v, double T, int n);

std::vector<Point4> sample_space_curve(const SpaceCurve& c, int n);
std::vector<Complex> sample_planar_curve(const PlanarCurve& c, int n);

/// Tangent at parameter t by Richardson-extrapolated central differences
/// with a step scaled to the parameter span; robust for curves whose
/// coordinates are large (nearly straight family members).
Point4 curve_tangent(const SpaceCurve& c, double t = 0.0);
Complex curve_tangent(const PlanarCurve& c, double t = 0.0);

} // namespace klab
