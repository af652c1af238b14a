#pragma once

#include <array>
#include <functional>
#include <string>

#include "klab/circles.hpp"
#include "klab/linear_maps.hpp"
#include "klab/point.hpp"

namespace klab {

/// Complex projective transformation of the affine chart, acting on (z1, z2)
/// through the homogeneous lift [z1, z2, 1]. Defined wherever the last
/// homogeneous coordinate of the image stays away from zero.
struct ProjectiveMap {
    std::array<std::array<Complex, 3>, 3> m{};

    static ProjectiveMap identity();
    static ProjectiveMap translation(const Point4& p);

    Point4 apply(const Point4& x) const;
    /// |last homogeneous image coordinate| relative to the input lift norm,
    /// for the canonically scaled matrix.
    double singular_margin(const Point4& x) const;

    ProjectiveMap compose(const ProjectiveMap& other) const; // this after other
    ProjectiveMap inverse() const;
    /// Unit Frobenius norm, leading nonzero entry rotated positive real.
    ProjectiveMap canonical() const;
    double max_entry_distance(const ProjectiveMap& other) const;
};

enum class Side { left, right };

/// The projective map with affine action x -> p + (1 - L(x)/2)^{-1} x.
/// Under the fixed identification the right-multiplication convention gives
/// the same scalar action, so `side` only tags the construction.
ProjectiveMap rectifier(const Point4& p, const ComplexFunctional& L, Side side = Side::left);

/// First and second differentials of a smooth map germ by central
/// differences (one Richardson extrapolation level, exact through fourth
/// order in the step).
struct Jet2 {
    Mat4 linear;
    std::array<Mat4, 4> quad; // quad[k](i,j) = d^2 F_k / dx_i dx_j

    /// The quadratic map x -> D2F(x, x), no 1/2 factor.
    Point4 quadratic(const Point4& x) const;
};

Jet2 jet2_of_map(const std::function<Point4(const Point4&)>& F, const Point4& base,
                 double step = 1e-2);

/// Samples q + t dir for t in [-T, T], maps the samples and fits a circle.
/// Throws SingularLocusError if a sample comes within 1e-6 of the map's
/// singular hyperplane.
CircleFit image_of_line(const ProjectiveMap& F, const Point4& q, const Point4& dir, double T,
                        int n);

std::string to_json(const ProjectiveMap& map);

} // namespace klab
