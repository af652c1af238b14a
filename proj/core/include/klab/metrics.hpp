#pragma once

#include <functional>
#include <optional>
#include <string>

#include "klab/linalg.hpp"
#include "klab/point.hpp"

namespace klab {

/// Region used by suites when drawing seeded sample points for a field.
struct SampleRegion {
    Point4 center{};
    double radius = 1.0;
    double inner_radius = 0.0; // nonzero for shell regions (exterior fields)
};

struct FubiniParams {
    double alpha = 1.0;
};

/// A Riemannian (or pseudo-Riemannian) metric presented as a field of real
/// symmetric 4x4 bilinear forms over a declared domain. Fields are immutable
/// values; evaluation is pure.
struct MetricField {
    std::string name;
    std::function<Mat4(const Point4&)> eval_fn;
    std::function<bool(const Point4&)> domain_fn;
    std::string domain_desc = "all of R^4";
    std::optional<double> alpha;
    bool positive_definite = false;
    SampleRegion region{};

    bool in_domain(const Point4& p) const { return domain_fn ? domain_fn(p) : true; }
    /// Evaluate the bilinear form; throws DomainError outside the domain.
    Mat4 evaluate(const Point4& p) const;
};

MetricField euclidean_metric();

/// Affine-model metric of the pseudo-Hermitian form with signature parameter
/// alpha. alpha > 0 gives the projective-space model, alpha = 0 the flat
/// metric, alpha < 0 the complex hyperbolic model on the region 1+alpha|z|^2>0.
MetricField fubini_metric(const FubiniParams& params);
inline MetricField fubini_metric(double alpha) { return fubini_metric(FubiniParams{alpha}); }

/// The displayed unit-ball form on both components of |z|^2 != 1: positive
/// definite inside, indefinite but nondegenerate outside.
MetricField ball_metric();
MetricField ball_interior_metric();
MetricField ball_exterior_metric();

/// Built-in counterexample fields, addressable as "testfield:<id>":
///   nonhermitian  - constant diag(2,1,1,1)
///   nonkahler     - exp(x2) * identity (Hermitian, not closed)
///   perturbed     - (1 + 0.1 x0^2) * fubini(1)
///   diagonal-exp  - diag(exp(x0),...,exp(x3)) (acceleration not proportional)
MetricField test_field(const std::string& id);

/// Resolve "euclidean", "fubini:<alpha>", "ball", "ball-exterior",
/// "testfield:<id>". Throws PreconditionError on unknown ids.
MetricField metric_by_id(const std::string& id);

/// max over basis pairs of |g(Jx, Jy) - g(x, y)|.
double hermitian_defect(const MetricField& g, const Point4& p);

/// Builds omega(x,y) = g(Jx, y) componentwise and estimates all components of
/// its exterior derivative at p by central differences.
double kahler_defect(const MetricField& g, const Point4& p, double step = 1e-4);

/// <X,Y> = g(X,Y) - i omega(X,Y) on a raw form value.
Complex hermitian_inner_form(const Mat4& g, const Point4& X, const Point4& Y);
Complex hermitian_inner(const MetricField& g, const Point4& p, const Point4& X, const Point4& Y);

/// Gram determinant <X,X><Y,Y> - <X,Y><Y,X> of the Hermitian inner product.
double gram_of_form(const Mat4& g, const Point4& X, const Point4& Y);
double gram_G(const MetricField& g, const Point4& p, const Point4& X, const Point4& Y);

class SeededRng;

/// Uniform direction on the unit sphere of R^4.
Point4 seeded_unit_vector(SeededRng& rng);
/// Uniform point of the region (ball, or shell when inner_radius > 0).
Point4 seeded_point(SeededRng& rng, const SampleRegion& region);

} // namespace klab
