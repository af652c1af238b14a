#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "klab/metrics.hpp"

namespace klab {

/// A metric divided by the 2/3 power of its Gram determinant over a fixed
/// constant complex frame. The Gram function is normalized to 1 at the base
/// point, which pins down the constant-factor ambiguity of the frame choice.
struct NormalizedMetric {
    MetricField base;
    Point4 frame_x, frame_y;
    Point4 base_point{};
    double gram_at_base = 1.0;

    /// Gram determinant of the base metric, normalized to 1 at base_point.
    double gram_normalized(const Point4& p) const;
    Mat4 evaluate_h(const Point4& p) const;
};

/// Requires a positive Gram determinant; checked at the base point and at
/// every subsequent evaluation.
NormalizedMetric normalized_h(const MetricField& g, const Point4& frame_x = basis_vector(0),
                              const Point4& frame_y = basis_vector(2),
                              const Point4& base_point = Point4{});

/// Spread of h(u,u), h(Ju,Ju) and h(u,Ju) over points of the complex line
/// {p + c u}, sampled on a disc of the given radius in the c parameter.
double line_constancy_defect(const NormalizedMetric& hf, const Point4& p, const Point4& u,
                             int samples, double radius);

/// h divided by the square of its own Gram determinant; proportional to the
/// base metric with one global constant.
Mat4 recover_g(const NormalizedMetric& hf, const Point4& p);

/// Residuals of the directional-derivative identities
/// X G = 3 Re L(X) G and X g(X,X) = 2 Re L(X) g(X,X) over the frame vectors,
/// each normalized by the magnitude of the differentiated quantity. L comes
/// from the proportionality fit of the Christoffel form at p.
double derivative_identity_defect(const MetricField& g, const Point4& p, double step = 1e-4);

struct MomentumFit {
    double residual = 0.0;                              // relative rms
    std::array<std::array<Complex, 3>, 3> coefficients{}; // Hermitian form on (v1, v2, m)
    int n_samples = 0;
    std::uint64_t seed = 0;
};

/// Fits h_x(v,v) as a Hermitian form in (v1, v2, m) with m = x1 v2 - x2 v1
/// over seeded samples; exact (residual at rounding level) precisely for the
/// line-constant metrics.
MomentumFit momentum_polynomial_fit(const NormalizedMetric& hf, int n_samples,
                                    std::uint64_t seed = 2026);

std::string to_json(const MomentumFit& fit);

} // namespace klab
