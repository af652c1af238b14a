#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "klab/metrics.hpp"

namespace klab {

/// Curvature tensor at a point from central differences of the Christoffel
/// coefficients. comp[l][i][j][k] is the l-th component of R(e_i, e_j) e_k;
/// lowered(a,b,c,d) = g(R(e_c, e_d) e_b, e_a) follows the pair-symmetric
/// index convention.
struct RiemannTensor {
    Point4 point{};
    Mat4 g0;
    double comp[4][4][4][4] = {};

    double lowered(int a, int b, int c, int d) const;
    /// g(R(X,Y)Z, W)
    double value(const Point4& X, const Point4& Y, const Point4& Z, const Point4& W) const;
};

RiemannTensor riemann(const MetricField& g, const Point4& p, double step = 1e-3,
                      double christoffel_step = 1e-5);

/// Sectional curvature of the J-invariant plane span(xi, J xi).
double hsc(const MetricField& g, const Point4& p, const Point4& xi, double step = 1e-3,
           double christoffel_step = 1e-5);

/// Gauss curvature of the metric restricted to the affine complex line
/// through p in direction xi, by the Brioschi formula with central
/// differences. Independent of the tensor route; the two agree on totally
/// geodesic complex lines.
double gauss_on_complex_line(const MetricField& g, const Point4& p, const Point4& xi,
                             double step = 1e-3);

struct ScanResult {
    std::string metric_name;
    int n = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double max_dev = 0.0;
    std::vector<double> samples;
};

/// Seeded (point, direction) samples of hsc over the region; reports spread.
ScanResult hsc_constancy_scan(const MetricField& g, const SampleRegion& region, int n,
                              std::uint64_t seed);

std::string to_json(const ScanResult& scan);

} // namespace klab
