#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "klab/errors.hpp"
#include "klab/linear_maps.hpp"
#include "klab/metrics.hpp"

namespace klab {

/// The symmetric bilinear Christoffel form at a fixed point, coefficients
/// gamma[k][i][j] with indices raised by the inverse metric.
struct ChristoffelData {
    Point4 point{};
    std::string metric_name;
    std::array<std::array<std::array<double, 4>, 4>, 4> gamma{};

    /// Gamma(v, w); symmetric in (v, w) bitwise.
    Point4 apply(const Point4& v, const Point4& w) const;
    Point4 quadratic(const Point4& v) const { return apply(v, v); }
};

/// Levi-Civita coefficients from central differences of the metric.
/// Throws DegeneracyError when |det g| < 1e-12 and DomainError when the
/// stencil leaves the domain.
ChristoffelData christoffel(const MetricField& g, const Point4& p, double step = 1e-5);

/// max over basis pairs of ||Gamma(Jv, w) - J Gamma(v, w)||.
double complex_bilinearity_defect(const ChristoffelData& gamma);

struct ExtractLResult {
    ComplexFunctional L{};                 // complex-linear projection of the fit
    std::array<Complex, 4> coeffs{};       // the fitted R-linear coefficients
    double residual = 0.0;                 // max over sample of ||Gamma(v,v) - L(v) v||
    double linearity_defect = 0.0;         // max_k |L(J e_k) - i L(e_k)|
    bool proportional = false;             // residual <= tol
};

/// Least-squares fit of a complex-valued R-linear functional L minimizing
/// ||Gamma(v,v) - L(v) v|| over the deterministic sample set. The residual
/// communicates failure; `proportional` records whether it met tol.
ExtractLResult extract_L(const ChristoffelData& gamma, double tol = 1e-6);

/// Sampled solution of the geodesic equation.
struct Trajectory {
    std::vector<double> times;
    std::vector<Point4> points;
    std::vector<Point4> velocities;
    std::string metric_name;
    Point4 p0{}, v0{};

    size_t size() const { return times.size(); }
};

/// Integration left the metric domain; carries the partial trajectory.
class DomainExitError : public DomainError {
public:
    DomainExitError(const std::string& what, Trajectory partial)
        : DomainError(what), partial_trajectory(std::move(partial)) {}
    Trajectory partial_trajectory;
};

/// Acceleration -Gamma_p(v, v) used by the integrator and the 2-jet.
Point4 geodesic_accel(const MetricField& g, const Point4& p, const Point4& v, double step = 1e-5);

/// Classical fixed-step RK4 on (x, xdot) with the Christoffel form
/// re-evaluated at every stage point. n >= 16 steps over [0, T].
Trajectory geodesic(const MetricField& g, const Point4& p, const Point4& v, double T, int n,
                    double step = 1e-5);

/// Second-order jet of the exponential map at p: the quadratic map
/// Q(x) = -Gamma_p(x, x) together with the best-fit A with A(x) x ~ Q(x).
struct ExpJet2 {
    ChristoffelData gamma;
    QuaternionValuedLinearMap A{};
    double fit_residual = 0.0; // max over sample of ||A(x)x - Q(x)||

    Point4 quadratic(const Point4& x) const { return -gamma.quadratic(x); }
};

ExpJet2 exp_jet2(const MetricField& g, const Point4& p, double step = 1e-5);

/// CSV export, header t,x0,x1,x2,x3,v0,v1,v2,v3, 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);

} // namespace klab
