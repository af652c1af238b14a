#pragma once

#include <array>
#include <functional>
#include <vector>

#include "klab/linalg.hpp"
#include "klab/point.hpp"
#include "klab/quaternion.hpp"

namespace klab {

/// Complex linear functional L(z1, z2) = c1 z1 + c2 z2.
struct ComplexFunctional {
    Complex c1{}, c2{};

    Complex value(const Point4& v) const { return c1 * v.z1() + c2 * v.z2(); }
    Complex value(Complex a, Complex b) const { return c1 * a + c2 * b; }
};

/// R-linear map R^4 -> H stored as the four component functionals in the
/// basis (1, i, j, k): row r of `m` is the covector of component r.
struct QuaternionValuedLinearMap {
    std::array<std::array<double, 4>, 4> m{};

    Quaternion value(const Point4& v) const {
        Quaternion q;
        q.w = m[0][0] * v.x0 + m[0][1] * v.x1 + m[0][2] * v.x2 + m[0][3] * v.x3;
        q.x = m[1][0] * v.x0 + m[1][1] * v.x1 + m[1][2] * v.x2 + m[1][3] * v.x3;
        q.y = m[2][0] * v.x0 + m[2][1] * v.x1 + m[2][2] * v.x2 + m[2][3] * v.x3;
        q.z = m[3][0] * v.x0 + m[3][1] * v.x1 + m[3][2] * v.x2 + m[3][3] * v.x3;
        return q;
    }

    /// The quadratic map x -> A(x) x (quaternion product, x read as quaternion).
    Point4 quadratic(const Point4& v) const {
        return qmul(value(v), Quaternion::from_point(v)).to_point();
    }

    static QuaternionValuedLinearMap from_functional(const ComplexFunctional& f);
};

/// Component functionals of A(x) = a(x) + b(x) i + c(x) j + d(x) k together
/// with the complex-valued combinations alpha = a + b i and beta = d + c i.
struct MapDecomposition {
    std::array<double, 4> a{}, b{}, c{}, d{};      // covector coefficients
    std::array<Complex, 4> alpha{}, beta{};        // alpha_k = a_k + i b_k, beta_k = d_k + i c_k

    Complex alpha_value(const Point4& v) const;
    Complex beta_value(const Point4& v) const;
    /// sup over the real unit sphere of |beta(x)|.
    double beta_norm() const;
    double alpha_norm() const;
};

MapDecomposition decompose_A(const QuaternionValuedLinearMap& A);

/// Fixed deterministic evaluation set: the 4 basis vectors, their 6 pairwise
/// sums and 20 seeded unit vectors. Shared by the holomorphy defect and the
/// least-squares extractions that fit quadratic maps of the form A(x) x.
const std::vector<Point4>& quadratic_sample_points();

/// Numeric holomorphy test for a quadratic map Q. Combines the algebraic
/// identity Q(ix) = -Q(x) with a Cauchy-Riemann check of the differential of
/// Q over the deterministic sample. The differential is taken by unit-step
/// central differences, which are exact for quadratic maps, so a holomorphic
/// Q scores at rounding level.
double holomorphy_defect_quadratic(const std::function<Point4(const Point4&)>& Q);
/// Same test for the quadratic map x -> A(x) x.
double holomorphy_defect_quadratic(const QuaternionValuedLinearMap& A);

struct ClassifyResult {
    bool complex_linear = false;
    ComplexFunctional L{};     // valid when complex_linear
    double defect = 0.0;
    double beta_norm = 0.0;
};

/// Decides whether x -> A(x) x is holomorphic (defect <= tol); if so returns
/// the complex linear functional read off alpha, checking that the j/k part
/// stays below tol.
ClassifyResult classify_A(const QuaternionValuedLinearMap& A, double tol);

} // namespace klab
