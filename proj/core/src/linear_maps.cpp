#include "klab/linear_maps.hpp"

#include <cmath>

#include "klab/errors.hpp"
#include "klab/rng.hpp"

namespace klab {

QuaternionValuedLinearMap QuaternionValuedLinearMap::from_functional(const ComplexFunctional& f) {
    // L(x) = c1 z1 + c2 z2 lands in C = span(1, i), so rows 2 and 3 vanish.
    QuaternionValuedLinearMap A;
    A.m[0] = {f.c1.real(), -f.c1.imag(), f.c2.real(), -f.c2.imag()};
    A.m[1] = {f.c1.imag(), f.c1.real(), f.c2.imag(), f.c2.real()};
    return A;
}

Complex MapDecomposition::alpha_value(const Point4& v) const {
    Complex s = 0.0;
    for (int k = 0; k < 4; ++k) s += alpha[k] * v[k];
    return s;
}

Complex MapDecomposition::beta_value(const Point4& v) const {
    Complex s = 0.0;
    for (int k = 0; k < 4; ++k) s += beta[k] * v[k];
    return s;
}

namespace {

double covector_pair_norm(const std::array<Complex, 4>& c) {
    // Largest singular value of the 2x4 real matrix (Re c; Im c).
    double rr = 0.0, ii = 0.0, ri = 0.0;
    for (int k = 0; k < 4; ++k) {
        rr += c[k].real() * c[k].real();
        ii += c[k].imag() * c[k].imag();
        ri += c[k].real() * c[k].imag();
    }
    const double tr = rr + ii;
    const double disc = std::sqrt((rr - ii) * (rr - ii) + 4.0 * ri * ri);
    return std::sqrt(0.5 * (tr + disc));
}

} // namespace

double MapDecomposition::beta_norm() const { return covector_pair_norm(beta); }
double MapDecomposition::alpha_norm() const { return covector_pair_norm(alpha); }

MapDecomposition decompose_A(const QuaternionValuedLinearMap& A) {
    MapDecomposition d;
    for (int k = 0; k < 4; ++k) {
        d.a[k] = A.m[0][k];
        d.b[k] = A.m[1][k];
        d.c[k] = A.m[2][k];
        d.d[k] = A.m[3][k];
        d.alpha[k] = {d.a[k], d.b[k]};
        d.beta[k] = {d.d[k], d.c[k]};
    }
    return d;
}

const std::vector<Point4>& quadratic_sample_points() {
    static const std::vector<Point4> sample = [] {
        std::vector<Point4> pts;
        for (int i = 0; i < 4; ++i) pts.push_back(basis_vector(i));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) pts.push_back(basis_vector(i) + basis_vector(j));
        SeededRng rng(2026);
        for (int k = 0; k < 20; ++k) {
            Point4 v{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
            pts.push_back(v / norm(v));
        }
        return pts;
    }();
    return sample;
}

double holomorphy_defect_quadratic(const std::function<Point4(const Point4&)>& Q) {
    double alg = 0.0;
    double cr = 0.0;
    for (const Point4& x : quadratic_sample_points()) {
        const Point4 jx = jmul(x);
        alg = std::max(alg, norm(Q(jx) + Q(x)));
        // dQ(x)[u] from the polarization (Q(x+u) - Q(x-u)) / 2, exact for
        // quadratics at any step; unit step avoids cancellation.
        for (int k = 0; k < 4; ++k) {
            const Point4 u = basis_vector(k);
            const Point4 du = (Q(x + u) - Q(x - u)) * 0.5;
            const Point4 ju = jmul(u);
            const Point4 dju = (Q(x + ju) - Q(x - ju)) * 0.5;
            cr = std::max(cr, norm(dju - jmul(du)));
        }
    }
    return alg + cr;
}

double holomorphy_defect_quadratic(const QuaternionValuedLinearMap& A) {
    return holomorphy_defect_quadratic(
        [&A](const Point4& x) { return A.quadratic(x); });
}

ClassifyResult classify_A(const QuaternionValuedLinearMap& A, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("classify_A: tol must be positive");
    ClassifyResult r;
    r.defect = holomorphy_defect_quadratic(A);
    const MapDecomposition d = decompose_A(A);
    r.beta_norm = d.beta_norm();
    if (r.defect <= tol && r.beta_norm <= tol) {
        r.complex_linear = true;
        r.L.c1 = d.alpha_value(basis_vector(0));
        r.L.c2 = d.alpha_value(basis_vector(2));
    }
    return r;
}

} // namespace klab
