#pragma once

#include <cmath>
#include <complex>

namespace klab {

using Complex = std::complex<double>;

/// Point (or tangent vector) of R^4 with the fixed complex view
/// z1 = x0 + i x1, z2 = x2 + i x3. The same storage doubles as the
/// quaternion x0 + x1 i + x2 j + x3 k, so all three views share bits.
struct Point4 {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    Complex z1() const { return {x0, x1}; }
    Complex z2() const { return {x2, x3}; }

    static Point4 from_complex(Complex a, Complex b) {
        return {a.real(), a.imag(), b.real(), b.imag()};
    }

    double operator[](int i) const {
        switch (i) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }
    double& operator[](int i) {
        switch (i) {
            case 0: return x0;
            case 1: return x1;
            case 2: return x2;
            default: return x3;
        }
    }

    Point4 operator+(const Point4& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    Point4 operator-(const Point4& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    Point4 operator-() const { return {-x0, -x1, -x2, -x3}; }
    Point4 operator*(double s) const { return {s * x0, s * x1, s * x2, s * x3}; }
    Point4 operator/(double s) const { return {x0 / s, x1 / s, x2 / s, x3 / s}; }
    Point4& operator+=(const Point4& o) { x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3; return *this; }

    friend Point4 operator*(double s, const Point4& p) { return p * s; }
};

inline double dot(const Point4& a, const Point4& b) {
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

inline double norm2(const Point4& a) { return dot(a, a); }
inline double norm(const Point4& a) { return std::sqrt(norm2(a)); }

/// The complex structure J, componentwise multiplication by i on (z1, z2).
/// Under the fixed identification this equals left quaternion multiplication
/// by i.
inline Point4 jmul(const Point4& v) { return {-v.x1, v.x0, -v.x3, v.x2}; }

/// Componentwise multiplication by a complex scalar: c (z1, z2).
inline Point4 cmul(Complex c, const Point4& v) {
    return Point4::from_complex(c * v.z1(), c * v.z2());
}

inline Point4 basis_vector(int i) {
    Point4 e;
    e[i] = 1.0;
    return e;
}

} // namespace klab
