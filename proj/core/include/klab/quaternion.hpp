#pragma once

#include <cmath>

#include "klab/point.hpp"

namespace klab {

/// Quaternion w + x i + y j + z k. A Point4 (x0,x1,x2,x3) maps onto the
/// quaternion z1 + z2 j = x0 + x1 i + x2 j + x3 k, component for component.
struct Quaternion {
    double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

    static Quaternion from_point(const Point4& p) { return {p.x0, p.x1, p.x2, p.x3}; }
    Point4 to_point() const { return {w, x, y, z}; }

    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator-(const Quaternion& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quaternion operator*(double s) const { return {s * w, s * x, s * y, s * z}; }

    Quaternion conjugate() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm2()); }
};

/// Hamilton product.
inline Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

} // namespace klab
