#pragma once

#include <array>
#include <vector>

#include "klab/point.hpp"

namespace klab {

/// Dense real 4x4 matrix, the in-memory form of metric tensors and small
/// moment matrices.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }
    static Mat4 diagonal(double a, double b, double c, double d) {
        Mat4 r;
        r(0, 0) = a;
        r(1, 1) = b;
        r(2, 2) = c;
        r(3, 3) = d;
        return r;
    }

    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator*(double s) const;

    Point4 apply(const Point4& v) const;
    /// Bilinear value v^T M w.
    double form(const Point4& v, const Point4& w) const;
    double max_abs() const;
    double symmetry_defect() const;
};

double det4(const Mat4& a);
/// Solve a x = b by Gaussian elimination with partial pivoting.
Point4 solve4(const Mat4& a, const Point4& b);
Mat4 inverse4(const Mat4& a);

struct SymEigen4 {
    std::array<double, 4> values{};        // ascending
    std::array<Point4, 4> vectors{};       // orthonormal, vectors[k] pairs with values[k]
};
/// Cyclic Jacobi on a symmetric 4x4 matrix.
SymEigen4 sym_eigen4(const Mat4& a);

/// Least squares min ||A x - b||_2 for a dense column-major-free row list,
/// solved by Householder QR. rows = m, cols = n, a.size() == m*n (row major).
std::vector<double> least_squares(const std::vector<double>& a, const std::vector<double>& b,
                                  int rows, int cols);

} // namespace klab
