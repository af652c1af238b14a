#include "klab/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "klab/errors.hpp"

namespace klab {

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m[i][j] + o(i, j);
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = m[i][j] - o(i, j);
    return r;
}

Mat4 Mat4::operator*(double s) const {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = s * m[i][j];
    return r;
}

Point4 Mat4::apply(const Point4& v) const {
    Point4 r;
    for (int i = 0; i < 4; ++i) {
        double s = 0.0;
        for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

double Mat4::form(const Point4& v, const Point4& w) const {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += m[i][j] * v[i] * w[j];
    return s;
}

double Mat4::max_abs() const {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(m[i][j]));
    return r;
}

double Mat4::symmetry_defect() const {
    double r = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) r = std::max(r, std::abs(m[i][j] - m[j][i]));
    return r;
}

namespace {

// LU with partial pivoting on a 4x4 working copy. Returns determinant;
// lu/perm receive the factorization.
double lu4(const Mat4& a, Mat4& lu, std::array<int, 4>& perm) {
    lu = a;
    perm = {0, 1, 2, 3};
    double det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
        if (pivot != col) {
            std::swap(lu.m[pivot], lu.m[col]);
            std::swap(perm[pivot], perm[col]);
            det = -det;
        }
        const double d = lu(col, col);
        det *= d;
        if (d == 0.0) return 0.0;
        for (int r = col + 1; r < 4; ++r) {
            const double f = lu(r, col) / d;
            lu(r, col) = f;
            for (int c = col + 1; c < 4; ++c) lu(r, c) -= f * lu(col, c);
        }
    }
    return det;
}

Point4 lu_solve(const Mat4& lu, const std::array<int, 4>& perm, const Point4& b) {
    Point4 y;
    for (int i = 0; i < 4; ++i) {
        double s = b[perm[i]];
        for (int j = 0; j < i; ++j) s -= lu(i, j) * y[j];
        y[i] = s;
    }
    Point4 x;
    for (int i = 3; i >= 0; --i) {
        double s = y[i];
        for (int j = i + 1; j < 4; ++j) s -= lu(i, j) * x[j];
        x[i] = s / lu(i, i);
    }
    return x;
}

} // namespace

double det4(const Mat4& a) {
    Mat4 lu;
    std::array<int, 4> perm;
    return lu4(a, lu, perm);
}

Point4 solve4(const Mat4& a, const Point4& b) {
    Mat4 lu;
    std::array<int, 4> perm;
    const double det = lu4(a, lu, perm);
    if (std::abs(det) < 1e-300) throw DegeneracyError("solve4: singular matrix");
    return lu_solve(lu, perm, b);
}

Mat4 inverse4(const Mat4& a) {
    Mat4 lu;
    std::array<int, 4> perm;
    const double det = lu4(a, lu, perm);
    if (std::abs(det) < 1e-300) throw DegeneracyError("inverse4: singular matrix");
    Mat4 inv;
    for (int c = 0; c < 4; ++c) {
        Point4 e;
        e[c] = 1.0;
        const Point4 col = lu_solve(lu, perm, e);
        for (int r = 0; r < 4; ++r) inv(r, c) = col[r];
    }
    return inv;
}

SymEigen4 sym_eigen4(const Mat4& input) {
    Mat4 a = input;
    // accumulate eigenvectors in v
    Mat4 v = Mat4::identity();
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 4; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < 4; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < 4; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    SymEigen4 out;
    std::array<int, 4> idx = {0, 1, 2, 3};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
    for (int k = 0; k < 4; ++k) {
        out.values[k] = a(idx[k], idx[k]);
        out.vectors[k] = {v(0, idx[k]), v(1, idx[k]), v(2, idx[k]), v(3, idx[k])};
    }
    return out;
}

std::vector<double> least_squares(const std::vector<double>& a_in, const std::vector<double>& b_in,
                                  int rows, int cols) {
    if (rows < cols) throw FitError("least_squares: underdetermined system");
    std::vector<double> a = a_in;
    std::vector<double> b = b_in;
    std::vector<double> rdiag(cols);
    auto at = [&](int r, int c) -> double& { return a[static_cast<size_t>(r) * cols + c]; };
    // Householder QR, applying reflectors to b on the fly.
    for (int k = 0; k < cols; ++k) {
        double nrm = 0.0;
        for (int r = k; r < rows; ++r) nrm += at(r, k) * at(r, k);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) throw FitError("least_squares: rank deficient system");
        if (at(k, k) < 0.0) nrm = -nrm;
        for (int r = k; r < rows; ++r) at(r, k) /= nrm;
        at(k, k) += 1.0;
        for (int c = k + 1; c < cols; ++c) {
            double s = 0.0;
            for (int r = k; r < rows; ++r) s += at(r, k) * at(r, c);
            s = -s / at(k, k);
            for (int r = k; r < rows; ++r) at(r, c) += s * at(r, k);
        }
        double s = 0.0;
        for (int r = k; r < rows; ++r) s += at(r, k) * b[r];
        s = -s / at(k, k);
        for (int r = k; r < rows; ++r) b[r] += s * at(r, k);
        rdiag[k] = -nrm;
    }
    std::vector<double> x(cols);
    for (int i = cols - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < cols; ++j) s -= at(i, j) * x[j];
        x[i] = s / rdiag[i];
    }
    return x;
}

} // namespace klab
