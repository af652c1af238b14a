#include "klab/circles.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "klab/errors.hpp"

namespace klab {

namespace {

Point4 centroid(std::span<const Point4> pts) {
    Point4 m;
    for (const Point4& p : pts) m += p;
    return m / static_cast<double>(pts.size());
}

// Diameter proxy: twice the largest distance from the centroid.
double sample_diameter(std::span<const Point4> pts, const Point4& m) {
    double r = 0.0;
    for (const Point4& p : pts) r = std::max(r, norm(p - m));
    return 2.0 * r;
}

struct PlanarData {
    Point4 m;                    // centroid
    Point4 u1, u2;               // principal plane, orthonormal
    std::vector<double> a, b;    // in-plane coordinates
    std::vector<double> out2;    // squared out-of-plane deviations
    double diam = 0.0;
};

PlanarData project_to_principal_plane(std::span<const Point4> pts) {
    PlanarData d;
    d.m = centroid(pts);
    d.diam = sample_diameter(pts, d.m);
    Mat4 moments;
    for (const Point4& p : pts) {
        const Point4 q = p - d.m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) moments(i, j) += q[i] * q[j];
    }
    const SymEigen4 eig = sym_eigen4(moments);
    d.u1 = eig.vectors[3]; // largest
    d.u2 = eig.vectors[2];
    d.a.reserve(pts.size());
    d.b.reserve(pts.size());
    d.out2.reserve(pts.size());
    for (const Point4& p : pts) {
        const Point4 q = p - d.m;
        const double a = dot(q, d.u1);
        const double b = dot(q, d.u2);
        d.a.push_back(a);
        d.b.push_back(b);
        // explicit perpendicular component; the Pythagorean shortcut cancels badly
        d.out2.push_back(norm2(q - d.u1 * a - d.u2 * b));
    }
    return d;
}

struct PlanarCircle {
    double ca = 0.0, cb = 0.0, r = 0.0;
    bool valid = false;
};

// Algebraic fit A z + B a + C b + D = 0, z = a^2 + b^2, with the Pratt
// constraint B^2 + C^2 - 4 A D = 1. Solved as the generalized eigenproblem
// M w = eta N w by inverse iteration toward the smallest |eta|.
PlanarCircle pratt_fit(const std::vector<double>& a, const std::vector<double>& b) {
    const size_t n = a.size();
    double scale = 0.0;
    for (size_t i = 0; i < n; ++i) scale = std::max({scale, std::abs(a[i]), std::abs(b[i])});
    if (scale <= 0.0) return {};
    Mat4 M;
    for (size_t i = 0; i < n; ++i) {
        const double as = a[i] / scale, bs = b[i] / scale;
        const double row[4] = {as * as + bs * bs, as, bs, 1.0};
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) M(p, q) += row[p] * row[q];
    }
    M = M * (1.0 / static_cast<double>(n));
    Mat4 N;
    N(0, 3) = -2.0;
    N(3, 0) = -2.0;
    N(1, 1) = 1.0;
    N(2, 2) = 1.0;
    Mat4 Mreg = M;
    const double mu = 1e-14 * (M(0, 0) + M(1, 1) + M(2, 2) + M(3, 3));
    for (int i = 0; i < 4; ++i) Mreg(i, i) += mu;
    Point4 w{0.5, 0.5, 0.5, 0.5};
    for (int it = 0; it < 60; ++it) {
        Point4 next;
        try {
            next = solve4(Mreg, N.apply(w));
        } catch (const DegeneracyError&) {
            return {};
        }
        const double nn = norm(next);
        if (!(nn > 0.0) || !std::isfinite(nn)) return {};
        w = next / nn;
    }
    const double constraint = w[1] * w[1] + w[2] * w[2] - 4.0 * w[0] * w[3];
    if (!(constraint > 0.0)) return {};
    const double s = 1.0 / std::sqrt(constraint);
    const double A = w[0] * s, B = w[1] * s, C = w[2] * s;
    PlanarCircle out;
    if (std::abs(A) < 1e-300) return {};
    out.ca = -B / (2.0 * A) * scale;
    out.cb = -C / (2.0 * A) * scale;
    out.r = scale / (2.0 * std::abs(A)); // Pratt-normalized: radius = 1/(2|A|)
    out.valid = true;
    return out;
}

double circle_rms(const PlanarData& d, const PlanarCircle& c) {
    double s = 0.0;
    for (size_t i = 0; i < d.a.size(); ++i) {
        const double in = std::hypot(d.a[i] - c.ca, d.b[i] - c.cb) - c.r;
        s += in * in + d.out2[i];
    }
    return std::sqrt(s / static_cast<double>(d.a.size()));
}

// One Gauss-Newton step on (ca, cb, r); kept only when it improves the rms.
PlanarCircle gauss_newton_step(const PlanarData& d, const PlanarCircle& c0) {
    const size_t n = d.a.size();
    double jtj[3][3] = {};
    double jtr[3] = {};
    for (size_t i = 0; i < n; ++i) {
        const double dx = d.a[i] - c0.ca, dy = d.b[i] - c0.cb;
        const double dist = std::hypot(dx, dy);
        if (dist < 1e-300) continue;
        const double row[3] = {-dx / dist, -dy / dist, -1.0};
        const double res = dist - c0.r;
        for (int p = 0; p < 3; ++p) {
            jtr[p] += row[p] * res;
            for (int q = 0; q < 3; ++q) jtj[p][q] += row[p] * row[q];
        }
    }
    Mat4 A = Mat4::identity();
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) A(p, q) = jtj[p][q];
    Point4 rhs{-jtr[0], -jtr[1], -jtr[2], 0.0};
    PlanarCircle c1 = c0;
    try {
        const Point4 delta = solve4(A, rhs);
        c1.ca += delta[0];
        c1.cb += delta[1];
        c1.r += delta[2];
    } catch (const DegeneracyError&) {
        return c0;
    }
    if (!(c1.r > 0.0)) return c0;
    return circle_rms(d, c1) <= circle_rms(d, c0) ? c1 : c0;
}

CircleFit line_fit_from(const PlanarData& d, std::span<const Point4> pts) {
    CircleFit out;
    out.kind = CurveKind::line;
    out.center = d.m;
    out.plane = {d.u1, d.u2};
    double s = 0.0;
    for (const Point4& p : pts) {
        const Point4 q = p - d.m;
        s += norm2(q - d.u1 * dot(q, d.u1));
    }
    out.rms_residual = std::sqrt(s / static_cast<double>(pts.size()));
    out.relative_residual = d.diam > 0.0 ? out.rms_residual / d.diam : 0.0;
    return out;
}

} // namespace

CircleFit fit_circle(std::span<const Point4> points) {
    if (points.size() < 8) throw FitError("fit_circle: need at least 8 points");
    const PlanarData d = project_to_principal_plane(points);
    if (d.diam < 2e-14) throw FitError("fit_circle: sample is rank deficient (single point)");

    const CircleFit line = line_fit_from(d, points);
    // Exactly collinear data never reaches the algebraic fit.
    if (line.rms_residual <= 1e-13 * d.diam) return line;

    PlanarCircle pc = pratt_fit(d.a, d.b);
    if (!pc.valid) return line;
    pc = gauss_newton_step(d, pc);

    const double curvature = 1.0 / pc.r;
    CircleFit circle;
    circle.kind = CurveKind::circle;
    circle.center = d.m + d.u1 * pc.ca + d.u2 * pc.cb;
    circle.radius = pc.r;
    circle.plane = {d.u1, d.u2};
    circle.rms_residual = circle_rms(d, pc);
    circle.relative_residual = circle.rms_residual / pc.r;

    if (curvature <= 1e-9 / d.diam || line.rms_residual < circle.rms_residual) return line;
    return circle;
}

CircleFit circle_from_jet(const Point4& p, const Point4& v, const Point4& a) {
    if (norm(v) == 0.0) throw PreconditionError("circle_from_jet: zero velocity");
    const Point4 a_perp = a - v * (dot(a, v) / norm2(v));
    const double an = norm(a_perp);
    CircleFit out;
    if (an <= 1e-12 * norm(a) + 1e-300) {
        out.kind = CurveKind::line;
        out.center = p;
        Point4 u2 = jmul(v); // any unit vector orthogonal to v completes the frame
        u2 = u2 - v * (dot(u2, v) / norm2(v));
        out.plane = {v / norm(v), u2 / norm(u2)};
        return out;
    }
    out.kind = CurveKind::circle;
    out.radius = norm2(v) / an;
    out.center = p + a_perp * (norm2(v) / (an * an));
    out.plane = {v / norm(v), a_perp / an};
    return out;
}

double complex_line_defect(std::span<const Point4> points, const Point4& base,
                           const Point4& dir) {
    if (!(norm(dir) > 0.0)) throw PreconditionError("complex_line_defect: zero direction");
    const Point4 u = dir / norm(dir);
    const Point4 ju = jmul(u); // orthogonal to u with the same norm
    const Point4 m = centroid(points);
    const double diam = sample_diameter(points, m);
    if (diam == 0.0) return 0.0;
    double worst = 0.0;
    for (const Point4& p : points) {
        const Point4 q = p - base;
        const Point4 offplane = q - u * dot(q, u) - ju * dot(q, ju);
        worst = std::max(worst, norm(offplane));
    }
    return worst / diam;
}

double complex_line_defect(const Trajectory& traj) {
    return complex_line_defect(traj.points, traj.p0, traj.v0);
}

std::string to_json(const CircleFit& fit) {
    nlohmann::ordered_json j;
    j["kind"] = fit.kind == CurveKind::circle ? "circle" : "line";
    j["center"] = {fit.center.x0, fit.center.x1, fit.center.x2, fit.center.x3};
    if (fit.kind == CurveKind::circle) j["radius"] = fit.radius;
    j["plane"] = {{fit.plane[0].x0, fit.plane[0].x1, fit.plane[0].x2, fit.plane[0].x3},
                  {fit.plane[1].x0, fit.plane[1].x1, fit.plane[1].x2, fit.plane[1].x3}};
    j["rms_residual"] = fit.rms_residual;
    j["relative_residual"] = fit.relative_residual;
    return j.dump();
}

std::vector<Point4> sample_circle(const Point4& center, const Point4& u1, const Point4& u2,
                                  double radius, int n, double angle0, double angle1) {
    std::vector<Point4> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = angle0 + (angle1 - angle0) * i / n;
        pts.push_back(center + u1 * (radius * std::cos(t)) + u2 * (radius * std::sin(t)));
    }
    return pts;
}

} // namespace klab
