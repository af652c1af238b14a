#include "klab/families.hpp"

#include <cmath>

#include "klab/errors.hpp"
#include "klab/metrics.hpp"

namespace klab {

PlanarFamily poincare_family() {
    PlanarFamily fam;
    fam.domain = [](Complex z) { return z.imag() > 0.0; };
    fam.curve = [](Complex z0, Complex theta) -> PlanarCurve {
        if (!(z0.imag() > 0.0))
            throw DomainError("poincare family: point not in the upper half-plane");
        const double tn = std::abs(theta);
        if (!(tn > 0.0)) throw PreconditionError("poincare family: zero direction");
        theta /= tn;
        const double a = z0.real(), b = z0.imag();
        PlanarCurve c;
        if (std::abs(theta.real()) < 1e-14) {
            // vertical ray, keep a margin above the real axis
            const double sign = theta.imag() > 0.0 ? 1.0 : -1.0;
            c.at = [z0, sign](double t) { return z0 + Complex(0.0, sign * t); };
            c.t_min = sign > 0.0 ? -0.9 * b : -(b + 1.0);
            c.t_max = sign > 0.0 ? b + 1.0 : 0.9 * b;
            return c;
        }
        // semicircle centered on the real axis through z0 tangent to theta
        const double xc = a + b * theta.imag() / theta.real();
        const double R = std::hypot(a - xc, b);
        const double psi0 = std::atan2(b, a - xc); // in (0, pi)
        // unit-speed angle parameter, oriented to match theta
        const Complex tangent(-std::sin(psi0), std::cos(psi0));
        const double orient = (tangent.real() * theta.real() + tangent.imag() * theta.imag()) > 0.0
                                  ? 1.0
                                  : -1.0;
        c.at = [xc, R, psi0, orient](double t) {
            const double psi = psi0 + orient * t / R;
            return Complex(xc + R * std::cos(psi), R * std::sin(psi));
        };
        const double margin = 0.05; // radians kept clear of the real axis
        const double lo = margin, hi = 3.141592653589793238462643383280 - margin;
        if (orient > 0.0) {
            c.t_min = -(psi0 - lo) * R;
            c.t_max = (hi - psi0) * R;
        } else {
            c.t_min = -(hi - psi0) * R;
            c.t_max = (psi0 - lo) * R;
        }
        return c;
    };
    fam.rectifier = [](Complex z0) -> MoebiusPair {
        if (!(z0.imag() > 0.0))
            throw DomainError("poincare family: point not in the upper half-plane");
        // P(z) = 1 / (z - conj(z0))
        MoebiusPair p;
        p.a1 = 0.0;
        p.b1 = 1.0;
        p.a2 = 1.0;
        p.b2 = -std::conj(z0);
        return p;
    };
    return fam;
}

SpaceCurve SuspensionFamily::curve(const Point4& a, const Point4& dir) const {
    if (!in_domain(a)) throw DomainError("suspension: point outside U x C");
    const Complex z = a.z1(), w = a.z2();
    const Complex dz = dir.z1(), dw = dir.z2();
    const double dn = norm(dir);
    if (!(dn > 0.0)) throw PreconditionError("suspension: zero direction");
    SpaceCurve out;
    if (std::abs(dz) <= 1e-14 * dn) {
        // vertical complex line: the family consists of real lines
        out.at = [z, w, dw](double t) { return Point4::from_complex(z, w + t * dw); };
        out.t_min = -1.0;
        out.t_max = 1.0;
        return out;
    }
    // The complex line a + c (dz, dw) projects to U conformally by c -> z + c dz;
    // the curve is the preimage of the base curve through z with direction dz/|dz|.
    const Complex theta = dz / std::abs(dz);
    const PlanarCurve basec = base.curve(z, theta);
    const Complex ratio = dw / dz;
    out.at = [basec, z, w, ratio](double t) {
        const Complex zeta = basec.at(t);
        return Point4::from_complex(zeta, w + (zeta - z) * ratio);
    };
    out.t_min = basec.t_min;
    out.t_max = basec.t_max;
    return out;
}

SuspensionFamily suspend(PlanarFamily base) { return SuspensionFamily{std::move(base)}; }

ProjectiveMap suspension_rectifier(const SuspensionFamily& fam, const Point4& a) {
    if (!fam.in_domain(a)) throw DomainError("suspension rectifier: point outside U x C");
    const MoebiusPair p = fam.base.rectifier(a.z1());
    if (std::abs(p.l2(a.z1())) < 1e-12)
        throw SingularLocusError("suspension rectifier: L2 vanishes at the base point");
    // (z, w) -> (L1(z)/L2(z), w/L2(z)) as [z, w, 1] -> [L1(z), w, L2(z)]
    ProjectiveMap f;
    f.m[0][0] = p.a1;
    f.m[0][2] = p.b1;
    f.m[1][1] = 1.0;
    f.m[2][0] = p.a2;
    f.m[2][2] = p.b2;
    return f;
}

Trajectory exterior_ball_curve(const Point4& p, const Point4& v, double T, int n) {
    const double s = norm2(p);
    if (!(s > 1.0 + 1e-6))
        throw DomainError("exterior ball curve: need |z|^2 > 1 + 1e-6");
    MetricField exterior = ball_exterior_metric();
    // hard margin against the singular sphere
    exterior.domain_fn = [](const Point4& q) { return norm2(q) > 1.0 + 1e-6; };
    exterior.domain_desc = "|z|^2 > 1 + 1e-6";
    return geodesic(exterior, p, v, T, n);
}

std::vector<Point4> sample_space_curve(const SpaceCurve& c, int n) {
    std::vector<Point4> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = c.t_min + (c.t_max - c.t_min) * i / (n - 1);
        pts.push_back(c.at(t));
    }
    return pts;
}

std::vector<Complex> sample_planar_curve(const PlanarCurve& c, int n) {
    std::vector<Complex> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double t = c.t_min + (c.t_max - c.t_min) * i / (n - 1);
        pts.push_back(c.at(t));
    }
    return pts;
}

namespace {

double tangent_step(double span) { return 1e-3 * std::min(1.0, 0.25 * span); }

} // namespace

Point4 curve_tangent(const SpaceCurve& c, double t) {
    const double h = tangent_step(c.t_max - c.t_min);
    auto d = [&](double hh) { return (c.at(t + hh) - c.at(t - hh)) / (2.0 * hh); };
    return (d(0.5 * h) * 4.0 - d(h)) / 3.0;
}

Complex curve_tangent(const PlanarCurve& c, double t) {
    const double h = tangent_step(c.t_max - c.t_min);
    auto d = [&](double hh) { return (c.at(t + hh) - c.at(t - hh)) / (2.0 * hh); };
    return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

} // namespace klab
