#include "klab/curvature.hpp"

#include <cmath>

#include <json.hpp>

#include "klab/connection.hpp"
#include "klab/errors.hpp"
#include "klab/rng.hpp"

namespace klab {

double RiemannTensor::lowered(int a, int b, int c, int d) const {
    double s = 0.0;
    for (int l = 0; l < 4; ++l) s += g0(a, l) * comp[l][c][d][b];
    return s;
}

double RiemannTensor::value(const Point4& X, const Point4& Y, const Point4& Z,
                            const Point4& W) const {
    // g(R(X,Y)Z, W)
    Point4 rz;
    for (int l = 0; l < 4; ++l) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) s += comp[l][i][j][k] * X[i] * Y[j] * Z[k];
        rz[l] = s;
    }
    return g0.form(rz, W);
}

RiemannTensor riemann(const MetricField& g, const Point4& p, double step,
                      double christoffel_step) {
    RiemannTensor out;
    out.point = p;
    out.g0 = g.evaluate(p);
    const ChristoffelData center = christoffel(g, p, christoffel_step);
    std::array<ChristoffelData, 4> hi, lo;
    for (int k = 0; k < 4; ++k) {
        Point4 ph = p, pl = p;
        ph[k] += step;
        pl[k] -= step;
        hi[k] = christoffel(g, ph, christoffel_step);
        lo[k] = christoffel(g, pl, christoffel_step);
    }
    for (int l = 0; l < 4; ++l)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    double v = (hi[i].gamma[l][j][k] - lo[i].gamma[l][j][k]) -
                               (hi[j].gamma[l][i][k] - lo[j].gamma[l][i][k]);
                    v /= 2.0 * step;
                    for (int m = 0; m < 4; ++m)
                        v += center.gamma[l][i][m] * center.gamma[m][j][k] -
                             center.gamma[l][j][m] * center.gamma[m][i][k];
                    out.comp[l][i][j][k] = v;
                }
    return out;
}

double hsc(const MetricField& g, const Point4& p, const Point4& xi, double step,
           double christoffel_step) {
    if (!(norm(xi) > 0.0)) throw PreconditionError("hsc: zero direction");
    const RiemannTensor R = riemann(g, p, step, christoffel_step);
    const Point4 jxi = jmul(xi);
    const double denom =
        R.g0.form(xi, xi) * R.g0.form(jxi, jxi) - R.g0.form(xi, jxi) * R.g0.form(xi, jxi);
    if (std::abs(denom) < 1e-12)
        throw DegeneracyError("hsc: degenerate plane span(xi, J xi)");
    return R.value(xi, jxi, jxi, xi) / denom;
}

namespace {

struct SurfaceMetric {
    // First fundamental form of (s,t) -> p + s u + t Ju.
    const MetricField& g;
    Point4 p, u, ju;

    void eval(double s, double t, double& E, double& F, double& G) const {
        const Point4 q = p + u * s + ju * t;
        const Mat4 form = g.evaluate(q);
        E = form.form(u, u);
        F = form.form(u, ju);
        G = form.form(ju, ju);
    }
};

} // namespace

double gauss_on_complex_line(const MetricField& g, const Point4& p, const Point4& xi,
                             double step) {
    if (!(norm(xi) > 0.0)) throw PreconditionError("gauss_on_complex_line: zero direction");
    const Point4 u = xi / norm(xi);
    const SurfaceMetric surf{g, p, u, jmul(u)};
    const double h = step;
    // values and derivatives of E, F, G at the origin of the (s,t) chart
    double E[3][3], F[3][3], G[3][3];
    for (int i = -1; i <= 1; ++i)
        for (int j = -1; j <= 1; ++j)
            surf.eval(i * h, j * h, E[i + 1][j + 1], F[i + 1][j + 1], G[i + 1][j + 1]);

    auto ds = [&](double v[3][3]) { return (v[2][1] - v[0][1]) / (2 * h); };
    auto dt = [&](double v[3][3]) { return (v[1][2] - v[1][0]) / (2 * h); };
    auto dss = [&](double v[3][3]) { return (v[2][1] - 2 * v[1][1] + v[0][1]) / (h * h); };
    auto dtt = [&](double v[3][3]) { return (v[1][2] - 2 * v[1][1] + v[1][0]) / (h * h); };
    auto dst = [&](double v[3][3]) {
        return (v[2][2] - v[2][0] - v[0][2] + v[0][0]) / (4 * h * h);
    };

    const double e = E[1][1], f = F[1][1], gg = G[1][1];
    const double Es = ds(E), Et = dt(E);
    const double Gs = ds(G), Gt = dt(G);
    const double Fs = ds(F), Ft = dt(F);
    const double Ett = dtt(E), Gss = dss(G), Fst = dst(F);

    auto det3 = [](double a11, double a12, double a13, double a21, double a22, double a23,
                   double a31, double a32, double a33) {
        return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
               a13 * (a21 * a32 - a22 * a31);
    };
    const double M1 = det3(-0.5 * Ett + Fst - 0.5 * Gss, 0.5 * Es, Fs - 0.5 * Et, //
                           Ft - 0.5 * Gs, e, f,                                    //
                           0.5 * Gt, f, gg);
    const double M2 = det3(0.0, 0.5 * Et, 0.5 * Gs, //
                           0.5 * Et, e, f,          //
                           0.5 * Gs, f, gg);
    const double denom = e * gg - f * f;
    if (std::abs(denom) < 1e-12)
        throw DegeneracyError("gauss_on_complex_line: degenerate first fundamental form");
    return (M1 - M2) / (denom * denom);
}


ScanResult hsc_constancy_scan(const MetricField& g, const SampleRegion& region, int n,
                              std::uint64_t seed) {
    if (n < 10) throw PreconditionError("hsc_constancy_scan: need at least 10 samples");
    ScanResult out;
    out.metric_name = g.name;
    out.n = n;
    out.seed = seed;
    SeededRng rng(seed);
    out.samples.reserve(n);
    for (int i = 0; i < n; ++i) {
        const Point4 p = seeded_point(rng, region);
        const Point4 xi = seeded_unit_vector(rng);
        out.samples.push_back(hsc(g, p, xi));
    }
    double mean = 0.0;
    for (double k : out.samples) mean += k;
    mean /= n;
    double var = 0.0, maxdev = 0.0;
    for (double k : out.samples) {
        var += (k - mean) * (k - mean);
        maxdev = std::max(maxdev, std::abs(k - mean));
    }
    out.mean = mean;
    out.stddev = std::sqrt(var / n);
    out.max_dev = maxdev;
    return out;
}

std::string to_json(const ScanResult& scan) {
    nlohmann::ordered_json j;
    j["metric"] = scan.metric_name;
    j["n"] = scan.n;
    j["mean"] = scan.mean;
    j["std"] = scan.stddev;
    j["max_dev"] = scan.max_dev;
    j["seed"] = scan.seed;
    return j.dump();
}

} // namespace klab
