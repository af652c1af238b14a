#include "klab/connection.hpp"

#include <cmath>
#include <cstdio>

namespace klab {

namespace {

double quadratic_component(const std::array<std::array<double, 4>, 4>& coeff, const Point4& x) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        s += coeff[i][i] * x[i] * x[i];
        for (int j = i + 1; j < 4; ++j) s += 2.0 * coeff[i][j] * x[i] * x[j];
    }
    return s;
}

} // namespace

Point4 ChristoffelData::apply(const Point4& v, const Point4& w) const {
    // Polarization keeps the evaluator symmetric bitwise, independent of
    // floating-point contraction choices.
    const Point4 sum = v + w;
    const Point4 diff = v - w;
    Point4 out;
    for (int k = 0; k < 4; ++k)
        out[k] = 0.25 * (quadratic_component(gamma[k], sum) - quadratic_component(gamma[k], diff));
    return out;
}

namespace {

struct MetricDerivatives {
    Mat4 g;
    std::array<Mat4, 4> dg; // dg[k] = d g / d x_k
};

MetricDerivatives metric_derivatives(const MetricField& g, const Point4& p, double step) {
    MetricDerivatives out;
    out.g = g.evaluate(p);
    for (int k = 0; k < 4; ++k) {
        Point4 hi = p, lo = p;
        hi[k] += step;
        lo[k] -= step;
        if (!g.in_domain(hi) || !g.in_domain(lo))
            throw DomainError("christoffel: stencil leaves domain of " + g.name);
        out.dg[k] = (g.eval_fn(hi) - g.eval_fn(lo)) * (0.5 / step);
    }
    return out;
}

} // namespace

ChristoffelData christoffel(const MetricField& g, const Point4& p, double step) {
    const MetricDerivatives d = metric_derivatives(g, p, step);
    if (std::abs(det4(d.g)) < 1e-12)
        throw DegeneracyError("christoffel: metric '" + g.name + "' is degenerate at the point");
    const Mat4 ginv = inverse4(d.g);
    ChristoffelData out;
    out.point = p;
    out.metric_name = g.name;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            Point4 lowered;
            for (int k = 0; k < 4; ++k)
                lowered[k] = 0.5 * (d.dg[i](j, k) + d.dg[j](i, k) - d.dg[k](i, j));
            const Point4 raised = ginv.apply(lowered);
            for (int k = 0; k < 4; ++k) {
                out.gamma[k][i][j] = raised[k];
                out.gamma[k][j][i] = raised[k];
            }
        }
    }
    return out;
}

double complex_bilinearity_defect(const ChristoffelData& gamma) {
    double defect = 0.0;
    for (int i = 0; i < 4; ++i) {
        const Point4 v = basis_vector(i);
        const Point4 jv = jmul(v);
        for (int j = 0; j < 4; ++j) {
            const Point4 w = basis_vector(j);
            defect = std::max(defect, norm(gamma.apply(jv, w) - jmul(gamma.apply(v, w))));
        }
    }
    return defect;
}

ExtractLResult extract_L(const ChristoffelData& gamma, double tol) {
    const auto& sample = quadratic_sample_points();
    const int rows = static_cast<int>(sample.size()) * 4;
    const int cols = 8; // Re/Im of the four covector coefficients
    std::vector<double> A(static_cast<size_t>(rows) * cols, 0.0);
    std::vector<double> b(rows, 0.0);
    int r = 0;
    for (const Point4& x : sample) {
        const Point4 gxx = gamma.quadratic(x);
        const Point4 jx = jmul(x);
        for (int comp = 0; comp < 4; ++comp) {
            // L(x) x = sum_k x_k (Re l_k * x + Im l_k * Jx)
            for (int k = 0; k < 4; ++k) {
                A[static_cast<size_t>(r) * cols + 2 * k] = x[k] * x[comp];
                A[static_cast<size_t>(r) * cols + 2 * k + 1] = x[k] * jx[comp];
            }
            b[r] = gxx[comp];
            ++r;
        }
    }
    const std::vector<double> sol = least_squares(A, b, rows, cols);
    ExtractLResult out;
    for (int k = 0; k < 4; ++k) out.coeffs[k] = {sol[2 * k], sol[2 * k + 1]};
    double res = 0.0;
    for (const Point4& x : sample) {
        Complex lx = 0.0;
        for (int k = 0; k < 4; ++k) lx += out.coeffs[k] * x[k];
        res = std::max(res, norm(gamma.quadratic(x) - cmul(lx, x)));
    }
    out.residual = res;
    out.proportional = res <= tol;
    const Complex i(0.0, 1.0);
    out.linearity_defect = std::max(std::abs(out.coeffs[1] - i * out.coeffs[0]),
                                    std::abs(out.coeffs[3] - i * out.coeffs[2]));
    out.L.c1 = out.coeffs[0];
    out.L.c2 = out.coeffs[2];
    return out;
}

Point4 geodesic_accel(const MetricField& g, const Point4& p, const Point4& v, double step) {
    const MetricDerivatives d = metric_derivatives(g, p, step);
    if (std::abs(det4(d.g)) < 1e-12)
        throw DegeneracyError("geodesic: metric '" + g.name + "' is degenerate along the path");
    // lowered_k = (d_i g_jk) v_i v_j - (1/2) d_k g(v, v)
    Point4 lowered;
    for (int k = 0; k < 4; ++k) {
        double s = 0.0;
        for (int i = 0; i < 4; ++i) {
            double row = 0.0;
            for (int j = 0; j < 4; ++j) row += d.dg[i](j, k) * v[j];
            s += row * v[i];
        }
        lowered[k] = s - 0.5 * d.dg[k].form(v, v);
    }
    return -solve4(d.g, lowered);
}

Trajectory geodesic(const MetricField& g, const Point4& p, const Point4& v, double T, int n,
                    double step) {
    if (n < 16) throw PreconditionError("geodesic: need at least 16 steps");
    Trajectory traj;
    traj.metric_name = g.name;
    traj.p0 = p;
    traj.v0 = v;
    traj.times.reserve(n + 1);
    traj.points.reserve(n + 1);
    traj.velocities.reserve(n + 1);

    const double h = T / n;
    Point4 x = p, u = v;
    traj.times.push_back(0.0);
    traj.points.push_back(x);
    traj.velocities.push_back(u);
    for (int i = 0; i < n; ++i) {
        try {
            const Point4 a1 = geodesic_accel(g, x, u, step);
            const Point4 x2 = x + u * (h / 2), u2 = u + a1 * (h / 2);
            const Point4 a2 = geodesic_accel(g, x2, u2, step);
            const Point4 x3 = x + u2 * (h / 2), u3 = u + a2 * (h / 2);
            const Point4 a3 = geodesic_accel(g, x3, u3, step);
            const Point4 x4 = x + u3 * h, u4 = u + a3 * h;
            const Point4 a4 = geodesic_accel(g, x4, u4, step);
            x += (u + (u2 + u3) * 2.0 + u4) * (h / 6.0);
            u += (a1 + (a2 + a3) * 2.0 + a4) * (h / 6.0);
        } catch (const DomainError& e) {
            throw DomainExitError("geodesic left the domain of '" + g.name + "' at t=" +
                                      std::to_string((i + 1) * h) + ": " + e.what(),
                                  std::move(traj));
        }
        if (!g.in_domain(x))
            throw DomainExitError("geodesic left the domain of '" + g.name + "' at t=" +
                                      std::to_string((i + 1) * h),
                                  std::move(traj));
        traj.times.push_back((i + 1) * h);
        traj.points.push_back(x);
        traj.velocities.push_back(u);
    }
    return traj;
}

ExpJet2 exp_jet2(const MetricField& g, const Point4& p, double step) {
    ExpJet2 out;
    out.gamma = christoffel(g, p, step);
    const auto& sample = quadratic_sample_points();
    const int rows = static_cast<int>(sample.size()) * 4;
    const int cols = 16;
    std::vector<double> A(static_cast<size_t>(rows) * cols, 0.0);
    std::vector<double> b(rows, 0.0);
    int r = 0;
    for (const Point4& x : sample) {
        const Point4 q = -out.gamma.quadratic(x);
        // A(x) x depends linearly on the 16 coefficients: the quaternion
        // product with basis map E_{cd} contributes x_d * (e_c * x).
        std::array<Point4, 4> unit_products; // (basis quaternion c) * x
        for (int c = 0; c < 4; ++c) {
            const Quaternion e = Quaternion::from_point(basis_vector(c));
            unit_products[c] = qmul(e, Quaternion::from_point(x)).to_point();
        }
        for (int comp = 0; comp < 4; ++comp) {
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d)
                    A[static_cast<size_t>(r) * cols + c * 4 + d] =
                        x[d] * unit_products[c][comp];
            b[r] = q[comp];
            ++r;
        }
    }
    const std::vector<double> sol = least_squares(A, b, rows, cols);
    for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) out.A.m[c][d] = sol[c * 4 + d];
    double res = 0.0;
    for (const Point4& x : sample)
        res = std::max(res, norm(out.A.quadratic(x) - out.quadratic(x)));
    out.fit_residual = res;
    return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
    os << "t,x0,x1,x2,x3,v0,v1,v2,v3\n";
    char buf[32];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        os << buf << sep;
    };
    for (size_t i = 0; i < t.size(); ++i) {
        put(t.times[i], ',');
        const Point4& p = t.points[i];
        const Point4& v = t.velocities[i];
        put(p.x0, ',');
        put(p.x1, ',');
        put(p.x2, ',');
        put(p.x3, ',');
        put(v.x0, ',');
        put(v.x1, ',');
        put(v.x2, ',');
        put(v.x3, '\n');
    }
}

} // namespace klab
