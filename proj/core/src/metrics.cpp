#include "klab/metrics.hpp"

#include <array>
#include <cmath>
#include <complex>

#include "klab/errors.hpp"
#include "klab/rng.hpp"

namespace klab {

Mat4 MetricField::evaluate(const Point4& p) const {
    if (!in_domain(p))
        throw DomainError("metric '" + name + "': point outside domain (" + domain_desc + ")");
    return eval_fn(p);
}

namespace {

// z . conj(v) for the basis directions, with z the complex pair of p.
std::array<Complex, 4> basis_projections(const Point4& p) {
    const Complex z1 = p.z1(), z2 = p.z2();
    const Complex i(0.0, 1.0);
    return {z1, -i * z1, z2, -i * z2};
}

double euclid_s(const Point4& p) {
    return p.x0 * p.x0 + p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3;
}

Mat4 fubini_form(double alpha, const Point4& p) {
    // g(v,w) = sign * [alpha (v.w)(1+alpha s) - alpha^2 Re(w_v conj(w_w))] / (1+alpha s)^2
    // with w_v = z . conj(v); the quadratic form of the projected lift of v.
    const double s = euclid_s(p);
    const double q = 1.0 + alpha * s;
    const double sign = alpha < 0.0 ? -1.0 : 1.0;
    const auto w = basis_projections(p);
    Mat4 g;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            const double val =
                sign * (alpha * delta * q - alpha * alpha * (w[i] * std::conj(w[j])).real()) /
                (q * q);
            g(i, j) = val;
            g(j, i) = val;
        }
    }
    return g;
}

Mat4 ball_form(const Point4& p) {
    const double s = euclid_s(p);
    const double q = 1.0 - s;
    if (std::abs(q) < 1e-12)
        throw SingularLocusError("ball metric: |z|^2 = 1 is a singular locus");
    // u_i = e_i . conj(z); numerator (v.w)(1-s) + Re(u_v conj(u_w)).
    const Complex z1c = std::conj(p.z1()), z2c = std::conj(p.z2());
    const Complex i(0.0, 1.0);
    const std::array<Complex, 4> u = {z1c, i * z1c, z2c, i * z2c};
    Mat4 g;
    for (int a = 0; a < 4; ++a) {
        for (int b = a; b < 4; ++b) {
            const double delta = (a == b) ? 1.0 : 0.0;
            const double val = (delta * q + (u[a] * std::conj(u[b])).real()) / (q * q);
            g(a, b) = val;
            g(b, a) = val;
        }
    }
    return g;
}

} // namespace

MetricField euclidean_metric() {
    MetricField f;
    f.name = "euclidean";
    f.eval_fn = [](const Point4&) { return Mat4::identity(); };
    f.domain_fn = [](const Point4&) { return true; };
    f.alpha = 0.0;
    f.positive_definite = true;
    f.region = {Point4{}, 1.0};
    return f;
}

MetricField fubini_metric(const FubiniParams& params) {
    const double alpha = params.alpha;
    if (alpha == 0.0) {
        MetricField f = euclidean_metric();
        f.name = "fubini:0";
        return f;
    }
    MetricField f;
    f.name = "fubini:" + std::to_string(alpha);
    f.alpha = alpha;
    f.positive_definite = true;
    f.eval_fn = [alpha](const Point4& p) { return fubini_form(alpha, p); };
    if (alpha > 0.0) {
        f.domain_fn = [](const Point4&) { return true; };
        f.domain_desc = "all of C^2";
        f.region = {Point4{}, 0.5};
    } else {
        f.domain_fn = [alpha](const Point4& p) { return 1.0 + alpha * euclid_s(p) > 0.0; };
        f.domain_desc = "1 + alpha |z|^2 > 0";
        f.region = {Point4{}, 0.3};
    }
    return f;
}

MetricField ball_metric() {
    MetricField f;
    f.name = "ball";
    f.eval_fn = ball_form;
    f.domain_fn = [](const Point4& p) { return euclid_s(p) != 1.0; };
    f.domain_desc = "|z|^2 != 1";
    f.positive_definite = false;
    f.region = {Point4{}, 0.5};
    return f;
}

MetricField ball_interior_metric() {
    MetricField f = ball_metric();
    f.domain_fn = [](const Point4& p) { return euclid_s(p) < 1.0; };
    f.domain_desc = "|z|^2 < 1";
    f.positive_definite = true;
    return f;
}

MetricField ball_exterior_metric() {
    MetricField f = ball_metric();
    f.name = "ball-exterior";
    f.domain_fn = [](const Point4& p) { return euclid_s(p) > 1.0; };
    f.domain_desc = "|z|^2 > 1";
    f.positive_definite = false;
    f.region = {Point4{}, 2.5, 1.5};
    return f;
}

MetricField test_field(const std::string& id) {
    MetricField f;
    f.name = "testfield:" + id;
    f.domain_fn = [](const Point4&) { return true; };
    f.region = {Point4{}, 0.5};
    if (id == "nonhermitian") {
        f.eval_fn = [](const Point4&) { return Mat4::diagonal(2.0, 1.0, 1.0, 1.0); };
        f.positive_definite = true;
    } else if (id == "nonkahler") {
        f.eval_fn = [](const Point4& p) { return Mat4::identity() * std::exp(p.x2); };
        f.positive_definite = true;
    } else if (id == "perturbed") {
        f.eval_fn = [](const Point4& p) {
            return fubini_form(1.0, p) * (1.0 + 0.1 * p.x0 * p.x0);
        };
        f.positive_definite = true;
        f.region = {Point4{}, 1.0}; // same sampling region as the unperturbed model
    } else if (id == "diagonal-exp") {
        f.eval_fn = [](const Point4& p) {
            return Mat4::diagonal(std::exp(p.x0), std::exp(p.x1), std::exp(p.x2),
                                  std::exp(p.x3));
        };
        f.positive_definite = true;
    } else {
        throw PreconditionError("unknown test field id: " + id);
    }
    return f;
}

MetricField metric_by_id(const std::string& id) {
    if (id == "euclidean") return euclidean_metric();
    if (id == "ball") return ball_interior_metric();
    if (id == "ball-exterior") return ball_exterior_metric();
    const auto colon = id.find(':');
    if (colon != std::string::npos) {
        const std::string head = id.substr(0, colon);
        const std::string tail = id.substr(colon + 1);
        if (head == "fubini") {
            try {
                size_t used = 0;
                const double alpha = std::stod(tail, &used);
                if (used == tail.size()) return fubini_metric(alpha);
            } catch (const std::exception&) {
            }
            throw PreconditionError("bad fubini parameter: " + tail);
        }
        if (head == "testfield") return test_field(tail);
    }
    throw PreconditionError("unknown metric id: " + id);
}

double hermitian_defect(const MetricField& g, const Point4& p) {
    const Mat4 form = g.evaluate(p);
    double defect = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Point4 ei = basis_vector(i), ej = basis_vector(j);
            defect = std::max(defect,
                              std::abs(form.form(jmul(ei), jmul(ej)) - form.form(ei, ej)));
        }
    }
    return defect;
}

namespace {

Mat4 omega_matrix(const Mat4& g) {
    // omega_ij = g(J e_i, e_j)
    Mat4 w;
    for (int i = 0; i < 4; ++i) {
        const Point4 je = jmul(basis_vector(i));
        for (int j = 0; j < 4; ++j) w(i, j) = g.form(je, basis_vector(j));
    }
    return w;
}

} // namespace

double kahler_defect(const MetricField& g, const Point4& p, double step) {
    if (!(step > 0.0)) throw PreconditionError("kahler_defect: step must be positive");
    std::array<Mat4, 4> dw; // dw[k] = d omega / d x_k
    for (int k = 0; k < 4; ++k) {
        Point4 hi = p, lo = p;
        hi[k] += step;
        lo[k] -= step;
        if (!g.in_domain(hi) || !g.in_domain(lo))
            throw DomainError("kahler_defect: stencil leaves domain of " + g.name);
        dw[k] = (omega_matrix(g.eval_fn(hi)) - omega_matrix(g.eval_fn(lo))) * (0.5 / step);
    }
    double defect = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k) {
                const double c = dw[i](j, k) + dw[j](k, i) + dw[k](i, j);
                defect = std::max(defect, std::abs(c));
            }
    return defect;
}

Complex hermitian_inner_form(const Mat4& g, const Point4& X, const Point4& Y) {
    return {g.form(X, Y), -g.form(jmul(X), Y)};
}

Complex hermitian_inner(const MetricField& g, const Point4& p, const Point4& X,
                        const Point4& Y) {
    return hermitian_inner_form(g.evaluate(p), X, Y);
}

double gram_of_form(const Mat4& g, const Point4& X, const Point4& Y) {
    const Complex xx = hermitian_inner_form(g, X, X);
    const Complex yy = hermitian_inner_form(g, Y, Y);
    const Complex xy = hermitian_inner_form(g, X, Y);
    return xx.real() * yy.real() - std::norm(xy);
}

double gram_G(const MetricField& g, const Point4& p, const Point4& X, const Point4& Y) {
    const Complex wedge = X.z1() * Y.z2() - X.z2() * Y.z1();
    if (std::abs(wedge) < 1e-12)
        throw PreconditionError("gram_G: X and Y are complex-linearly dependent");
    return gram_of_form(g.evaluate(p), X, Y);
}

Point4 seeded_unit_vector(SeededRng& rng) {
    Point4 v{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    double n = norm(v);
    while (!(n > 1e-8)) {
        v = {rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        n = norm(v);
    }
    return v / n;
}

Point4 seeded_point(SeededRng& rng, const SampleRegion& region) {
    const Point4 dir = seeded_unit_vector(rng);
    double r;
    if (region.inner_radius > 0.0) {
        r = region.inner_radius + (region.radius - region.inner_radius) * rng.uniform();
    } else {
        r = region.radius * std::pow(rng.uniform(), 0.25);
    }
    return region.center + dir * r;
}

} // namespace klab
