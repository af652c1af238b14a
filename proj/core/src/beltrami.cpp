#include "klab/beltrami.hpp"

#include <cmath>
#include <vector>

#include <json.hpp>

#include "klab/connection.hpp"
#include "klab/errors.hpp"
#include "klab/rng.hpp"

namespace klab {

double NormalizedMetric::gram_normalized(const Point4& p) const {
    const double g = gram_of_form(base.evaluate(p), frame_x, frame_y);
    if (!(g > 0.0))
        throw DegeneracyError("normalized metric: Gram determinant not positive at a sample");
    return g / gram_at_base;
}

Mat4 NormalizedMetric::evaluate_h(const Point4& p) const {
    const double gn = gram_normalized(p);
    return base.evaluate(p) * std::pow(gn, -2.0 / 3.0);
}

NormalizedMetric normalized_h(const MetricField& g, const Point4& frame_x,
                              const Point4& frame_y, const Point4& base_point) {
    NormalizedMetric out{g, frame_x, frame_y, base_point, 1.0};
    const double g0 = gram_of_form(g.evaluate(base_point), frame_x, frame_y);
    if (!(g0 > 0.0))
        throw DegeneracyError("normalized metric: Gram determinant not positive at base point");
    out.gram_at_base = g0;
    return out;
}

double line_constancy_defect(const NormalizedMetric& hf, const Point4& p, const Point4& u,
                             int samples, double radius) {
    if (!(norm(u) > 0.0)) throw PreconditionError("line_constancy_defect: zero direction");
    const Point4 un = u / norm(u);
    const Point4 jun = jmul(un);
    double lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (int i = 0; i < samples; ++i) {
        // Fermat spiral over the parameter disc of the complex line
        const double r = radius * std::sqrt(static_cast<double>(i) / samples);
        const double a = 2.39996322972865332 * i;
        const Complex c = std::polar(r, a);
        const Point4 x = p + cmul(c, un);
        const Mat4 h = hf.evaluate_h(x);
        const double vals[3] = {h.form(un, un), h.form(jun, jun), h.form(un, jun)};
        for (int k = 0; k < 3; ++k) {
            if (i == 0) {
                lo[k] = hi[k] = vals[k];
            } else {
                lo[k] = std::min(lo[k], vals[k]);
                hi[k] = std::max(hi[k], vals[k]);
            }
        }
    }
    double defect = 0.0;
    for (int k = 0; k < 3; ++k) defect = std::max(defect, hi[k] - lo[k]);
    return defect;
}

Mat4 recover_g(const NormalizedMetric& hf, const Point4& p) {
    const Mat4 h = hf.evaluate_h(p);
    const double hgram = gram_of_form(h, hf.frame_x, hf.frame_y);
    if (!(hgram > 0.0))
        throw DegeneracyError("recover_g: Gram determinant of h not positive");
    return h * (1.0 / (hgram * hgram));
}

double derivative_identity_defect(const MetricField& g, const Point4& p, double step) {
    const ExtractLResult fit = extract_L(christoffel(g, p));
    const Point4 frame[2] = {basis_vector(0), basis_vector(2)};
    double defect = 0.0;
    for (const Point4& X : frame) {
        const Point4 hi = p + X * step, lo = p - X * step;
        const double Ghi = gram_of_form(g.evaluate(hi), frame[0], frame[1]);
        const double Glo = gram_of_form(g.evaluate(lo), frame[0], frame[1]);
        const double G0 = gram_of_form(g.evaluate(p), frame[0], frame[1]);
        const double dG = (Ghi - Glo) / (2.0 * step);

        const double ghi = g.evaluate(hi).form(X, X);
        const double glo = g.evaluate(lo).form(X, X);
        const double g0 = g.evaluate(p).form(X, X);
        const double dg = (ghi - glo) / (2.0 * step);

        Complex lx = 0.0;
        for (int k = 0; k < 4; ++k) lx += fit.coeffs[k] * X[k];
        const double re = lx.real();

        defect = std::max(defect, std::abs(dG - 3.0 * re * G0) / std::abs(G0));
        defect = std::max(defect, std::abs(dg - 2.0 * re * g0) / std::abs(g0));
    }
    return defect;
}

MomentumFit momentum_polynomial_fit(const NormalizedMetric& hf, int n_samples,
                                    std::uint64_t seed) {
    const int cols = 9; // 3 real diagonal + 3 complex off-diagonal entries
    if (n_samples < 10 * cols)
        throw PreconditionError("momentum_polynomial_fit: need at least 90 samples");
    SeededRng rng(seed);
    const double radius = hf.base.region.radius;
    std::vector<double> A;
    std::vector<double> b;
    A.reserve(static_cast<size_t>(n_samples) * cols);
    b.reserve(n_samples);
    auto draw_point = [&] {
        Point4 v{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        return v / norm(v);
    };
    for (int i = 0; i < n_samples; ++i) {
        const Point4 x = draw_point() * (radius * std::pow(rng.uniform(), 0.25));
        const Point4 v = draw_point();
        const Complex v1 = v.z1(), v2 = v.z2();
        const Complex m = x.z1() * v2 - x.z2() * v1;
        const Complex w[3] = {v1, v2, m};
        // h(v,v) = sum_aa H_aa |w_a|^2 + sum_{a<b} 2 Re(H_ab w_b conj(w_a))
        for (int a = 0; a < 3; ++a) A.push_back(std::norm(w[a]));
        for (int a = 0; a < 3; ++a)
            for (int b2 = a + 1; b2 < 3; ++b2) {
                const Complex prod = w[b2] * std::conj(w[a]);
                A.push_back(2.0 * prod.real());
                A.push_back(-2.0 * prod.imag());
            }
        b.push_back(hf.evaluate_h(x).form(v, v));
    }
    std::vector<double> sol;
    try {
        sol = least_squares(A, b, n_samples, cols);
    } catch (const FitError&) {
        throw FitError("momentum_polynomial_fit: sample is rank deficient, increase n_samples");
    }
    MomentumFit out;
    out.n_samples = n_samples;
    out.seed = seed;
    for (int a = 0; a < 3; ++a) out.coefficients[a][a] = sol[a];
    int idx = 3;
    for (int a = 0; a < 3; ++a)
        for (int b2 = a + 1; b2 < 3; ++b2) {
            const Complex hab(sol[idx], sol[idx + 1]);
            idx += 2;
            out.coefficients[a][b2] = hab;
            out.coefficients[b2][a] = std::conj(hab);
        }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        double fitval = 0.0;
        for (int c = 0; c < cols; ++c) fitval += A[static_cast<size_t>(i) * cols + c] * sol[c];
        num += (fitval - b[i]) * (fitval - b[i]);
        den += b[i] * b[i];
    }
    out.residual = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    return out;
}

std::string to_json(const MomentumFit& fit) {
    nlohmann::ordered_json j;
    j["residual"] = fit.residual;
    nlohmann::ordered_json coef = nlohmann::ordered_json::array();
    for (int a = 0; a < 3; ++a) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int b = 0; b < 3; ++b)
            row.push_back({fit.coefficients[a][b].real(), fit.coefficients[a][b].imag()});
        coef.push_back(row);
    }
    j["coefficients"] = coef;
    j["n_samples"] = fit.n_samples;
    j["seed"] = fit.seed;
    return j.dump();
}

} // namespace klab
