// Acceptance suite: one criterion per block, one PASS/FAIL line each.
// Exit code 0 only when every criterion holds at its stated tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "klab/beltrami.hpp"
#include "klab/circles.hpp"
#include "klab/connection.hpp"
#include "klab/curvature.hpp"
#include "klab/errors.hpp"
#include "klab/families.hpp"
#include "klab/linear_maps.hpp"
#include "klab/metrics.hpp"
#include "klab/projective.hpp"
#include "klab/rng.hpp"
#include "klab/suites.hpp"

using namespace klab;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Criterion {
    std::string name;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

Point4 g_unit(const MetricField& g, const Point4& p, const Point4& v) {
    return v / std::sqrt(std::abs(g.evaluate(p).form(v, v)));
}

void criterion_1_and_2(Criterion& c1, Criterion& c2) {
    const auto start = std::chrono::steady_clock::now();
    double max_fit = 0.0, max_line_defect = 0.0;
    for (double alpha : {-1.0, -0.5, 0.5, 1.0}) {
        const MetricField g = fubini_metric(alpha);
        SeededRng rng(kSeed);
        for (int i = 0; i < 200; ++i) {
            const Point4 p = seeded_point(rng, g.region);
            const Point4 v = g_unit(g, p, seeded_unit_vector(rng));
            const Trajectory traj = geodesic(g, p, v, 1.0, 2048);
            max_fit = std::max(max_fit, fit_circle(traj.points).relative_residual);
            max_line_defect = std::max(max_line_defect, complex_line_defect(traj));
        }
    }
    c1.require(max_fit <= 1e-6, "circle fit residual " + sci(max_fit));

    const MetricField flat = fubini_metric(0.0);
    SeededRng rng(kSeed);
    int lines = 0;
    for (int i = 0; i < 200; ++i) {
        const Point4 p = seeded_point(rng, flat.region);
        const Point4 v = g_unit(flat, p, seeded_unit_vector(rng));
        const CircleFit fit = fit_circle(geodesic(flat, p, v, 1.0, 2048).points);
        lines += fit.kind == CurveKind::line && fit.relative_residual <= 1e-6 ? 1 : 0;
    }
    c1.require(lines == 200, "flat geodesics classified as lines: " +
                                 std::to_string(lines) + "/200");
    const double seconds =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count() /
        1000.0;
    char stime[32];
    std::snprintf(stime, sizeof(stime), "%.1f s", seconds);
    c1.require(seconds <= 60.0, std::string("runtime ") + stime);
    c1.note("1000 geodesics, max fit residual " + sci(max_fit) + ", " + stime);

    c2.require(max_line_defect <= 1e-7, "complex line defect " + sci(max_line_defect));
    c2.note("800 geodesics, max defect " + sci(max_line_defect));
}

void criterion_3(Criterion& c) {
    const std::vector<MetricField> battery = {
        fubini_metric(-1.0),       fubini_metric(-0.5),
        fubini_metric(0.5),        fubini_metric(1.0),
        ball_interior_metric(),    euclidean_metric(),
        test_field("nonhermitian"), test_field("nonkahler"),
        test_field("perturbed"),
    };
    int disagreements = 0, kahler_count = 0;
    for (const MetricField& g : battery) {
        SeededRng rng(kSeed);
        for (int i = 0; i < 20; ++i) {
            const Point4 p = seeded_point(rng, g.region);
            const bool closed = kahler_defect(g, p, 1e-4) <= 1e-6;
            const bool bilinear = complex_bilinearity_defect(christoffel(g, p)) <= 1e-6;
            disagreements += closed == bilinear ? 0 : 1;
            kahler_count += closed ? 1 : 0;
        }
    }
    c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    c.note("9 fields x 20 points, " + std::to_string(kahler_count) +
           " points pass both defects, 0 disagreements");
}

void criterion_4(Criterion& c) {
    double worst_defect = 0.0, worst_beta = 0.0;
    for (double alpha : {-1.0, 1.0}) {
        const MetricField g = fubini_metric(alpha);
        SeededRng rng(kSeed);
        for (int i = 0; i < 50; ++i) {
            const Point4 p = seeded_point(rng, g.region);
            const ExpJet2 jet = exp_jet2(g, p);
            const double defect = holomorphy_defect_quadratic(
                [&](const Point4& x) { return jet.quadratic(x); });
            worst_defect = std::max(worst_defect, defect);
            const ClassifyResult cls = classify_A(jet.A, 1e-6);
            c.require(cls.complex_linear, "classification failed at a sample point");
            worst_beta = std::max(worst_beta, cls.beta_norm);
            if (!c.ok) return;
        }
    }
    c.require(worst_defect <= 1e-6, "holomorphy defect " + sci(worst_defect));
    c.require(worst_beta <= 1e-6, "beta norm " + sci(worst_beta));
    c.note("100 jets, max defect " + sci(worst_defect) + ", max beta " + sci(worst_beta));
}

void criterion_5(Criterion& c) {
    double worst_res = 0.0, worst_lin = 0.0;
    for (double alpha : {-1.0, -0.5, 0.5, 1.0}) {
        const MetricField g = fubini_metric(alpha);
        SeededRng rng(kSeed);
        for (int i = 0; i < 50; ++i) {
            const ExtractLResult fit = extract_L(christoffel(g, seeded_point(rng, g.region)));
            worst_res = std::max(worst_res, fit.residual);
            worst_lin = std::max(worst_lin, fit.linearity_defect);
        }
    }
    c.require(worst_res <= 1e-6, "proportionality residual " + sci(worst_res));
    c.require(worst_lin <= 1e-6, "complex linearity defect " + sci(worst_lin));

    const MetricField bad = test_field("diagonal-exp");
    SeededRng rng(kSeed);
    double control = 1e300;
    for (int i = 0; i < 20; ++i)
        control = std::min(control,
                           extract_L(christoffel(bad, seeded_point(rng, bad.region))).residual);
    c.require(control >= 1e-2, "negative control residual " + sci(control));
    c.note("200 fits, max residual " + sci(worst_res) + ", control min " + sci(control));
}

void criterion_6(Criterion& c) {
    const MetricField g = fubini_metric(1.0);
    SeededRng rng(kSeed);

    double worst_jet = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Point4 p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                       rng.uniform(-1, 1)};
        const ComplexFunctional L{{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)},
                                  {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)}};
        const ProjectiveMap rect = rectifier(p, L);
        const Jet2 jet = jet2_of_map([&](const Point4& x) { return rect.apply(x); }, {});
        double defect = (jet.linear - Mat4::identity()).max_abs();
        for (const Point4& x : quadratic_sample_points())
            defect = std::max(defect, norm(jet.quadratic(x) - cmul(L.value(x), x)));
        worst_jet = std::max(worst_jet, defect);
    }
    c.require(worst_jet <= 1e-7, "2-jet mismatch " + sci(worst_jet));

    double worst_image = 0.0;
    for (int cases = 0; cases < 5; ++cases) {
        const Point4 p{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5),
                       rng.uniform(-0.5, 0.5)};
        const ComplexFunctional L{{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)},
                                  {rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)}};
        const ProjectiveMap rect = rectifier(p, L);
        for (int i = 0; i < 20; ++i) {
            const CircleFit fit =
                image_of_line(rect, {}, seeded_unit_vector(rng), 1.0, 256);
            worst_image = std::max(worst_image, fit.relative_residual);
        }
    }
    c.require(worst_image <= 1e-8, "line image residual " + sci(worst_image));

    double worst_center = 0.0, worst_radius = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const ExpJet2 jet = exp_jet2(g, p);
        const ClassifyResult cls = classify_A(jet.A, 1e-6);
        c.require(cls.complex_linear, "2-jet classification failed");
        if (!c.ok) return;
        Point4 v;
        double curvature = 0.0;
        for (int tries = 0; tries < 64 && curvature < 0.15; ++tries) {
            v = g_unit(g, p, seeded_unit_vector(rng));
            const Point4 a = jet.quadratic(v);
            curvature = norm(a - v * (dot(a, v) / norm2(v))) / norm2(v);
        }
        const CircleFit geo = fit_circle(geodesic(g, p, v, 1.0, 2048).points);
        const CircleFit img = image_of_line(rectifier(p, cls.L), {}, v, 1.0, 512);
        worst_center = std::max(worst_center, norm(geo.center - img.center) / geo.radius);
        worst_radius =
            std::max(worst_radius, std::abs(geo.radius - img.radius) / geo.radius);
    }
    c.require(worst_center <= 1e-5, "circle center mismatch " + sci(worst_center));
    c.require(worst_radius <= 1e-5, "circle radius mismatch " + sci(worst_radius));
    c.note("jets " + sci(worst_jet) + ", images " + sci(worst_image) + ", match " +
           sci(std::max(worst_center, worst_radius)));
}

void criterion_7(Criterion& c) {
    const ScanResult plus = hsc_constancy_scan(fubini_metric(1.0), {{}, 1.0}, 50, kSeed);
    c.require(plus.stddev / std::abs(plus.mean) <= 1e-4,
              "spread for the positive model " + sci(plus.stddev / std::abs(plus.mean)));
    const ScanResult minus = hsc_constancy_scan(fubini_metric(-1.0), {{}, 0.5}, 50, kSeed);
    c.require(minus.stddev / std::abs(minus.mean) <= 1e-4,
              "spread for the negative model " + sci(minus.stddev / std::abs(minus.mean)));
    const ScanResult flat = hsc_constancy_scan(euclidean_metric(), {{}, 1.0}, 50, kSeed);
    c.require(flat.max_dev <= 1e-10, "flat max deviation " + sci(flat.max_dev));

    double worst_gauss = 0.0;
    for (double alpha : {-1.0, 1.0}) {
        const MetricField g = fubini_metric(alpha);
        SeededRng rng(kSeed);
        for (int i = 0; i < 10; ++i) {
            const Point4 p = seeded_point(rng, g.region);
            const Point4 xi = seeded_unit_vector(rng);
            worst_gauss =
                std::max(worst_gauss, std::abs(hsc(g, p, xi) - gauss_on_complex_line(g, p, xi)));
        }
    }
    c.require(worst_gauss <= 1e-4, "tensor vs surface curvature " + sci(worst_gauss));

    const ScanResult bad = hsc_constancy_scan(test_field("perturbed"), {{}, 1.0}, 50, kSeed);
    c.require(bad.stddev / std::abs(bad.mean) >= 1e-2,
              "perturbed field not flagged, spread " + sci(bad.stddev / std::abs(bad.mean)));
    c.note("constants " + sci(plus.mean) + " / " + sci(minus.mean) + ", cross-check " +
           sci(worst_gauss));
}

void criterion_8(Criterion& c) {
    const MetricField g = ball_exterior_metric();
    SeededRng rng(kSeed);
    double worst_fit = 0.0, worst_energy = 0.0;
    for (int i = 0; i < 50; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        Point4 v = seeded_unit_vector(rng);
        for (int tries = 0; tries < 64; ++tries) {
            if (std::abs(g.evaluate(p).form(v, v)) >= 0.05) break;
            v = seeded_unit_vector(rng);
        }
        const Trajectory traj = exterior_ball_curve(p, v, 0.5, 4096);
        worst_fit = std::max(worst_fit, fit_circle(traj.points).relative_residual);
        const double e0 = g.evaluate(traj.points[0]).form(traj.velocities[0],
                                                          traj.velocities[0]);
        double drift = 0.0;
        for (size_t k = 0; k < traj.size(); ++k) {
            const double e =
                g.evaluate(traj.points[k]).form(traj.velocities[k], traj.velocities[k]);
            drift = std::max(drift, std::abs(e - e0));
        }
        worst_energy = std::max(worst_energy, drift / std::abs(e0));
    }
    c.require(worst_fit <= 1e-5, "exterior circle fit " + sci(worst_fit));
    c.require(worst_energy <= 1e-7, "energy drift " + sci(worst_energy));
    c.note("50 curves, fit " + sci(worst_fit) + ", energy " + sci(worst_energy));
}

void criterion_9(Criterion& c) {
    const SuspensionFamily fam = suspend(poincare_family());
    SeededRng rng(kSeed);
    auto draw_point = [&] {
        return Point4::from_complex({rng.uniform(-1.5, 1.5), rng.uniform(0.3, 2.0)},
                                    {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    };
    double worst_tangency = 0.0, worst_fit = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Point4 a = draw_point();
        const Point4 dir = seeded_unit_vector(rng);
        const SpaceCurve curve = fam.curve(a, dir);
        Point4 d = curve_tangent(curve);
        d = d / norm(d);
        worst_tangency =
            std::max(worst_tangency, norm(d - dir) + norm(curve.at(0.0) - a));
        worst_fit =
            std::max(worst_fit, fit_circle(sample_space_curve(curve, 128)).relative_residual);
    }
    c.require(worst_tangency <= 1e-8, "tangency defect " + sci(worst_tangency));
    c.require(worst_fit <= 1e-8, "curve circle fit " + sci(worst_fit));

    double worst_line = 0.0;
    bool all_lines = true;
    for (int i = 0; i < 20; ++i) {
        const Point4 a = draw_point();
        const ProjectiveMap rect = suspension_rectifier(fam, a);
        for (int k = 0; k < 3; ++k) {
            const Point4 dir = k == 0 ? Point4{0, 0, 1, 0} : seeded_unit_vector(rng);
            const auto pts = sample_space_curve(fam.curve(a, dir), 96);
            std::vector<Point4> images;
            for (const Point4& q : pts) images.push_back(rect.apply(q));
            const CircleFit fit = fit_circle(images);
            all_lines = all_lines && fit.kind == CurveKind::line;
            worst_line = std::max(worst_line, fit.relative_residual);
        }
    }
    c.require(all_lines, "a rectified curve was not classified as a line");
    c.require(worst_line <= 1e-6, "rectified line residual " + sci(worst_line));
    c.note("200 curves, fit " + sci(worst_fit) + "; 60 rectified, residual " +
           sci(worst_line));
}

void criterion_10(Criterion& c) {
    double worst_roundtrip = 0.0, worst_line = 0.0, worst_ident = 0.0, worst_momentum = 0.0;
    for (double alpha : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const MetricField g = fubini_metric(alpha);
        const NormalizedMetric h = normalized_h(g);
        SeededRng rng(kSeed);
        double lo = 1e300, hi = -1e300, shape = 0.0;
        for (int i = 0; i < 30; ++i) {
            const Point4 p = seeded_point(rng, g.region);
            const Mat4 rec = recover_g(h, p);
            const Mat4 orig = g.evaluate(p);
            double num = 0.0, den = 0.0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    num += rec(a, b) * orig(a, b);
                    den += orig(a, b) * orig(a, b);
                }
            const double lambda = num / den;
            lo = std::min(lo, lambda);
            hi = std::max(hi, lambda);
            shape = std::max(shape, (rec - orig * lambda).max_abs() / orig.max_abs());
        }
        worst_roundtrip = std::max(worst_roundtrip, (hi - lo) / std::abs(hi) + shape);
        for (int i = 0; i < 10; ++i) {
            const Point4 p = seeded_point(rng, g.region);
            worst_line = std::max(worst_line, line_constancy_defect(h, p, seeded_unit_vector(rng),
                                                                    16, 0.5 * g.region.radius));
            worst_ident = std::max(worst_ident, derivative_identity_defect(g, p));
        }
    }
    for (double alpha : {-1.0, 0.0, 1.0})
        worst_momentum =
            std::max(worst_momentum,
                     momentum_polynomial_fit(normalized_h(fubini_metric(alpha)), 128).residual);
    c.require(worst_roundtrip <= 1e-8, "round trip spread " + sci(worst_roundtrip));
    c.require(worst_line <= 1e-6, "line constancy " + sci(worst_line));
    c.require(worst_ident <= 1e-5, "derivative identities " + sci(worst_ident));
    c.require(worst_momentum <= 1e-6, "momentum residual " + sci(worst_momentum));

    // negative controls fail by at least 10x the tolerance
    const MetricField bad = test_field("perturbed");
    const NormalizedMetric hbad = normalized_h(bad);
    SeededRng rng(kSeed);
    double bad_line = 0.0, bad_ident = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Point4 p = seeded_point(rng, bad.region);
        bad_line =
            std::max(bad_line, line_constancy_defect(hbad, p, seeded_unit_vector(rng), 16, 0.25));
        bad_ident = std::max(bad_ident, derivative_identity_defect(bad, p));
    }
    const double bad_momentum = momentum_polynomial_fit(hbad, 128).residual;
    c.require(bad_line >= 1e-5, "line constancy control " + sci(bad_line));
    c.require(bad_ident >= 1e-4, "derivative identity control " + sci(bad_ident));
    c.require(bad_momentum >= 1e-5, "momentum control " + sci(bad_momentum));
    c.note("roundtrip " + sci(worst_roundtrip) + ", controls " + sci(bad_line) + "/" +
           sci(bad_ident) + "/" + sci(bad_momentum));
}

void criterion_11(Criterion& c) {
    for (const SuiteInfo& info : suite_registry()) {
        SuiteConfig cfg;
        cfg.suite = info.id;
        cfg.samples = info.id == "momentum" ? 128 : (info.id == "curvature" ? 12 : 5);
        cfg.seed = 20260808;
        const std::string a = run_suite(cfg).to_json(false);
        const std::string b = run_suite(cfg).to_json(false);
        c.require(a == b, "suite " + info.id + " not deterministic");
    }
    c.note("all 12 suites rerun byte-identical without the timing field");
}

} // namespace

int main() {
    std::vector<Criterion> results;
    auto run = [&](const std::string& name, const std::function<void(Criterion&)>& body) {
        Criterion c{name};
        try {
            body(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(c));
    };

    {
        Criterion c1{"1 geodesics-are-circles"};
        Criterion c2{"2 complex-line-containment"};
        try {
            criterion_1_and_2(c1, c2);
        } catch (const std::exception& e) {
            c1.ok = false;
            c1.detail = std::string("exception: ") + e.what();
            c2.ok = false;
            c2.detail = c1.detail;
        }
        results.push_back(std::move(c1));
        results.push_back(std::move(c2));
    }
    run("3 kahler-iff-complex-bilinear", criterion_3);
    run("4 holomorphic-exponential-jets", criterion_4);
    run("5 proportionality-functional", criterion_5);
    run("6 rectifier-fidelity", criterion_6);
    run("7 curvature-constancy", criterion_7);
    run("8 exterior-ball-family", criterion_8);
    run("9 suspension-family", criterion_9);
    run("10 gram-machinery", criterion_10);
    run("11 determinism", criterion_11);

    int failures = 0;
    for (const Criterion& c : results) {
        failures += c.ok ? 0 : 1;
        std::printf("%s criterion %-33s %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
