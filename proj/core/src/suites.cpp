#include "klab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include <json.hpp>

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
#include "klab/version.hpp"

namespace klab {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const Point4& p) {
    return "[" + fmt(p.x0) + "," + fmt(p.x1) + "," + fmt(p.x2) + "," + fmt(p.x3) + "]";
}

// Resolved per-run settings.
struct Resolved {
    SuiteConfig cfg;
    SuiteInfo info;
};

struct CaseRunner {
    VerificationReport& report;
    int counter = 0;

    void run(std::vector<std::pair<std::string, std::string>> params,
             const std::function<void(CaseResult&)>& body) {
        CaseResult c;
        char id[16];
        std::snprintf(id, sizeof(id), "case-%03d", counter++);
        c.id = id;
        c.params = std::move(params);
        try {
            body(c);
        } catch (const std::exception& e) {
            c.pass = false;
            c.error = e.what();
        }
        report.cases.push_back(std::move(c));
    }
};

Point4 unit_speed(const MetricField& g, const Point4& p, const Point4& v) {
    const double e = g.evaluate(p).form(v, v);
    return v / std::sqrt(std::abs(e));
}

bool expects_lines(const MetricField& g) { return g.alpha.has_value() && *g.alpha == 0.0; }

// ---------------------------------------------------------------------------
// suite bodies

void suite_geodesic_circles(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    const bool want_lines = expects_lines(g);
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const Point4 v = unit_speed(g, p, seeded_unit_vector(rng));
        runner.run({{"p", fmt(p)}, {"v", fmt(v)}}, [&](CaseResult& c) {
            const Trajectory traj = geodesic(g, p, v, 1.0, 2048);
            const CircleFit fit = fit_circle(traj.points);
            c.residuals.emplace_back("relative_residual", fit.relative_residual);
            c.params.emplace_back("kind", fit.kind == CurveKind::circle ? "circle" : "line");
            c.pass = fit.relative_residual <= r.cfg.tol &&
                     (!want_lines || fit.kind == CurveKind::line);
        });
    }
}

void suite_complex_lines(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const Point4 v = unit_speed(g, p, seeded_unit_vector(rng));
        runner.run({{"p", fmt(p)}, {"v", fmt(v)}}, [&](CaseResult& c) {
            const Trajectory traj = geodesic(g, p, v, 1.0, 2048);
            const double defect = complex_line_defect(traj);
            c.residuals.emplace_back("complex_line_defect", defect);
            c.pass = defect <= r.cfg.tol;
        });
    }
}

void suite_kahler(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    const double step = r.cfg.step > 0.0 ? r.cfg.step : 1e-4;
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        runner.run({{"p", fmt(p)}}, [&](CaseResult& c) {
            const double kd = kahler_defect(g, p, step);
            const double bd = complex_bilinearity_defect(christoffel(g, p));
            c.residuals.emplace_back("kahler_defect", kd);
            c.residuals.emplace_back("complex_bilinearity_defect", bd);
            c.pass = kd <= r.cfg.tol && bd <= r.cfg.tol;
        });
    }
}

void suite_bilinearity(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        runner.run({{"p", fmt(p)}}, [&](CaseResult& c) {
            const double bd = complex_bilinearity_defect(christoffel(g, p));
            c.residuals.emplace_back("complex_bilinearity_defect", bd);
            c.pass = bd <= r.cfg.tol;
        });
    }
}

void suite_exp_jet(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        runner.run({{"p", fmt(p)}}, [&](CaseResult& c) {
            const ExpJet2 jet = exp_jet2(g, p);
            const double defect =
                holomorphy_defect_quadratic([&](const Point4& x) { return jet.quadratic(x); });
            const ClassifyResult cls = classify_A(jet.A, r.cfg.tol);
            c.residuals.emplace_back("holomorphy_defect", defect);
            c.residuals.emplace_back("fit_residual", jet.fit_residual);
            c.residuals.emplace_back("beta_norm", cls.beta_norm);
            c.pass = defect <= r.cfg.tol && cls.complex_linear && jet.fit_residual <= r.cfg.tol;
        });
    }
}

void suite_proportionality(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        runner.run({{"p", fmt(p)}}, [&](CaseResult& c) {
            const ExtractLResult fit = extract_L(christoffel(g, p), r.cfg.tol);
            c.residuals.emplace_back("residual", fit.residual);
            c.residuals.emplace_back("linearity_defect", fit.linearity_defect);
            c.pass = fit.residual <= r.cfg.tol && fit.linearity_defect <= r.cfg.tol;
        });
    }
}

ComplexFunctional seeded_functional(SeededRng& rng, double scale) {
    return ComplexFunctional{Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) * scale,
                             Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) * scale};
}

void suite_rectifier(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);

    // 2-jet of the rectifier equals (id, x -> L(x) x)
    for (int i = 0; i < 10; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const ComplexFunctional L = seeded_functional(rng, 0.5);
        runner.run({{"group", "jet"}, {"p", fmt(p)}}, [&](CaseResult& c) {
            const ProjectiveMap rect = rectifier(p, L);
            const Jet2 jet =
                jet2_of_map([&](const Point4& x) { return rect.apply(x); }, Point4{});
            double defect = (jet.linear - Mat4::identity()).max_abs();
            for (const Point4& x : quadratic_sample_points())
                defect = std::max(defect, norm(jet.quadratic(x) - cmul(L.value(x), x)));
            c.residuals.emplace_back("jet_defect", defect);
            c.pass = defect <= r.cfg.tol;
        });
    }

    // images of lines through the base point are circles or lines
    const double image_tol = 1e-8;
    for (int i = 0; i < 20; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const ComplexFunctional L = seeded_functional(rng, 0.4);
        const Point4 dir = seeded_unit_vector(rng);
        runner.run({{"group", "line-image"}, {"dir", fmt(dir)}}, [&](CaseResult& c) {
            const CircleFit fit = image_of_line(rectifier(p, L), Point4{}, dir, 1.0, 256);
            c.residuals.emplace_back("relative_residual", fit.relative_residual);
            c.pass = fit.relative_residual <= image_tol;
        });
    }

    // rectifier images reproduce the integrated geodesic circles
    const double match_tol = 1e-5;
    for (int i = 0; i < 10; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        runner.run({{"group", "geodesic-match"}, {"p", fmt(p)}}, [&](CaseResult& c) {
            const ExpJet2 jet = exp_jet2(g, p);
            const ClassifyResult cls = classify_A(jet.A, 1e-6);
            if (!cls.complex_linear)
                throw PreconditionError("rectifier suite: 2-jet is not complex linear");
            // keep the test direction well curved so both fits are circles
            Point4 v;
            double curvature = 0.0;
            for (int tries = 0; tries < 64; ++tries) {
                v = unit_speed(g, p, seeded_unit_vector(rng));
                const Point4 a = jet.quadratic(v);
                const Point4 a_perp = a - v * (dot(a, v) / norm2(v));
                curvature = norm(a_perp) / norm2(v);
                if (curvature >= 0.15) break;
            }
            const Trajectory traj = geodesic(g, p, v, 1.0, 2048);
            const CircleFit geo = fit_circle(traj.points);
            const CircleFit img = image_of_line(rectifier(p, cls.L), Point4{}, v, 1.0, 512);
            const double center_err = norm(geo.center - img.center) / geo.radius;
            const double radius_err = std::abs(geo.radius - img.radius) / geo.radius;
            c.residuals.emplace_back("center_error", center_err);
            c.residuals.emplace_back("radius_error", radius_err);
            c.pass = geo.kind == CurveKind::circle && img.kind == CurveKind::circle &&
                     center_err <= match_tol && radius_err <= match_tol;
        });
    }
}

void suite_curvature(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    runner.run({{"group", "constancy-scan"}}, [&](CaseResult& c) {
        const ScanResult scan = hsc_constancy_scan(g, g.region, r.cfg.samples, r.cfg.seed);
        c.residuals.emplace_back("mean", scan.mean);
        c.residuals.emplace_back("std", scan.stddev);
        c.residuals.emplace_back("max_dev", scan.max_dev);
        if (std::abs(scan.mean) < 1e-8) {
            c.pass = scan.max_dev <= 1e-10;
        } else {
            c.residuals.emplace_back("relative_spread", scan.stddev / std::abs(scan.mean));
            c.pass = scan.stddev / std::abs(scan.mean) <= r.cfg.tol;
        }
    });
    for (int i = 0; i < 10; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const Point4 xi = seeded_unit_vector(rng);
        runner.run({{"group", "gauss-cross-check"}, {"p", fmt(p)}}, [&](CaseResult& c) {
            const double k1 = hsc(g, p, xi);
            const double k2 = gauss_on_complex_line(g, p, xi);
            const double diff = std::abs(k1 - k2);
            c.residuals.emplace_back("hsc", k1);
            c.residuals.emplace_back("gauss", k2);
            c.residuals.emplace_back("difference", diff);
            c.pass = diff <= 1e-4;
        });
    }
}

void suite_gram(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    SeededRng rng(r.cfg.seed);
    const NormalizedMetric h = normalized_h(g);

    runner.run({{"group", "round-trip"}}, [&](CaseResult& c) {
        double lo = 0.0, hi = 0.0, shape = 0.0;
        for (int i = 0; i < std::max(10, r.cfg.samples); ++i) {
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
            shape = std::max(shape, (rec - orig * lambda).max_abs() / orig.max_abs());
            if (i == 0) {
                lo = hi = lambda;
            } else {
                lo = std::min(lo, lambda);
                hi = std::max(hi, lambda);
            }
        }
        const double spread = (hi - lo) / std::abs(hi) + shape;
        c.residuals.emplace_back("ratio_spread", spread);
        c.pass = spread <= 1e-8;
    });

    for (int i = 0; i < 20; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        const Point4 u = seeded_unit_vector(rng);
        runner.run({{"group", "line-constancy"}, {"p", fmt(p)}}, [&](CaseResult& c) {
            const double defect = line_constancy_defect(h, p, u, 16, 0.5 * g.region.radius);
            c.residuals.emplace_back("line_constancy_defect", defect);
            c.pass = defect <= r.cfg.tol;
        });
    }

    const double identity_tol = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        runner.run({{"group", "derivative-identity"}, {"p", fmt(p)}}, [&](CaseResult& c) {
            const double defect = derivative_identity_defect(g, p);
            c.residuals.emplace_back("derivative_identity_defect", defect);
            c.pass = defect <= identity_tol;
        });
    }
}

void suite_momentum(const Resolved& r, CaseRunner& runner) {
    const MetricField g = metric_by_id(r.cfg.metric_id);
    runner.run({{"metric", g.name}}, [&](CaseResult& c) {
        const NormalizedMetric h = normalized_h(g);
        const MomentumFit fit =
            momentum_polynomial_fit(h, std::max(128, r.cfg.samples), r.cfg.seed);
        c.residuals.emplace_back("residual", fit.residual);
        c.pass = fit.residual <= r.cfg.tol;
    });
}

void suite_family_suspension(const Resolved& r, CaseRunner& runner) {
    if (!r.cfg.family_id.empty() && r.cfg.family_id != "suspension:poincare")
        throw PreconditionError("unknown family id: " + r.cfg.family_id);
    const SuspensionFamily fam = suspend(poincare_family());
    SeededRng rng(r.cfg.seed);

    auto seeded_domain_point = [&](SeededRng& rr) {
        // z in a box of the upper half-plane, w in a disc
        const Complex z(rr.uniform(-1.5, 1.5), rr.uniform(0.3, 2.0));
        const Complex w(rr.uniform(-1.0, 1.0), rr.uniform(-1.0, 1.0));
        return Point4::from_complex(z, w);
    };

    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 a = seeded_domain_point(rng);
        const Point4 dir = seeded_unit_vector(rng);
        runner.run({{"group", "completeness"}, {"a", fmt(a)}, {"dir", fmt(dir)}},
                   [&](CaseResult& c) {
                       const SpaceCurve curve = fam.curve(a, dir);
                       const double through = norm(curve.at(0.0) - a);
                       const Point4 d = curve_tangent(curve);
                       const double tangency =
                           norm(d / norm(d) - dir / norm(dir)) * 0.5 + through;
                       const auto pts = sample_space_curve(curve, 128);
                       const CircleFit fit = fit_circle(pts);
                       const double line_defect = complex_line_defect(pts, a, dir);
                       c.residuals.emplace_back("tangency_defect", tangency);
                       c.residuals.emplace_back("relative_residual", fit.relative_residual);
                       c.residuals.emplace_back("complex_line_defect", line_defect);
                       c.pass = tangency <= 1e-8 && fit.relative_residual <= r.cfg.tol &&
                                line_defect <= 1e-8;
                   });
    }

    const double straighten_tol = 1e-6;
    const int rect_points = 20;
    for (int i = 0; i < rect_points; ++i) {
        const Point4 a = seeded_domain_point(rng);
        for (int k = 0; k < 3; ++k) {
            const Point4 dir = k == 0 ? Point4{0, 0, 1, 0} : seeded_unit_vector(rng);
            runner.run({{"group", "rectifier"}, {"a", fmt(a)}, {"dir", fmt(dir)}},
                       [&](CaseResult& c) {
                           const ProjectiveMap rect = suspension_rectifier(fam, a);
                           const SpaceCurve curve = fam.curve(a, dir);
                           const auto pts = sample_space_curve(curve, 96);
                           std::vector<Point4> images;
                           images.reserve(pts.size());
                           for (const Point4& q : pts) images.push_back(rect.apply(q));
                           const CircleFit fit = fit_circle(images);
                           c.residuals.emplace_back("line_residual", fit.relative_residual);
                           c.pass = fit.kind == CurveKind::line &&
                                    fit.relative_residual <= straighten_tol;
                       });
        }
    }
}

void suite_family_exterior(const Resolved& r, CaseRunner& runner) {
    if (!r.cfg.family_id.empty() && r.cfg.family_id != "exterior-ball")
        throw PreconditionError("unknown family id: " + r.cfg.family_id);
    const MetricField g = ball_exterior_metric();
    SeededRng rng(r.cfg.seed);
    for (int i = 0; i < r.cfg.samples; ++i) {
        const Point4 p = seeded_point(rng, g.region);
        // keep away from null directions of the indefinite form
        Point4 v = seeded_unit_vector(rng);
        for (int tries = 0; tries < 64; ++tries) {
            if (std::abs(g.evaluate(p).form(v, v)) >= 0.05) break;
            v = seeded_unit_vector(rng);
        }
        runner.run({{"p", fmt(p)}, {"v", fmt(v)}}, [&](CaseResult& c) {
            const Trajectory traj = exterior_ball_curve(p, v, 0.5, 4096);
            const CircleFit fit = fit_circle(traj.points);
            const double e0 = g.evaluate(traj.points[0]).form(traj.velocities[0],
                                                              traj.velocities[0]);
            double drift = 0.0;
            for (size_t k = 0; k < traj.size(); ++k) {
                const double e =
                    g.evaluate(traj.points[k]).form(traj.velocities[k], traj.velocities[k]);
                drift = std::max(drift, std::abs(e - e0));
            }
            const double energy_drift = drift / std::abs(e0);
            c.residuals.emplace_back("relative_residual", fit.relative_residual);
            c.residuals.emplace_back("energy_drift", energy_drift);
            c.pass = fit.relative_residual <= r.cfg.tol && energy_drift <= 1e-7;
        });
    }
}

using SuiteFn = void (*)(const Resolved&, CaseRunner&);

struct Entry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"geodesic-circles", "integrated geodesics fit circles or lines", "fubini:1", 50,
          1e-6},
         suite_geodesic_circles},
        {{"complex-lines", "integrated geodesics stay in complex lines", "fubini:1", 50, 1e-7},
         suite_complex_lines},
        {{"kahler", "closedness of the associated (1,1)-form", "fubini:1", 20, 1e-6},
         suite_kahler},
        {{"bilinearity", "complex bilinearity of the Christoffel form", "fubini:1", 20, 1e-6},
         suite_bilinearity},
        {{"exp-jet", "exponential 2-jets are holomorphic of quaternionic form", "fubini:1", 50,
          1e-6},
         suite_exp_jet},
        {{"proportionality", "Gamma(v,v) = L(v) v with complex linear L", "fubini:1", 50, 1e-6},
         suite_proportionality},
        {{"rectifier", "projective rectifiers share 2-jets with exponentials", "fubini:1", 40,
          1e-7},
         suite_rectifier},
        {{"curvature", "holomorphic sectional curvature constancy", "fubini:1", 50, 1e-4},
         suite_curvature},
        {{"gram", "Gram normalization h = g/G^(2/3) and its identities", "fubini:1", 50, 1e-6},
         suite_gram},
        {{"momentum", "h is quadratic in momentum and angular momentum", "fubini:1", 128, 1e-6},
         suite_momentum},
        {{"family-suspension", "suspension curves are rectifiable circles",
          "suspension:poincare", 200, 1e-8},
         suite_family_suspension},
        {{"family-exterior", "exterior-ball curves are circles conserving energy",
          "exterior-ball", 50, 1e-5},
         suite_family_exterior},
    };
    return table;
}

} // namespace

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const Entry& e : entries()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

bool VerificationReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string VerificationReport::to_json(bool include_wall_time) const {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["suite"] = suite;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : config) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json case_list = nlohmann::ordered_json::array();
    int passed = 0;
    std::map<std::string, double> max_res;
    for (const CaseResult& c : cases) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        nlohmann::ordered_json params;
        for (const auto& [k, v] : c.params) params[k] = v;
        jc["params"] = params;
        jc["status"] = c.pass ? "pass" : "fail";
        nlohmann::ordered_json res;
        for (const auto& [k, v] : c.residuals) {
            res[k] = v;
            auto it = max_res.find(k);
            if (it == max_res.end())
                max_res[k] = v;
            else
                it->second = std::max(it->second, v);
        }
        jc["residuals"] = res;
        if (!c.error.empty()) jc["error"] = c.error;
        case_list.push_back(jc);
        passed += c.pass ? 1 : 0;
    }
    j["cases"] = case_list;
    nlohmann::ordered_json summary;
    summary["cases"] = cases.size();
    summary["passed"] = passed;
    summary["failed"] = cases.size() - passed;
    nlohmann::ordered_json mr;
    for (const auto& [k, v] : max_res) mr[k] = v;
    summary["max_residuals"] = mr;
    j["summary"] = summary;
    j["version"] = version;
    if (include_wall_time) j["wall_time_ms"] = wall_time_ms;
    return j.dump(2);
}

std::string VerificationReport::to_csv() const {
    std::string out = "case,status,residuals\n";
    for (const CaseResult& c : cases) {
        out += c.id;
        out += c.pass ? ",pass," : ",fail,";
        bool first = true;
        for (const auto& [k, v] : c.residuals) {
            if (!first) out += ';';
            first = false;
            out += k + "=" + fmt(v);
        }
        out += '\n';
    }
    return out;
}

VerificationReport run_suite(const SuiteConfig& config) {
    const Entry* entry = nullptr;
    for (const Entry& e : entries())
        if (e.info.id == config.suite) entry = &e;
    if (entry == nullptr) throw PreconditionError("unknown suite id: " + config.suite);
    if (config.format != "json" && config.format != "csv")
        throw PreconditionError("unknown report format: " + config.format);

    Resolved r{config, entry->info};
    const bool family_suite = config.suite.rfind("family-", 0) == 0;
    if (family_suite) {
        if (r.cfg.family_id.empty()) r.cfg.family_id = entry->info.default_metric;
    } else if (r.cfg.metric_id.empty()) {
        r.cfg.metric_id = entry->info.default_metric;
    }
    if (r.cfg.samples <= 0) r.cfg.samples = entry->info.default_samples;
    if (r.cfg.tol <= 0.0) r.cfg.tol = entry->info.default_tol;

    VerificationReport report;
    report.suite = config.suite;
    report.version = KLAB_VERSION;
    report.config = {
        {"suite", r.cfg.suite},
        {family_suite ? "family" : "metric", family_suite ? r.cfg.family_id : r.cfg.metric_id},
        {"samples", std::to_string(r.cfg.samples)},
        {"seed", std::to_string(r.cfg.seed)},
        {"tol", fmt(r.cfg.tol)},
        {"step", fmt(r.cfg.step)},
        {"format", r.cfg.format},
    };
    CaseRunner runner{report};
    const auto start = std::chrono::steady_clock::now();
    entry->fn(r, runner);
    const auto stop = std::chrono::steady_clock::now();
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count() / 1000.0;
    return report;
}

} // namespace klab
