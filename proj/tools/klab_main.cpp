// klab: verification suites and data exports for circle-geodesic geometry.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klab/connection.hpp"
#include "klab/errors.hpp"
#include "klab/families.hpp"
#include "klab/metrics.hpp"
#include "klab/rng.hpp"
#include "klab/suites.hpp"
#include "klab/version.hpp"

namespace {

// Flat key=value config files; blank lines and # comments allowed. Values
// apply only where the command line did not already provide the option.
void apply_config_file(const std::string& path, CLI::App* cmd,
                       const std::map<std::string, std::function<void(const std::string&)>>&
                           setters) {
    std::ifstream in(path);
    if (!in) throw klab::PreconditionError("cannot read config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        const auto eq = line.find('=', start);
        if (eq == std::string::npos)
            throw klab::PreconditionError("config line " + std::to_string(lineno) +
                                          ": expected key=value");
        const std::string key = line.substr(start, eq - start);
        const std::string value = line.substr(eq + 1);
        const auto it = setters.find(key);
        if (it == setters.end())
            throw klab::PreconditionError("config line " + std::to_string(lineno) +
                                          ": unknown key '" + key + "'");
        if (cmd->count("--" + key) == 0) it->second(value);
    }
}

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    out << payload;
    return 0;
}

bool parse_point(const std::string& text, klab::Point4& p) {
    double a, b, c, d;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf", &a, &b, &c, &d) != 4) return false;
    p = {a, b, c, d};
    return true;
}

int run_verify(const klab::SuiteConfig& cfg) {
    const klab::VerificationReport report = klab::run_suite(cfg);
    const std::string payload =
        cfg.format == "csv" ? report.to_csv() : report.to_json();
    const int io = write_output(cfg.out_path, payload);
    if (io != 0) return io;
    std::cerr << report.suite << ": " << report.cases.size() << " cases, "
              << (report.all_pass() ? "all pass" : "FAILURES") << "\n";
    return report.all_pass() ? 0 : 1;
}

int run_export(const std::string& metric_id, const std::string& family_id, std::uint64_t seed,
               int samples, double T, const std::string& p_text, const std::string& v_text,
               const std::string& out_path) {
    klab::SeededRng rng(seed);
    klab::Trajectory traj;
    if (!family_id.empty()) {
        if (family_id == "exterior-ball") {
            const klab::MetricField g = klab::ball_exterior_metric();
            const klab::Point4 p = klab::seeded_point(rng, g.region);
            const klab::Point4 v = klab::seeded_unit_vector(rng);
            traj = klab::exterior_ball_curve(p, v, T > 0 ? T : 0.5, samples);
        } else if (family_id == "suspension:poincare") {
            const klab::SuspensionFamily fam = klab::suspend(klab::poincare_family());
            const klab::Point4 a = klab::Point4::from_complex(
                {rng.uniform(-1.5, 1.5), rng.uniform(0.3, 2.0)},
                {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
            const klab::Point4 dir = klab::seeded_unit_vector(rng);
            const klab::SpaceCurve curve = fam.curve(a, dir);
            traj.metric_name = family_id;
            traj.p0 = a;
            traj.v0 = dir;
            for (int i = 0; i < samples; ++i) {
                const double t =
                    curve.t_min + (curve.t_max - curve.t_min) * i / (samples - 1);
                const double eps = 1e-6;
                traj.times.push_back(t);
                traj.points.push_back(curve.at(t));
                traj.velocities.push_back((curve.at(t + eps) - curve.at(t - eps)) / (2 * eps));
            }
        } else {
            std::cerr << "unknown family id: " << family_id << "\n";
            return 2;
        }
    } else {
        const klab::MetricField g = klab::metric_by_id(metric_id);
        klab::Point4 p = klab::seeded_point(rng, g.region);
        klab::Point4 v = klab::seeded_unit_vector(rng);
        if (!p_text.empty() && !parse_point(p_text, p)) {
            std::cerr << "bad --p0, expect x0,x1,x2,x3\n";
            return 2;
        }
        if (!v_text.empty() && !parse_point(v_text, v)) {
            std::cerr << "bad --v0, expect v0,v1,v2,v3\n";
            return 2;
        }
        traj = klab::geodesic(g, p, v, T > 0 ? T : 1.0, samples);
    }
    std::ostringstream os;
    klab::write_trajectory_csv(os, traj);
    return write_output(out_path, os.str());
}

int run_merge(const std::vector<std::string>& inputs, const std::string& out_path) {
    nlohmann::ordered_json merged;
    merged["schema"] = "1";
    merged["reports"] = nlohmann::ordered_json::array();
    int total = 0, failed = 0;
    for (const std::string& path : inputs) {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot read report: " << path << "\n";
            return 2;
        }
        nlohmann::ordered_json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            std::cerr << "bad report " << path << ": " << e.what() << "\n";
            return 2;
        }
        if (j.contains("summary")) {
            total += j["summary"].value("cases", 0);
            failed += j["summary"].value("failed", 0);
        }
        merged["reports"].push_back(j);
    }
    merged["summary"] = {{"reports", inputs.size()}, {"cases", total}, {"failed", failed}};
    return write_output(out_path, merged.dump(2));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for metrics whose geodesics are circles"};
    app.set_version_flag("--version", std::string(KLAB_VERSION));
    app.require_subcommand(1);

    klab::SuiteConfig cfg;
    std::string suite_id, verify_config;
    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--config", verify_config, "flat key=value config file; flags override");
    std::string suites_help = "suite id, one of:";
    for (const auto& info : klab::suite_registry()) suites_help += " " + info.id;
    verify->add_option("suite", suite_id, suites_help)->required();
    verify->add_option("--metric", cfg.metric_id, "metric id (euclidean, fubini:<a>, ball, ball-exterior, testfield:<id>)");
    verify->add_option("--family", cfg.family_id, "family id (suspension:poincare, exterior-ball)");
    verify->add_option("--samples", cfg.samples, "seeded sample count");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--tol", cfg.tol, "primary tolerance of the suite");
    verify->add_option("--step", cfg.step, "finite difference step override");
    verify->add_option("--out", cfg.out_path, "output path (default stdout)");
    verify->add_option("--format", cfg.format, "json or csv");

    CLI::App* expo = app.add_subcommand("export", "export data files");
    CLI::App* traj = expo->add_subcommand("trajectory", "integrate and export one trajectory CSV");
    std::string traj_config;
    traj->add_option("--config", traj_config, "flat key=value config file; flags override");
    std::string e_metric = "fubini:1", e_family, e_p, e_v, e_out;
    std::uint64_t e_seed = 7;
    int e_samples = 2048;
    double e_T = 0.0;
    traj->add_option("--metric", e_metric, "metric id");
    traj->add_option("--family", e_family, "family id instead of a metric");
    traj->add_option("--seed", e_seed, "seed for the initial condition");
    traj->add_option("--samples", e_samples, "number of integration steps / samples");
    traj->add_option("--T", e_T, "integration time (default 1, exterior 0.5)");
    traj->add_option("--p0", e_p, "initial point x0,x1,x2,x3 (overrides seed)");
    traj->add_option("--v0", e_v, "initial velocity v0,v1,v2,v3 (overrides seed)");
    traj->add_option("--out", e_out, "output path (default stdout)");

    CLI::App* report = app.add_subcommand("report", "operate on report files");
    CLI::App* merge = report->add_subcommand("merge", "merge verification reports");
    std::vector<std::string> m_inputs;
    std::string m_out;
    merge->add_option("inputs", m_inputs, "report JSON files")->required();
    merge->add_option("--out", m_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            cfg.suite = suite_id;
            if (!verify_config.empty())
                apply_config_file(
                    verify_config, verify,
                    {{"metric", [&](const std::string& v) { cfg.metric_id = v; }},
                     {"family", [&](const std::string& v) { cfg.family_id = v; }},
                     {"samples", [&](const std::string& v) { cfg.samples = std::stoi(v); }},
                     {"seed", [&](const std::string& v) { cfg.seed = std::stoull(v); }},
                     {"tol", [&](const std::string& v) { cfg.tol = std::stod(v); }},
                     {"step", [&](const std::string& v) { cfg.step = std::stod(v); }},
                     {"out", [&](const std::string& v) { cfg.out_path = v; }},
                     {"format", [&](const std::string& v) { cfg.format = v; }}});
            return run_verify(cfg);
        }
        if (expo->parsed() && traj->parsed()) {
            if (!traj_config.empty())
                apply_config_file(
                    traj_config, traj,
                    {{"metric", [&](const std::string& v) { e_metric = v; }},
                     {"family", [&](const std::string& v) { e_family = v; }},
                     {"samples", [&](const std::string& v) { e_samples = std::stoi(v); }},
                     {"seed", [&](const std::string& v) { e_seed = std::stoull(v); }},
                     {"T", [&](const std::string& v) { e_T = std::stod(v); }},
                     {"p0", [&](const std::string& v) { e_p = v; }},
                     {"v0", [&](const std::string& v) { e_v = v; }},
                     {"out", [&](const std::string& v) { e_out = v; }}});
            return run_export(e_metric, e_family, e_seed, e_samples, e_T, e_p, e_v, e_out);
        }
        if (report->parsed() && merge->parsed()) return run_merge(m_inputs, m_out);
    } catch (const klab::PreconditionError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "nothing to do\n";
    return 2;
}
