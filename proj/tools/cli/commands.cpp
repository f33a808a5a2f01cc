/*
   Copyright 2026 The dzhcp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "commands.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>

namespace dzhcp::cli {

namespace {

void check(dzhcp_status s) {
    if (s == DZHCP_OK) return;
    if (s == DZHCP_ERR_DOMAIN || s == DZHCP_ERR_INVALID_ARGUMENT) throw UsageError(dzhcp_last_error());
    throw RunError(dzhcp_last_error());
}

struct Point {
    std::string var;
    double value = 0.0;
    std::string label; // param_point cell
    std::optional<double> sweep_value;
};

std::vector<Point> sweep_points(const ExperimentConfig& cfg) {
    std::vector<Point> out;
    if (!cfg.sweep) {
        const Params p = resolve_params(cfg, std::nullopt);
        out.push_back({"lambda_p", p["lambda_p"], "config", std::nullopt});
        return out;
    }
    if (!cfg.is_param_key(cfg.sweep->var))
        throw UsageError("sweep: unknown parameter '" + cfg.sweep->var + "'");
    for (double v : cfg.sweep->grid())
        out.push_back({cfg.sweep->var, v, cfg.sweep->var + "=" + format_number(v), v});
    return out;
}

struct Analytic {
    double value = 0.0;
    double error = 0.0;
};

// Success probability from the interference result, with the quadrature
// error propagated through the gain.
Analytic success_from(const dzhcp_interference& r, double threshold, double alpha) {
    if (r.mean_interference == 0.0) return {1.0, 0.0};
    double p = 0.0;
    check(dzhcp_success_from_gain(threshold, r.gain, alpha, &p));
    const double dg = r.gain * r.quad_error / r.mean_interference;
    double q = p;
    check(dzhcp_success_from_gain(threshold, r.gain + dg, alpha, &q));
    return {p, std::abs(q - p)};
}

Analytic evaluate(Quantity quantity, const ExperimentConfig& cfg, const Params& p, dzhcp_process process) {
    double lambda = 0.0;
    check(dzhcp_intensity(p.get(), process, &lambda));
    if (quantity == Quantity::Intensity) return {lambda, 0.0};

    const dzhcp_quad_spec spec = resolve_quad(cfg, p);
    dzhcp_interference r;
    check(dzhcp_mean_interference(p.get(), process, &spec, &r));
    switch (quantity) {
    case Quantity::Interference:
        return {r.mean_interference, r.quad_error};
    case Quantity::Gain:
        if (r.mean_interference == 0.0) throw UsageError("gain is undefined without interference (lambda_p = 0)");
        return {r.gain, r.gain * r.quad_error / r.mean_interference};
    case Quantity::Success:
        return success_from(r, p["T"], p["alpha"]);
    case Quantity::Throughput: {
        const Analytic s = success_from(r, p["T"], p["alpha"]);
        return {lambda * s.value, lambda * s.error};
    }
    case Quantity::Intensity:
        break;
    }
    return {lambda, 0.0};
}

const char* quantity_name(Quantity q) {
    switch (q) {
    case Quantity::Intensity: return "intensity";
    case Quantity::Interference: return "mean_interference";
    case Quantity::Gain: return "gain";
    case Quantity::Success: return "success_prob";
    case Quantity::Throughput: return "throughput";
    }
    return "";
}

void put_row(std::ostream& out, std::initializer_list<std::string> cells) {
    std::string line;
    for (const std::string& c : cells) {
        if (!line.empty()) line.push_back(',');
        line += c;
    }
    line.push_back('\n');
    out << line;
}

dzhcp_window palm_window(const ExperimentConfig& cfg, const Params& p) {
    dzhcp_window w;
    dzhcp_window_default(&w);
    w.extent = cfg.mc.palm_window > 0.0 ? cfg.mc.palm_window : 40.0 * p["R_cs"];
    return w;
}

dzhcp_window observation_window(const ExperimentConfig& cfg) {
    dzhcp_window w;
    dzhcp_window_default(&w);
    w.extent = cfg.mc.window;
    return w;
}

class Report {
public:
    Report(std::ostream& out, std::ostream* estimates) : out_(out), estimates_(estimates) {
        put_row(out_, {"check", "process", "param_point", "analytic", "mc_mean", "ci_low", "ci_high",
                       "tolerance", "pass"});
        if (estimates_)
            put_row(*estimates_, {"quantity", "param_point", "mean", "stderr", "ci_low", "ci_high", "n", "seed"});
    }

    void add(const std::string& name, const std::string& process, const std::string& point,
             double analytic, const dzhcp_estimate& e, double tolerance, const char* verdict) {
        put_row(out_, {name, process, point, format_number(analytic), format_number(e.mean),
                       format_number(e.ci_low), format_number(e.ci_high), format_number(tolerance), verdict});
        if (std::string_view(verdict) == "false") ok_ = false;
        if (estimates_)
            put_row(*estimates_, {name + ":" + process, point, format_number(e.mean), format_number(e.std_error),
                                  format_number(e.ci_low), format_number(e.ci_high),
                                  std::to_string(e.n_effective), std::to_string(e.seed)});
    }

    void error(const std::string& name, const std::string& process, const std::string& point,
               const std::string& message, std::ostream& diag) {
        put_row(out_, {name, process, point, "", "", "", "", "", "error"});
        diag << "validate: " << name << " " << process << " " << point << ": " << message << '\n';
        ok_ = false;
    }

    bool ok() const noexcept { return ok_; }

private:
    std::ostream& out_;
    std::ostream* estimates_;
    bool ok_ = true;
};

} // namespace

std::string format_number(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) return "nan";
    return std::string(buf.data(), ptr);
}

void run_sweep(const ExperimentConfig& cfg, Quantity quantity, std::ostream& out) {
    const std::vector<Point> points = sweep_points(cfg);
    const std::vector<dzhcp_process> processes = cfg.process_list();
    put_row(out, {"sweep_var", "value", "process", "quantity", "analytic", "quad_error"});
    for (const Point& pt : points) {
        const Params p = resolve_params(cfg, pt.sweep_value);
        for (dzhcp_process process : processes) {
            const Analytic a = evaluate(quantity, cfg, p, process);
            if (!std::isfinite(a.value) || !std::isfinite(a.error))
                throw RunError(std::string("non-finite ") + quantity_name(quantity) + " at " + pt.label);
            put_row(out, {pt.var, format_number(pt.value), dzhcp_process_name(process), quantity_name(quantity),
                          format_number(a.value), format_number(a.error)});
        }
    }
}

bool run_validate(const ExperimentConfig& cfg, const ValidateOptions& options, std::ostream& out) {
    const std::vector<Point> points = sweep_points(cfg);
    const std::vector<dzhcp_process> processes = cfg.process_list();
    Report report(out, options.estimates);
    const std::uint64_t seed = cfg.mc.seed;

    for (const Point& pt : points) {
        const Params p = resolve_params(cfg, pt.sweep_value);
        for (dzhcp_process process : processes) {
            const std::string name = dzhcp_process_name(process);
            auto guarded = [&](const char* check_name, auto&& body) {
                try {
                    body();
                } catch (const std::exception& e) {
                    report.error(check_name, name, pt.label, e.what(), std::cerr);
                }
            };

            guarded("intensity", [&] {
                double area = 0.0;
                double analytic = 0.0;
                check(dzhcp_retention_area(p.get(), process, &area));
                check(dzhcp_intensity_for_area(process, p["lambda_p"], options.fault_vo_scale * area, &analytic));
                const dzhcp_window w = observation_window(cfg);
                dzhcp_estimate e;
                check(dzhcp_mc_intensity(p.get(), process, &w, cfg.mc.n_reps, seed, &e));
                const bool pass = e.ci_low <= analytic && analytic <= e.ci_high;
                report.add("intensity", name, pt.label, analytic, e, e.ci_high - e.mean, pass ? "true" : "false");
            });

            const dzhcp_quad_spec spec = resolve_quad(cfg, p);
            const dzhcp_window w = palm_window(cfg, p);
            dzhcp_interference r{};
            bool have_analytic = false;
            guarded("interference", [&] {
                check(dzhcp_mean_interference(p.get(), process, &spec, &r));
                have_analytic = true;
                dzhcp_estimate e;
                check(dzhcp_mc_palm_interference(p.get(), process, &w, cfg.mc.n_accepted, seed, &e, nullptr));
                constexpr double kTol = 0.05;
                const double a = r.mean_interference;
                const bool pass = a == 0.0 ? e.mean == 0.0 : std::abs(e.mean / a - 1.0) <= kTol;
                report.add("interference", name, pt.label, a, e, kTol, pass ? "true" : "false");
            });
            if (!have_analytic) continue;

            guarded("success", [&] {
                std::vector<double> thresholds;
                for (double t_db : cfg.mc.success_t_db) thresholds.push_back(dzhcp_db_to_linear(t_db));
                std::vector<dzhcp_estimate> est(thresholds.size());
                check(dzhcp_mc_success(p.get(), process, thresholds.data(), thresholds.size(), &w,
                                       cfg.mc.n_accepted, seed, est.data()));
                constexpr double kTol = 0.05;
                for (std::size_t i = 0; i < thresholds.size(); ++i) {
                    const double a = success_from(r, thresholds[i], p["alpha"]).value;
                    const char* verdict = est[i].mean < 0.5 ? "skip"
                                          : std::abs(est[i].mean - a) <= kTol ? "true"
                                                                              : "false";
                    report.add("success_T_dB=" + format_number(cfg.mc.success_t_db[i]), name, pt.label, a,
                               est[i], kTol, verdict);
                }
            });
        }
    }
    return report.ok();
}

void run_simulate(const ExperimentConfig& cfg, std::ostream& out) {
    const Params p = resolve_params(cfg, std::nullopt);
    const dzhcp_process process = cfg.process_list().front();
    const dzhcp_window w = observation_window(cfg);
    dzhcp_realization* raw = nullptr;
    check(dzhcp_realization_sample(p.get(), &w, cfg.mc.seed, 0, &raw));
    std::unique_ptr<dzhcp_realization, decltype(&dzhcp_realization_destroy)> real(raw, dzhcp_realization_destroy);
    check(dzhcp_realization_mark(real.get(), p.get(), process));

    out << "x,y,theta,mark,e\n";
    const std::size_t n = dzhcp_realization_size(real.get());
    for (std::size_t i = 0; i < n; ++i) {
        dzhcp_pair pair;
        check(dzhcp_realization_get(real.get(), i, &pair));
        put_row(out, {format_number(pair.x), format_number(pair.y), format_number(pair.theta),
                      format_number(pair.mark), pair.active ? "1" : "0"});
    }
}

} // namespace dzhcp::cli
