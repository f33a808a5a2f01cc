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

#include "dzhcp/dzhcp.h"

#include "dzhcp/analytics.hpp"
#include "dzhcp/error.hpp"
#include "dzhcp/geometry.hpp"
#include "dzhcp/montecarlo.hpp"
#include "dzhcp/parallel.hpp"
#include "dzhcp/params.hpp"
#include "dzhcp/sampling.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <new>
#include <string>
#include <string_view>
#include <vector>

struct dzhcp_params {
    dzhcp::NetworkParams value;
};

struct dzhcp_realization {
    std::vector<dzhcp::TransceiverPair> pairs;
};

namespace {

thread_local std::string g_last_error;

dzhcp_status fail(dzhcp_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Runs body, translating exceptions into status codes.
template <class Body>
dzhcp_status guarded(Body&& body) noexcept {
    try {
        g_last_error.clear();
        body();
        return DZHCP_OK;
    } catch (const dzhcp::Error& e) {
        return fail(static_cast<dzhcp_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(DZHCP_ERR_RESOURCE, "out of memory");
    } catch (const std::exception& e) {
        return fail(DZHCP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DZHCP_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw dzhcp::Error(dzhcp::ErrorCode::InvalidArgument, what);
}

dzhcp::ProcessType to_process(dzhcp_process p) {
    switch (p) {
    case DZHCP_TYPE_I: return dzhcp::ProcessType::TypeI;
    case DZHCP_TYPE_II: return dzhcp::ProcessType::TypeII;
    case DZHCP_MATERN_I: return dzhcp::ProcessType::MaternI;
    case DZHCP_MATERN_II: return dzhcp::ProcessType::MaternII;
    }
    throw dzhcp::Error(dzhcp::ErrorCode::InvalidArgument, "unknown process type");
}

double* field(dzhcp::NetworkParams& p, std::string_view key) {
    if (key == "lambda_p") return &p.lambda_p;
    if (key == "R_tx") return &p.r_tx;
    if (key == "R_cs") return &p.r_cs;
    if (key == "d") return &p.d;
    if (key == "P_t") return &p.p_t;
    if (key == "A") return &p.path_loss_const;
    if (key == "alpha") return &p.alpha;
    if (key == "T") return &p.sir_threshold;
    return nullptr;
}

dzhcp::QuadratureSpec to_spec(const dzhcp::NetworkParams& params, const dzhcp_quad_spec* spec) {
    dzhcp::QuadratureSpec q = dzhcp::QuadratureSpec::defaults_for(params);
    if (spec == nullptr) return q;
    if (spec->r_max > 0.0) q.r_max = spec->r_max;
    q.n_r = spec->n_r;
    q.n_beta = spec->n_beta;
    q.n_theta = spec->n_theta;
    q.rel_tol = spec->rel_tol;
    q.tail_correction = spec->tail_correction != 0;
    q.max_depth = spec->max_depth;
    return q;
}

dzhcp::SimulationWindow to_window(const dzhcp::NetworkParams& params, const dzhcp_window* w) {
    dzhcp_window def;
    dzhcp_window_default(&def);
    if (w == nullptr) w = &def;
    dzhcp::SimulationWindow out;
    out.shape = w->disk ? dzhcp::WindowShape::Disk : dzhcp::WindowShape::Square;
    out.extent = w->extent;
    out.guard = w->guard < 0.0 ? dzhcp::SimulationWindow::minimum_guard(params) : w->guard;
    return out;
}

void copy(const dzhcp::EstimateWithCI& e, dzhcp_estimate* out) {
    out->mean = e.mean;
    out->std_error = e.std_error;
    out->ci_low = e.ci_low;
    out->ci_high = e.ci_high;
    out->n_effective = e.n_effective;
    out->seed = e.seed;
}

} // namespace

extern "C" {

const char* dzhcp_last_error(void) { return g_last_error.c_str(); }

const char* dzhcp_version(void) { return DZHCP_VERSION; }

void dzhcp_set_threads(unsigned threads) { dzhcp::set_thread_count(threads); }

dzhcp_status dzhcp_process_parse(const char* name, dzhcp_process* out) {
    return guarded([&] {
        require(name != nullptr && out != nullptr, "null argument");
        const auto p = dzhcp::parse_process_type(name);
        if (!p) throw dzhcp::Error(dzhcp::ErrorCode::InvalidArgument,
                                   std::string("unknown process type '") + name + "'");
        *out = static_cast<dzhcp_process>(static_cast<int>(*p));
    });
}

const char* dzhcp_process_name(dzhcp_process process) {
    switch (process) {
    case DZHCP_TYPE_I: return "TypeI";
    case DZHCP_TYPE_II: return "TypeII";
    case DZHCP_MATERN_I: return "MaternI";
    case DZHCP_MATERN_II: return "MaternII";
    }
    return "";
}

dzhcp_params* dzhcp_params_create(void) {
    return new (std::nothrow) dzhcp_params{};
}

dzhcp_params* dzhcp_params_clone(const dzhcp_params* params) {
    if (params == nullptr) return nullptr;
    return new (std::nothrow) dzhcp_params{*params};
}

void dzhcp_params_destroy(dzhcp_params* params) { delete params; }

dzhcp_status dzhcp_params_set(dzhcp_params* params, const char* key, double value) {
    return guarded([&] {
        require(params != nullptr && key != nullptr, "null argument");
        if (std::string_view(key) == "r_0") {
            if (std::isnan(value)) params->value.r_0.reset();
            else params->value.r_0 = value;
            return;
        }
        double* f = field(params->value, key);
        if (f == nullptr)
            throw dzhcp::Error(dzhcp::ErrorCode::InvalidArgument,
                               std::string("unknown parameter '") + key + "'");
        *f = value;
    });
}

dzhcp_status dzhcp_params_get(const dzhcp_params* params, const char* key, double* out) {
    return guarded([&] {
        require(params != nullptr && key != nullptr && out != nullptr, "null argument");
        dzhcp::NetworkParams p = params->value;
        if (std::string_view(key) == "r_0") {
            *out = p.reference_distance();
            return;
        }
        const double* f = field(p, key);
        if (f == nullptr)
            throw dzhcp::Error(dzhcp::ErrorCode::InvalidArgument,
                               std::string("unknown parameter '") + key + "'");
        *out = *f;
    });
}

dzhcp_status dzhcp_params_validate(const dzhcp_params* params) {
    return guarded([&] {
        require(params != nullptr, "null argument");
        params->value.validate();
    });
}

void dzhcp_quad_spec_default(const dzhcp_params* params, dzhcp_quad_spec* out) {
    if (out == nullptr) return;
    const dzhcp::QuadratureSpec q =
        params ? dzhcp::QuadratureSpec::defaults_for(params->value) : dzhcp::QuadratureSpec{};
    *out = {q.r_max, q.n_r, q.n_beta, q.n_theta, q.rel_tol, q.tail_correction ? 1 : 0, q.max_depth};
}

void dzhcp_window_default(dzhcp_window* out) {
    if (out == nullptr) return;
    *out = {0, 2000.0, -1.0};
}

double dzhcp_dbm_to_watt(double dbm) { return dzhcp::dbm_to_watt(dbm); }
double dzhcp_db_to_linear(double db) { return dzhcp::db_to_linear(db); }

dzhcp_status dzhcp_lens_area(double r1, double r2, double separation, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dzhcp::lens_area(r1, r2, separation);
    });
}

dzhcp_status dzhcp_exclusion_area(const dzhcp_params* params, double* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = dzhcp::exclusion_area_vo(params->value);
    });
}

dzhcp_status dzhcp_combined_area(const dzhcp_params* params, double r, double beta, double theta,
                                 double* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = dzhcp::combined_area_v({r, beta, theta}, params->value);
    });
}

dzhcp_status dzhcp_union_area(const double* centers, const double* radii, size_t n, double* out) {
    return guarded([&] {
        require(out != nullptr && (n == 0 || (centers != nullptr && radii != nullptr)), "null argument");
        std::vector<dzhcp::Disk> disks(n);
        for (size_t i = 0; i < n; ++i) disks[i] = {{centers[2 * i], centers[2 * i + 1]}, radii[i]};
        *out = dzhcp::union_area(disks);
    });
}

dzhcp_status dzhcp_classify(const dzhcp_params* params, dzhcp_process process, double r, double beta,
                            double theta, dzhcp_region* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        const dzhcp::RegionClass c =
            dzhcp::classify({r, beta, theta}, params->value, to_process(process));
        *out = static_cast<dzhcp_region>(static_cast<int>(c));
    });
}

dzhcp_status dzhcp_intensity(const dzhcp_params* params, dzhcp_process process, double* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = dzhcp::intensity(to_process(process), params->value);
    });
}

dzhcp_status dzhcp_intensity_for_area(dzhcp_process process, double lambda_p, double area, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dzhcp::intensity_for_area(to_process(process), lambda_p, area);
    });
}

dzhcp_status dzhcp_retention_area(const dzhcp_params* params, dzhcp_process process, double* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = dzhcp::retention_area(params->value, to_process(process));
    });
}

dzhcp_status dzhcp_eta(double v, double v_o, double lambda_p, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dzhcp::eta(v, v_o, lambda_p);
    });
}

dzhcp_status dzhcp_kernel(const dzhcp_params* params, dzhcp_process process, double r, double beta,
                          double theta, double* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = dzhcp::kernel({r, beta, theta}, params->value, to_process(process));
    });
}

dzhcp_status dzhcp_mean_interference(const dzhcp_params* params, dzhcp_process process,
                                     const dzhcp_quad_spec* spec, dzhcp_interference* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        const dzhcp::InterferenceResult r = dzhcp::mean_interference(
            params->value, to_process(process), to_spec(params->value, spec));
        *out = {r.mean_interference, r.misr, r.gain, r.integral, r.tail, r.quad_error, r.levels};
    });
}

dzhcp_status dzhcp_success_ppp(double threshold, double alpha, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dzhcp::success_prob_ppp(threshold, alpha);
    });
}

dzhcp_status dzhcp_success_ppp_integral(double threshold, double alpha, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dzhcp::success_prob_ppp_integral(threshold, alpha);
    });
}

dzhcp_status dzhcp_success_from_gain(double threshold, double gain, double alpha, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = dzhcp::success_prob_from_gain(threshold, gain, alpha);
    });
}

dzhcp_status dzhcp_success(const dzhcp_params* params, dzhcp_process process,
                           const dzhcp_quad_spec* spec, double* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = dzhcp::success_prob_dzhcp(params->value.sir_threshold, params->value,
                                         to_process(process), to_spec(params->value, spec));
    });
}

dzhcp_status dzhcp_realization_sample(const dzhcp_params* params, const dzhcp_window* window,
                                      uint64_t seed, uint64_t replication, dzhcp_realization** out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        params->value.validate();
        const dzhcp::SimulationWindow w = to_window(params->value, window);
        w.validate(params->value);
        auto* r = new dzhcp_realization{};
        try {
            r->pairs = dzhcp::sample_bipolar(w, params->value, seed, replication);
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
    });
}

dzhcp_status dzhcp_realization_mark(dzhcp_realization* realization, const dzhcp_params* params,
                                    dzhcp_process process) {
    return guarded([&] {
        require(realization != nullptr && params != nullptr, "null argument");
        params->value.validate();
        dzhcp::mark_access(realization->pairs, params->value, to_process(process));
    });
}

dzhcp_status dzhcp_realization_thin(const dzhcp_realization* in, const dzhcp_params* params,
                                    dzhcp_process process, dzhcp_realization** out) {
    return guarded([&] {
        require(in != nullptr && params != nullptr && out != nullptr, "null argument");
        *out = nullptr;
        params->value.validate();
        auto* r = new dzhcp_realization{};
        try {
            r->pairs = dzhcp::thin(in->pairs, params->value, to_process(process));
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
    });
}

void dzhcp_realization_destroy(dzhcp_realization* realization) { delete realization; }

size_t dzhcp_realization_size(const dzhcp_realization* realization) {
    return realization ? realization->pairs.size() : 0;
}

dzhcp_status dzhcp_realization_get(const dzhcp_realization* realization, size_t index, dzhcp_pair* out) {
    return guarded([&] {
        require(realization != nullptr && out != nullptr, "null argument");
        require(index < realization->pairs.size(), "index out of range");
        const dzhcp::TransceiverPair& p = realization->pairs[index];
        *out = {p.tx.x, p.tx.y, p.theta, p.mark, p.active ? 1 : 0};
    });
}

dzhcp_status dzhcp_realization_write_csv(const dzhcp_realization* realization, const char* path) {
    return guarded([&] {
        require(realization != nullptr && path != nullptr, "null argument");
        if (std::string_view(path) == "-") {
            dzhcp::write_realization_csv(std::cout, realization->pairs);
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw dzhcp::Error(dzhcp::ErrorCode::Io, std::string("cannot open '") + path + "'");
        dzhcp::write_realization_csv(out, realization->pairs);
        if (!out) throw dzhcp::Error(dzhcp::ErrorCode::Io, std::string("write failed for '") + path + "'");
    });
}

dzhcp_status dzhcp_mc_intensity(const dzhcp_params* params, dzhcp_process process,
                                const dzhcp_window* window, uint64_t n_reps, uint64_t seed,
                                dzhcp_estimate* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        copy(dzhcp::estimate_intensity(params->value, to_process(process),
                                       to_window(params->value, window), n_reps, seed),
             out);
    });
}

dzhcp_status dzhcp_mc_palm_interference(const dzhcp_params* params, dzhcp_process process,
                                        const dzhcp_window* window, uint64_t n_accepted, uint64_t seed,
                                        dzhcp_estimate* out, dzhcp_estimate* acceptance) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        const dzhcp::PalmInterference r = dzhcp::palm_interference_detailed(
            params->value, to_process(process), to_window(params->value, window), n_accepted, seed);
        copy(r.interference, out);
        if (acceptance != nullptr) copy(r.acceptance, acceptance);
    });
}

dzhcp_status dzhcp_mc_success(const dzhcp_params* params, dzhcp_process process, const double* thresholds,
                              size_t n_thresholds, const dzhcp_window* window, uint64_t n_accepted,
                              uint64_t seed, dzhcp_estimate* out) {
    return guarded([&] {
        require(params != nullptr && (n_thresholds == 0 || (thresholds != nullptr && out != nullptr)),
                "null argument");
        const auto r = dzhcp::estimate_success_prob(
            params->value, to_process(process), {thresholds, n_thresholds},
            to_window(params->value, window), n_accepted, seed);
        for (size_t i = 0; i < r.size(); ++i) copy(r[i], out + i);
    });
}

dzhcp_status dzhcp_mc_two_pair(const dzhcp_params* params, dzhcp_process process, double r, double beta,
                               double theta, uint64_t n_reps, uint64_t seed, dzhcp_estimate* out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "null argument");
        copy(dzhcp::two_pair_retention({r, beta, theta}, params->value, to_process(process), n_reps, seed),
             out);
    });
}

} // extern "C"
