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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

namespace dzhcp::cli {

namespace {

constexpr std::string_view kParamKeys[] = {"lambda_p", "R_tx",    "R_cs", "d",          "P_t",
                                           "P_t_dBm",  "A",       "alpha", "T",         "T_dB",
                                           "r_0",      "R_cs_ratio", "d_ratio"};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t j = s.find_first_of(seps, i);
        const std::string_view tok = trim(s.substr(i, j == std::string_view::npos ? j : j - i));
        if (!tok.empty()) out.emplace_back(tok);
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return out;
}

bool is_ratio_key(std::string_view key) { return key == "R_cs_ratio" || key == "d_ratio"; }

void apply_param(Params& p, std::string_view key, double value) {
    if (key == "P_t_dBm") p.set("P_t", dzhcp_dbm_to_watt(value));
    else if (key == "T_dB") p.set("T", dzhcp_db_to_linear(value));
    else if (key == "R_cs_ratio") p.set("R_cs", value * p["R_tx"]);
    else if (key == "d_ratio") p.set("d", value * p["R_tx"]);
    else p.set(std::string(key), value);
}

} // namespace

double parse_double(std::string_view text, std::string_view what) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw UsageError(std::string(what) + ": expected a number, got '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_count(std::string_view text, std::string_view what) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError(std::string(what) + ": expected a non-negative integer, got '" +
                         std::string(text) + "'");
    return v;
}

Sweep Sweep::parse(const std::vector<std::string>& tokens) {
    if (tokens.size() != 4) throw UsageError("sweep: expected VAR LO..HI lin|log N");
    Sweep s;
    s.var = tokens[0];
    const auto dots = tokens[1].find("..");
    if (dots == std::string::npos) throw UsageError("sweep: range must be LO..HI, got '" + tokens[1] + "'");
    s.lo = parse_double(std::string_view(tokens[1]).substr(0, dots), "sweep LO");
    s.hi = parse_double(std::string_view(tokens[1]).substr(dots + 2), "sweep HI");
    if (tokens[2] == "log") s.log = true;
    else if (tokens[2] != "lin") throw UsageError("sweep: spacing must be lin or log, got '" + tokens[2] + "'");
    const std::uint64_t n = parse_count(tokens[3], "sweep N");
    if (n < 1 || n > 1000000) throw UsageError("sweep: N must be in [1, 1e6]");
    s.n = static_cast<int>(n);
    if (s.hi < s.lo) throw UsageError("sweep: grid must be sorted (LO <= HI)");
    if (s.log && s.lo <= 0.0) throw UsageError("sweep: log spacing needs LO > 0");
    if (s.n == 1 && s.hi != s.lo) throw UsageError("sweep: a one-point grid needs LO == HI");
    return s;
}

std::vector<double> Sweep::grid() const {
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        g[i] = log ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

bool ExperimentConfig::is_param_key(std::string_view key) const {
    return std::find(std::begin(kParamKeys), std::end(kParamKeys), key) != std::end(kParamKeys);
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (is_param_key(key)) {
        params.emplace_back(key, parse_double(value, key));
    } else if (key == "process") {
        processes.clear();
        for (const std::string& name : split(value, ", ")) {
            dzhcp_process p;
            if (dzhcp_process_parse(name.c_str(), &p) != DZHCP_OK)
                throw UsageError("process: unknown process type '" + name + "'");
            if (std::find(processes.begin(), processes.end(), p) == processes.end()) processes.push_back(p);
        }
    } else if (key == "sweep") {
        sweep = Sweep::parse(split(value, " \t"));
    } else if (key.substr(0, 5) == "quad.") {
        const std::string_view f = key.substr(5);
        if (f != "r_max" && f != "n_r" && f != "n_beta" && f != "n_theta" && f != "rel_tol" &&
            f != "max_depth" && f != "tail_correction")
            throw UsageError("unknown key '" + std::string(key) + "'");
        quad.emplace_back(f, parse_double(value, key));
    } else if (key == "mc.window") {
        mc.window = parse_double(value, key);
    } else if (key == "mc.palm_window") {
        mc.palm_window = parse_double(value, key);
    } else if (key == "mc.n_reps") {
        mc.n_reps = parse_count(value, key);
    } else if (key == "mc.n_accepted") {
        mc.n_accepted = parse_count(value, key);
    } else if (key == "mc.seed" || key == "seed") {
        mc.seed = parse_count(value, key);
    } else if (key == "mc.success_T_dB") {
        mc.success_t_db.clear();
        for (const std::string& t : split(value, ", ")) mc.success_t_db.push_back(parse_double(t, key));
    } else if (key == "out") {
        out = std::string(value);
    } else if (key == "threads") {
        threads = static_cast<unsigned>(parse_count(value, key));
    } else {
        throw UsageError("unknown key '" + std::string(key) + "'");
    }
}

void ExperimentConfig::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = line;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        try {
            set(s.substr(0, eq), s.substr(eq + 1));
        } catch (const UsageError& e) {
            throw UsageError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

std::vector<dzhcp_process> ExperimentConfig::process_list() const {
    if (!processes.empty()) return processes;
    return {DZHCP_TYPE_I, DZHCP_TYPE_II, DZHCP_MATERN_I, DZHCP_MATERN_II};
}

Params::Params() : p_(dzhcp_params_create()) {
    if (p_ == nullptr) throw std::bad_alloc();
}

Params::Params(const Params& other) : p_(dzhcp_params_clone(other.p_)) {
    if (p_ == nullptr) throw std::bad_alloc();
}

Params::~Params() { dzhcp_params_destroy(p_); }

double Params::operator[](const char* key) const {
    double v = 0.0;
    if (dzhcp_params_get(p_, key, &v) != DZHCP_OK) throw UsageError(dzhcp_last_error());
    return v;
}

void Params::set(const std::string& key, double value) {
    if (dzhcp_params_set(p_, key.c_str(), value) != DZHCP_OK) throw UsageError(dzhcp_last_error());
}

Params resolve_params(const ExperimentConfig& cfg, std::optional<double> sweep_value) {
    Params p;
    for (const auto& [key, value] : cfg.params)
        if (!is_ratio_key(key)) apply_param(p, key, value);
    const bool sweep_is_ratio = cfg.sweep && is_ratio_key(cfg.sweep->var);
    if (sweep_value && !sweep_is_ratio) apply_param(p, cfg.sweep->var, *sweep_value);
    for (const auto& [key, value] : cfg.params)
        if (is_ratio_key(key) && !(sweep_is_ratio && key == cfg.sweep->var)) apply_param(p, key, value);
    if (sweep_value && sweep_is_ratio) apply_param(p, cfg.sweep->var, *sweep_value);
    if (dzhcp_params_validate(p.get()) != DZHCP_OK)
        throw UsageError(std::string("invalid parameters: ") + dzhcp_last_error());
    return p;
}

dzhcp_quad_spec resolve_quad(const ExperimentConfig& cfg, const Params& params) {
    dzhcp_quad_spec q;
    dzhcp_quad_spec_default(params.get(), &q);
    for (const auto& [f, v] : cfg.quad) {
        if (f == "r_max") q.r_max = v;
        else if (f == "n_r") q.n_r = static_cast<int>(v);
        else if (f == "n_beta") q.n_beta = static_cast<int>(v);
        else if (f == "n_theta") q.n_theta = static_cast<int>(v);
        else if (f == "rel_tol") q.rel_tol = v;
        else if (f == "max_depth") q.max_depth = static_cast<int>(v);
        else if (f == "tail_correction") q.tail_correction = v != 0.0 ? 1 : 0;
    }
    return q;
}

} // namespace dzhcp::cli
