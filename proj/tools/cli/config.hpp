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

#pragma once

#include "dzhcp/dzhcp.h"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dzhcp::cli {

// Bad flags, unknown keys or unparsable values. Maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Sweep {
    std::string var;
    double lo = 0.0;
    double hi = 0.0;
    bool log = false;
    int n = 1;

    // Parses "VAR LO..HI lin|log N" from its four tokens.
    static Sweep parse(const std::vector<std::string>& tokens);
    std::vector<double> grid() const;
};

struct MonteCarloSettings {
    double window = 2000.0;     // observation side for intensity and simulate [m]
    double palm_window = 0.0;   // observation side for Palm runs; 0 means 40 R_cs
    std::uint64_t n_reps = 200;
    std::uint64_t n_accepted = 10000;
    std::uint64_t seed = 1;
    std::vector<double> success_t_db{-10.0, -5.0, 0.0, 5.0, 10.0};
};

struct ExperimentConfig {
    std::vector<std::pair<std::string, double>> params; // in assignment order
    std::vector<dzhcp_process> processes;               // empty means all four
    std::optional<Sweep> sweep;
    std::vector<std::pair<std::string, double>> quad;
    MonteCarloSettings mc;
    std::string out;
    unsigned threads = 0;

    // Applies one `key = value` assignment.
    void set(std::string_view key, std::string_view value);
    // Reads `key = value` lines; '#' starts a comment.
    void load_file(const std::string& path);

    std::vector<dzhcp_process> process_list() const;
    bool is_param_key(std::string_view key) const;
};

// Owning wrapper around dzhcp_params.
class Params {
public:
    Params();
    Params(const Params& other);
    Params& operator=(const Params&) = delete;
    ~Params();

    dzhcp_params* get() const noexcept { return p_; }
    double operator[](const char* key) const;
    void set(const std::string& key, double value);

private:
    dzhcp_params* p_;
};

// Network parameters at one sweep point: absolute keys first, then the sweep
// value, then the R_tx-relative keys (R_cs_ratio, d_ratio).
Params resolve_params(const ExperimentConfig& cfg, std::optional<double> sweep_value);

dzhcp_quad_spec resolve_quad(const ExperimentConfig& cfg, const Params& params);

double parse_double(std::string_view text, std::string_view what);
std::uint64_t parse_count(std::string_view text, std::string_view what);

} // namespace dzhcp::cli
