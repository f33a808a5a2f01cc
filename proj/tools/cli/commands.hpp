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

#include "config.hpp"

#include <iosfwd>
#include <string>

namespace dzhcp::cli {

enum class Quantity { Intensity, Interference, Gain, Success, Throughput };

// Runtime failure inside the library. Maps to exit status 1.
class RunError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes `sweep_var,value,process,quantity,analytic,quad_error`, one row per
// (sweep point, process) in sweep order.
void run_sweep(const ExperimentConfig& cfg, Quantity quantity, std::ostream& out);

struct ValidateOptions {
    double fault_vo_scale = 1.0; // scales the retention area in the analytic intensity
    std::ostream* estimates = nullptr;
};

// Writes the validation report and returns true when every check passed.
bool run_validate(const ExperimentConfig& cfg, const ValidateOptions& options, std::ostream& out);

// Writes one sampled realization with its access indicators.
void run_simulate(const ExperimentConfig& cfg, std::ostream& out);

std::string format_number(double v);

} // namespace dzhcp::cli
