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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dzhcp {

enum class ProcessType { TypeI, TypeII, MaternI, MaternII };

inline constexpr bool is_type_one(ProcessType t) noexcept {
    return t == ProcessType::TypeI || t == ProcessType::MaternI;
}

inline constexpr bool is_matern(ProcessType t) noexcept {
    return t == ProcessType::MaternI || t == ProcessType::MaternII;
}

std::string_view to_string(ProcessType t) noexcept;

// Accepts "TypeI", "TypeII", "MaternI", "MaternII" (case-insensitive), plus
// the legend names "CSMA I" / "CSMA II" / "csma1" / "csma2".
std::optional<ProcessType> parse_process_type(std::string_view name);

// Scalar model parameters, all in linear SI units. Defaults are the
// reference WLAN configuration (R_cs = 1.2 R_tx, d = 0.8 R_tx, 20 dBm).
struct NetworkParams {
    double lambda_p = 1e-5;        // potential-transmitter intensity [1/m^2]
    double r_tx = 100.0;           // virtual carrier sensing radius [m]
    double r_cs = 120.0;           // physical carrier sensing radius [m]
    double d = 80.0;               // transmitter-receiver distance [m]
    double p_t = 0.1;              // transmit power [W]
    double path_loss_const = 0.01; // A in l(r) = A r^-alpha
    double alpha = 3.5;            // path-loss exponent
    double sir_threshold = 1.0;    // T, linear
    std::optional<double> r_0;     // MISR reference distance, defaults to d

    // Throws DomainError naming the first offending field.
    void validate() const;

    double reference_distance() const noexcept { return r_0.value_or(d); }

    // Radius of the transmitter-centred part of the exclusion region. The
    // virtual region also places an R_tx disk on the transmitter, which only
    // matters once R_tx exceeds R_cs.
    double physical_radius() const noexcept { return r_tx > r_cs ? r_tx : r_cs; }

    double path_loss(double distance) const noexcept;

    // Human-readable notes about unusual but permitted regimes.
    std::vector<std::string> warnings() const;
};

// Parameters whose exclusion region is the one used by `type`: the Matern
// variants keep only the physical carrier-sensing disk.
NetworkParams exclusion_params(const NetworkParams& params, ProcessType type);

double dbm_to_watt(double dbm) noexcept;
double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

} // namespace dzhcp
