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

#include "dzhcp/params.hpp"

#include "dzhcp/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace dzhcp {

std::string_view to_string(ProcessType t) noexcept {
    switch (t) {
    case ProcessType::TypeI: return "TypeI";
    case ProcessType::TypeII: return "TypeII";
    case ProcessType::MaternI: return "MaternI";
    case ProcessType::MaternII: return "MaternII";
    }
    return "unknown";
}

std::optional<ProcessType> parse_process_type(std::string_view name) {
    std::string key;
    for (char c : name) {
        if (c == ' ' || c == '_' || c == '-') continue;
        key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (key == "typei" || key == "type1" || key == "i") return ProcessType::TypeI;
    if (key == "typeii" || key == "type2" || key == "ii") return ProcessType::TypeII;
    if (key == "materni" || key == "matern1" || key == "csmai" || key == "csma1")
        return ProcessType::MaternI;
    if (key == "maternii" || key == "matern2" || key == "csmaii" || key == "csma2")
        return ProcessType::MaternII;
    return std::nullopt;
}

namespace {

void require(bool ok, const char* field, const char* rule, double value) {
    if (ok) return;
    std::ostringstream os;
    os << "invalid parameter " << field << " = " << value << " (" << rule << ")";
    throw DomainError(os.str());
}

} // namespace

void NetworkParams::validate() const {
    require(std::isfinite(lambda_p) && lambda_p >= 0.0, "lambda_p", "must be >= 0", lambda_p);
    require(std::isfinite(r_tx) && r_tx >= 0.0, "R_tx", "must be >= 0", r_tx);
    require(std::isfinite(r_cs) && r_cs >= 0.0, "R_cs", "must be >= 0", r_cs);
    require(std::isfinite(d) && d >= 0.0, "d", "must be >= 0", d);
    require(std::isfinite(p_t) && p_t > 0.0, "P_t", "must be > 0", p_t);
    require(std::isfinite(path_loss_const) && path_loss_const > 0.0, "A", "must be > 0",
            path_loss_const);
    require(std::isfinite(alpha) && alpha > 2.0, "alpha", "must be > 2", alpha);
    require(std::isfinite(sir_threshold) && sir_threshold > 0.0, "T", "must be > 0",
            sir_threshold);
    if (r_0) require(std::isfinite(*r_0) && *r_0 > 0.0, "r_0", "must be > 0", *r_0);
}

double NetworkParams::path_loss(double distance) const noexcept {
    return path_loss_const * std::pow(distance, -alpha);
}

std::vector<std::string> NetworkParams::warnings() const {
    std::vector<std::string> out;
    if (r_tx >= r_cs && r_tx > 0.0) {
        std::ostringstream os;
        os << "R_tx (" << r_tx << " m) >= R_cs (" << r_cs
           << " m): the transmitter-centred R_tx disk extends the exclusion region";
        out.push_back(os.str());
    }
    if (d >= physical_radius() && r_tx == 0.0) {
        out.push_back("d >= R_cs with R_tx = 0: the receiver lies outside the exclusion "
                      "region and mean interference diverges");
    }
    return out;
}

NetworkParams exclusion_params(const NetworkParams& params, ProcessType type) {
    if (!is_matern(type)) return params;
    NetworkParams collapsed = params;
    collapsed.r_tx = 0.0;
    return collapsed;
}

double dbm_to_watt(double dbm) noexcept { return std::pow(10.0, dbm / 10.0) / 1000.0; }

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

} // namespace dzhcp
