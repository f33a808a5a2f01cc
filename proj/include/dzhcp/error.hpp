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

#include <stdexcept>
#include <string>

namespace dzhcp {

// Numeric values match dzhcp_status in dzhcp.h.
enum class ErrorCode {
    Ok = 0,
    Domain = 1,
    Resource = 2,
    NonConvergence = 3,
    Acceptance = 4,
    InvalidArgument = 5,
    Io = 6,
    Internal = 7,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorCode::Resource, what) {}
};

class AcceptanceError : public Error {
public:
    AcceptanceError(const std::string& what, double rate)
        : Error(ErrorCode::Acceptance, what), rate_(rate) {}

    double acceptance_rate() const noexcept { return rate_; }

private:
    double rate_;
};

// Raised when successive refinements never agree to the requested tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double previous, double last)
        : Error(ErrorCode::NonConvergence, what), previous_(previous), last_(last) {}

    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

} // namespace dzhcp
