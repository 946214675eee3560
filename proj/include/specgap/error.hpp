/* Copyright (c) 2026, The specgap Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 the "License";
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace specgap {

/// Error categories shared by the C++ core and the C API status codes.
enum class ErrorCode {
    InvalidArgument = 1,
    Domain,
    Coercivity,
    Bracket,
    Convergence,
    Stagnation,
    Parse,
    Io,
    Fit,
    SampleFailed,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string &msg) : Error(ErrorCode::InvalidArgument, msg) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string &msg) : Error(ErrorCode::Domain, msg) {}
};

/// The coefficient is not positive somewhere it must be (A1.2-type violation).
class CoercivityError : public Error {
public:
    explicit CoercivityError(const std::string &msg) : Error(ErrorCode::Coercivity, msg) {}
};

class BracketError : public Error {
public:
    BracketError(const std::string &msg, int count_lo, int count_hi)
        : Error(ErrorCode::Bracket, msg), count_lo_(count_lo), count_hi_(count_hi) {}
    int count_lo() const noexcept { return count_lo_; }
    int count_hi() const noexcept { return count_hi_; }

private:
    int count_lo_;
    int count_hi_;
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string &msg) : Error(ErrorCode::Convergence, msg) {}
};

class StagnationError : public Error {
public:
    explicit StagnationError(const std::string &msg) : Error(ErrorCode::Stagnation, msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string &msg, int line = 0) : Error(ErrorCode::Parse, msg), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

class IoError : public Error {
public:
    explicit IoError(const std::string &msg) : Error(ErrorCode::Io, msg) {}
};

class FitError : public Error {
public:
    explicit FitError(const std::string &msg) : Error(ErrorCode::Fit, msg) {}
};

class SampleFailed : public Error {
public:
    explicit SampleFailed(const std::string &msg) : Error(ErrorCode::SampleFailed, msg) {}
};

} // namespace specgap
