/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace nomenflow {

enum class ErrorCode {
    io_error,
    parse_error,
    config_error,
    data_error,
    bad_magic,
    version_unsupported,
    checksum_mismatch,
    unknown_country,
    invalid_argument,
    name_rejected,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown by loaders that keep scanning after the first problem; `violations`
// holds one "kind: detail" line per issue found.
class ValidationError : public Error {
public:
    ValidationError(ErrorCode code, const std::string& what, std::vector<std::string> violations)
        : Error(code, what), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace nomenflow
