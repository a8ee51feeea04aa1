// errors.hpp - error types shared across the toolkit
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <stdexcept>
#include <string>

namespace reqkit {

/// Base class for all reqkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or structural problem in an input document. Line and column are
/// 1-based; column 0 means "whole line".
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column = 0)
        : Error(format(message, line, column)), message_(std::move(message)), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& message, int line, int column) {
        std::string out = "line " + std::to_string(line);
        if (column > 0)
            out += ":" + std::to_string(column);
        return out + ": " + message;
    }

    std::string message_;
    int line_ = 0;
    int column_ = 0;
};

/// Semantic violation of a model invariant (cycles, overlaps, bad references).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Raised when a requirement is handed to the monitor but offers no
/// criterion to monitor against (vague qualifier, missing window).
class NotMonitorableError : public Error {
public:
    NotMonitorableError(std::string requirement_id, std::string reason)
        : Error("requirement " + requirement_id + " is not monitorable: " + reason),
          requirement_id_(std::move(requirement_id)), reason_(std::move(reason)) {}

    const std::string& requirement_id() const { return requirement_id_; }
    const std::string& reason() const { return reason_; }

private:
    std::string requirement_id_;
    std::string reason_;
};

/// File system level failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace reqkit
