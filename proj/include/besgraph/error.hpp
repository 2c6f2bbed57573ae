/*
 * Copyright 2026 The besgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace besgraph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed BES or graph text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A structurally invalid object, e.g. a variable bound twice.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (open system, non-SRF input,
/// non-BESsy graph, violated side condition).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace besgraph
