// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mereoscan {

// Base class for every error the library raises. The message is prefixed
// with the name of the module that raised it ("depgraph: ...").
class Error : public std::runtime_error {
public:
    Error(const std::string& module, const std::string& message)
        : std::runtime_error(module + ": " + message), module_(module) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

// Unreadable input, missing directories, failed writes.
class IoError : public Error {
public:
    using Error::Error;
};

// Structured input that does not follow its schema. `line` is 1-based, 0
// when the position is unknown.
class SchemaError : public Error {
public:
    SchemaError(const std::string& module, const std::string& message,
                std::size_t line = 0)
        : Error(module, line == 0 ? message
                                  : "line " + std::to_string(line) + ": " +
                                        message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Bad options: unknown relation kinds, undeclared entries, bad flags.
class ConfigError : public Error {
public:
    using Error::Error;
};

// A referenced node or entity does not exist.
class LookupError : public Error {
public:
    using Error::Error;
};

// Inputs that are individually valid but do not fit together.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// A finite model that breaks one of its construction invariants.
class ModelError : public Error {
public:
    using Error::Error;
};

}  // namespace mereoscan
