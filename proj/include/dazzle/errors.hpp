#pragma once

#include <stdexcept>
#include <string>

namespace dazzle {

// Error taxonomy mirrored by the CLI exit codes:
//   ConfigError -> 2, IoError -> 3, NumericError -> 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* category() const noexcept { return "error"; }
    virtual int exit_code() const noexcept { return 1; }
};

class ConfigError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "config"; }
    int exit_code() const noexcept override { return 2; }
};

class IoError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "io"; }
    int exit_code() const noexcept override { return 3; }
};

class NumericError : public Error {
public:
    using Error::Error;
    const char* category() const noexcept override { return "numeric"; }
    int exit_code() const noexcept override { return 4; }
};

} // namespace dazzle
