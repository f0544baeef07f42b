#pragma once

#include <stdexcept>
#include <string>

namespace svcsim {

// Invalid parameters, scenario specs, or optimizer settings.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed input file; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line = 0)
        : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Bad config file content (unknown key, out-of-range value).
class ConfigError : public ValidationError {
public:
    explicit ConfigError(const std::string& msg) : ValidationError(msg) {}
};

// Stimulus does not cover the motion-profile duration.
class CoverageError : public std::runtime_error {
public:
    explicit CoverageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite state encountered during integration.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& msg, long step)
        : std::runtime_error(msg + " at step " + std::to_string(step)), step_(step) {}
    long step() const { return step_; }

private:
    long step_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace svcsim
