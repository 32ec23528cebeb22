#pragma once

#include <stdexcept>
#include <string>

namespace imdrive {

/// Config-file rejection with the offending key and line number.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, int line, const std::string& what)
        : std::runtime_error("config line " + std::to_string(line) + ", key '" + key + "': " + what),
          key_(std::move(key)),
          line_(line) {}

    const std::string& key() const { return key_; }
    int line() const { return line_; }

private:
    std::string key_;
    int line_;
};

/// Raised when integration produces a non-finite state; carries the simulation
/// time and the last duty commands for diagnosis.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(double t, double d_a, double d_b, double d_c)
        : std::runtime_error("simulation diverged at t = " + std::to_string(t) +
                             " s (duties " + std::to_string(d_a) + ", " + std::to_string(d_b) +
                             ", " + std::to_string(d_c) + ")"),
          t_(t) {}

    double time() const { return t_; }

private:
    double t_;
};

}  // namespace imdrive
