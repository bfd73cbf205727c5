#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace pefet {

/// Base for every error raised by the simulator.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoDoubleWell : public Error { using Error::Error; };
class ConvergenceFailure : public Error { using Error::Error; };
class GeometryError : public Error { using Error::Error; };
class FitFailure : public Error { using Error::Error; };
class ReadDisturbRisk : public Error { using Error::Error; };
class UnsupportedArch : public Error { using Error::Error; };
class WriteIncomplete : public Error { using Error::Error; };
class SenseMarginFailure : public Error { using Error::Error; };
class DisturbViolation : public Error { using Error::Error; };
class RoundtripMismatch : public Error { using Error::Error; };

/// Configuration problems carry the offending line (0 when not tied to a line).
class ConfigError : public Error {
public:
    ConfigError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Non-fatal diagnostics (e.g. kappa outside the calibrated range).
/// The default handler prints to stderr; tests and the CLI may replace it.
using WarningHandler = std::function<void(const std::string&)>;
void set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace pefet
