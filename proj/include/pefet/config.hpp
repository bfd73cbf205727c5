#pragma once

#include <string>
#include <vector>

#include "pefet/arrays.hpp"
#include "pefet/layout.hpp"
#include "pefet/metrics.hpp"
#include "pefet/pefet.hpp"

namespace pefet {

struct SweepSettings {
    std::vector<double> kappas = {0.03, 0.04, 0.05, 0.06, 0.07};
    std::vector<Arch> archs = {Arch::HD, Arch::TALL, Arch::WIDE, Arch::CC};
    int workers = 0;  // 0: hardware concurrency
    int random_words = 100;
    double iv_from = 0.0;
    double iv_to = 0.7;
    int iv_points = 71;
};

struct RunConfig {
    ArrayConfig array;  // carries the device at the configured kappa
    SramBaseline sram;
    DeviceCalibrationInputs calibration;
    WidthAnchors width;
    SweepSettings sweep;

    const PeFetConfig& device() const { return array.device; }
    /// Array configuration for another architecture / kappa.
    ArrayConfig array_for(Arch arch, double kappa) const;
};

inline constexpr const char* kConfigSections[] = {"ferroelectric", "piezo", "geometry", "fet",
                                                  "array",         "rules", "sweep"};

/// Strict INI: every section must be present, unknown keys and malformed values are fatal
/// (ConfigError with the line number).
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

struct ModelCard {
    DeviceCalibration device;
    WidthFit width;
};

ModelCard run_calibration(const RunConfig& cfg);
/// Deterministic text rendering of every fitted constant and its residual.
std::string format_model_card(const ModelCard& card);

}  // namespace pefet
