#pragma once

#include <map>
#include <string>
#include <vector>

#include "pefet/arrays.hpp"

namespace pefet {

struct EnergyReport {
    double total = 0.0;
    double c_pe_charging = 0.0;
    double metal_lines = 0.0;
    double p_switching = 0.0;
    double leakage = 0.0;
    std::map<std::string, double> per_class;  // keyed by line class, "PE" or "P_switch"

    double share(double component) const { return total > 0.0 ? component / total : 0.0; }
};

struct LatencyReport {
    double total = 0.0;
    double line_rc = 0.0;
    double p_switch = 0.0;
    double phase_overheads = 0.0;
    std::vector<PhaseTiming> phases;
};

EnergyReport operation_energy(const EventLog& log);
/// Phases are strictly sequential, so the critical path is their sum.
LatencyReport operation_latency(const EventLog& log);

/// 6T SRAM of the same 2D FETs, with the same wire model and a 64-bit access.
struct SramBaseline {
    double area = 761.4;  // lambda^2
    double height = 18.0;
    double half_select_swing = 0.5;  // fraction of V_DD seen by unselected bit lines on a write
    double t_flip = 1e-10;
    int leak_paths = 2;  // off transistors per cell between V_DD and ground
    double utilization = 0.3;

    void validate() const;
};

struct SramMetrics {
    double area;
    double write_energy, read_energy;
    double write_leakage, read_leakage;
    double write_latency, read_latency;
    double leakage_per_cell;  // A
};

SramMetrics sram_metrics(const SramBaseline& sram, const ArrayConfig& cfg);

/// Area, energy and latency for one benchmark write and read on an array.
struct MetricsReport {
    std::string arch;
    double kappa;
    double area;  // lambda^2 per bit
    EnergyReport write_energy, read_energy;
    LatencyReport write_latency, read_latency;
    double distinguishability;
};

MetricsReport sram_report(const SramBaseline& sram, const ArrayConfig& cfg);

struct ComparisonRow {
    std::string arch;
    std::string metric;
    double value;
    double reference;
    double ratio;      // reference / value for area, value / reference otherwise
    double reduction;  // 1 - value / reference
};

std::vector<ComparisonRow> compare_to_sram(const std::vector<MetricsReport>& reports, const MetricsReport& sram);

struct BenchmarkResult {
    MetricsReport metrics;
    EventLog write_log, read_log;
    ReadResult read;
    Word written;
};

/// Stores the alternating word at (0, 0), then measures the benchmark write and the read-back.
BenchmarkResult run_benchmark(const ArrayConfig& cfg);

}  // namespace pefet
