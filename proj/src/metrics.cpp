#include "pefet/metrics.hpp"

#include <stdexcept>

#include "pefet/errors.hpp"

namespace pefet {

EnergyReport operation_energy(const EventLog& log) {
    EnergyReport r;
    for (const auto& e : log.lines) {
        double dv = e.v_to - e.v_from;
        double energy = 0.5 * e.c_line * dv * dv * e.count;
        if (e.line_class == "PE") {
            r.c_pe_charging += energy;
        } else {
            r.metal_lines += energy;
        }
        r.per_class[e.line_class] += energy;
    }
    for (const auto& s : log.switching) {
        double energy = s.count * s.energy_per_cell;
        r.p_switching += energy;
        r.per_class["P_switch"] += energy;
    }
    r.total = r.c_pe_charging + r.metal_lines + r.p_switching + r.leakage;
    return r;
}

LatencyReport operation_latency(const EventLog& log) {
    LatencyReport r;
    r.phases = log.timing;
    for (const auto& p : log.timing) {
        r.line_rc += p.rc;
        r.p_switch += p.p_switch;
        r.phase_overheads += p.overhead;
        r.total += p.duration();
    }
    return r;
}

void SramBaseline::validate() const {
    if (!(utilization >= 0.0 && utilization <= 1.0)) throw std::invalid_argument("utilization must lie in [0, 1]");
    if (!(area > 0.0 && height > 0.0)) throw std::invalid_argument("SRAM cell dimensions must be positive");
    if (leak_paths < 0) throw std::invalid_argument("leak path count must be non-negative");
}

SramMetrics sram_metrics(const SramBaseline& s, const ArrayConfig& cfg) {
    s.validate();
    const PeFetConfig& d = cfg.device;
    const WireParams& w = cfg.wire;
    const double lam = cfg.rules.lambda;
    const double vdd = d.v_dd;
    const double cox = d.fet.c_ox();
    const double c_j = cox * d.fet.w * d.fet.l;
    const double c_g = cox * d.fet.w * w.ax_length;
    const double h = s.height * lam;
    const double wd = s.area / s.height * lam;
    const double n_r = cfg.n_r, n_c = cfg.n_c, n_w = cfg.n_w;

    const double c_bl = w.metal_cap * n_r * h + n_r * c_j;
    const double c_wl = w.metal_cap * n_c * wd + 2.0 * n_c * c_g;  // two access gates per cell

    SramMetrics m{};
    m.area = s.area;
    const double hs = s.half_select_swing * vdd;
    m.write_energy = n_w * c_bl * vdd * vdd + (n_c - n_w) * c_bl * hs * hs + c_wl * vdd * vdd;
    m.read_energy = n_c * c_bl * vdd * vdd + c_wl * vdd * vdd;  // every column on the row develops a swing
    m.write_latency = w.settle * (w.r_row * c_wl + w.r_driver * c_bl) + s.t_flip;
    m.read_latency = w.settle * w.r_row * c_wl + w.settle * w.r_driver * c_bl + w.t_sense;

    m.leakage_per_cell = s.leak_paths * drain_current(0.0, vdd, 0.0, d.fet);
    const double p_leak = n_r * n_c * m.leakage_per_cell * vdd;
    // Standby power accrues during the idle fraction of each access window.
    m.write_leakage = p_leak * (1.0 - s.utilization) * m.write_latency;
    m.read_leakage = p_leak * (1.0 - s.utilization) * m.read_latency;
    return m;
}

MetricsReport sram_report(const SramBaseline& s, const ArrayConfig& cfg) {
    SramMetrics m = sram_metrics(s, cfg);
    MetricsReport r;
    r.arch = "sram";
    r.kappa = cfg.device.kappa();
    r.area = m.area;
    r.write_energy.metal_lines = m.write_energy;
    r.write_energy.leakage = m.write_leakage;
    r.write_energy.total = m.write_energy + m.write_leakage;
    r.read_energy.metal_lines = m.read_energy;
    r.read_energy.leakage = m.read_leakage;
    r.read_energy.total = m.read_energy + m.read_leakage;
    r.write_latency.line_rc = m.write_latency - s.t_flip;
    r.write_latency.phase_overheads = s.t_flip;
    r.write_latency.total = m.write_latency;
    r.read_latency.line_rc = m.read_latency - cfg.wire.t_sense;
    r.read_latency.phase_overheads = cfg.wire.t_sense;
    r.read_latency.total = m.read_latency;
    r.distinguishability = 0.0;
    return r;
}

std::vector<ComparisonRow> compare_to_sram(const std::vector<MetricsReport>& reports, const MetricsReport& sram) {
    std::vector<ComparisonRow> rows;
    for (const auto& r : reports) {
        auto add = [&](const std::string& metric, double v, double ref, bool area) {
            double ratio = area ? ref / v : v / ref;
            rows.push_back({r.arch, metric, v, ref, ratio, 1.0 - v / ref});
        };
        add("area", r.area, sram.area, true);
        add("write_energy", r.write_energy.total, sram.write_energy.total, false);
        add("read_energy", r.read_energy.total, sram.read_energy.total, false);
        add("write_latency", r.write_latency.total, sram.write_latency.total, false);
        add("read_latency", r.read_latency.total, sram.read_latency.total, false);
    }
    return rows;
}

BenchmarkResult run_benchmark(const ArrayConfig& cfg) {
    MemoryArray array(cfg);
    auto [old_word, new_word] = benchmark_words(cfg.n_w);
    const Address addr{0, 0};
    array.write(addr, old_word);

    BenchmarkResult b;
    b.written = new_word;
    b.write_log = array.write(addr, new_word);
    b.read = array.read(addr);
    b.read_log = b.read.log;
    if (b.read.bits != new_word) throw RoundtripMismatch("benchmark read-back differs from the written word");

    const ArrayModel& model = array.model();
    MetricsReport& m = b.metrics;
    m.arch = arch_name(cfg.arch);
    m.kappa = cfg.device.kappa();
    m.area = cell_area(cfg.arch, m.kappa, cfg.rules, cfg.device.geom.a_tmd());
    m.write_energy = operation_energy(b.write_log);
    m.read_energy = operation_energy(b.read_log);
    m.write_latency = operation_latency(b.write_log);
    m.read_latency = operation_latency(b.read_log);
    const SenseLevels& s = model.sense_levels();
    m.distinguishability = s.ratio();
    return b;
}

}  // namespace pefet
