#include "pefet/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "pefet/config.hpp"
#include "pefet/errors.hpp"
#include "pefet/metrics.hpp"
#include "pefet/plot.hpp"

namespace fs = std::filesystem;

namespace pefet {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return kExitConfig;
    if (dynamic_cast<const UnsupportedArch*>(&e)) return kExitConfig;
    if (dynamic_cast<const DisturbViolation*>(&e)) return kExitDisturb;
    if (dynamic_cast<const RoundtripMismatch*>(&e)) return kExitRoundtrip;
    if (dynamic_cast<const WriteIncomplete*>(&e)) return kExitRoundtrip;
    if (dynamic_cast<const FitFailure*>(&e)) return kExitFit;
    return kExitFailure;
}

namespace {

struct Options {
    std::string config = "configs/default.ini";
    std::string out = "out";
    std::string kappa;
    std::string arch;
    std::uint64_t seed = 1;
    std::string op = "roundtrip";
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

/// Minimal CSV sink: every row is written as given; callers keep the column order fixed.
class Csv {
public:
    Csv(const fs::path& path, const std::string& header) : out_(path) {
        if (!out_) throw std::runtime_error("cannot write " + path.string());
        out_ << header << "\n";
    }
    template <class... T>
    void row(const T&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
        out_ << "\n";
    }

private:
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    static std::string cell(double v) { return num(v); }
    static std::string cell(int v) { return std::to_string(v); }
    std::ofstream out_;
};

constexpr const char* kReportHeader = "arch,kappa,metric,component,value,unit,provenance";

std::vector<double> parse_kappas(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ConfigError("--kappa: '" + item + "' is not a number");
        }
    }
    return out;
}

std::vector<Arch> parse_archs(const std::string& s) {
    std::vector<Arch> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_arch(item));
    return out;
}

struct Context {
    RunConfig cfg;
    fs::path out;
    std::vector<double> kappas;  // from --kappa, else the command's default
    std::vector<Arch> archs;
    std::uint64_t seed;
    bool kappa_given, arch_given;
};

Context make_context(const Options& o) {
    Context c{load_config(o.config), o.out, {}, {}, o.seed, !o.kappa.empty(), !o.arch.empty()};
    c.kappas = c.kappa_given ? parse_kappas(o.kappa) : c.cfg.sweep.kappas;
    c.archs = c.arch_given ? parse_archs(o.arch) : c.cfg.sweep.archs;
    fs::create_directories(c.out);
    return c;
}

void plumbing_rows(Csv& csv, const std::string& arch, double kappa, const ArrayConfig& a) {
    const WireParams& w = a.wire;
    csv.row(arch, kappa, "plumbing", "metal_cap", w.metal_cap, "F/m", "plumbing");
    csv.row(arch, kappa, "plumbing", "r_driver", w.r_driver, "Ohm", "plumbing");
    csv.row(arch, kappa, "plumbing", "r_row", w.r_row, "Ohm", "plumbing");
    csv.row(arch, kappa, "plumbing", "settle", w.settle, "tau", "plumbing");
    csv.row(arch, kappa, "plumbing", "switch_margin", w.switch_margin, "x", "plumbing");
    csv.row(arch, kappa, "plumbing", "t_sense", w.t_sense, "s", "plumbing");
}

void energy_rows(Csv& csv, const std::string& arch, double kappa, const std::string& op, const EnergyReport& e,
                 const EnergyReport& sram) {
    const std::string m = op + "_energy";
    csv.row(arch, kappa, m, "total", e.total, "J", "calibrated");
    csv.row(arch, kappa, m, "c_pe_charging", e.c_pe_charging, "J", "calibrated");
    csv.row(arch, kappa, m, "metal_lines", e.metal_lines, "J", "plumbing");
    csv.row(arch, kappa, m, "p_switching", e.p_switching, "J", "calibrated");
    csv.row(arch, kappa, m, "leakage", e.leakage, "J", "plumbing");
    csv.row(arch, kappa, m + "_share", "c_pe_charging", e.share(e.c_pe_charging), "fraction", "calibrated");
    csv.row(arch, kappa, m + "_share", "metal_lines", e.share(e.metal_lines), "fraction", "calibrated");
    csv.row(arch, kappa, m + "_share", "p_switching", e.share(e.p_switching), "fraction", "calibrated");
    for (const auto& [cls, v] : e.per_class) csv.row(arch, kappa, m + "_by_class", cls, v, "J", "calibrated");
    csv.row("sram", kappa, m, "total", sram.total, "J", "plumbing");
    csv.row("sram", kappa, m, "leakage", sram.leakage, "J", "plumbing");
    csv.row(arch, kappa, m + "_reduction_vs_sram", "total", 1.0 - e.total / sram.total, "fraction",
            "calibration_sensitive");
}

void latency_rows(Csv& csv, const std::string& arch, double kappa, const std::string& op, const LatencyReport& l,
                  const LatencyReport& sram) {
    const std::string m = op + "_latency";
    csv.row(arch, kappa, m, "total", l.total, "s", "calibrated");
    csv.row(arch, kappa, m, "line_rc", l.line_rc, "s", "plumbing");
    csv.row(arch, kappa, m, "p_switch", l.p_switch, "s", "calibrated");
    csv.row(arch, kappa, m, "phase_overheads", l.phase_overheads, "s", "plumbing");
    for (const auto& p : l.phases) csv.row(arch, kappa, m + "_phase", p.name, p.duration(), "s", "calibrated");
    csv.row("sram", kappa, m, "total", sram.total, "s", "plumbing");
    csv.row(arch, kappa, m + "_vs_sram", "total", l.total / sram.total, "ratio", "calibration_sensitive");
}

void write_events(const fs::path& path, const EventLog& log) {
    Csv csv(path, "phase,line_class,line,count,v_from,v_to,c_line,provenance");
    for (const auto& e : log.lines) {
        csv.row(e.phase, e.line_class, e.line, e.count, e.v_from, e.v_to, e.c_line,
                e.line_class == "PE" ? "paper" : "plumbing");
    }
}

// ---------------------------------------------------------------------------
// device
// ---------------------------------------------------------------------------

int cmd_device(const Context& c) {
    const PeFetConfig& dev = c.cfg.device();
    const SweepSettings& sw = c.cfg.sweep;

    {
        Csv csv(c.out / "iv_sweep.csv", "v_gs,i_lrs,i_hrs,i_baseline,provenance");
        Series lrs{"LRS (+P)", {}, {}}, hrs{"HRS (-P)", {}, {}}, base{"no PE", {}, {}};
        for (const auto& r : iv_sweep(dev, sw.iv_from, sw.iv_to, sw.iv_points)) {
            csv.row(r.v_gs, r.i_lrs, r.i_hrs, r.i_baseline, "calibrated");
            lrs.x.push_back(r.v_gs), lrs.y.push_back(r.i_lrs);
            hrs.x.push_back(r.v_gs), hrs.y.push_back(r.i_hrs);
            base.x.push_back(r.v_gs), base.y.push_back(r.i_baseline);
        }
        write_svg((c.out / "iv_sweep.svg").string(),
                  {"I_DS vs V_GS (V_DS = V_DD, kappa = " + num(dev.kappa()) + ")", "V_GS (V)", "I_DS (A)", true},
                  {lrs, hrs, base});
    }
    {
        Csv csv(c.out / "kappa_device.csv",
                "kappa,boost,sigma_tmd,delta_eg_lrs,delta_eg_hrs,i_lrs,i_hrs,ratio,provenance");
        Series ratio{"I_LRS / I_HRS", {}, {}}, stress{"sigma_TMD (GPa)", {}, {}};
        for (double k : c.kappas) {
            PeFetConfig d = dev.with_kappa(k);
            BiasPoint b{d.v_r, 0.0, d.v_dd, 0.0};
            double sigma = tmd_stress(pe_stress(1.0, d.v_r, d.geom, d.piezo), k, d.piezo);
            double i_l = read_current(d.p_s(), b, d), i_h = read_current(-d.p_s(), b, d);
            csv.row(k, boost(k, d.piezo), sigma, stored_delta_eg(d.p_s(), d.v_r, d), stored_delta_eg(-d.p_s(), d.v_r, d),
                    i_l, i_h, i_l / i_h, "calibrated");
            ratio.x.push_back(k), ratio.y.push_back(i_l / i_h);
            stress.x.push_back(k), stress.y.push_back(sigma / 1e9);
        }
        write_svg((c.out / "kappa_distinguishability.svg").string(), {"Distinguishability vs kappa", "kappa", "ratio"},
                  {ratio});
        write_svg((c.out / "kappa_stress.svg").string(), {"TMD stress vs kappa (+P, V_R)", "kappa", "GPa"}, {stress});
    }
    {
        // Step switching from -P_s under V_DD, then a triangular P-V loop.
        Csv csv(c.out / "trace.csv", "t,p,v,i_pol,provenance");
        WriteResult step = write_transient(-dev.p_s(), Waveform::square(dev.v_dd, 3e-9), dev);
        Series p{"P (C/m^2)", {}, {}};
        for (const auto& s : step.trace.samples) {
            csv.row(s.t, s.p, s.v, s.i_pol, "calibrated");
            p.x.push_back(s.t * 1e9), p.y.push_back(s.p);
        }
        write_svg((c.out / "trace.svg").string(), {"Switching under a V_DD step", "t (ns)", "P (C/m^2)"}, {p});

        Csv loop(c.out / "pv_loop.csv", "t,p,v,i_pol,provenance");
        WriteResult tri = write_transient(-dev.p_s(), Waveform::triangle(1.5 * dev.v_dd, 40e-9, 1), dev);
        Series pv{"P-V", {}, {}};
        for (const auto& s : tri.trace.samples) {
            loop.row(s.t, s.p, s.v, s.i_pol, "calibrated");
            pv.x.push_back(s.v), pv.y.push_back(s.p);
        }
        write_svg((c.out / "pv_loop.svg").string(), {"P-V loop", "V_PE (V)", "P (C/m^2)"}, {pv});
    }
    std::cout << "device: V_C = " << num(dev.v_c()) << " V, P_s = " << num(dev.p_s())
              << " C/m^2, ratio at kappa " << num(dev.kappa()) << " = " << num(device_distinguishability(dev)) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// array
// ---------------------------------------------------------------------------

int cmd_array(const Context& c, const std::string& op) {
    if (op != "write" && op != "read" && op != "roundtrip") throw ConfigError("--op must be write, read or roundtrip");
    const double kappa = c.kappa_given ? c.kappas.front() : c.cfg.device().kappa();
    const Arch arch = c.arch_given ? c.archs.front() : c.cfg.array.arch;
    const ArrayConfig a = c.cfg.array_for(arch, kappa);
    const std::string name = arch_name(arch);
    const MetricsReport sram = sram_report(c.cfg.sram, a);

    BenchmarkResult b = run_benchmark(a);
    const MetricsReport& m = b.metrics;

    int words = 0, mismatches = 0;
    if (op == "roundtrip") {
        MemoryArray array(a);
        std::mt19937_64 rng(c.seed);
        words = c.cfg.sweep.random_words;
        for (int i = 0; i < words; ++i) {
            Address addr{static_cast<int>(rng() % a.n_r), static_cast<int>(rng() % a.words_per_row())};
            Word w(a.n_w);
            for (auto& bit : w) bit = static_cast<std::uint8_t>(rng() & 1u);
            array.write(addr, w);
            if (array.read(addr).bits != w) ++mismatches;
        }
        std::ofstream(c.out / "state.txt") << array.snapshot();
    }

    {
        Csv csv(c.out / "energy.csv", kReportHeader);
        if (op != "read") energy_rows(csv, name, kappa, "write", m.write_energy, sram.write_energy);
        if (op != "write") energy_rows(csv, name, kappa, "read", m.read_energy, sram.read_energy);
        csv.row(name, kappa, "area", "per_bit", m.area, "lambda^2", "paper");
        csv.row(name, kappa, "area", "sram_ratio", sram.area / m.area, "ratio", "calibrated");
        plumbing_rows(csv, name, kappa, a);
        if (op == "roundtrip") {
            csv.row(name, kappa, "roundtrip", "words", words, "count", "plumbing");
            csv.row(name, kappa, "roundtrip", "mismatches", mismatches, "count", "plumbing");
        }
    }
    {
        Csv csv(c.out / "latency.csv", kReportHeader);
        if (op != "read") latency_rows(csv, name, kappa, "write", m.write_latency, sram.write_latency);
        if (op != "write") latency_rows(csv, name, kappa, "read", m.read_latency, sram.read_latency);
        plumbing_rows(csv, name, kappa, a);
    }
    write_events(c.out / "events.csv", op == "read" ? b.read_log : b.write_log);
    if (arch == Arch::CC && op != "write") {
        // Two worst-case definitions exist for CC; both are reported and the lower one is flagged.
        CcCurrents cc = cc_currents(ArrayModel(a));
        Csv csv(c.out / "cc_currents.csv", kReportHeader);
        csv.row(name, kappa, "cc_current", "I_HRS00", cc.hrs00, "A", "calibrated");
        csv.row(name, kappa, "cc_current", "I_HRS01", cc.hrs01, "A", "calibrated");
        csv.row(name, kappa, "cc_current", "I_LRS01", cc.lrs01, "A", "calibrated");
        csv.row(name, kappa, "cc_current", "I_HRS10", cc.hrs10, "A", "calibrated");
        csv.row(name, kappa, "cc_current", "I_LRS10", cc.lrs10, "A", "calibrated");
        csv.row(name, kappa, "cc_current", "I_LRS11", cc.lrs11, "A", "calibrated");
        csv.row(name, kappa, "cc_ratio", "LRS11/HRS00", cc.worst_ratio(), "ratio", "calibrated");
        csv.row(name, kappa, "cc_ratio", "LRS10/HRS10", cc.mixed_ratio(), "ratio", "calibrated");
        std::cout << "note: CC worst case I_LRS11/I_HRS00 = " << num(cc.worst_ratio())
                  << " (headline); the alternative I_LRS10/I_HRS10 = " << num(cc.mixed_ratio())
                  << " is reported alongside because the two worst-case definitions disagree\n";
    }

    std::cout << name << " kappa=" << num(kappa) << " " << op << ": ";
    if (op != "read") std::cout << "write " << num(m.write_energy.total) << " J / " << num(m.write_latency.total) << " s  ";
    if (op != "write") std::cout << "read " << num(m.read_energy.total) << " J / " << num(m.read_latency.total) << " s";
    std::cout << "\n";
    if (mismatches > 0) {
        throw RoundtripMismatch(std::to_string(mismatches) + " of " + std::to_string(words) + " words read back wrong");
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepPoint {
    Arch arch;
    double kappa;
    MetricsReport metrics;
    MetricsReport sram;
};

/// Evaluates every point on a worker pool; results come back in index order.
std::vector<SweepPoint> run_points(const RunConfig& cfg, const std::vector<std::pair<Arch, double>>& points) {
    std::vector<SweepPoint> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                auto [arch, kappa] = points[i];
                ArrayConfig a = cfg.array_for(arch, kappa);
                results[i] = {arch, kappa, run_benchmark(a).metrics, sram_report(cfg.sram, a)};
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = cfg.sweep.workers > 0 ? cfg.sweep.workers : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, std::max<std::size_t>(1, points.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

void sweep_plot(const fs::path& path, const std::string& title, const std::string& ylabel,
                const std::vector<SweepPoint>& pts, const std::vector<Arch>& archs,
                double (*value)(const SweepPoint&)) {
    std::vector<Series> series;
    for (Arch a : archs) {
        Series s{arch_name(a), {}, {}};
        for (const auto& p : pts) {
            if (p.arch == a) s.x.push_back(p.kappa), s.y.push_back(value(p));
        }
        series.push_back(s);
    }
    write_svg(path.string(), {title, "kappa", ylabel}, series);
}

int cmd_sweep(const Context& c) {
    if (c.kappas.empty() || c.archs.empty()) {
        warn("sweep list is empty; nothing to do");
        return kExitOk;
    }
    std::vector<std::pair<Arch, double>> points;
    for (double k : c.kappas) {
        for (Arch a : c.archs) points.emplace_back(a, k);
    }
    const auto pts = run_points(c.cfg, points);

    {
        Csv csv(c.out / "sweep_area.csv", kReportHeader);
        for (const auto& p : pts) {
            csv.row(p.metrics.arch, p.kappa, "area", "per_bit", p.metrics.area, "lambda^2", "paper");
            csv.row(p.metrics.arch, p.kappa, "area", "sram_ratio", p.sram.area / p.metrics.area, "ratio", "calibrated");
        }
    }
    {
        Csv csv(c.out / "sweep_distinguishability.csv", kReportHeader);
        for (const auto& p : pts) {
            csv.row(p.metrics.arch, p.kappa, "distinguishability", "worst_case", p.metrics.distinguishability, "ratio",
                    "calibrated");
        }
    }
    for (const std::string op : {"write", "read"}) {
        Csv csv(c.out / ("sweep_" + op + ".csv"), kReportHeader);
        for (const auto& p : pts) {
            const auto& e = op == "write" ? p.metrics.write_energy : p.metrics.read_energy;
            const auto& se = op == "write" ? p.sram.write_energy : p.sram.read_energy;
            const auto& l = op == "write" ? p.metrics.write_latency : p.metrics.read_latency;
            const auto& sl = op == "write" ? p.sram.write_latency : p.sram.read_latency;
            csv.row(p.metrics.arch, p.kappa, op + "_energy", "total", e.total, "J", "calibrated");
            csv.row(p.metrics.arch, p.kappa, op + "_energy", "reduction_vs_sram", 1.0 - e.total / se.total, "fraction",
                    "calibration_sensitive");
            csv.row(p.metrics.arch, p.kappa, op + "_latency", "total", l.total, "s", "calibrated");
            csv.row(p.metrics.arch, p.kappa, op + "_latency", "vs_sram", l.total / sl.total, "ratio",
                    "calibration_sensitive");
        }
    }

    sweep_plot(c.out / "sweep_area.svg", "Area advantage over SRAM", "SRAM area / cell area", pts, c.archs,
               [](const SweepPoint& p) { return p.sram.area / p.metrics.area; });
    sweep_plot(c.out / "sweep_distinguishability.svg", "Worst-case distinguishability", "I_LRS / I_HRS", pts, c.archs,
               [](const SweepPoint& p) { return p.metrics.distinguishability; });
    sweep_plot(c.out / "sweep_write_energy.svg", "Write energy", "E / E_SRAM", pts, c.archs,
               [](const SweepPoint& p) { return p.metrics.write_energy.total / p.sram.write_energy.total; });
    sweep_plot(c.out / "sweep_write_latency.svg", "Write latency", "t / t_SRAM", pts, c.archs,
               [](const SweepPoint& p) { return p.metrics.write_latency.total / p.sram.write_latency.total; });
    sweep_plot(c.out / "sweep_read_energy.svg", "Read energy", "E / E_SRAM", pts, c.archs,
               [](const SweepPoint& p) { return p.metrics.read_energy.total / p.sram.read_energy.total; });
    sweep_plot(c.out / "sweep_read_latency.svg", "Read latency", "t / t_SRAM", pts, c.archs,
               [](const SweepPoint& p) { return p.metrics.read_latency.total / p.sram.read_latency.total; });

    std::ofstream txt(c.out / "sram_comparison.txt");
    txt << "Comparison with the 2D-FET 6T SRAM baseline (64-bit access).\n"
        << "Reductions are 1 - PeFET/SRAM; latency columns are PeFET/SRAM. Calibration-sensitive.\n";
    double last_kappa = -1.0;
    for (const auto& p : pts) {
        if (p.kappa != last_kappa) {
            txt << "\nkappa = " << num(p.kappa) << "\n"
                << std::left << std::setw(6) << "arch" << std::right << std::setw(12) << "area_x" << std::setw(14)
                << "write_E_red" << std::setw(14) << "read_E_red" << std::setw(14) << "write_t_rel" << std::setw(14)
                << "read_t_rel" << "\n";
            last_kappa = p.kappa;
        }
        char row[160];
        std::snprintf(row, sizeof row, "%-6s%12.2f%13.1f%%%13.1f%%%14.2f%14.2f\n", p.metrics.arch.c_str(),
                      p.sram.area / p.metrics.area, 100.0 * (1.0 - p.metrics.write_energy.total / p.sram.write_energy.total),
                      100.0 * (1.0 - p.metrics.read_energy.total / p.sram.read_energy.total),
                      p.metrics.write_latency.total / p.sram.write_latency.total,
                      p.metrics.read_latency.total / p.sram.read_latency.total);
        txt << row;
    }
    std::cout << "sweep: " << pts.size() << " points written to " << c.out.string() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// calibrate
// ---------------------------------------------------------------------------

int cmd_calibrate(const Context& c) {
    ModelCard card = run_calibration(c.cfg);
    std::ofstream out(c.out / "model_card.ini");
    out << format_model_card(card);
    std::cout << "model card written to " << (c.out / "model_card.ini").string() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"PeFET device-to-array simulator", "pefet"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--config", o.config, "configuration file")->capture_default_str();
    app.add_option("--out", o.out, "output directory")->capture_default_str();
    app.add_option("--kappa", o.kappa, "comma-separated kappa values");
    app.add_option("--arch", o.arch, "comma-separated architectures (hd, tall, wide, cc)");
    app.add_option("--seed", o.seed, "seed for random data words")->capture_default_str();
    auto* device = app.add_subcommand("device", "device I-V, kappa dependence and switching traces");
    auto* array = app.add_subcommand("array", "array write/read/roundtrip with energy and latency reports");
    array->add_option("--op", o.op, "write, read or roundtrip")
        ->check(CLI::IsMember({"write", "read", "roundtrip"}))
        ->capture_default_str();
    auto* sweep = app.add_subcommand("sweep", "kappa x architecture sweep against the SRAM baseline");
    auto* calibrate = app.add_subcommand("calibrate", "fit the model constants and write a model card");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    if (!argv.empty()) argv.pop_back();  // program name
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        Context ctx = make_context(o);
        if (device->parsed()) return cmd_device(ctx);
        if (array->parsed()) return cmd_array(ctx, o.op);
        if (sweep->parsed()) return cmd_sweep(ctx);
        if (calibrate->parsed()) return cmd_calibrate(ctx);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitFailure;
}

}  // namespace pefet
