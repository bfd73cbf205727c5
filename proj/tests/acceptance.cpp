// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any criterion fails.
#include <boost/math/tools/minima.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pefet/config.hpp"
#include "pefet/errors.hpp"

using namespace pefet;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

bool within(double v, double target, double rel) { return std::abs(v / target - 1.0) <= rel; }

struct Bench {
    std::map<std::pair<Arch, double>, BenchmarkResult> runs;
    const RunConfig& cfg;
    const MetricsReport& at(Arch a, double k) {
        auto key = std::make_pair(a, k);
        auto it = runs.find(key);
        if (it == runs.end()) it = runs.emplace(key, run_benchmark(cfg.array_for(a, k))).first;
        return it->second.metrics;
    }
};

}  // namespace

int main(int argc, char** argv) {
    std::string ini = argc > 1 ? argv[1] : std::string(PEFET_SOURCE_DIR) + "/configs/default.ini";
    set_warning_handler([](const std::string&) {});
    const RunConfig cfg = load_config(ini);
    const PeFetConfig& dev = cfg.device();
    const LandauParams& lk = dev.landau;
    Bench bench{{}, cfg};
    const std::vector<double> kappas = {0.03, 0.04, 0.05, 0.06, 0.07};

    // 1. Coercive voltage.
    {
        auto t0 = std::chrono::steady_clock::now();
        double vc = coercive_field(lk) * dev.geom.t_pe;
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(1, within(vc, 0.6, 0.10) && secs < 1.0, "coercive voltage",
               fmt("V_C = %.4f V", vc) + " (0.6 V +/-10%), " + fmt("%.2e s", secs));
    }

    // 2. Spontaneous polarization against brute-force minimization.
    {
        double ps = spontaneous_polarization(lk);
        auto [p_min, u] = boost::math::tools::brent_find_minima([&](double p) { return landau_energy(p, lk); }, 0.01,
                                                                1.0, std::numeric_limits<double>::digits);
        (void)u;
        double rel = std::abs(ps / p_min - 1.0);
        report(2, within(ps, 0.2505, 1e-3) && rel <= 1e-6, "spontaneous polarization",
               fmt("P_s = %.7f C/m^2", ps) + fmt(", oracle rel. diff %.1e", rel));
    }

    // 3. Transduction anchors.
    {
        const auto& pz = dev.piezo;
        double b = pefet::boost(0.04, pz), ratio = pefet::boost(0.03, pz) / pefet::boost(0.07, pz);
        double sigma = tmd_stress(pe_stress(1.0, 0.35, dev.geom, pz), 0.04, pz);
        double de = bandgap_shift(sigma, pz);
        bool ok = within(b, 12.0, 0.01) && within(ratio, 1.78, 0.01) && within(sigma, 0.64e9, 0.01) &&
                  within(de, -0.051, 0.01);
        report(3, ok, "transduction anchors",
               fmt("B(0.04) = %.4f", b) + fmt(", B(0.03)/B(0.07) = %.4f", ratio) +
                   fmt(", sigma_TMD = %.4f GPa", sigma / 1e9) + fmt(", dE_G = %.2f meV", de * 1e3));
    }

    // 4. FET calibration at the read bias.
    {
        const auto& f = dev.fet;
        double i0 = drain_current(dev.v_r, dev.v_r, 0.0, f);
        double lrs = drain_current(dev.v_r, dev.v_r, -0.051, f) / i0;
        double hrs = i0 / drain_current(dev.v_r, dev.v_r, 0.051, f);
        report(4, within(lrs, 2.3, 0.10) && within(hrs, 3.4, 0.10), "FET calibration",
               fmt("I(-51meV)/I(0) = %.3f", lrs) + " (2.3 +/-10%)" + fmt(", I(0)/I(+51meV) = %.3f", hrs) +
                   " (3.4 +/-10%)");
    }

    // 5. Device distinguishability sweep.
    {
        std::vector<double> r;
        for (double k : kappas) r.push_back(device_distinguishability(dev.with_kappa(k)));
        bool mono = true;
        for (std::size_t i = 1; i < r.size(); ++i) mono = mono && r[i] < r[i - 1];
        bool ok = within(r[1], 8.0, 0.20) && within(r[0], 11.0, 0.25) && within(r[4], 3.0, 0.25) && mono;
        report(5, ok, "distinguishability sweep",
               fmt("k=0.03: %.3f (11 +/-25%)", r[0]) + fmt(", k=0.04: %.3f (8 +/-20%)", r[1]) +
                   fmt(", k=0.07: %.3f (3 +/-25%)", r[4]) + (mono ? ", monotone" : ", NOT monotone"));
    }

    // 6. CC read.
    {
        ArrayModel m(cfg.array_for(Arch::CC, 0.04));
        CcCurrents cc = cc_currents(m);
        bool orders = cc.lrs11 < cc.lrs01 && cc.lrs01 == cc.lrs10 && cc.hrs00 > cc.hrs01 && cc.hrs01 == cc.hrs10;
        report(6, within(cc.worst_ratio(), 3.0, 0.30) && orders, "CC read",
               fmt("I_LRS11/I_HRS00 = %.3f", cc.worst_ratio()) + " (3 +/-30%), orderings " +
                   (orders ? "exact" : "VIOLATED") + fmt("; alternative I_LRS10/I_HRS10 = %.1f reported", cc.mixed_ratio()));
    }

    // 7. Area.
    {
        const auto& r = cfg.array.rules;
        double a_tmd = dev.geom.a_tmd();
        double hd = cell_area(Arch::HD, 0.04, r, a_tmd);
        std::map<Arch, double> target = {{Arch::HD, 4.7}, {Arch::CC, 2.5}, {Arch::TALL, 1.87}, {Arch::WIDE, 1.53}};
        bool ok = std::abs(hd - 162.0) < 1e-9;
        std::string detail = fmt("HD = %.6f lambda^2; ratios", hd);
        for (auto [a, t] : target) {
            double v = sram_area_ratio(a, 0.04, r, a_tmd);
            ok = ok && within(v, t, 0.10);
            detail += " " + arch_name(a) + fmt(" %.3f", v) + fmt("(%.2f)", t);
        }
        double lo = sram_area_ratio(Arch::HD, 0.03, r, a_tmd), hi = sram_area_ratio(Arch::HD, 0.07, r, a_tmd);
        ok = ok && within(lo, 4.0, 0.15) && within(hi, 7.0, 0.15);
        report(7, ok, "area", detail + fmt("; HD span %.2fx", lo) + fmt(" - %.2fx", hi) + " (4x-7x +/-15%)");
    }

    // 8. HD write-energy breakdown.
    {
        const auto& e = bench.at(Arch::HD, 0.04).write_energy;
        double pe = e.share(e.c_pe_charging), metal = e.share(e.metal_lines), sw = e.share(e.p_switching);
        bool ok = std::abs(pe - 0.78) <= 0.08 && std::abs(metal - 0.12) <= 0.05 && std::abs(sw - 0.10) <= 0.05;
        report(8, ok, "HD write-energy breakdown",
               fmt("C_PE %.1f%%", 100 * pe) + fmt(", metal %.1f%%", 100 * metal) + fmt(", P-switching %.1f%%", 100 * sw) +
                   " (78/12/10 +/- 8/5/5 points)");
    }

    // 9. Architecture orderings.
    {
        auto we = [&](Arch a) { return bench.at(a, 0.04).write_energy.total; };
        auto wl = [&](Arch a) { return bench.at(a, 0.04).write_latency.total; };
        auto re = [&](Arch a) { return bench.at(a, 0.04).read_energy.total; };
        auto rl = [&](Arch a) { return bench.at(a, 0.04).read_latency.total; };
        bool w_e = we(Arch::HD) > we(Arch::TALL) && we(Arch::TALL) > we(Arch::WIDE) && we(Arch::WIDE) > we(Arch::CC);
        bool w_l = wl(Arch::WIDE) < wl(Arch::TALL) && wl(Arch::TALL) < wl(Arch::CC) && wl(Arch::CC) < wl(Arch::HD);
        bool r_e = re(Arch::CC) < re(Arch::HD) && re(Arch::CC) < re(Arch::TALL) && re(Arch::CC) < re(Arch::WIDE);
        bool r_l = rl(Arch::CC) < rl(Arch::HD) && rl(Arch::HD) < rl(Arch::TALL) && rl(Arch::TALL) < rl(Arch::WIDE);
        auto tag = [](bool b) { return b ? "ok" : "VIOLATED"; };
        report(9, w_e && w_l && r_e && r_l, "orderings at kappa 0.04",
               std::string("write energy HD>TALL>WIDE>CC ") + tag(w_e) + ", write latency WIDE<TALL<CC<HD " + tag(w_l) +
                   ", read energy CC min " + tag(r_e) + ", read latency CC<HD<TALL<WIDE " + tag(r_l));
    }

    // 10. Kappa trends.
    {
        bool ok = true;
        std::string detail;
        for (Arch a : kAllArchs) {
            bool we = true, wl = true, rl = true;
            double rmin = 1e9, rmax = 0, rsum = 0;
            for (std::size_t i = 0; i < kappas.size(); ++i) {
                const auto& m = bench.at(a, kappas[i]);
                rmin = std::min(rmin, m.read_energy.total);
                rmax = std::max(rmax, m.read_energy.total);
                rsum += m.read_energy.total;
                if (i == 0) continue;
                const auto& p = bench.at(a, kappas[i - 1]);
                we = we && m.write_energy.total < p.write_energy.total;
                wl = wl && m.write_latency.total < p.write_latency.total;
                rl = rl && m.read_latency.total < p.read_latency.total;
            }
            double spread = (rmax - rmin) / (rsum / kappas.size());
            bool arch_ok = we && wl && rl && spread < 0.05;
            ok = ok && arch_ok;
            detail += arch_name(a) + (arch_ok ? " ok" : " VIOLATED") + fmt(" (read-energy spread %.2f%%) ", 100 * spread);
        }
        report(10, ok, "kappa trends", detail);
    }

    // 11. SRAM-relative reductions (calibration-sensitive).
    {
        auto sram = sram_report(cfg.sram, cfg.array_for(Arch::HD, 0.04));
        std::map<Arch, double> w_target = {{Arch::HD, 0.48}, {Arch::TALL, 0.56}, {Arch::WIDE, 0.61}, {Arch::CC, 0.65}};
        std::map<Arch, double> r_target = {{Arch::CC, 0.87}, {Arch::HD, 0.85}, {Arch::WIDE, 0.77}, {Arch::TALL, 0.74}};
        bool ok = true;
        std::string detail = "write";
        for (Arch a : kAllArchs) {
            double v = 1.0 - bench.at(a, 0.04).write_energy.total / sram.write_energy.total;
            ok = ok && std::abs(v - w_target[a]) <= 0.10;
            detail += " " + arch_name(a) + fmt(" %.1f%%", 100 * v) + fmt("(%.0f)", 100 * w_target[a]);
        }
        detail += "; read";
        for (Arch a : kAllArchs) {
            double v = 1.0 - bench.at(a, 0.04).read_energy.total / sram.read_energy.total;
            ok = ok && std::abs(v - r_target[a]) <= 0.10;
            detail += " " + arch_name(a) + fmt(" %.1f%%", 100 * v) + fmt("(%.0f)", 100 * r_target[a]);
        }
        report(11, ok, "SRAM-relative reductions [calibration-sensitive]", detail + " (+/-10 points)");
    }

    // 12. Property suites.
    {
        int mismatches = 0, flips = 0, words = 0;
        for (Arch a : kAllArchs) {
            for (double k : {0.03, 0.04, 0.07}) {
                MemoryArray arr(cfg.array_for(a, k));
                const auto& c = arr.model().cfg();
                std::mt19937_64 rng(1234);
                std::vector<double> before;
                for (int i = 0; i < 100; ++i) {
                    Address addr{static_cast<int>(rng() % c.n_r), static_cast<int>(rng() % c.words_per_row())};
                    Word w(c.n_w);
                    for (auto& b : w) b = rng() & 1;
                    before = arr.state();
                    arr.write(addr, w);
                    if (arr.read(addr).bits != w) ++mismatches;
                    const auto& after = arr.state();
                    for (int r = 0; r < c.n_r; ++r)
                        for (int col = 0; col < c.n_c; ++col) {
                            bool in_word = r == addr.row && col / c.n_w == addr.word;
                            std::size_t i = static_cast<std::size_t>(r) * c.n_c + col;
                            if (!in_word && (before[i] > 0) != (after[i] > 0)) ++flips;
                        }
                    ++words;
                }
            }
        }
        double worst_rel = 0.0;
        for (Arch a : kAllArchs) {
            ArrayConfig c = cfg.array_for(a, 0.04);
            c.n_r = c.n_c = 8;
            c.n_w = 4;
            MemoryArray x(c), y(c);
            std::mt19937_64 rng(99);
            for (int i = 0; i < 10; ++i) {
                Address addr{static_cast<int>(rng() % 8), static_cast<int>(rng() % 2)};
                Word w(4);
                for (auto& b : w) b = rng() & 1;
                double ex = operation_energy(x.write(addr, w, false)).total;
                double ey = operation_energy(y.write(addr, w, true)).total;
                worst_rel = std::max(worst_rel, std::abs(ex / ey - 1.0));
            }
        }
        double ps = spontaneous_polarization(lk);
        auto wave = Waveform::steps({0.7, -0.3, 0.2}, {1e-9, 0.5e-9, 0.5e-9});
        Waveform neg = wave;
        for (auto& v : neg.v) v = -v;
        auto ta = simulate_switching(-ps, wave, dev.geom.t_pe, lk);
        auto tb = simulate_switching(ps, neg, dev.geom.t_pe, lk);
        bool odd = ta.samples.size() == tb.samples.size();
        for (std::size_t i = 0; odd && i < ta.samples.size(); ++i) odd = ta.samples[i].p == -tb.samples[i].p;
        IntegratorOptions fine = dev.integrator;
        fine.dt_max /= 10;
        fine.rtol /= 100;
        double t1 = switch_time(dev.v_dd, dev.geom.t_pe, lk, dev.integrator);
        double t2 = switch_time(dev.v_dd, dev.geom.t_pe, lk, fine);
        bool refine = within(t1, t2, 1e-3);
        bool ok = mismatches == 0 && flips == 0 && worst_rel <= 1e-9 && odd && refine;
        report(12, ok, "property suites",
               std::to_string(words) + " round trips, " + std::to_string(mismatches) + " mismatches, " +
                   std::to_string(flips) + " disturb sign flips; class vs per-cell energy " + fmt("%.1e rel", worst_rel) +
                   "; LK odd symmetry " + (odd ? "ok" : "VIOLATED") + fmt(", refinement drift %.1e", std::abs(t1 / t2 - 1)));
    }

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
