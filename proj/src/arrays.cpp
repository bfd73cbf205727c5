#include "pefet/arrays.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pefet/errors.hpp"

namespace pefet {

std::string line_name(Line line) {
    switch (line) {
        case Line::WL: return "WL";
        case Line::WBL: return "WBL";
        case Line::RBL: return "RBL";
        case Line::GPL: return "GPL";
        case Line::LPL: return "LPL";
        case Line::PL: return "PL";
        case Line::BL1: return "BL1";
        case Line::BL2: return "BL2";
        case Line::BN: return "BN";
        case Line::DA: return "DA";
        case Line::DB: return "DB";
    }
    return "?";
}

std::string access_name(Access access) {
    switch (access) {
        case Access::accessed: return "accessed";
        case Access::half_row: return "half_row";
        case Access::half_col: return "half_col";
        case Access::unaccessed: return "unaccessed";
    }
    return "?";
}

bool is_internal(Line line) { return line == Line::BN || line == Line::DA || line == Line::DB; }

void ArrayConfig::validate() const {
    if (n_r < 2 || n_c < 1 || n_w < 1) throw std::invalid_argument("array needs at least two rows and one word");
    if (n_c % n_w != 0) throw std::invalid_argument("n_c must be a multiple of the word size");
    if (arch == Arch::CC) {
        if (n_w % 2 != 0) throw std::invalid_argument("CC words need an even number of bits");
        if (!segmented) throw UnsupportedArch("CC arrays are only defined in segmented form");
    }
    if (!(min_sense_ratio >= 1.0)) throw std::invalid_argument("minimum sense ratio must be at least 1");
    if (!(wire.settle >= 0.0 && wire.switch_margin >= 1.0)) throw std::invalid_argument("bad timing multipliers");
    if (!(wire.buffer_width > 0.0 && wire.ax_length > 0.0)) throw std::invalid_argument("bad device sizing");
    device.validate();
    rules.validate();
}

// ---------------------------------------------------------------------------
// Phase plans
// ---------------------------------------------------------------------------

void Phase::set(Line line, Access access, double v, int code) {
    for (auto& d : drives) {
        if (d.line == line && d.access == access && d.code == code) {
            d.volts = v;
            return;
        }
    }
    drives.push_back({line, access, code, v});
}

bool Phase::has(Line line, Access access, int code) const {
    for (const auto& d : drives) {
        if (d.line == line && d.access == access && (d.code == code || d.code == -1)) return true;
    }
    return false;
}

double Phase::volts(Line line, Access access, int code) const {
    const Drive* fallback = nullptr;
    for (const auto& d : drives) {
        if (d.line != line || d.access != access) continue;
        if (d.code == code) return d.volts;
        if (d.code == -1) fallback = &d;
    }
    if (fallback) return fallback->volts;
    throw std::logic_error("phase '" + name + "' leaves " + line_name(line) + " undriven for " + access_name(access) +
                           " cells (code " + std::to_string(code) + ")");
}

std::vector<Line> PhasePlan::lines() const {
    switch (arch) {
        case Arch::HD: return {Line::WL, Line::WBL, Line::RBL};
        case Arch::TALL:
        case Arch::WIDE:
            if (segmented) return {Line::WL, Line::WBL, Line::RBL, Line::GPL, Line::LPL, Line::BN};
            return {Line::WL, Line::WBL, Line::RBL, Line::PL, Line::BN};
        case Arch::CC: return {Line::WL, Line::BL1, Line::BL2, Line::GPL, Line::LPL, Line::DA, Line::DB};
    }
    throw UnsupportedArch("unknown architecture");
}

std::vector<int> PhasePlan::codes() const {
    if (arch == Arch::CC) return {0, 1, 2, 3};
    return {0, 1};
}

void PhasePlan::validate() const {
    for (const auto& ph : phases) {
        for (Line l : lines()) {
            for (Access a : kAllAccess) {
                for (int c : codes()) ph.volts(l, a, c);
            }
        }
    }
}

int target_bit(Arch arch, int code, int side) {
    if (arch == Arch::CC) return side == 0 ? (code >> 1) & 1 : code & 1;
    return code;
}

CellNodes cell_nodes(const PhasePlan& plan, std::size_t phase, Access access, int code, int side) {
    const Phase& ph = plan.phases.at(phase);
    auto v = [&](Line l) { return ph.volts(l, access, code); };
    switch (plan.arch) {
        case Arch::HD: return {v(Line::WL), v(Line::WBL), v(Line::RBL)};
        case Arch::TALL:
        case Arch::WIDE: return {plan.segmented ? v(Line::LPL) : v(Line::PL), v(Line::BN), v(Line::RBL)};
        case Arch::CC:
            // A's gate is B's drain and vice versa; both back contacts sit on the LPL.
            if (side == 0) return {v(Line::DB), v(Line::LPL), v(Line::DA)};
            return {v(Line::DA), v(Line::LPL), v(Line::DB)};
    }
    throw UnsupportedArch("unknown architecture");
}

namespace {

void check_word(const ArrayModel& model, const Address& a, const Word* data) {
    const auto& c = model.cfg();
    if (a.row < 0 || a.row >= c.n_r || a.word < 0 || a.word >= c.words_per_row()) {
        throw std::out_of_range("address outside the array");
    }
    if (data) {
        if (static_cast<int>(data->size()) != c.n_w) throw std::invalid_argument("data word length must equal n_w");
        for (auto b : *data) {
            if (b > 1) throw std::invalid_argument("data bits must be 0 or 1");
        }
    }
}

/// Row lines are shared by the accessed and half_row classes; column lines by accessed and half_col.
void set_row(Phase& ph, Line l, double selected, double other = 0.0) {
    ph.set(l, Access::accessed, selected);
    ph.set(l, Access::half_row, selected);
    ph.set(l, Access::half_col, other);
    ph.set(l, Access::unaccessed, other);
}

template <class F>
void set_column(Phase& ph, Line l, const std::vector<int>& codes, F selected, double other = 0.0) {
    bool uniform = std::all_of(codes.begin(), codes.end(), [&](int c) { return selected(c) == selected(codes[0]); });
    for (int c : codes) {
        // Data-independent drives apply to any code, including "unknown" on a read.
        int key = uniform ? -1 : c;
        ph.set(l, Access::accessed, selected(c), key);
        ph.set(l, Access::half_col, selected(c), key);
    }
    ph.set(l, Access::half_row, other);
    ph.set(l, Access::unaccessed, other);
}

/// Lines owned by the accessed segment (GPL) are shared with half_col cells.
void set_segment(Phase& ph, Line l, double selected) {
    ph.set(l, Access::accessed, selected);
    ph.set(l, Access::half_col, selected);
    ph.set(l, Access::half_row, 0.0);
    ph.set(l, Access::unaccessed, 0.0);
}

/// The local plate line of the accessed word only.
void set_local(Phase& ph, Line l, double selected) {
    ph.set(l, Access::accessed, selected);
    ph.set(l, Access::half_row, 0.0);
    ph.set(l, Access::half_col, 0.0);
    ph.set(l, Access::unaccessed, 0.0);
}

}  // namespace

PhasePlan plan_write(const ArrayModel& model, const Address& address, const Word& data) {
    check_word(model, address, &data);
    const ArrayConfig& c = model.cfg();
    const double vdd = c.device.v_dd;
    const double vb = vdd + c.v_boost();
    PhasePlan plan{c.arch, Op::write, c.segmented, {}};
    const auto codes = plan.codes();

    switch (c.arch) {
        case Arch::HD: {
            // WBL carries -VDD/2 for '1' and +VDD/2 for '0'; WL steps -VDD/2 -> +VDD/2.
            for (int k = 0; k < 2; ++k) {
                Phase ph{k == 0 ? "phi1" : "phi2", {}};
                set_row(ph, Line::WL, k == 0 ? -0.5 * vdd : 0.5 * vdd);
                set_column(ph, Line::WBL, codes, [&](int b) { return b ? -0.5 * vdd : 0.5 * vdd; });
                set_column(ph, Line::RBL, codes, [](int) { return 0.0; });
                plan.phases.push_back(ph);
            }
            break;
        }
        case Arch::TALL:
        case Arch::WIDE: {
            for (int k = 0; k < 2; ++k) {
                Phase ph{k == 0 ? "phi1" : "phi2", {}};
                set_row(ph, Line::WL, vb);
                set_column(ph, Line::RBL, codes, [](int) { return 0.0; });
                if (c.segmented) {
                    set_column(ph, Line::WBL, codes, [&](int b) { return b ? 0.0 : vdd; });
                    set_segment(ph, Line::GPL, k == 0 ? 0.0 : vdd);
                    set_local(ph, Line::LPL, k == 0 ? 0.0 : vb);
                    // Back node follows its WBL where the access transistor is on.
                    for (int code : codes) ph.set(Line::BN, Access::accessed, code ? 0.0 : vdd, code);
                    ph.set(Line::BN, Access::half_row, 0.0);
                } else {
                    // Unselected columns sit at VDD/2 to bound the half-row PE voltage.
                    set_column(ph, Line::WBL, codes, [&](int b) { return b ? 0.0 : vdd; }, 0.5 * vdd);
                    set_row(ph, Line::PL, k == 0 ? 0.0 : vb);
                    for (int code : codes) ph.set(Line::BN, Access::accessed, code ? 0.0 : vdd, code);
                    ph.set(Line::BN, Access::half_row, 0.5 * vdd);
                }
                ph.set(Line::BN, Access::half_col, 0.0);
                ph.set(Line::BN, Access::unaccessed, 0.0);
                plan.phases.push_back(ph);
            }
            break;
        }
        case Arch::CC: {
            const double droop = model.cc_write_droop();
            for (int k = 0; k < 2; ++k) {
                Phase ph{k == 0 ? "phi1" : "phi2", {}};
                set_row(ph, Line::WL, vb);
                // BL2 carries A's bit to G_A (via D_B); BL1 carries B's bit.
                set_column(ph, Line::BL1, codes, [&](int code) { return (code & 1) ? vdd : 0.0; });
                set_column(ph, Line::BL2, codes, [&](int code) { return (code >> 1) ? vdd : 0.0; });
                set_segment(ph, Line::GPL, k == 0 ? 0.0 : vdd);
                set_local(ph, Line::LPL, k == 0 ? 0.0 : vdd);
                for (int code : codes) {
                    double d = code == 3 ? droop : 0.0;  // both PeFETs conduct when both drains are high
                    ph.set(Line::DA, Access::accessed, ((code & 1) ? vdd : 0.0) - d, code);
                    ph.set(Line::DB, Access::accessed, ((code >> 1) ? vdd : 0.0) - d, code);
                }
                for (Access a : {Access::half_row, Access::half_col, Access::unaccessed}) {
                    ph.set(Line::DA, a, 0.0);
                    ph.set(Line::DB, a, 0.0);
                }
                plan.phases.push_back(ph);
            }
            break;
        }
    }
    plan.validate();
    return plan;
}

PhasePlan plan_read(const ArrayModel& model, const Address& address) {
    check_word(model, address, nullptr);
    const ArrayConfig& c = model.cfg();
    const double vdd = c.device.v_dd;
    const double vr = c.device.v_r;
    PhasePlan plan{c.arch, Op::read, c.segmented, {}};
    const auto codes = plan.codes();
    Phase ph{"read", {}};
    auto same = [](double v) { return [v](int) { return v; }; };
    switch (c.arch) {
        case Arch::HD:
            set_row(ph, Line::WL, vr);
            set_column(ph, Line::WBL, codes, same(0.0));
            set_column(ph, Line::RBL, codes, same(vdd));
            break;
        case Arch::TALL:
        case Arch::WIDE:
            set_row(ph, Line::WL, vr);
            set_column(ph, Line::WBL, codes, same(0.0));
            set_column(ph, Line::RBL, codes, same(vdd));
            if (c.segmented) {
                set_segment(ph, Line::GPL, vr);
                set_local(ph, Line::LPL, vr);
            } else {
                set_row(ph, Line::PL, vr);
            }
            for (Access a : kAllAccess) ph.set(Line::BN, a, 0.0);
            break;
        case Arch::CC:
            set_row(ph, Line::WL, vdd);
            set_column(ph, Line::BL1, codes, same(vr));
            set_column(ph, Line::BL2, codes, same(vr));
            set_segment(ph, Line::GPL, 0.0);
            set_local(ph, Line::LPL, 0.0);
            // Drains are resolved by solve_cc_read; V_R bounds them from above.
            ph.set(Line::DA, Access::accessed, vr);
            ph.set(Line::DB, Access::accessed, vr);
            for (Access a : {Access::half_row, Access::half_col, Access::unaccessed}) {
                ph.set(Line::DA, a, 0.0);
                ph.set(Line::DB, a, 0.0);
            }
            break;
    }
    plan.phases.push_back(ph);
    plan.validate();
    return plan;
}

bool DisturbReport::pass() const {
    return std::none_of(entries.begin(), entries.end(), [](const DisturbEntry& e) { return e.violation; });
}

DisturbReport check_disturb(const PhasePlan& plan, const ArrayModel& model) {
    const double vc = model.v_c();
    DisturbReport rep{{}, vc};
    for (std::size_t ph = 0; ph < plan.phases.size(); ++ph) {
        for (Access a : kAllAccess) {
            for (int code : plan.codes()) {
                for (int side = 0; side < plan.sides(); ++side) {
                    double vgb = cell_nodes(plan, ph, a, code, side).v_gb();
                    bool violation;
                    bool counts;
                    if (a == Access::accessed && plan.op == Op::write) {
                        // Drive toward the target is intended; drive against it must stay sub-coercive.
                        double dir = target_bit(plan.arch, code, side) ? 1.0 : -1.0;
                        violation = dir * vgb <= -vc;
                        counts = dir * vgb <= 0.0;
                    } else {
                        violation = std::abs(vgb) >= vc;
                        counts = true;
                    }
                    if (counts) rep.worst_margin = std::min(rep.worst_margin, vc - std::abs(vgb));
                    rep.entries.push_back({ph, a, code, side, vgb, violation});
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Array electrical model
// ---------------------------------------------------------------------------

ArrayModel::ArrayModel(ArrayConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    const PeFetConfig& d = cfg_.device;
    v_c_ = d.v_c();
    p_s_ = d.p_s();
    ax_ = d.fet;
    ax_.l = cfg_.wire.ax_length;

    const double kappa = d.kappa();
    const double lam = cfg_.rules.lambda;
    const double m = cfg_.wire.metal_cap;
    el_.dims = cell_dims(cfg_.arch, kappa, cfg_.rules, d.geom.a_tmd());
    el_.cell_h = el_.dims.height * lam;
    el_.cell_w = el_.dims.width * lam;
    const int bits = el_.dims.bits;
    el_.len_row = (cfg_.n_c / bits) * el_.cell_w;
    el_.len_col = cfg_.n_r * el_.cell_h;
    el_.len_lpl = (cfg_.n_w / bits) * el_.cell_w;
    el_.c_pe = c_pe(d.geom, cfg_.rules.eps_r_pe);
    const double cox = d.fet.c_ox();
    el_.c_j = cox * d.fet.w * d.fet.l;
    el_.c_g_ax = cox * ax_.w * ax_.l;
    el_.c_buf = cfg_.wire.buffer_width * cox * d.fet.w * d.fet.l;
    el_.r_ax = on_resistance(d.v_dd + cfg_.v_boost(), ax_);
    el_.r_buf_write = on_resistance(d.v_dd, d.fet) / cfg_.wire.buffer_width;
    el_.r_buf_read = on_resistance(d.v_r, d.fet) / cfg_.wire.buffer_width;

    const double n_r = cfg_.n_r, n_c = cfg_.n_c, n_w = cfg_.n_w;
    const double wire_row = m * el_.len_row, wire_col = m * el_.len_col, wire_lpl = m * el_.len_lpl;
    switch (cfg_.arch) {
        case Arch::HD:
            // PE capacitors hang directly between WL and WBL.
            el_.lines[Line::WL] = {wire_row, wire_row + n_c * el_.c_pe};
            el_.lines[Line::WBL] = {wire_col, wire_col + n_r * el_.c_pe};
            el_.lines[Line::RBL] = {wire_col + n_r * el_.c_j, wire_col + n_r * el_.c_j};
            break;
        case Arch::TALL:
        case Arch::WIDE: {
            double wl = wire_row + n_c * el_.c_g_ax;
            double bl = wire_col + n_r * el_.c_j;
            el_.lines[Line::WL] = {wl, wl};
            el_.lines[Line::WBL] = {bl, bl};
            el_.lines[Line::RBL] = {bl, bl};
            double gpl = wire_col + n_r * el_.c_buf;
            el_.lines[Line::GPL] = {gpl, gpl};
            el_.lines[Line::LPL] = {wire_lpl, wire_lpl + n_w * el_.c_pe};
            el_.lines[Line::PL] = {wire_row, wire_row + n_c * el_.c_pe};
            break;
        }
        case Arch::CC: {
            double wl = wire_row + n_c * el_.c_g_ax;  // two access transistors per 2-bit cell
            double bl = wire_col + n_r * el_.c_j;
            el_.lines[Line::WL] = {wl, wl};
            el_.lines[Line::BL1] = {bl, bl};
            el_.lines[Line::BL2] = {bl, bl};
            double gpl = wire_col + n_r * el_.c_buf;
            el_.lines[Line::GPL] = {gpl, gpl};
            el_.lines[Line::LPL] = {wire_lpl, wire_lpl + n_w * el_.c_pe};
            break;
        }
    }
}

double ArrayModel::t_switch(double volts) const {
    double v = std::abs(volts);
    auto it = t_sw_cache_.find(v);
    if (it != t_sw_cache_.end()) return it->second;
    double t = switch_time(v, cfg_.device.geom.t_pe, cfg_.device.landau, cfg_.device.integrator);
    t_sw_cache_[v] = t;
    return t;
}

double ArrayModel::cc_write_droop() const {
    if (!cc_droop_) {
        CcReadResult r = solve_cc_read(p_s_, p_s_, *this);
        cc_droop_ = cfg_.device.v_r - r.v_da;
    }
    return *cc_droop_;
}

double ArrayModel::sneak_current() const {
    if (!sneak_) {
        const PeFetConfig& d = cfg_.device;
        if (cfg_.arch == Arch::CC) {
            // Access transistor of an unselected row: gate low, BL at V_R, drain node near 0.
            sneak_ = drain_current(0.0, d.v_r, 0.0, ax_);
        } else {
            sneak_ = read_current(0.0, BiasPoint{0.0, 0.0, d.v_dd, 0.0}, d);
        }
    }
    return *sneak_;
}

const SenseLevels& ArrayModel::sense_levels() const {
    if (!sense_) {
        const PeFetConfig& d = cfg_.device;
        double leak = (cfg_.n_r - 1) * sneak_current();
        double lrs, hrs;
        if (cfg_.arch == Arch::CC) {
            lrs = solve_cc_read(p_s_, p_s_, *this).i_bl1;    // I_LRS11
            hrs = solve_cc_read(-p_s_, -p_s_, *this).i_bl1;  // I_HRS00
        } else {
            BiasPoint b{d.v_r, 0.0, d.v_dd, 0.0};
            lrs = read_current(p_s_, b, d);
            hrs = read_current(-p_s_, b, d);
        }
        lrs += leak;
        hrs += leak;
        sense_ = SenseLevels{lrs, hrs, std::sqrt(lrs * hrs)};
    }
    return *sense_;
}

// ---------------------------------------------------------------------------
// Cross-coupled read
// ---------------------------------------------------------------------------

CcReadResult solve_cc_read(double state_a, double state_b, const ArrayModel& model) {
    const PeFetConfig& d = model.cfg().device;
    const FetParams& ax = model.access_fet();
    const double vr = d.v_r;
    const double vwl = d.v_dd;
    auto i_ax = [&](double v_node) { return drain_current(vwl - v_node, vr - v_node, 0.0, ax); };
    // Drain voltage of one side given the voltage on its gate (the other side's drain).
    auto side = [&](double p, double v_gate) {
        auto f = [&](double v) { return i_ax(v) - read_current(p, BiasPoint{v_gate, 0.0, v, 0.0}, d); };
        std::uintmax_t it = 200;
        auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, vr, boost::math::tools::eps_tolerance<double>(50), it);
        if (it >= 200) throw ConvergenceFailure("CC node solve did not bracket a root");
        return 0.5 * (lo + hi);
    };
    const double omega = 0.7;
    double va = vr, vb = vr;
    int iter = 0;
    for (;; ++iter) {
        if (iter >= 1000) {
            std::ostringstream os;
            os << "CC fixed point did not converge; last iterate v_da=" << va << " v_db=" << vb;
            throw ConvergenceFailure(os.str());
        }
        double na = side(state_a, vb);
        double nb = side(state_b, va);
        double da = na - va, db = nb - vb;
        va += omega * da;
        vb += omega * db;
        if (std::max(std::abs(da), std::abs(db)) < 1e-12) break;
    }
    CcReadResult r;
    r.v_da = va;
    r.v_db = vb;
    r.i_bl1 = i_ax(va);
    r.i_bl2 = i_ax(vb);
    r.label = std::string(state_a > 0.0 ? "1" : "0") + (state_b > 0.0 ? "1" : "0");
    r.iterations = iter;
    return r;
}

CcCurrents cc_currents(const ArrayModel& model) {
    const double ps = model.p_s();
    CcReadResult r00 = solve_cc_read(-ps, -ps, model);
    CcReadResult r01 = solve_cc_read(-ps, ps, model);
    CcReadResult r10 = solve_cc_read(ps, -ps, model);
    CcReadResult r11 = solve_cc_read(ps, ps, model);
    return {r00.i_bl1, r01.i_bl1, r01.i_bl2, r10.i_bl2, r10.i_bl1, r11.i_bl1};
}

// ---------------------------------------------------------------------------
// Timing
// ---------------------------------------------------------------------------

std::map<int, int> code_counts(Arch arch, const Word& data) {
    std::map<int, int> counts;
    if (arch == Arch::CC) {
        for (std::size_t j = 0; j + 1 < data.size(); j += 2) counts[(data[j] << 1) | data[j + 1]]++;
    } else {
        for (auto b : data) counts[b]++;
    }
    return counts;
}

std::vector<PhaseTiming> phase_timing(const PhasePlan& plan, const ArrayModel& model, const Word& data) {
    const ArrayConfig& c = model.cfg();
    const ArrayElectrics& el = model.electrics();
    const double k = c.wire.settle;
    const double R = c.wire.r_driver;
    const double Rrow = c.wire.r_row;
    auto load = [&](Line l) { return el.lines.at(l).c_load; };
    const double t_cell = k * el.r_ax * el.c_pe;  // PE charged through the access transistor

    std::vector<PhaseTiming> out;
    if (plan.op == Op::read) {
        double rc = 0.0;
        switch (c.arch) {
            case Arch::HD: rc = k * Rrow * load(Line::WL) + k * R * load(Line::RBL); break;
            case Arch::TALL:
            case Arch::WIDE: {
                double plate = c.segmented ? R * load(Line::GPL) + el.r_buf_read * load(Line::LPL) : R * load(Line::PL);
                rc = k * std::max(Rrow * load(Line::WL), plate) + k * R * load(Line::RBL);
                break;
            }
            case Arch::CC: rc = k * Rrow * load(Line::WL) + k * R * load(Line::BL1); break;
        }
        out.push_back({plan.phases[0].name, rc, 0.0, c.wire.t_sense});
        return out;
    }

    const auto counts = code_counts(c.arch, data);
    for (std::size_t ph = 0; ph < plan.phases.size(); ++ph) {
        double t_sw = 0.0;
        for (const auto& [code, n] : counts) {
            if (n == 0) continue;
            for (int side = 0; side < plan.sides(); ++side) {
                double vgb = cell_nodes(plan, ph, Access::accessed, code, side).v_gb();
                double dir = target_bit(c.arch, code, side) ? 1.0 : -1.0;
                if (dir * vgb > model.v_c()) t_sw = std::max(t_sw, model.t_switch(vgb));
            }
        }
        double rc = 0.0;
        const bool first = ph == 0;
        switch (c.arch) {
            case Arch::HD:
                rc = first ? k * std::max(Rrow * load(Line::WL), R * load(Line::WBL)) : k * Rrow * load(Line::WL);
                break;
            case Arch::TALL:
            case Arch::WIDE:
                if (first) {
                    rc = k * std::max(R * load(Line::WBL), Rrow * load(Line::WL)) + t_cell;
                } else if (c.segmented) {
                    rc = k * (R * load(Line::GPL) + el.r_buf_write * load(Line::LPL)) + t_cell;
                } else {
                    rc = k * R * load(Line::PL) + t_cell;
                }
                break;
            case Arch::CC:
                rc = first ? k * std::max(R * load(Line::BL1), Rrow * load(Line::WL)) + t_cell
                           : k * (R * load(Line::GPL) + el.r_buf_write * load(Line::LPL)) + t_cell;
                break;
        }
        out.push_back({plan.phases[ph].name, rc, c.wire.switch_margin * t_sw, 0.0});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Event generation
// ---------------------------------------------------------------------------

namespace {

bool is_column_line(Line l) { return l == Line::WBL || l == Line::RBL || l == Line::BL1 || l == Line::BL2; }

std::string group_label(Access a, int code, int side, Arch arch) {
    std::string s = access_name(a);
    if (code >= 0) s += "_c" + std::to_string(code);
    if (arch == Arch::CC) s += side == 0 ? "_A" : "_B";
    return s;
}

/// Voltage sequence idle -> phases -> idle of one line or cell; emits transitions.
void emit_transitions(const PhasePlan& plan, const std::vector<double>& levels, const std::string& line_class,
                      const std::string& label, double count, double c_line, std::vector<LineEvent>& out) {
    if (count <= 0.0) return;
    double prev = 0.0;
    for (std::size_t i = 0; i <= levels.size(); ++i) {
        double next = i < levels.size() ? levels[i] : 0.0;
        if (next != prev) {
            std::string phase = i < levels.size() ? plan.phases[i].name : "restore";
            out.push_back({phase, line_class, label, count, prev, next, c_line});
        }
        prev = next;
    }
}

std::vector<double> line_levels(const PhasePlan& plan, Line l, Access a, int code) {
    std::vector<double> v;
    for (const auto& ph : plan.phases) v.push_back(ph.volts(l, a, code));
    return v;
}

std::vector<double> cell_levels(const PhasePlan& plan, Access a, int code, int side) {
    std::vector<double> v;
    for (std::size_t ph = 0; ph < plan.phases.size(); ++ph) v.push_back(cell_nodes(plan, ph, a, code, side).v_gb());
    return v;
}

/// Code of each word column (bit columns, or CC cell columns).
std::vector<int> column_codes(Arch arch, const Word& data, int n_columns) {
    std::vector<int> codes(n_columns, -1);
    if (data.empty()) return codes;
    for (int j = 0; j < n_columns; ++j) {
        codes[j] = arch == Arch::CC ? (data[2 * j] << 1) | data[2 * j + 1] : data[j];
    }
    return codes;
}

void class_line_events(const PhasePlan& plan, const ArrayModel& model, const Word& data, EventLog& log) {
    const ArrayConfig& c = model.cfg();
    const ArrayElectrics& el = model.electrics();
    const int bits = el.dims.bits;
    const double n_r = c.n_r;
    const double segs = c.words_per_row();
    const int word_cols = c.n_w / bits;
    const double other_cols = double(c.n_c - c.n_w) / bits;

    std::map<int, int> counts;
    if (data.empty()) {
        counts[-1] = word_cols;
    } else {
        counts = code_counts(c.arch, data);
    }

    for (Line l : plan.lines()) {
        if (is_internal(l)) continue;
        const double cap = el.lines.at(l).c_energy;
        const std::string name = line_name(l);
        auto emit = [&](Access a, int code, double count, const std::string& label) {
            emit_transitions(plan, line_levels(plan, l, a, code), name, label, count, cap, log.lines);
        };
        if (is_column_line(l)) {
            for (const auto& [code, n] : counts) emit(Access::accessed, code, n, "selected" + (code >= 0 ? "_c" + std::to_string(code) : std::string()));
            emit(Access::half_row, -1, other_cols, "unselected");
        } else if (l == Line::GPL) {
            emit(Access::accessed, -1, 1, "selected");
            emit(Access::half_row, -1, segs - 1, "unselected");
        } else if (l == Line::LPL) {
            emit(Access::accessed, -1, 1, "selected");
            emit(Access::half_row, -1, segs - 1, "same_row");
            emit(Access::half_col, -1, n_r - 1, "same_segment");
            emit(Access::unaccessed, -1, (n_r - 1) * (segs - 1), "other");
        } else {  // row lines
            emit(Access::accessed, -1, 1, "selected");
            emit(Access::half_col, -1, n_r - 1, "unselected");
        }
    }

    // PE capacitors, per cell class and data code.
    for (int side = 0; side < plan.sides(); ++side) {
        for (const auto& [code, n] : counts) {
            emit_transitions(plan, cell_levels(plan, Access::accessed, code, side), "PE",
                             group_label(Access::accessed, code, side, c.arch), n, el.c_pe, log.lines);
            emit_transitions(plan, cell_levels(plan, Access::half_col, code, side), "PE",
                             group_label(Access::half_col, code, side, c.arch), n * (n_r - 1), el.c_pe, log.lines);
        }
        emit_transitions(plan, cell_levels(plan, Access::half_row, -1, side), "PE",
                         group_label(Access::half_row, -1, side, c.arch), other_cols, el.c_pe, log.lines);
        emit_transitions(plan, cell_levels(plan, Access::unaccessed, -1, side), "PE",
                         group_label(Access::unaccessed, -1, side, c.arch), other_cols * (n_r - 1), el.c_pe,
                         log.lines);
    }
}

/// Same accounting, enumerating every physical line and cell individually.
void per_cell_line_events(const PhasePlan& plan, const ArrayModel& model, const Address& a, const Word& data,
                          EventLog& log) {
    const ArrayConfig& c = model.cfg();
    const ArrayElectrics& el = model.electrics();
    const int bits = el.dims.bits;
    const int cols = c.n_c / bits;
    const int word_cols = c.n_w / bits;
    const int segs = c.words_per_row();
    const auto codes = column_codes(c.arch, data, word_cols);
    auto in_word = [&](int col) { return col / word_cols == a.word; };
    auto col_code = [&](int col) { return in_word(col) ? codes[col % word_cols] : -1; };

    for (Line l : plan.lines()) {
        if (is_internal(l)) continue;
        const double cap = el.lines.at(l).c_energy;
        const std::string name = line_name(l);
        auto emit = [&](Access acc, int code, const std::string& label) {
            emit_transitions(plan, line_levels(plan, l, acc, code), name, label, 1, cap, log.lines);
        };
        if (is_column_line(l)) {
            for (int col = 0; col < cols; ++col) {
                emit(in_word(col) ? Access::accessed : Access::half_row, col_code(col), "col" + std::to_string(col));
            }
        } else if (l == Line::GPL) {
            for (int s = 0; s < segs; ++s) {
                emit(s == a.word ? Access::accessed : Access::half_row, -1, "seg" + std::to_string(s));
            }
        } else if (l == Line::LPL) {
            for (int r = 0; r < c.n_r; ++r) {
                for (int s = 0; s < segs; ++s) {
                    Access acc = r == a.row ? (s == a.word ? Access::accessed : Access::half_row)
                                            : (s == a.word ? Access::half_col : Access::unaccessed);
                    emit(acc, -1, "r" + std::to_string(r) + "s" + std::to_string(s));
                }
            }
        } else {
            for (int r = 0; r < c.n_r; ++r) {
                emit(r == a.row ? Access::accessed : Access::half_col, -1, "row" + std::to_string(r));
            }
        }
    }
    for (int r = 0; r < c.n_r; ++r) {
        for (int col = 0; col < cols; ++col) {
            bool row_hit = r == a.row, col_hit = in_word(col);
            Access acc = row_hit ? (col_hit ? Access::accessed : Access::half_row)
                                 : (col_hit ? Access::half_col : Access::unaccessed);
            for (int side = 0; side < plan.sides(); ++side) {
                std::string label = "cell_r" + std::to_string(r) + "c" + std::to_string(col) +
                                    (c.arch == Arch::CC ? (side == 0 ? "A" : "B") : "");
                emit_transitions(plan, cell_levels(plan, acc, col_code(col), side), "PE", label, 1, el.c_pe,
                                 log.lines);
            }
        }
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Memory array
// ---------------------------------------------------------------------------

MemoryArray::MemoryArray(ArrayConfig cfg) : model_(std::move(cfg)) {
    p_.assign(static_cast<std::size_t>(model_.cfg().n_r) * model_.cfg().n_c, -model_.p_s());
}

MemoryArray::MemoryArray(ArrayConfig cfg, const std::vector<double>& initial) : model_(std::move(cfg)), p_(initial) {
    if (p_.size() != static_cast<std::size_t>(model_.cfg().n_r) * model_.cfg().n_c) {
        throw std::invalid_argument("initial state size does not match the array");
    }
}

void MemoryArray::check_address(const Address& a) const {
    const auto& c = model_.cfg();
    if (a.row < 0 || a.row >= c.n_r || a.word < 0 || a.word >= c.words_per_row()) {
        throw std::out_of_range("address outside the array");
    }
}

Word MemoryArray::stored_word(const Address& a) const {
    check_address(a);
    const int n_w = model_.cfg().n_w;
    Word w(n_w);
    for (int j = 0; j < n_w; ++j) w[j] = p_[idx(a.row, a.word * n_w + j)] > 0.0 ? 1 : 0;
    return w;
}

std::string MemoryArray::snapshot() const {
    const ArrayConfig& c = model_.cfg();
    std::string out;
    for (int r = 0; r < c.n_r; ++r) {
        for (int w = 0; w < c.words_per_row(); ++w) {
            out += std::to_string(r) + " " + std::to_string(w) + " ";
            for (auto b : stored_word({r, w})) out += b ? '1' : '0';
            out += '\n';
        }
    }
    return out;
}

WriteResult MemoryArray::cached_transient(double p0, const std::vector<double>& levels,
                                          const std::vector<PhaseTiming>& timing) {
    std::vector<double> key = levels;
    for (const auto& t : timing) key.push_back(t.duration());
    auto k = std::make_pair(p0, key);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;

    const WireParams& w = model_.cfg().wire;
    std::vector<double> lv = levels, dur;
    for (const auto& t : timing) dur.push_back(t.duration());
    lv.push_back(0.0);
    dur.push_back(w.t_relax);
    WriteResult r = write_transient(p0, Waveform::steps(lv, dur, w.t_edge), model_.cfg().device);
    cache_.emplace(k, r);
    return r;
}

EventLog MemoryArray::write(const Address& a, const Word& data, bool per_cell) {
    check_address(a);
    const ArrayConfig& c = model_.cfg();
    PhasePlan plan = plan_write(model_, a, data);
    DisturbReport dr = check_disturb(plan, model_);
    if (!dr.pass()) throw DisturbViolation("write plan exceeds the coercive voltage on a non-target cell");

    EventLog log{c.arch, Op::write, {}, {}, phase_timing(plan, model_, data)};
    if (per_cell) {
        per_cell_line_events(plan, model_, a, data, log);
    } else {
        class_line_events(plan, model_, data, log);
    }

    const double ps = model_.p_s();
    const double thr = c.device.integrator.switch_threshold * ps;
    const double e_scale = c.device.geom.t_pe * c.device.geom.a_pe;  // (J/m^3) -> J per cell
    const int bits = model_.electrics().dims.bits;
    const int word_cols = c.n_w / bits;
    const auto codes = column_codes(c.arch, data, word_cols);

    auto record_switch = [&](const std::string& label, double p0, const WriteResult& r) {
        if ((p0 > 0.0) != (r.p_final > 0.0)) {
            log.switching.push_back({label, 1.0, loop_area(r.trace, c.device.geom.t_pe) * e_scale});
        }
    };
    auto settle_accessed = [&](int row, int bitcol, int code, int side) {
        double p0 = p_[idx(row, bitcol)];
        WriteResult r = cached_transient(p0, cell_levels(plan, Access::accessed, code, side), log.timing);
        double dir = target_bit(c.arch, code, side) ? 1.0 : -1.0;
        if (!(dir * r.p_final >= thr)) {
            throw WriteIncomplete("accessed cell did not reach the switched state within the write phases");
        }
        record_switch(group_label(Access::accessed, code, side, c.arch), p0, r);
        p_[idx(row, bitcol)] = r.p_final;
    };
    auto verify_retained = [&](double p0, const WriteResult& r) {
        if ((p0 > 0.0) != (r.p_final > 0.0) || std::abs(r.p_final - p0) > 0.01 * ps) {
            throw DisturbViolation("a non-accessed cell lost its polarization during the write");
        }
    };

    if (!per_cell) {
        for (int j = 0; j < c.n_w; ++j) {
            int side = c.arch == Arch::CC ? j % 2 : 0;
            settle_accessed(a.row, a.word * c.n_w + j, codes[j / bits], side);
        }
        // Representative cells of every other class, in both stored states.
        std::vector<std::pair<Access, int>> groups = {{Access::half_row, -1}, {Access::unaccessed, -1}};
        for (const auto& [code, n] : code_counts(c.arch, data)) groups.push_back({Access::half_col, code});
        for (const auto& [acc, code] : groups) {
            for (int side = 0; side < plan.sides(); ++side) {
                auto lv = cell_levels(plan, acc, code, side);
                if (std::all_of(lv.begin(), lv.end(), [](double v) { return v == 0.0; })) continue;
                for (double s : {1.0, -1.0}) verify_retained(s * ps, cached_transient(s * ps, lv, log.timing));
            }
        }
    } else {
        for (int r = 0; r < c.n_r; ++r) {
            for (int col = 0; col < c.n_c; ++col) {
                int cell_col = col / bits;
                int side = c.arch == Arch::CC ? col % 2 : 0;
                bool row_hit = r == a.row, col_hit = cell_col / word_cols == a.word;
                int code = col_hit ? codes[cell_col % word_cols] : -1;
                if (row_hit && col_hit) {
                    settle_accessed(r, col, code, side);
                    continue;
                }
                Access acc = row_hit ? Access::half_row : (col_hit ? Access::half_col : Access::unaccessed);
                double p0 = p_[idx(r, col)];
                WriteResult res = cached_transient(p0, cell_levels(plan, acc, code, side), log.timing);
                verify_retained(p0, res);
                p_[idx(r, col)] = res.p_final;
            }
        }
    }
    return log;
}

ReadResult MemoryArray::read(const Address& a) const {
    check_address(a);
    const ArrayConfig& c = model_.cfg();
    PhasePlan plan = plan_read(model_, a);
    if (!check_disturb(plan, model_).pass()) throw DisturbViolation("read plan exceeds the coercive voltage");
    const SenseLevels& sense = model_.sense_levels();
    if (sense.ratio() < c.min_sense_ratio) {
        std::ostringstream os;
        os << "worst-case LRS/HRS ratio " << sense.ratio() << " below the minimum " << c.min_sense_ratio;
        throw SenseMarginFailure(os.str());
    }

    ReadResult out;
    out.i_ref = sense.i_ref;
    out.log = EventLog{c.arch, Op::read, {}, {}, phase_timing(plan, model_, {})};
    class_line_events(plan, model_, {}, out.log);

    const double leak = (c.n_r - 1) * model_.sneak_current();
    const int base = a.word * c.n_w;
    if (c.arch == Arch::CC) {
        for (int j = 0; j < c.n_w; j += 2) {
            CcReadResult r = solve_cc_read(p_[idx(a.row, base + j)], p_[idx(a.row, base + j + 1)], model_);
            out.current.push_back(r.i_bl1 + leak);
            out.current.push_back(r.i_bl2 + leak);
            out.cc_case.push_back(r.label);
        }
    } else {
        CellNodes n = cell_nodes(plan, 0, Access::accessed, 0, 0);
        for (int j = 0; j < c.n_w; ++j) {
            double i = read_current(p_[idx(a.row, base + j)], BiasPoint{n.v_g, n.v_b, n.v_d, 0.0}, c.device);
            out.current.push_back(i + leak);
        }
    }
    for (double i : out.current) out.bits.push_back(i > out.i_ref ? 1 : 0);
    return out;
}

std::pair<Word, Word> benchmark_words(int n_w) {
    Word old_word(n_w), new_word(n_w);
    for (int j = 0; j < n_w; ++j) {
        old_word[j] = j % 2;
        new_word[j] = j < n_w / 2 ? 1 : 0;
    }
    return {old_word, new_word};
}

}  // namespace pefet
