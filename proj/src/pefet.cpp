#include "pefet/pefet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pefet/errors.hpp"

namespace pefet {

PeFetConfig PeFetConfig::with_kappa(double kappa) const {
    PeFetConfig c = *this;
    c.geom = geom.with_kappa(kappa);
    return c;
}

void PeFetConfig::validate() const {
    landau.validate();
    piezo.validate();
    geom.validate();
    fet.validate();
    double vc = v_c();
    if (!(v_r < vc - read_margin)) throw std::invalid_argument("read voltage leaves less than the read margin below V_C");
    if (!(v_dd > vc)) throw std::invalid_argument("V_DD does not exceed V_C; writes cannot switch");
}

double stored_delta_eg(double p, double v_gb, const PeFetConfig& cfg) {
    double p_norm = std::clamp(p / cfg.p_s(), -1.0, 1.0);
    return chain_delta_eg(p_norm, v_gb, cfg.geom, cfg.piezo);
}

double read_current(double p, const BiasPoint& bias, const PeFetConfig& cfg) {
    double v_gb = bias.v_g - bias.v_b;
    double margin = cfg.v_c() - std::abs(v_gb);
    if (margin <= cfg.read_margin) {
        std::ostringstream os;
        os << "|V_GB| = " << std::abs(v_gb) << " V is within " << cfg.read_margin << " V of V_C = " << cfg.v_c();
        throw ReadDisturbRisk(os.str());
    }
    if (margin < 2.0 * cfg.read_margin) {
        std::ostringstream os;
        os << "read-disturb margin " << margin << " V is below " << 2.0 * cfg.read_margin << " V";
        warn(os.str());
    }
    double de = stored_delta_eg(p, v_gb, cfg);
    return drain_current(bias.v_g - bias.v_s, bias.v_d - bias.v_s, de, cfg.fet);
}

WriteResult write_transient(double p0, const Waveform& v_gb, const PeFetConfig& cfg) {
    WriteResult r;
    r.trace = simulate_switching(p0, v_gb, cfg.geom.t_pe, cfg.landau, cfg.integrator);
    r.p_final = r.trace.final_p();
    r.q_switched = std::abs(r.p_final - p0);
    return r;
}

double device_distinguishability(const PeFetConfig& cfg) {
    BiasPoint b{cfg.v_r, 0.0, cfg.v_dd, 0.0};
    double ps = cfg.p_s();
    return read_current(ps, b, cfg) / read_current(-ps, b, cfg);
}

std::vector<IvRow> iv_sweep(const PeFetConfig& cfg, double v_from, double v_to, int points) {
    if (points < 2) throw std::invalid_argument("iv sweep needs at least two points");
    std::vector<IvRow> rows;
    double ps = cfg.p_s();
    for (int i = 0; i < points; ++i) {
        double v = v_from + (v_to - v_from) * i / (points - 1);
        BiasPoint b{v, 0.0, cfg.v_dd, 0.0};
        rows.push_back({v, read_current(ps, b, cfg), read_current(-ps, b, cfg), read_current(0.0, b, cfg)});
    }
    return rows;
}

std::vector<FetAnchor> device_fet_anchors(const DeviceCalibrationInputs& in, const PeFetConfig& cfg) {
    const double de = std::abs(in.transduction.delta_eg_ref);
    const double vgs = cfg.v_r;
    const double vds = cfg.v_dd;
    std::vector<FetAnchor> anchors;
    anchors.push_back({"lrs_boost", -de, 0.0, vgs, vds, in.lrs_ratio, in.lrs_tolerance});
    anchors.push_back({"hrs_suppression", 0.0, +de, vgs, vds, in.hrs_ratio, in.hrs_tolerance});
    for (const auto& d : in.distinguishability) {
        PeFetConfig ck = cfg.with_kappa(d.kappa);
        double de_lrs = chain_delta_eg(+1.0, cfg.v_r, ck.geom, ck.piezo);
        double de_hrs = chain_delta_eg(-1.0, cfg.v_r, ck.geom, ck.piezo);
        std::ostringstream name;
        name << "distinguishability_k" << d.kappa;
        anchors.push_back({name.str(), de_lrs, de_hrs, vgs, vds, d.target, d.tolerance});
    }
    return anchors;
}

DeviceCalibration calibrate_device(const DeviceCalibrationInputs& in) {
    DeviceCalibration out;
    out.cfg = in.base;
    PeFetConfig& cfg = out.cfg;
    if (in.rho) {
        cfg.landau.rho = *in.rho;
    } else {
        cfg.landau.rho = calibrate_rho(in.rho_target_voltage, in.rho_target_time, cfg.geom.t_pe, cfg.landau,
                                       cfg.integrator);
        out.rho_fitted = true;
    }
    if (in.fit_transduction) {
        TransductionFit t = fit_transduction(in.transduction, cfg.geom, cfg.piezo.d33);
        cfg.piezo.boost_b0 = t.boost_b0;
        cfg.piezo.boost_q = t.boost_q;
        cfg.piezo.y_eff = t.y_eff;
        cfg.piezo.a_bg = t.a_bg;
        out.transduction = t;
    }
    out.fet_anchors = device_fet_anchors(in, cfg);
    if (in.fit_fet) {
        FetFit f = calibrate_fet(out.fet_anchors, cfg.fet, in.fet_options);
        cfg.fet = f.params;
        out.fet = f;
    }
    cfg.validate();
    return out;
}

}  // namespace pefet
