#include "pefet/transduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pefet/errors.hpp"

namespace pefet {

namespace {
constexpr double kCalibratedKappaMin = 0.03;
constexpr double kCalibratedKappaMax = 0.07;
}  // namespace

void DeviceGeometry::validate() const {
    for (double d : {f, w_tmd, l_g, l_pe, a_pe, t_pe, t_nail, t_tox, t_tmd, lambda}) {
        if (!(d > 0.0)) throw GeometryError("all device dimensions must be positive");
    }
    if (a_pe < a_tmd() * (1.0 - 1e-12)) throw GeometryError("PE area smaller than the TMD channel area");
}

DeviceGeometry DeviceGeometry::with_kappa(double kappa) const {
    if (!(kappa > 0.0 && kappa <= 1.0)) throw GeometryError("kappa must lie in (0, 1]");
    DeviceGeometry g = *this;
    g.a_pe = a_tmd() / kappa;
    return g;
}

void PiezoParams::validate() const {
    if (!(d33 > 0.0)) throw std::invalid_argument("d33 must be positive");
    if (!(boost_b0 > 0.0)) throw std::invalid_argument("boost_b0 must be positive");
    if (!(boost_q > 0.0 && boost_q <= 1.0)) throw std::invalid_argument("boost_q must lie in (0, 1]");
    if (!(a_bg >= 0.0)) throw std::invalid_argument("a_bg must be non-negative");
    if (!(y_eff > 0.0)) throw std::invalid_argument("y_eff must be positive");
}

double compute_kappa(const DeviceGeometry& geom) {
    geom.validate();
    return geom.a_tmd() / geom.a_pe;
}

double boost(double kappa, const PiezoParams& piezo) { return piezo.boost_b0 * std::pow(kappa, -piezo.boost_q); }

double pe_stress(double p_norm, double v_gb, const DeviceGeometry& geom, const PiezoParams& piezo) {
    if (std::abs(p_norm) > 1.0 + 1e-12) throw std::invalid_argument("|p_norm| must not exceed 1");
    if (piezo.clamp_v_gb) v_gb = std::clamp(v_gb, -piezo.v_clamp, piezo.v_clamp);
    return piezo.y_eff * piezo.d33 * (v_gb / geom.t_pe) * p_norm;
}

double tmd_stress(double sigma_pe, double kappa, const PiezoParams& piezo) {
    if (!(kappa >= 0.02 && kappa <= 1.0)) throw std::invalid_argument("kappa outside the supported range [0.02, 1]");
    if (kappa < kCalibratedKappaMin * (1.0 - 1e-9) || kappa > kCalibratedKappaMax * (1.0 + 1e-9)) {
        std::ostringstream os;
        os << "OutOfCalibrationRange: kappa = " << kappa << " outside [0.03, 0.07]";
        warn(os.str());
    }
    return boost(kappa, piezo) * sigma_pe;
}

double bandgap_shift(double sigma_tmd, const PiezoParams& piezo) { return -piezo.a_bg * sigma_tmd; }

double chain_delta_eg(double p_norm, double v_gb, const DeviceGeometry& geom, const PiezoParams& piezo) {
    double kappa = compute_kappa(geom);
    return bandgap_shift(tmd_stress(pe_stress(p_norm, v_gb, geom, piezo), kappa, piezo), piezo);
}

TransductionFit fit_transduction(const TransductionAnchors& a, const DeviceGeometry& geom, double d33) {
    if (!(a.kappa_lo < a.kappa_hi) || !(a.ratio_lo_hi > 1.0) || !(a.boost_ref > 0.0)) {
        throw FitFailure("transduction anchors do not define a decreasing power law");
    }
    TransductionFit fit{};
    // Two anchors, two unknowns: the power law is solved exactly.
    fit.boost_q = std::log(a.ratio_lo_hi) / std::log(a.kappa_hi / a.kappa_lo);
    fit.boost_b0 = a.boost_ref * std::pow(a.kappa_ref, fit.boost_q);
    double b_ref = fit.boost_b0 * std::pow(a.kappa_ref, -fit.boost_q);
    double strain = d33 * a.v_gb_ref / geom.t_pe;
    fit.y_eff = a.sigma_tmd_ref / (b_ref * strain);
    fit.a_bg = -a.delta_eg_ref / a.sigma_tmd_ref;
    fit.residual_boost = b_ref / a.boost_ref - 1.0;
    double ratio = std::pow(a.kappa_lo / a.kappa_hi, -fit.boost_q);
    fit.residual_ratio = ratio / a.ratio_lo_hi - 1.0;
    if (!(fit.boost_q > 0.0 && fit.boost_q <= 1.0) || !(fit.a_bg >= 0.0) || !(fit.y_eff > 0.0)) {
        throw FitFailure("transduction fit produced parameters outside their valid ranges");
    }
    return fit;
}

}  // namespace pefet
