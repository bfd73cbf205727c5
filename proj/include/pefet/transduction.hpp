#pragma once

namespace pefet {

/// Physical dimensions of one PeFET (SI units).
struct DeviceGeometry {
    double f = 20e-9;
    double w_tmd = 30e-9;
    double l_g = 20e-9;
    double l_pe = 114.4e-9;  // fixed PE length; w_pe follows from a_pe
    double a_pe = 15000e-18;
    double t_pe = 600e-9;
    double t_nail = 10e-9;
    double t_tox = 3e-9;
    double t_tmd = 0.65e-9;
    double lambda = 10e-9;

    double a_tmd() const { return l_g * w_tmd; }
    double w_pe() const { return a_pe / l_pe; }
    void validate() const;
    /// Copy with the PE area chosen so that compute_kappa() == kappa.
    DeviceGeometry with_kappa(double kappa) const;
};

struct PiezoParams {
    double d33 = 650e-12;   // m/V
    double d31 = -320e-12;  // m/V (housed, unused by the lumped model)
    double y_eff = 1.4066e11;  // Pa
    double boost_b0 = 1.342;
    double boost_q = 0.6805;
    double a_bg = 7.96875e-11;  // eV/Pa
    bool clamp_v_gb = false;
    double v_clamp = 0.7;

    void validate() const;
};

/// Quantities the lumped chain is fitted to.
struct TransductionAnchors {
    double kappa_ref = 0.04;
    double boost_ref = 12.0;
    double kappa_lo = 0.03;
    double kappa_hi = 0.07;
    double ratio_lo_hi = 1.78;  // B(kappa_lo) / B(kappa_hi)
    double v_gb_ref = 0.35;
    double sigma_tmd_ref = 0.64e9;  // Pa at +P, v_gb_ref, kappa_ref
    double delta_eg_ref = -0.051;   // eV at the same point
};

struct TransductionFit {
    double boost_b0;
    double boost_q;
    double y_eff;
    double a_bg;
    double residual_boost;  // relative error of B(kappa_ref)
    double residual_ratio;  // relative error of B(lo)/B(hi)
};

double compute_kappa(const DeviceGeometry& geom);
double boost(double kappa, const PiezoParams& piezo);
double pe_stress(double p_norm, double v_gb, const DeviceGeometry& geom, const PiezoParams& piezo);
double tmd_stress(double sigma_pe, double kappa, const PiezoParams& piezo);
double bandgap_shift(double sigma_tmd, const PiezoParams& piezo);

/// Stored state + PE voltage -> bandgap shift (eV), the full lumped chain.
double chain_delta_eg(double p_norm, double v_gb, const DeviceGeometry& geom, const PiezoParams& piezo);

/// Fit b0, q of B(kappa) = b0 kappa^-q, then y_eff and a_bg, to the anchors.
TransductionFit fit_transduction(const TransductionAnchors& anchors, const DeviceGeometry& geom, double d33);

}  // namespace pefet
