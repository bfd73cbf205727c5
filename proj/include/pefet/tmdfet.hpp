#pragma once

#include <string>
#include <vector>

namespace pefet {

namespace phys {
inline constexpr double eps0 = 8.8541878128e-12;
inline constexpr double k_b = 1.380649e-23;
inline constexpr double q_e = 1.602176634e-19;
}  // namespace phys

/// Monolayer MoS2 FET compact-model parameters (SI units; energies in eV).
struct FetParams {
    double mu = 90e-4;      // m^2/V/s
    double r_c = 200e-6;    // Ohm*m per contact edge
    double e_g0 = 1.5;      // eV
    double t_tox = 3e-9;
    double eps_ox = 3.9 * phys::eps0;
    double w = 30e-9;
    double l = 20e-9;
    double v_t0 = 0.2723;
    double n_id = 1.0;
    double band_split = 0.5;  // fraction of dE_G that moves the threshold
    double temp = 300.0;

    double c_ox() const { return eps_ox / t_tox; }
    double v_th() const { return phys::k_b * temp / phys::q_e; }
    void validate() const;
};

/// Ratio anchor: I(de_num) / I(de_den) at (v_gs, v_ds) should equal `target` within `tolerance`.
struct FetAnchor {
    std::string name;
    double de_num;
    double de_den;
    double v_gs;
    double v_ds;
    double target;
    double tolerance;  // relative
};

struct FetFitOptions {
    bool fit_n_id = true;
    bool fit_band_split = true;
    double v_t0_guess = 0.30;
    double n_id_guess = 1.5;
    double band_split_guess = 0.5;
};

struct FetFit {
    FetParams params;
    std::vector<double> ratios;      // achieved ratio per anchor
    std::vector<double> rel_errors;  // ratio / target - 1
    double residual_norm;            // L2 norm of log residuals
    int independent_anchors;
};

double threshold_shift(double delta_eg, double band_split = 0.5);
double sheet_charge(double v_gs, double v_t, const FetParams& p);
/// Drain current without contact resistance (v_ds >= 0).
double intrinsic_current(double v_gs, double v_ds, double delta_eg, const FetParams& p);
/// Full model with series contacts; reverse v_ds handled by swapping source and drain.
double drain_current(double v_gs, double v_ds, double delta_eg, const FetParams& p);
/// Small-signal on-resistance at v_ds -> 0, contacts included.
double on_resistance(double v_gs, const FetParams& p, double delta_eg = 0.0);

FetFit calibrate_fet(const std::vector<FetAnchor>& anchors, const FetParams& start, const FetFitOptions& opt = {});

}  // namespace pefet
