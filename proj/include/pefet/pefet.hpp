#pragma once

#include <optional>
#include <vector>

#include "pefet/ferroelectric.hpp"
#include "pefet/tmdfet.hpp"
#include "pefet/transduction.hpp"

namespace pefet {

struct PeFetConfig {
    LandauParams landau;
    PiezoParams piezo;
    DeviceGeometry geom;
    FetParams fet;
    double v_r = 0.35;
    double v_dd = 0.7;
    double read_margin = 0.1;  // hard read-disturb margin below V_C
    IntegratorOptions integrator;

    double v_c() const { return coercive_field(landau) * geom.t_pe; }
    double p_s() const { return spontaneous_polarization(landau); }
    double kappa() const { return compute_kappa(geom); }
    PeFetConfig with_kappa(double kappa) const;
    void validate() const;
};

struct BiasPoint {
    double v_g = 0.0;
    double v_b = 0.0;
    double v_d = 0.0;
    double v_s = 0.0;
};

struct WriteResult {
    double p_final;
    SwitchingTrace trace;
    double q_switched;  // |p_final - p0|, C/m^2
};

/// Bandgap shift seen by the channel for stored polarization p and PE voltage v_gb.
double stored_delta_eg(double p, double v_gb, const PeFetConfig& cfg);

double read_current(double p, const BiasPoint& bias, const PeFetConfig& cfg);
WriteResult write_transient(double p0, const Waveform& v_gb, const PeFetConfig& cfg);
double device_distinguishability(const PeFetConfig& cfg);

struct IvRow {
    double v_gs, i_lrs, i_hrs, i_baseline;
};
std::vector<IvRow> iv_sweep(const PeFetConfig& cfg, double v_from, double v_to, int points);

// ---------------------------------------------------------------------------
// Device calibration (viscosity, transduction chain, FET anchors)
// ---------------------------------------------------------------------------

struct DistinguishabilityAnchor {
    double kappa;
    double target;
    double tolerance;
};

struct DeviceCalibrationInputs {
    PeFetConfig base;
    std::optional<double> rho;  // fitted when absent
    double rho_target_time = 1e-9;
    double rho_target_voltage = 0.7;

    bool fit_transduction = true;
    TransductionAnchors transduction;

    bool fit_fet = true;
    FetFitOptions fet_options;
    double lrs_ratio = 2.3;
    double lrs_tolerance = 0.10;
    double hrs_ratio = 3.4;
    double hrs_tolerance = 0.10;
    std::vector<DistinguishabilityAnchor> distinguishability = {
        {0.04, 8.0, 0.20}, {0.03, 11.0, 0.25}, {0.07, 3.0, 0.25}};
};

struct DeviceCalibration {
    PeFetConfig cfg;
    bool rho_fitted = false;
    std::optional<TransductionFit> transduction;
    std::vector<FetAnchor> fet_anchors;
    std::optional<FetFit> fet;
};

/// Anchors of the joint FET fit, with bandgap shifts from the (already fitted) transduction chain.
std::vector<FetAnchor> device_fet_anchors(const DeviceCalibrationInputs& in, const PeFetConfig& cfg);
DeviceCalibration calibrate_device(const DeviceCalibrationInputs& in);

}  // namespace pefet
