#pragma once

#include <optional>
#include <vector>

namespace pefet {

/// Landau coefficients of the PZT-5H free energy U = aP^2 + bP^4 + gP^6
/// plus the kinetic viscosity rho of the LK equation.
struct LandauParams {
    double alpha = -3.95e6;  // m/F
    double beta = 1.26e6;    // m^5/F/C^2
    double gamma = 3.21e8;   // m^9/F/C^4
    double rho = 1.0e-3;     // Ohm*m

    void validate() const;
};

struct PolarizationState {
    double p = 0.0;  // C/m^2
    double t = 0.0;  // s
};

struct TraceSample {
    double t;
    double p;
    double v;
    double i_pol;  // dP/dt, A/m^2
};

struct SwitchingTrace {
    std::vector<TraceSample> samples;
    std::optional<double> switch_time;

    double final_p() const { return samples.back().p; }
};

/// Piecewise-linear voltage waveform given by (t, v) breakpoints.
struct Waveform {
    std::vector<double> t;
    std::vector<double> v;

    void validate() const;
    double at(double time) const;
    double t_end() const { return t.back(); }

    void append(double time, double volts);
    /// Stepped drive: each level is held for its duration; edges take `t_edge`.
    static Waveform steps(const std::vector<double>& levels, const std::vector<double>& durations,
                          double t_edge = 1e-12);
    static Waveform square(double volts, double duration, double t_edge = 1e-12);
    static Waveform triangle(double amplitude, double period, int cycles = 1);
};

struct IntegratorOptions {
    double rtol = 1e-8;
    double dt_max = 5e-12;
    double dt_min = 1e-20;
    int newton_iterations = 50;
    int max_steps = 5'000'000;
    double switch_threshold = 0.9;  // fraction of P_s counted as switched
};

double lk_field(double p, const LandauParams& params);
/// dE/dP of the static LK relation.
double lk_slope(double p, const LandauParams& params);
double landau_energy(double p, const LandauParams& params);

double spontaneous_polarization(const LandauParams& params);
/// Polarization at which the static branch reaches its extremum (|E| = E_c).
double coercive_polarization(const LandauParams& params);
double coercive_field(const LandauParams& params);

/// Advance p by `dt` under a constant applied field (adaptive trapezoidal sub-steps).
PolarizationState step_polarization(const PolarizationState& state, double e_applied, double dt,
                                    const LandauParams& params, const IntegratorOptions& opt = {});

SwitchingTrace simulate_switching(double p0, const Waveform& waveform, double t_pe,
                                  const LandauParams& params, const IntegratorOptions& opt = {});

/// Time for a constant step of `volts` across `t_pe` to take -P_s past the switch threshold.
/// Returns +inf when the drive does not exceed the coercive field.
double switch_time(double volts, double t_pe, const LandauParams& params,
                   const IntegratorOptions& opt = {});

/// Viscosity that makes a `volts` step switch in exactly `target_time`.
double calibrate_rho(double volts, double target_time, double t_pe, LandauParams params,
                     const IntegratorOptions& opt = {});

/// Loop integral of E dP (J/m^3) along a trace.
double loop_area(const SwitchingTrace& trace, double t_pe);

}  // namespace pefet
