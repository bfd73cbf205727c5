#include "pefet/ferroelectric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "pefet/errors.hpp"

namespace pefet {

void LandauParams::validate() const {
    if (!(alpha < 0.0)) throw NoDoubleWell("alpha must be negative for a double-well landscape");
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gamma must be non-negative");
    if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
}

// ---------------------------------------------------------------------------
// Waveform
// ---------------------------------------------------------------------------

void Waveform::validate() const {
    if (t.size() != v.size() || t.empty()) throw std::invalid_argument("waveform needs matching t/v breakpoints");
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) throw std::invalid_argument("waveform times must be strictly increasing");
    }
}

double Waveform::at(double time) const {
    if (time <= t.front()) return v.front();
    if (time >= t.back()) return v.back();
    auto it = std::upper_bound(t.begin(), t.end(), time);
    std::size_t i = static_cast<std::size_t>(it - t.begin());
    double w = (time - t[i - 1]) / (t[i] - t[i - 1]);
    return v[i - 1] + w * (v[i] - v[i - 1]);
}

void Waveform::append(double time, double volts) {
    t.push_back(time);
    v.push_back(volts);
}

Waveform Waveform::steps(const std::vector<double>& levels, const std::vector<double>& durations, double t_edge) {
    if (levels.size() != durations.size() || levels.empty()) throw std::invalid_argument("steps: size mismatch");
    Waveform w;
    double now = 0.0;
    w.append(0.0, 0.0);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!(durations[i] > t_edge)) throw std::invalid_argument("steps: duration shorter than edge");
        w.append(now + t_edge, levels[i]);
        now += durations[i];
        w.append(now, levels[i]);
    }
    return w;
}

Waveform Waveform::square(double volts, double duration, double t_edge) {
    return steps({volts}, {duration}, t_edge);
}

Waveform Waveform::triangle(double amplitude, double period, int cycles) {
    Waveform w;
    for (int c = 0; c < cycles; ++c) {
        double t0 = c * period;
        if (c == 0) w.append(t0, 0.0);
        w.append(t0 + 0.25 * period, amplitude);
        w.append(t0 + 0.75 * period, -amplitude);
        w.append(t0 + period, 0.0);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Statics
// ---------------------------------------------------------------------------

double lk_field(double p, const LandauParams& prm) {
    double p2 = p * p;
    return p * (2.0 * prm.alpha + p2 * (4.0 * prm.beta + 6.0 * prm.gamma * p2));
}

double lk_slope(double p, const LandauParams& prm) {
    double p2 = p * p;
    return 2.0 * prm.alpha + p2 * (12.0 * prm.beta + 30.0 * prm.gamma * p2);
}

double landau_energy(double p, const LandauParams& prm) {
    double p2 = p * p;
    return p2 * (prm.alpha + p2 * (prm.beta + prm.gamma * p2));
}

double spontaneous_polarization(const LandauParams& prm) {
    if (!(prm.alpha < 0.0)) throw NoDoubleWell("alpha >= 0: no spontaneous polarization");
    // 6g x^2 + 4b x + 2a = 0 in x = P^2, written in the cancellation-free form.
    double disc = 16.0 * prm.beta * prm.beta - 48.0 * prm.alpha * prm.gamma;
    double x = -4.0 * prm.alpha / (4.0 * prm.beta + std::sqrt(disc));
    return std::sqrt(x);
}

double coercive_polarization(const LandauParams& prm) {
    if (!(prm.alpha < 0.0)) throw NoDoubleWell("alpha >= 0: no coercive field");
    // dE/dP = 2a + 12b x + 30g x^2 = 0.
    double disc = 144.0 * prm.beta * prm.beta - 240.0 * prm.alpha * prm.gamma;
    double x = -4.0 * prm.alpha / (12.0 * prm.beta + std::sqrt(disc));
    return std::sqrt(x);
}

double coercive_field(const LandauParams& prm) {
    return std::abs(lk_field(coercive_polarization(prm), prm));
}

// ---------------------------------------------------------------------------
// Dynamics: rho dP/dt = E(t) - E_LK(P)
// ---------------------------------------------------------------------------

namespace {

/// One trapezoidal step with a Newton solve for the implicit end point.
bool trapezoid_step(double p, double e0, double e1, double h, const LandauParams& prm, int max_iter,
                    double& out) {
    double k = h / (2.0 * prm.rho);
    double rhs = p + k * (e0 - lk_field(p, prm)) + k * e1;
    double x = p + 2.0 * k * (e0 - lk_field(p, prm));
    double scale = std::max(std::abs(p), 1e-3);
    for (int it = 0; it < max_iter; ++it) {
        double g = x + k * lk_field(x, prm) - rhs;
        double dg = 1.0 + k * lk_slope(x, prm);
        if (!(dg > 0.0)) return false;  // step too long across the spinodal region
        double dx = g / dg;
        x -= dx;
        if (!std::isfinite(x)) return false;
        if (std::abs(dx) <= 1e-15 * scale) {
            out = x;
            return true;
        }
    }
    return false;
}

using SampleSink = std::function<bool(const TraceSample&)>;

/// Adaptive integration over [t0, t1] of the voltage waveform `volts(t)` (applied across t_pe).
/// `breaks` lists times that steps must land on. The sink returns false to stop early.
double integrate(double p0, double t0, double t1, const std::function<double(double)>& volts,
                 const std::vector<double>& breaks, double t_pe, const LandauParams& prm,
                 const IntegratorOptions& opt, const SampleSink& sink) {
    double ps = spontaneous_polarization(prm);
    double p = p0;
    double t = t0;
    double h = std::min(opt.dt_max, 1e-13);
    auto field = [&](double time) { return volts(time) / t_pe; };
    auto sample = [&](double time, double pol) {
        double v = volts(time);
        return TraceSample{time, pol, v, (v / t_pe - lk_field(pol, prm)) / prm.rho};
    };
    if (!sink(sample(t, p))) return p;
    std::size_t next_break = 0;
    int steps = 0;
    while (t < t1) {
        if (++steps > opt.max_steps) throw ConvergenceFailure("LK integration exceeded its step budget");
        while (next_break < breaks.size() && breaks[next_break] <= t + 1e-21) ++next_break;
        double limit = t1;
        if (next_break < breaks.size()) limit = std::min(limit, breaks[next_break]);
        double step = std::min({h, opt.dt_max, limit - t});
        bool landing = (t + step >= limit - 1e-21);
        double e0 = field(t);
        double e1 = field(t + step);
        double em = field(t + 0.5 * step);
        double full = 0.0, half = 0.0, two = 0.0;
        bool ok = trapezoid_step(p, e0, e1, step, prm, opt.newton_iterations, full) &&
                  trapezoid_step(p, e0, em, 0.5 * step, prm, opt.newton_iterations, half) &&
                  trapezoid_step(half, em, e1, 0.5 * step, prm, opt.newton_iterations, two);
        if (!ok) {
            h = 0.25 * step;
            if (h < opt.dt_min) throw ConvergenceFailure("LK Newton solve failed at minimum step");
            continue;
        }
        double err = std::abs(two - full) / 3.0;
        double tol = opt.rtol * std::max(std::abs(two), ps);
        if (err > tol) {
            h = step * std::max(0.2, 0.9 * std::cbrt(tol / err));
            if (h < opt.dt_min) throw ConvergenceFailure("LK error control failed at minimum step");
            continue;
        }
        t = landing ? limit : t + step;
        p = two;
        double grow = err > 0.0 ? std::min(2.0, 0.9 * std::cbrt(tol / err)) : 2.0;
        h = std::max(step * grow, step);
        if (!sink(sample(t, p))) break;
    }
    return p;
}

}  // namespace

PolarizationState step_polarization(const PolarizationState& state, double e_applied, double dt,
                                    const LandauParams& params, const IntegratorOptions& opt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    params.validate();
    double p = integrate(state.p, 0.0, dt, [&](double) { return e_applied; }, {}, 1.0, params, opt,
                         [](const TraceSample&) { return true; });
    return {p, state.t + dt};
}

SwitchingTrace simulate_switching(double p0, const Waveform& waveform, double t_pe, const LandauParams& params,
                                  const IntegratorOptions& opt) {
    waveform.validate();
    params.validate();
    if (!(t_pe > 0.0)) throw std::invalid_argument("t_pe must be positive");
    double ps = spontaneous_polarization(params);
    double ec = coercive_field(params);
    double thr = opt.switch_threshold * ps;

    SwitchingTrace trace;
    std::vector<double> breaks(waveform.t.begin() + 1, waveform.t.end());
    integrate(p0, waveform.t.front(), waveform.t.back(), [&](double tt) { return waveform.at(tt); }, breaks, t_pe,
              params, opt, [&](const TraceSample& s) {
                  if (!trace.samples.empty() && !trace.switch_time) {
                      const TraceSample& prev = trace.samples.back();
                      double e = s.v / t_pe;
                      if (std::abs(e) > ec) {
                          double dir = e > 0.0 ? 1.0 : -1.0;
                          double a = dir * prev.p, b = dir * s.p;
                          if (a < thr && b >= thr) {
                              double w = (thr - a) / (b - a);
                              trace.switch_time = prev.t + w * (s.t - prev.t);
                          }
                      }
                  }
                  trace.samples.push_back(s);
                  return true;
              });
    return trace;
}

double switch_time(double volts, double t_pe, const LandauParams& params, const IntegratorOptions& opt) {
    params.validate();
    double ec = coercive_field(params);
    if (!(std::abs(volts) / t_pe > ec)) return std::numeric_limits<double>::infinity();
    double ps = spontaneous_polarization(params);
    double dir = volts > 0.0 ? 1.0 : -1.0;
    double thr = opt.switch_threshold * ps;
    double result = std::numeric_limits<double>::infinity();
    double prev_t = 0.0, prev_p = -dir * ps;
    // Horizon generous enough for drives a few mV above coercive.
    double horizon = 1e4 * params.rho / (std::abs(params.alpha) * 1.0);
    integrate(-dir * ps, 0.0, horizon, [&](double) { return volts; }, {}, t_pe, params, opt,
              [&](const TraceSample& s) {
                  double a = dir * prev_p, b = dir * s.p;
                  if (s.t > 0.0 && a < thr && b >= thr) {
                      result = prev_t + (thr - a) / (b - a) * (s.t - prev_t);
                      return false;
                  }
                  prev_t = s.t;
                  prev_p = s.p;
                  return true;
              });
    return result;
}

double calibrate_rho(double volts, double target_time, double t_pe, LandauParams params,
                     const IntegratorOptions& opt) {
    if (!(target_time > 0.0)) throw std::invalid_argument("target switching time must be positive");
    // Switching time is proportional to rho; two passes absorb integrator tolerance effects.
    for (int pass = 0; pass < 3; ++pass) {
        double ts = switch_time(volts, t_pe, params, opt);
        if (!std::isfinite(ts)) throw FitFailure("calibration voltage does not exceed the coercive voltage");
        params.rho *= target_time / ts;
    }
    return params.rho;
}

double loop_area(const SwitchingTrace& trace, double t_pe) {
    double area = 0.0;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        const auto& a = trace.samples[i - 1];
        const auto& b = trace.samples[i];
        area += 0.5 * (a.v + b.v) / t_pe * (b.p - a.p);
    }
    return area;
}

}  // namespace pefet
