#include "pefet/tmdfet.hpp"

#include <ceres/ceres.h>

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <stdexcept>

#include "pefet/errors.hpp"

namespace pefet {

void FetParams::validate() const {
    if (!(mu > 0.0 && w > 0.0 && l > 0.0)) throw std::invalid_argument("mu, w and l must be positive");
    if (!(r_c >= 0.0)) throw std::invalid_argument("r_c must be non-negative");
    if (!(n_id >= 1.0 && n_id <= 2.0)) throw std::invalid_argument("n_id must lie in [1, 2]");
    if (!(band_split >= 0.0 && band_split <= 1.0)) throw std::invalid_argument("band_split must lie in [0, 1]");
    if (!(t_tox > 0.0 && eps_ox > 0.0 && temp > 0.0)) throw std::invalid_argument("oxide and temperature must be positive");
}

double threshold_shift(double delta_eg, double band_split) { return band_split * delta_eg; }

namespace {

double softplus(double x) { return x > 30.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }
double sigmoid(double x) { return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x)); }

double threshold(double delta_eg, const FetParams& p) { return p.v_t0 + threshold_shift(delta_eg, p.band_split); }

}  // namespace

double sheet_charge(double v_gs, double v_t, const FetParams& p) {
    double nvt = p.n_id * p.v_th();
    return p.c_ox() * nvt * softplus((v_gs - v_t) / nvt);
}

double intrinsic_current(double v_gs, double v_ds, double delta_eg, const FetParams& p) {
    double vt = threshold(delta_eg, p);
    double qs = sheet_charge(v_gs, vt, p);
    double qd = sheet_charge(v_gs - v_ds, vt, p);
    double nvt = p.n_id * p.v_th();
    return p.mu * (p.w / p.l) * ((qs * qs - qd * qd) / (2.0 * p.c_ox()) + nvt * (qs - qd));
}

double drain_current(double v_gs, double v_ds, double delta_eg, const FetParams& p) {
    if (v_ds < 0.0) return -drain_current(v_gs - v_ds, -v_ds, delta_eg, p);
    if (v_ds == 0.0) return 0.0;
    double i_max = intrinsic_current(v_gs, v_ds, delta_eg, p);
    if (p.r_c == 0.0 || i_max == 0.0) return i_max;
    double rs = p.r_c / p.w;
    auto f = [&](double i) { return i - intrinsic_current(v_gs - i * rs, v_ds - 2.0 * i * rs, delta_eg, p); };
    std::uintmax_t iters = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, i_max, -i_max, f(i_max),
                                                      boost::math::tools::eps_tolerance<double>(48), iters);
    if (iters >= 200) throw ConvergenceFailure("series-resistance solve did not converge");
    return 0.5 * (lo + hi);
}

double on_resistance(double v_gs, const FetParams& p, double delta_eg) {
    double vt = threshold(delta_eg, p);
    double nvt = p.n_id * p.v_th();
    double q = sheet_charge(v_gs, vt, p);
    // dI/dV_ds at V_ds = 0 of the charge-sheet expression.
    double g = p.mu * (p.w / p.l) * sigmoid((v_gs - vt) / nvt) * (q + p.c_ox() * nvt);
    return 1.0 / g + 2.0 * p.r_c / p.w;
}

// ---------------------------------------------------------------------------
// Calibration
// ---------------------------------------------------------------------------

namespace {

double anchor_ratio(const FetAnchor& a, const FetParams& p) {
    return drain_current(a.v_gs, a.v_ds, a.de_num, p) / drain_current(a.v_gs, a.v_ds, a.de_den, p);
}

struct LogRatioResiduals {
    const std::vector<FetAnchor>* anchors;
    FetParams base;

    bool operator()(double const* const* x, double* residual) const {
        FetParams p = base;
        p.v_t0 = x[0][0];
        p.n_id = x[1][0];
        p.band_split = x[2][0];
        for (std::size_t i = 0; i < anchors->size(); ++i) {
            const FetAnchor& a = (*anchors)[i];
            double r = anchor_ratio(a, p);
            if (!(r > 0.0) || !std::isfinite(r)) return false;
            residual[i] = std::log(r / a.target);
        }
        return true;
    }
};

}  // namespace

FetFit calibrate_fet(const std::vector<FetAnchor>& anchors, const FetParams& start, const FetFitOptions& opt) {
    start.validate();
    int independent = 0;
    for (const auto& a : anchors) {
        if (!(a.target > 0.0)) throw FitFailure("anchor '" + a.name + "' has a non-positive target ratio");
        if (a.de_num != a.de_den) ++independent;
    }
    if (independent < 2) throw FitFailure("FET calibration needs at least two independent anchors");

    double x[3] = {opt.v_t0_guess, opt.fit_n_id ? opt.n_id_guess : start.n_id,
                   opt.fit_band_split ? opt.band_split_guess : start.band_split};

    auto* cost = new ceres::DynamicNumericDiffCostFunction<LogRatioResiduals, ceres::CENTRAL>(
        new LogRatioResiduals{&anchors, start});
    for (int k = 0; k < 3; ++k) cost->AddParameterBlock(1);
    cost->SetNumResiduals(static_cast<int>(anchors.size()));

    ceres::Problem problem;
    problem.AddResidualBlock(cost, nullptr, &x[0], &x[1], &x[2]);
    problem.SetParameterLowerBound(&x[1], 0, 1.0);
    problem.SetParameterUpperBound(&x[1], 0, 2.0);
    problem.SetParameterLowerBound(&x[2], 0, 0.0);
    problem.SetParameterUpperBound(&x[2], 0, 1.0);
    if (!opt.fit_n_id) problem.SetParameterBlockConstant(&x[1]);
    if (!opt.fit_band_split) problem.SetParameterBlockConstant(&x[2]);

    ceres::Solver::Options so;
    so.linear_solver_type = ceres::DENSE_QR;
    so.max_num_iterations = 500;
    so.function_tolerance = 1e-15;
    so.gradient_tolerance = 1e-15;
    so.parameter_tolerance = 1e-13;
    so.num_threads = 1;
    so.logging_type = ceres::SILENT;
    ceres::Solver::Summary summary;
    ceres::Solve(so, &problem, &summary);
    if (summary.termination_type == ceres::FAILURE) {
        throw FitFailure("FET calibration solver failed: " + summary.message);
    }

    FetFit fit;
    fit.params = start;
    fit.params.v_t0 = x[0];
    fit.params.n_id = x[1];
    fit.params.band_split = x[2];
    fit.independent_anchors = independent;
    double norm2 = 0.0;
    std::string worst;
    for (const auto& a : anchors) {
        double r = anchor_ratio(a, fit.params);
        fit.ratios.push_back(r);
        double e = r / a.target - 1.0;
        fit.rel_errors.push_back(e);
        norm2 += std::pow(std::log(r / a.target), 2);
        if (std::abs(e) > a.tolerance && worst.empty()) {
            worst = "anchor '" + a.name + "' reached " + std::to_string(r) + " vs target " + std::to_string(a.target);
        }
    }
    fit.residual_norm = std::sqrt(norm2);
    if (!worst.empty()) throw FitFailure("FET calibration outside tolerance: " + worst);
    return fit;
}

}  // namespace pefet
