#include <boost/math/tools/minima.hpp>
#include <cmath>

#include "doctest.h"
#include "pefet/errors.hpp"
#include "pefet/ferroelectric.hpp"

using namespace pefet;

namespace {

/// Explicit Euler on rho dP/dt = E - E_LK(P) with a fixed tiny step: a slow but independent reference.
double euler_reference(double p0, double volts, double t_pe, double t_end, const LandauParams& prm, int n) {
    double h = t_end / n, p = p0;
    for (int i = 0; i < n; ++i) p += h / prm.rho * (volts / t_pe - lk_field(p, prm));
    return p;
}

}  // namespace

TEST_CASE("spontaneous polarization matches brute-force energy minimization") {
    LandauParams prm;
    auto [p_min, u_min] = boost::math::tools::brent_find_minima(
        [&](double p) { return landau_energy(p, prm); }, 0.01, 1.0, std::numeric_limits<double>::digits);
    (void)u_min;
    CHECK(spontaneous_polarization(prm) == doctest::Approx(p_min).epsilon(1e-6));
    CHECK(spontaneous_polarization(prm) == doctest::Approx(0.2505).epsilon(1e-3));
    CHECK(lk_field(spontaneous_polarization(prm), prm) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("coercive field matches a dense grid scan of the static branch") {
    LandauParams prm;
    double ps = spontaneous_polarization(prm);
    double best = 0.0;
    const int n = 1'000'000;
    for (int i = 0; i <= n; ++i) best = std::max(best, -lk_field(ps * i / n, prm));
    CHECK(coercive_field(prm) == doctest::Approx(best).epsilon(1e-6));
    double vc = coercive_field(prm) * 600e-9;
    CHECK(vc == doctest::Approx(0.6).epsilon(0.10));
    CHECK(vc == doctest::Approx(0.627).epsilon(0.01));
}

TEST_CASE("a non-negative alpha has no double well") {
    LandauParams prm;
    prm.alpha = 1e6;
    CHECK_THROWS_AS(spontaneous_polarization(prm), NoDoubleWell);
    CHECK_THROWS_AS(coercive_field(prm), NoDoubleWell);
    CHECK_THROWS_AS(prm.validate(), NoDoubleWell);
}

TEST_CASE("integrator agrees with an explicit Euler reference") {
    LandauParams prm;
    prm.rho = 1e-3;
    double ps = spontaneous_polarization(prm);
    for (double volts : {0.5, 0.7, 0.9}) {
        auto tr = simulate_switching(-ps, Waveform::square(volts, 2e-9), 600e-9, prm);
        double ref = euler_reference(-ps, volts, 600e-9, tr.samples.back().t, prm, 400'000);
        CAPTURE(volts);
        CHECK(tr.final_p() == doctest::Approx(ref).epsilon(1e-3));
    }
}

TEST_CASE("switching is odd-symmetric in state and drive") {
    LandauParams prm;
    double ps = spontaneous_polarization(prm);
    auto w = Waveform::steps({0.7, -0.3, 0.2}, {1e-9, 0.5e-9, 0.5e-9});
    Waveform neg = w;
    for (auto& v : neg.v) v = -v;
    auto a = simulate_switching(-ps, w, 600e-9, prm);
    auto b = simulate_switching(ps, neg, 600e-9, prm);
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(a.samples[i].p == doctest::Approx(-b.samples[i].p).epsilon(1e-12));
    REQUIRE(a.switch_time);
    REQUIRE(b.switch_time);
    CHECK(*a.switch_time == doctest::Approx(*b.switch_time).epsilon(1e-12));
}

TEST_CASE("switching time is stable under step refinement") {
    LandauParams prm;
    IntegratorOptions coarse, fine;
    fine.dt_max = coarse.dt_max / 10;
    fine.rtol = coarse.rtol / 100;
    double t1 = switch_time(0.7, 600e-9, prm, coarse);
    double t2 = switch_time(0.7, 600e-9, prm, fine);
    CHECK(t1 == doctest::Approx(t2).epsilon(1e-3));
}

TEST_CASE("sub-coercive drive does not switch; supra-coercive does") {
    LandauParams prm;
    double vc = coercive_field(prm) * 600e-9;
    CHECK(std::isinf(switch_time(0.98 * vc, 600e-9, prm)));
    CHECK(std::isfinite(switch_time(1.02 * vc, 600e-9, prm)));
    double ps = spontaneous_polarization(prm);
    auto tr = simulate_switching(-ps, Waveform::square(0.95 * vc, 5e-9), 600e-9, prm);
    CHECK(tr.final_p() < 0.0);
    CHECK_FALSE(tr.switch_time);
}

TEST_CASE("switching time falls with drive voltage and scales with rho") {
    LandauParams prm;
    double prev = std::numeric_limits<double>::infinity();
    for (double v : {0.65, 0.7, 0.8, 1.0}) {
        double t = switch_time(v, 600e-9, prm);
        CHECK(t < prev);
        prev = t;
    }
    LandauParams slow = prm;
    slow.rho *= 2;
    CHECK(switch_time(0.7, 600e-9, slow) == doctest::Approx(2 * switch_time(0.7, 600e-9, prm)).epsilon(1e-3));
}

TEST_CASE("rho calibration hits its target switching time") {
    LandauParams prm;
    prm.rho = calibrate_rho(0.7, 1e-9, 600e-9, prm);
    CHECK(switch_time(0.7, 600e-9, prm) == doctest::Approx(1e-9).epsilon(1e-4));
    CHECK_THROWS_AS(calibrate_rho(0.3, 1e-9, 600e-9, prm), FitFailure);
}

TEST_CASE("hysteresis loop area is positive and converges under refinement") {
    LandauParams prm;
    prm.rho = 1e-4;
    double ps = spontaneous_polarization(prm);
    auto w = Waveform::triangle(1.0, 40e-9, 2);
    IntegratorOptions coarse, fine;
    fine.dt_max = coarse.dt_max / 4;
    fine.rtol = coarse.rtol / 10;
    auto a = simulate_switching(-ps, w, 600e-9, prm, coarse);
    auto b = simulate_switching(-ps, w, 600e-9, prm, fine);
    // Second cycle is a closed loop.
    auto second = [](const SwitchingTrace& tr, double t0) {
        SwitchingTrace out;
        for (const auto& s : tr.samples)
            if (s.t >= t0) out.samples.push_back(s);
        return out;
    };
    double la = loop_area(second(a, 40e-9), 600e-9);
    double lb = loop_area(second(b, 40e-9), 600e-9);
    CHECK(la > 0.0);
    CHECK(la == doctest::Approx(lb).epsilon(0.02));
    // Bounded by the rectangle 2 P_s x 2 E_max.
    CHECK(la < 4.0 * ps * 1.0 / 600e-9);
}

TEST_CASE("waveforms reject malformed breakpoints") {
    Waveform w{{0.0, 1.0, 1.0}, {0.0, 1.0, 2.0}};
    CHECK_THROWS_AS(w.validate(), std::invalid_argument);
    CHECK_THROWS_AS(Waveform::steps({1.0}, {1.0, 2.0}), std::invalid_argument);
    auto s = Waveform::square(0.7, 1e-9);
    CHECK(s.at(0.5e-9) == doctest::Approx(0.7));
    CHECK(s.at(s.t_end() + 1.0) == doctest::Approx(s.v.back()));
}
