#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "pefet/errors.hpp"
#include "pefet/tmdfet.hpp"

using namespace pefet;

TEST_CASE("calibrated FET hits the read-bias ratio anchors") {
    const auto& f = fixtures::device().fet;
    const double de = 0.051;
    double lrs = drain_current(0.35, 0.35, -de, f) / drain_current(0.35, 0.35, 0.0, f);
    double hrs = drain_current(0.35, 0.35, 0.0, f) / drain_current(0.35, 0.35, de, f);
    CHECK(lrs == doctest::Approx(2.3).epsilon(0.10));
    CHECK(hrs == doctest::Approx(3.4).epsilon(0.10));
}

TEST_CASE("drain current is monotone and antisymmetric in V_DS") {
    FetParams f;
    double prev = 0.0;
    for (double vgs = 0.0; vgs <= 0.7; vgs += 0.05) {
        double i = drain_current(vgs, 0.35, 0.0, f);
        CHECK(i > prev);
        prev = i;
    }
    prev = 0.0;
    for (double vds = 0.05; vds <= 0.7; vds += 0.05) {
        double i = drain_current(0.5, vds, 0.0, f);
        CHECK(i > prev);
        prev = i;
    }
    CHECK(drain_current(0.5, 0.0, 0.0, f) == doctest::Approx(0.0));
    // Narrower gap -> lower threshold -> more current.
    CHECK(drain_current(0.35, 0.35, -0.05, f) > drain_current(0.35, 0.35, 0.05, f));
}

TEST_CASE("zero contact resistance reduces to the intrinsic model exactly") {
    FetParams f;
    f.r_c = 0.0;
    for (double vgs : {0.1, 0.35, 0.7})
        for (double vds : {0.05, 0.35, 0.7}) CHECK(drain_current(vgs, vds, 0.0, f) == intrinsic_current(vgs, vds, 0.0, f));
}

TEST_CASE("contacts only reduce current and add to the on-resistance") {
    FetParams f, ideal = f;
    ideal.r_c = 0.0;
    CHECK(drain_current(0.7, 0.35, 0.0, f) < intrinsic_current(0.7, 0.35, 0.0, f));
    CHECK(on_resistance(0.7, f) > on_resistance(0.7, ideal));
    CHECK(on_resistance(0.7, f) - on_resistance(0.7, ideal) == doctest::Approx(2.0 * f.r_c / f.w).epsilon(0.05));
}

TEST_CASE("threshold shift splits the bandgap change") {
    CHECK(threshold_shift(-0.1, 0.5) == doctest::Approx(-0.05));
    CHECK(threshold_shift(0.1, 1.0) == doctest::Approx(0.1));
}

TEST_CASE("calibration needs two independent anchors and honours tolerances") {
    FetParams start;
    std::vector<FetAnchor> one = {{"lrs", -0.051, 0.0, 0.35, 0.35, 2.3, 0.1}};
    CHECK_THROWS_AS(calibrate_fet(one, start), FitFailure);
    std::vector<FetAnchor> impossible = {{"lrs", -0.051, 0.0, 0.35, 0.35, 23.0, 0.1},
                                         {"hrs", 0.0, 0.051, 0.35, 0.35, 3.4, 0.1}};
    CHECK_THROWS_AS(calibrate_fet(impossible, start), FitFailure);
    std::vector<FetAnchor> ok = {{"lrs", -0.051, 0.0, 0.35, 0.35, 2.3, 0.1},
                                 {"hrs", 0.0, 0.051, 0.35, 0.35, 3.4, 0.1}};
    auto fit = calibrate_fet(ok, start);
    CHECK(fit.independent_anchors == 2);
    for (double e : fit.rel_errors) CHECK(std::abs(e) < 0.1);
}
