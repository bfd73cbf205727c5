#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "pefet/errors.hpp"
#include "pefet/pefet.hpp"

using namespace pefet;

TEST_CASE("distinguishability anchors and monotone decrease in kappa") {
    const auto& d = fixtures::device();
    CHECK(device_distinguishability(d.with_kappa(0.04)) == doctest::Approx(8.0).epsilon(0.20));
    CHECK(device_distinguishability(d.with_kappa(0.03)) == doctest::Approx(11.0).epsilon(0.25));
    CHECK(device_distinguishability(d.with_kappa(0.07)) == doctest::Approx(3.0).epsilon(0.25));
    double prev = 1e9;
    for (double k = 0.03; k <= 0.0701; k += 0.005) {
        double r = device_distinguishability(d.with_kappa(k));
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("+P reads as LRS, -P as HRS") {
    const auto& d = fixtures::device();
    BiasPoint b{0.35, 0.0, 0.35, 0.0};
    double ps = d.p_s();
    CHECK(read_current(ps, b, d) > read_current(0.0, b, d));
    CHECK(read_current(0.0, b, d) > read_current(-ps, b, d));
}

TEST_CASE("read bias near the coercive voltage is refused") {
    const auto& d = fixtures::device();
    BiasPoint b{d.v_c() - 0.05, 0.0, 0.35, 0.0};
    CHECK_THROWS_AS(read_current(d.p_s(), b, d), ReadDisturbRisk);
}

TEST_CASE("write transient switches with V_DD and retains without bias") {
    const auto& d = fixtures::device();
    double ps = d.p_s();
    auto w = write_transient(-ps, Waveform::steps({d.v_dd, 0.0}, {2e-9, 1e-9}), d);
    CHECK(w.p_final == doctest::Approx(ps).epsilon(1e-3));
    CHECK(w.q_switched == doctest::Approx(2 * ps).epsilon(1e-3));
    auto r = write_transient(ps, Waveform::steps({d.v_r, 0.0}, {2e-9, 1e-9}), d);
    CHECK(r.p_final == doctest::Approx(ps).epsilon(1e-6));
}

TEST_CASE("I-V sweep rows are ordered LRS > baseline > HRS") {
    const auto& d = fixtures::device();
    auto rows = iv_sweep(d, 0.1, 0.4, 7);
    REQUIRE(rows.size() == 7);
    for (const auto& r : rows) {
        CHECK(r.i_lrs > r.i_baseline);
        CHECK(r.i_baseline > r.i_hrs);
    }
    CHECK_THROWS_AS(iv_sweep(d, 0.0, 0.4, 1), std::invalid_argument);
}

TEST_CASE("device configuration validation") {
    PeFetConfig d = fixtures::device();
    d.v_dd = 0.5;  // below V_C
    CHECK_THROWS(d.validate());
    d = fixtures::device();
    d.v_r = 0.6;
    CHECK_THROWS(d.validate());
}
