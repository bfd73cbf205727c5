#include "doctest.h"
#include "fixtures.hpp"
#include "pefet/layout.hpp"

using namespace pefet;

namespace {
double a_tmd() { return fixtures::device().geom.a_tmd(); }
const LayoutRules& rules() { return fixtures::config().array.rules; }
}  // namespace

TEST_CASE("HD cell is 9 x 18 lambda at kappa = 0.04") {
    auto d = cell_dims(Arch::HD, 0.04, rules(), a_tmd());
    CHECK(d.height == 9.0);
    CHECK(d.width == doctest::Approx(18.0).epsilon(1e-12));
    CHECK(cell_area(Arch::HD, 0.04, rules(), a_tmd()) == doctest::Approx(162.0).epsilon(1e-12));
}

TEST_CASE("area ratios against the SRAM cell") {
    CHECK(sram_area_ratio(Arch::HD, 0.04, rules(), a_tmd()) == doctest::Approx(4.7).epsilon(0.10));
    CHECK(sram_area_ratio(Arch::CC, 0.04, rules(), a_tmd()) == doctest::Approx(2.5).epsilon(0.10));
    CHECK(sram_area_ratio(Arch::TALL, 0.04, rules(), a_tmd()) == doctest::Approx(1.87).epsilon(0.10));
    CHECK(sram_area_ratio(Arch::WIDE, 0.04, rules(), a_tmd()) == doctest::Approx(1.53).epsilon(0.10));
    CHECK(sram_area_ratio(Arch::HD, 0.03, rules(), a_tmd()) == doctest::Approx(4.0).epsilon(0.15));
    CHECK(sram_area_ratio(Arch::HD, 0.07, rules(), a_tmd()) == doctest::Approx(7.0).epsilon(0.15));
}

TEST_CASE("CC stores two bits per cell: per-bit area is TALL / 1.36") {
    auto cc = cell_dims(Arch::CC, 0.04, rules(), a_tmd());
    CHECK(cc.bits == 2);
    CHECK(cell_area(Arch::CC, 0.04, rules(), a_tmd()) ==
          doctest::Approx(cell_area(Arch::TALL, 0.04, rules(), a_tmd()) / 1.36).epsilon(0.05));
}

TEST_CASE("cell width shrinks with kappa down to the minimum") {
    double prev = 1e9;
    for (double k = 0.03; k <= 0.0701; k += 0.01) {
        double w = rules().width(k, a_tmd());
        CHECK(w < prev);
        prev = w;
    }
    CHECK(rules().width(1.0, a_tmd()) == doctest::Approx(rules().min_width));
}

TEST_CASE("C_PE hand calculation") {
    DeviceGeometry g;
    g.a_pe = 15000e-18;
    g.t_pe = 600e-9;
    CHECK(c_pe(g) == doctest::Approx(4000 * 8.8541878128e-12 * 1.5e-14 / 6e-7).epsilon(1e-12));
    CHECK(c_pe(g) == doctest::Approx(0.886e-15).epsilon(0.01));
}

TEST_CASE("width fit pins the reference width") {
    auto fit = fit_width_model(rules(), fixtures::config().width, a_tmd());
    LayoutRules r = rules();
    r.w_contact = fit.w_contact;
    r.l_pe = fit.l_pe;
    CHECK(r.width(0.04, a_tmd()) == doctest::Approx(18.0).epsilon(1e-9));
    CHECK(fit.l_pe == doctest::Approx(rules().l_pe).epsilon(1e-6));
}

TEST_CASE("architecture names round-trip") {
    for (Arch a : kAllArchs) CHECK(parse_arch(arch_name(a)) == a);
    CHECK(parse_arch("Tall") == Arch::TALL);
    CHECK_THROWS(parse_arch("dram"));
}
