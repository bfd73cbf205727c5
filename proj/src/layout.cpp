#include "pefet/layout.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "pefet/errors.hpp"
#include "pefet/tmdfet.hpp"

namespace pefet {

std::string arch_name(Arch arch) {
    switch (arch) {
        case Arch::HD: return "hd";
        case Arch::TALL: return "tall";
        case Arch::WIDE: return "wide";
        case Arch::CC: return "cc";
    }
    throw UnsupportedArch("unknown architecture");
}

Arch parse_arch(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "hd") return Arch::HD;
    if (s == "tall") return Arch::TALL;
    if (s == "wide") return Arch::WIDE;
    if (s == "cc") return Arch::CC;
    throw UnsupportedArch("unsupported architecture '" + name + "'");
}

double LayoutRules::width(double kappa, double a_tmd) const {
    double a_tmd_l2 = a_tmd / (lambda * lambda);
    return std::max(min_width, w_contact + a_tmd_l2 / (kappa * l_pe));
}

void LayoutRules::validate() const {
    for (double d : {lambda, poly_pitch, height_hd, height_tall, height_wide, height_cc, min_width, l_pe, sram_area,
                     sram_height}) {
        if (!(d > 0.0)) throw std::invalid_argument("layout dimensions must be positive");
    }
}

CellDims cell_dims(Arch arch, double kappa, const LayoutRules& r, double a_tmd) {
    double w = r.width(kappa, a_tmd);
    switch (arch) {
        case Arch::HD: return {r.height_hd, w, 1};
        case Arch::TALL: return {r.height_tall, w, 1};
        case Arch::WIDE: return {r.height_wide, w + r.extra_width_wide, 1};
        case Arch::CC: return {r.height_cc, 2.0 * w + r.extra_width_cc, 2};
    }
    throw UnsupportedArch("unknown architecture");
}

double cell_area(Arch arch, double kappa, const LayoutRules& rules, double a_tmd) {
    CellDims d = cell_dims(arch, kappa, rules, a_tmd);
    return d.height * d.width / d.bits;
}

double sram_area_ratio(Arch arch, double kappa, const LayoutRules& rules, double a_tmd) {
    return rules.sram_area / cell_area(arch, kappa, rules, a_tmd);
}

double c_pe(const DeviceGeometry& geom, double eps_r) { return eps_r * phys::eps0 * geom.a_pe / geom.t_pe; }

WidthFit fit_width_model(const LayoutRules& rules, const WidthAnchors& a, double a_tmd) {
    double a_l2 = a_tmd / (rules.lambda * rules.lambda);
    auto trial = [&](double l_pe) {
        LayoutRules r = rules;
        r.l_pe = l_pe;
        r.w_contact = a.width_ref - a_l2 / (a.kappa_ref * l_pe);
        return r;
    };
    auto objective = [&](double l_pe) {
        LayoutRules r = trial(l_pe);
        double lo = sram_area_ratio(Arch::HD, a.kappa_lo, r, a_tmd);
        double hi = sram_area_ratio(Arch::HD, a.kappa_hi, r, a_tmd);
        return std::pow(std::log(lo / a.ratio_lo), 2) + std::pow(std::log(hi / a.ratio_hi), 2);
    };
    std::uintmax_t iters = 500;
    auto [l_pe, obj] = boost::math::tools::brent_find_minima(objective, 1.0, 1000.0, 52, iters);
    LayoutRules r = trial(l_pe);
    if (!(r.w_contact > 0.0)) throw FitFailure("width model fit needs a negative contact width");
    WidthFit fit{r.w_contact, l_pe, sram_area_ratio(Arch::HD, a.kappa_lo, r, a_tmd),
                 sram_area_ratio(Arch::HD, a.kappa_hi, r, a_tmd), std::sqrt(obj)};
    return fit;
}

}  // namespace pefet
