#pragma once

#include <string>

#include "pefet/transduction.hpp"

namespace pefet {

enum class Arch { HD, TALL, WIDE, CC };

std::string arch_name(Arch arch);
/// Case-insensitive; throws UnsupportedArch for anything else.
Arch parse_arch(const std::string& name);
inline constexpr Arch kAllArchs[] = {Arch::HD, Arch::TALL, Arch::WIDE, Arch::CC};

/// Lambda-based layout rules. Lengths in lambda unless stated otherwise.
struct LayoutRules {
    double lambda = 10e-9;  // m
    double poly_pitch = 9.0;
    double height_hd = 9.0;
    double height_tall = 22.5;
    double height_wide = 18.0;
    double height_cc = 13.5;
    double extra_width_wide = 9.5;  // AX beside the PeFET
    double extra_width_cc = 8.1;    // two AX + cross-couple wiring per 2-bit cell
    double min_width = 9.0;
    double w_contact = 4.8893;  // fitted
    double l_pe = 11.441;       // fitted PE length
    double eps_r_pe = 4000.0;
    double sram_area = 761.4;
    double sram_height = 18.0;

    /// PeFET-limited cell width at kappa for a channel of area a_tmd (m^2).
    double width(double kappa, double a_tmd) const;
    void validate() const;
};

struct CellDims {
    double height;  // lambda
    double width;   // lambda, physical cell (a CC cell holds two bits)
    int bits;
};

CellDims cell_dims(Arch arch, double kappa, const LayoutRules& rules, double a_tmd);
/// Area per bit in lambda^2.
double cell_area(Arch arch, double kappa, const LayoutRules& rules, double a_tmd);
double sram_area_ratio(Arch arch, double kappa, const LayoutRules& rules, double a_tmd);

/// Linear PE capacitance eps_r eps0 a_pe / t_pe.
double c_pe(const DeviceGeometry& geom, double eps_r = 4000.0);

struct WidthAnchors {
    double kappa_ref = 0.04;
    double width_ref = 18.0;  // HD width at kappa_ref
    double kappa_lo = 0.03;
    double ratio_lo = 4.0;  // HD-vs-SRAM area ratio
    double kappa_hi = 0.07;
    double ratio_hi = 7.0;
};

struct WidthFit {
    double w_contact;
    double l_pe;
    double ratio_lo;
    double ratio_hi;
    double residual_norm;
};

/// Fit (w_contact, l_pe): HD width is pinned at the reference kappa, the ratio span is least squares.
WidthFit fit_width_model(const LayoutRules& rules, const WidthAnchors& anchors, double a_tmd);

}  // namespace pefet
