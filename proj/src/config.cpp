#include "pefet/config.hpp"

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "pefet/errors.hpp"
#include "pefet/tmdfet.hpp"

namespace pefet {

ArrayConfig RunConfig::array_for(Arch arch, double kappa) const {
    ArrayConfig a = array;
    a.arch = arch;
    a.device = array.device.with_kappa(kappa);
    return a;
}

namespace {

namespace pt = boost::property_tree;
using Setter = std::function<void(const std::string&)>;

double to_number(const std::string& s) {
    std::string t = boost::trim_copy(s);
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || !std::isfinite(v)) {
        throw std::invalid_argument("'" + s + "' is not a finite number");
    }
    return v;
}

int to_int(const std::string& s) {
    double v = to_number(s);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw std::invalid_argument("'" + s + "' is not an integer");
    return static_cast<int>(v);
}

bool to_bool(const std::string& s) {
    std::string t = boost::to_lower_copy(boost::trim_copy(s));
    if (t == "true" || t == "yes" || t == "1") return true;
    if (t == "false" || t == "no" || t == "0") return false;
    throw std::invalid_argument("'" + s + "' is not a boolean");
}

std::vector<std::string> to_list(const std::string& s) {
    std::vector<std::string> parts;
    std::string t = boost::trim_copy(s);
    if (t.empty()) return parts;
    boost::split(parts, t, boost::is_any_of(","));
    for (auto& p : parts) boost::trim(p);
    return parts;
}

std::vector<double> to_numbers(const std::string& s) {
    std::vector<double> out;
    for (const auto& p : to_list(s)) out.push_back(to_number(p));
    return out;
}

/// Line of every section header and key, for diagnostics (property trees drop positions).
struct LineIndex {
    std::map<std::string, int> sections;
    std::map<std::pair<std::string, std::string>, int> keys;

    explicit LineIndex(const std::string& text) {
        std::istringstream in(text);
        std::string line, section;
        for (int n = 1; std::getline(in, line); ++n) {
            std::string t = boost::trim_copy(line);
            if (t.empty() || t[0] == ';' || t[0] == '#') continue;
            if (t.front() == '[' && t.back() == ']') {
                section = boost::trim_copy(t.substr(1, t.size() - 2));
                sections.emplace(section, n);
            } else if (auto eq = t.find('='); eq != std::string::npos) {
                keys.emplace(std::make_pair(section, boost::trim_copy(t.substr(0, eq))), n);
            }
        }
    }
    int key(const std::string& s, const std::string& k) const {
        auto it = keys.find({s, k});
        return it == keys.end() ? 0 : it->second;
    }
};

}  // namespace

RunConfig parse_config(const std::string& text) {
    // Boost's INI reader only understands ';' comments; accept '#' too by blanking those lines.
    std::string cleaned;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::string t = boost::trim_left_copy(line);
            cleaned += (!t.empty() && t[0] == '#') ? std::string() : line;
            cleaned += '\n';
        }
    }
    pt::ptree tree;
    try {
        std::istringstream in(cleaned);
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(e.message(), static_cast<int>(e.line()));
    }
    const LineIndex lines(text);

    RunConfig cfg;
    PeFetConfig& dev = cfg.array.device;
    DeviceGeometry& geom = dev.geom;
    FetParams& fet = dev.fet;
    ArrayConfig& arr = cfg.array;
    WireParams& wire = arr.wire;
    LayoutRules& rules = arr.rules;
    DeviceCalibrationInputs& cal = cfg.calibration;
    std::optional<double> kappa;
    std::optional<double> a_pe;
    bool fit_rho = true;
    std::optional<double> w_contact;
    std::vector<double> dist_kappas, dist_targets, dist_tols;

    std::map<std::string, std::map<std::string, Setter>> table;
    auto num = [&](const char* s, const char* k, double& ref) { table[s][k] = [&ref](const std::string& v) { ref = to_number(v); }; };
    auto integer = [&](const char* s, const char* k, int& ref) { table[s][k] = [&ref](const std::string& v) { ref = to_int(v); }; };
    auto flag = [&](const char* s, const char* k, bool& ref) { table[s][k] = [&ref](const std::string& v) { ref = to_bool(v); }; };

    // [ferroelectric]
    num("ferroelectric", "alpha", dev.landau.alpha);
    num("ferroelectric", "beta", dev.landau.beta);
    num("ferroelectric", "gamma", dev.landau.gamma);
    num("ferroelectric", "rho", dev.landau.rho);
    flag("ferroelectric", "fit_rho", fit_rho);
    num("ferroelectric", "rho_target_time", cal.rho_target_time);
    num("ferroelectric", "rho_target_voltage", cal.rho_target_voltage);
    num("ferroelectric", "switch_threshold", dev.integrator.switch_threshold);
    num("ferroelectric", "rtol", dev.integrator.rtol);
    num("ferroelectric", "dt_max", dev.integrator.dt_max);

    // [piezo]
    num("piezo", "d33", dev.piezo.d33);
    num("piezo", "d31", dev.piezo.d31);
    num("piezo", "y_eff", dev.piezo.y_eff);
    num("piezo", "boost_b0", dev.piezo.boost_b0);
    num("piezo", "boost_q", dev.piezo.boost_q);
    num("piezo", "a_bg", dev.piezo.a_bg);
    flag("piezo", "clamp_v_gb", dev.piezo.clamp_v_gb);
    num("piezo", "v_clamp", dev.piezo.v_clamp);
    num("piezo", "anchor_kappa_ref", cal.transduction.kappa_ref);
    num("piezo", "anchor_boost_ref", cal.transduction.boost_ref);
    num("piezo", "anchor_kappa_lo", cal.transduction.kappa_lo);
    num("piezo", "anchor_kappa_hi", cal.transduction.kappa_hi);
    num("piezo", "anchor_ratio_lo_hi", cal.transduction.ratio_lo_hi);
    num("piezo", "anchor_v_gb", cal.transduction.v_gb_ref);
    num("piezo", "anchor_sigma_tmd", cal.transduction.sigma_tmd_ref);
    num("piezo", "anchor_delta_eg", cal.transduction.delta_eg_ref);

    // [geometry]
    num("geometry", "f", geom.f);
    num("geometry", "w_tmd", geom.w_tmd);
    num("geometry", "l_g", geom.l_g);
    num("geometry", "l_pe", geom.l_pe);
    table["geometry"]["a_pe"] = [&](const std::string& v) { a_pe = to_number(v); };
    table["geometry"]["kappa"] = [&](const std::string& v) { kappa = to_number(v); };
    num("geometry", "t_pe", geom.t_pe);
    num("geometry", "t_nail", geom.t_nail);
    num("geometry", "t_tox", geom.t_tox);
    num("geometry", "t_tmd", geom.t_tmd);

    // [fet]
    num("fet", "mu", fet.mu);
    num("fet", "r_c", fet.r_c);
    num("fet", "e_g0", fet.e_g0);
    table["fet"]["eps_r_ox"] = [&](const std::string& v) { fet.eps_ox = to_number(v) * phys::eps0; };
    num("fet", "w", fet.w);
    num("fet", "l", fet.l);
    num("fet", "v_t0", fet.v_t0);
    num("fet", "n_id", fet.n_id);
    num("fet", "band_split", fet.band_split);
    num("fet", "temperature", fet.temp);
    num("fet", "v_r", dev.v_r);
    num("fet", "v_dd", dev.v_dd);
    num("fet", "read_margin", dev.read_margin);
    num("fet", "anchor_lrs_ratio", cal.lrs_ratio);
    num("fet", "anchor_lrs_tolerance", cal.lrs_tolerance);
    num("fet", "anchor_hrs_ratio", cal.hrs_ratio);
    num("fet", "anchor_hrs_tolerance", cal.hrs_tolerance);
    table["fet"]["anchor_dist_kappas"] = [&](const std::string& v) { dist_kappas = to_numbers(v); };
    table["fet"]["anchor_dist_ratios"] = [&](const std::string& v) { dist_targets = to_numbers(v); };
    table["fet"]["anchor_dist_tolerances"] = [&](const std::string& v) { dist_tols = to_numbers(v); };
    flag("fet", "fit_n_id", cal.fet_options.fit_n_id);
    flag("fet", "fit_band_split", cal.fet_options.fit_band_split);

    // [array]
    table["array"]["arch"] = [&](const std::string& v) { arr.arch = parse_arch(boost::trim_copy(v)); };
    integer("array", "rows", arr.n_r);
    integer("array", "cols", arr.n_c);
    integer("array", "word", arr.n_w);
    flag("array", "segmented", arr.segmented);
    table["array"]["v_boost"] = [&](const std::string& v) { arr.v_th = to_number(v); };
    num("array", "min_sense_ratio", arr.min_sense_ratio);
    num("array", "metal_cap", wire.metal_cap);
    num("array", "r_driver", wire.r_driver);
    num("array", "r_row", wire.r_row);
    num("array", "buffer_width", wire.buffer_width);
    num("array", "ax_length", wire.ax_length);
    num("array", "settle", wire.settle);
    num("array", "switch_margin", wire.switch_margin);
    num("array", "t_sense", wire.t_sense);
    num("array", "t_edge", wire.t_edge);
    num("array", "t_relax", wire.t_relax);
    num("array", "sram_area", cfg.sram.area);
    num("array", "sram_height", cfg.sram.height);
    num("array", "sram_half_select", cfg.sram.half_select_swing);
    num("array", "sram_t_flip", cfg.sram.t_flip);
    integer("array", "sram_leak_paths", cfg.sram.leak_paths);
    num("array", "sram_utilization", cfg.sram.utilization);

    // [rules]
    num("rules", "lambda", rules.lambda);
    num("rules", "poly_pitch", rules.poly_pitch);
    num("rules", "height_hd", rules.height_hd);
    num("rules", "height_tall", rules.height_tall);
    num("rules", "height_wide", rules.height_wide);
    num("rules", "height_cc", rules.height_cc);
    num("rules", "extra_width_wide", rules.extra_width_wide);
    num("rules", "extra_width_cc", rules.extra_width_cc);
    num("rules", "min_width", rules.min_width);
    table["rules"]["w_contact"] = [&](const std::string& v) { w_contact = to_number(v); };
    num("rules", "l_pe", rules.l_pe);
    num("rules", "eps_r_pe", rules.eps_r_pe);
    num("rules", "anchor_kappa_ref", cfg.width.kappa_ref);
    num("rules", "anchor_width_ref", cfg.width.width_ref);
    num("rules", "anchor_kappa_lo", cfg.width.kappa_lo);
    num("rules", "anchor_ratio_lo", cfg.width.ratio_lo);
    num("rules", "anchor_kappa_hi", cfg.width.kappa_hi);
    num("rules", "anchor_ratio_hi", cfg.width.ratio_hi);

    // [sweep]
    table["sweep"]["kappas"] = [&](const std::string& v) { cfg.sweep.kappas = to_numbers(v); };
    table["sweep"]["archs"] = [&](const std::string& v) {
        cfg.sweep.archs.clear();
        for (const auto& a : to_list(v)) cfg.sweep.archs.push_back(parse_arch(a));
    };
    integer("sweep", "workers", cfg.sweep.workers);
    integer("sweep", "random_words", cfg.sweep.random_words);
    num("sweep", "iv_from", cfg.sweep.iv_from);
    num("sweep", "iv_to", cfg.sweep.iv_to);
    integer("sweep", "iv_points", cfg.sweep.iv_points);

    for (const auto& [name, node] : tree) {
        if (!lines.sections.count(name)) {
            throw ConfigError("key '" + name + "' appears outside any section", lines.key("", name));
        }
        if (!table.count(name)) throw ConfigError("unknown section [" + name + "]", lines.sections.at(name));
    }
    for (const char* s : kConfigSections) {
        if (!tree.count(s)) throw ConfigError(std::string("missing required section [") + s + "]");
    }
    for (const auto& [section, node] : tree) {
        const auto& setters = table.at(section);
        for (const auto& [key, value] : node) {
            int line = lines.key(section, key);
            auto it = setters.find(key);
            if (it == setters.end()) throw ConfigError("unknown key '" + key + "' in [" + section + "]", line);
            try {
                it->second(value.data());
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw ConfigError("[" + section + "] " + key + ": " + e.what(), line);
            }
        }
    }

    if (kappa && a_pe) {
        throw ConfigError("[geometry] sets both kappa and a_pe", lines.key("geometry", "kappa"));
    }
    geom.lambda = rules.lambda;
    // Unless given explicitly, the contact width pins the HD width to the reference anchor exactly.
    rules.w_contact = w_contact ? *w_contact
                                : cfg.width.width_ref - geom.a_tmd() / (rules.lambda * rules.lambda) /
                                                            (cfg.width.kappa_ref * rules.l_pe);
    fet.t_tox = geom.t_tox;
    try {
        if (a_pe) geom.a_pe = *a_pe;
        if (kappa) geom = geom.with_kappa(*kappa);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("[geometry] ") + e.what(), lines.key("geometry", kappa ? "kappa" : "a_pe"));
    }
    if (!dist_kappas.empty() || !dist_targets.empty() || !dist_tols.empty()) {
        if (dist_kappas.size() != dist_targets.size() || dist_kappas.size() != dist_tols.size()) {
            throw ConfigError("distinguishability anchor lists differ in length", lines.key("fet", "anchor_dist_kappas"));
        }
        cal.distinguishability.clear();
        for (std::size_t i = 0; i < dist_kappas.size(); ++i) {
            cal.distinguishability.push_back({dist_kappas[i], dist_targets[i], dist_tols[i]});
        }
    }
    cal.base = dev;
    if (!fit_rho) cal.rho = dev.landau.rho;
    if (cfg.sweep.workers < 0 || cfg.sweep.random_words < 0 || cfg.sweep.iv_points < 2) {
        throw ConfigError("[sweep] workers/random_words must be non-negative and iv_points at least 2",
                          lines.sections.at("sweep"));
    }
    try {
        arr.validate();
        cfg.sram.validate();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid configuration: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

ModelCard run_calibration(const RunConfig& cfg) {
    ModelCard card;
    card.device = calibrate_device(cfg.calibration);
    card.width = fit_width_model(cfg.array.rules, cfg.width, cfg.device().geom.a_tmd());
    return card;
}

std::string format_model_card(const ModelCard& card) {
    std::ostringstream os;
    auto kv = [&](const std::string& key, double v) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        os << key << " = " << buf << "\n";
    };
    const PeFetConfig& d = card.device.cfg;
    os << "; PeFET model card: fitted constants and calibration residuals\n";
    os << "[ferroelectric]\n";
    kv("rho", d.landau.rho);
    kv("p_s", d.p_s());
    kv("v_c", d.v_c());
    if (card.device.transduction) {
        const auto& t = *card.device.transduction;
        os << "\n[piezo]\n";
        kv("boost_b0", t.boost_b0);
        kv("boost_q", t.boost_q);
        kv("y_eff", t.y_eff);
        kv("a_bg", t.a_bg);
        kv("residual_boost", t.residual_boost);
        kv("residual_ratio", t.residual_ratio);
    }
    os << "\n[fet]\n";
    kv("v_t0", d.fet.v_t0);
    kv("n_id", d.fet.n_id);
    kv("band_split", d.fet.band_split);
    if (card.device.fet) {
        const auto& f = *card.device.fet;
        kv("residual_norm", f.residual_norm);
        for (std::size_t i = 0; i < card.device.fet_anchors.size(); ++i) {
            const auto& a = card.device.fet_anchors[i];
            kv("anchor." + a.name + ".target", a.target);
            kv("anchor." + a.name + ".achieved", f.ratios[i]);
            kv("anchor." + a.name + ".residual", f.rel_errors[i]);
        }
    }
    os << "\n[rules]\n";
    kv("w_contact", card.width.w_contact);
    kv("l_pe", card.width.l_pe);
    kv("hd_ratio_lo", card.width.ratio_lo);
    kv("hd_ratio_hi", card.width.ratio_hi);
    kv("residual_norm", card.width.residual_norm);
    return os.str();
}

}  // namespace pefet
