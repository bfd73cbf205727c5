#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pefet/layout.hpp"
#include "pefet/pefet.hpp"

namespace pefet {

enum class Line { WL, WBL, RBL, GPL, LPL, PL, BL1, BL2, BN, DA, DB };
/// Cell classes of the bias taxonomy: the accessed word, cells sharing only its row,
/// cells sharing only its columns, and everything else.
enum class Access { accessed, half_row, half_col, unaccessed };
enum class Op { write, read };

std::string line_name(Line line);
std::string access_name(Access access);
/// BN (1T back node) and DA/DB (CC drains) are internal nodes, never driven from the periphery.
bool is_internal(Line line);
inline constexpr Access kAllAccess[] = {Access::accessed, Access::half_row, Access::half_col, Access::unaccessed};

/// Interconnect, driver and timing plumbing.
struct WireParams {
    double metal_cap = 1.8e-9;  // F/m
    double r_driver = 10e3;     // column and plate-line drivers, Ohm
    double r_row = 5e3;         // word-line drivers, Ohm
    double buffer_width = 2.0;  // segment buffer width in minimum devices
    double ax_length = 40e-9;   // access-transistor gate length
    double settle = 2.3;        // RC time constants per line settle
    double switch_margin = 1.25;
    double t_sense = 1e-10;
    double t_edge = 1e-12;
    double t_relax = 1e-9;  // zero-bias tail after a write before the state is stored
};

struct ArrayConfig {
    Arch arch = Arch::HD;
    int n_r = 256;
    int n_c = 256;  // bit columns
    int n_w = 64;
    bool segmented = true;
    PeFetConfig device;
    WireParams wire;
    LayoutRules rules;
    std::optional<double> v_th;  // word-line boost above V_DD; defaults to the FET threshold
    double min_sense_ratio = 1.5;

    double v_boost() const { return v_th.value_or(device.fet.v_t0); }
    int words_per_row() const { return n_c / n_w; }
    void validate() const;
};

struct Address {
    int row = 0;
    int word = 0;
};

using Word = std::vector<std::uint8_t>;

// ---------------------------------------------------------------------------
// Bias plans
// ---------------------------------------------------------------------------

struct Drive {
    Line line;
    Access access;
    int code;  // data code the drive applies to; -1 for any
    double volts;
};

struct Phase {
    std::string name;
    std::vector<Drive> drives;

    void set(Line line, Access access, double volts, int code = -1);
    double volts(Line line, Access access, int code) const;
    bool has(Line line, Access access, int code) const;
};

struct PhasePlan {
    Arch arch;
    Op op;
    bool segmented;
    std::vector<Phase> phases;

    std::vector<Line> lines() const;
    /// Data codes: the stored bit, or (bitA << 1 | bitB) for a CC cell.
    std::vector<int> codes() const;
    int sides() const { return arch == Arch::CC ? 2 : 1; }
    /// Throws std::logic_error when a line is left undriven in some phase.
    void validate() const;
};

struct CellNodes {
    double v_g, v_b, v_d;
    double v_gb() const { return v_g - v_b; }
};

CellNodes cell_nodes(const PhasePlan& plan, std::size_t phase, Access access, int code, int side);
/// Bit a cell side should hold after writing `code`.
int target_bit(Arch arch, int code, int side);

struct DisturbEntry {
    std::size_t phase;
    Access access;
    int code;
    int side;
    double v_gb;
    bool violation;
};

struct DisturbReport {
    std::vector<DisturbEntry> entries;
    double worst_margin;
    bool pass() const;
};

// ---------------------------------------------------------------------------
// Electrical model of one array instance
// ---------------------------------------------------------------------------

struct LineElectrics {
    double c_energy;  // switched capacitance per line excluding PE capacitors
    double c_load;    // capacitance the driver settles, including attached PE capacitors
};

struct ArrayElectrics {
    CellDims dims;
    double cell_h, cell_w;  // m
    double len_col, len_row, len_lpl;
    double c_pe, c_j, c_g_ax, c_buf;
    double r_ax, r_buf_write, r_buf_read;
    std::map<Line, LineElectrics> lines;
};

struct PhaseTiming {
    std::string name;
    double rc;
    double p_switch;
    double overhead;
    double duration() const { return rc + p_switch + overhead; }
};

struct CcReadResult {
    double v_da, v_db;
    double i_bl1, i_bl2;
    std::string label;
    int iterations;
};

// ---------------------------------------------------------------------------
// Event log
// ---------------------------------------------------------------------------

struct LineEvent {
    std::string phase;
    std::string line_class;  // a line name, or "PE" for a cell-class V_GB transition
    std::string line;        // group label
    double count;
    double v_from, v_to;
    double c_line;
};

struct SwitchEvent {
    std::string group;
    double count;
    double energy_per_cell;  // J
};

struct EventLog {
    Arch arch;
    Op op;
    std::vector<LineEvent> lines;
    std::vector<SwitchEvent> switching;
    std::vector<PhaseTiming> timing;
};

struct ReadResult {
    std::vector<double> current;
    Word bits;
    std::vector<std::string> cc_case;
    double i_ref;
    EventLog log;
};

struct SenseLevels {
    double worst_lrs, worst_hrs, i_ref;
    double ratio() const { return worst_lrs / worst_hrs; }
};

/// Array configuration plus every derived quantity the protocols need (cached).
class ArrayModel {
public:
    explicit ArrayModel(ArrayConfig cfg);

    const ArrayConfig& cfg() const { return cfg_; }
    const ArrayElectrics& electrics() const { return el_; }
    const FetParams& access_fet() const { return ax_; }
    double v_c() const { return v_c_; }
    double p_s() const { return p_s_; }

    /// Switching time at a constant PE voltage (cached).
    double t_switch(double volts) const;
    /// Droop of the CC drains with both sides in +P, used for same-state +P/+P writes.
    double cc_write_droop() const;
    const SenseLevels& sense_levels() const;
    /// Sub-threshold current of one unselected cell on an active read column.
    double sneak_current() const;

private:
    ArrayConfig cfg_;
    ArrayElectrics el_;
    FetParams ax_;
    double v_c_, p_s_;
    mutable std::map<double, double> t_sw_cache_;
    mutable std::optional<double> cc_droop_;
    mutable std::optional<SenseLevels> sense_;
    mutable std::optional<double> sneak_;
};

PhasePlan plan_write(const ArrayModel& model, const Address& address, const Word& data);
PhasePlan plan_read(const ArrayModel& model, const Address& address);
DisturbReport check_disturb(const PhasePlan& plan, const ArrayModel& model);
CcReadResult solve_cc_read(double state_a, double state_b, const ArrayModel& model);

/// Bit-line currents of a CC cell in every stored case; the digits name (bitA, bitB).
struct CcCurrents {
    double hrs00, hrs01, lrs01, hrs10, lrs10, lrs11;
    double worst_ratio() const { return lrs11 / hrs00; }   // I_LRS11 / I_HRS00
    double mixed_ratio() const { return lrs10 / hrs10; }   // I_LRS10 / I_HRS10
};
CcCurrents cc_currents(const ArrayModel& model);
std::vector<PhaseTiming> phase_timing(const PhasePlan& plan, const ArrayModel& model, const Word& data);

/// Number of cells (or CC cells) of each data code in a word.
std::map<int, int> code_counts(Arch arch, const Word& data);

/// Stateful array: polarization per bit, class-aggregated protocols.
class MemoryArray {
public:
    explicit MemoryArray(ArrayConfig cfg);
    MemoryArray(ArrayConfig cfg, const std::vector<double>& initial);

    const ArrayModel& model() const { return model_; }
    const std::vector<double>& state() const { return p_; }
    double p(int row, int col) const { return p_[idx(row, col)]; }
    Word stored_word(const Address& a) const;
    /// Text snapshot: one line per word, "row word bits".
    std::string snapshot() const;

    /// Class-aggregated write (default) or per-cell brute force.
    EventLog write(const Address& a, const Word& data, bool per_cell = false);
    ReadResult read(const Address& a) const;

private:
    std::size_t idx(int row, int col) const { return static_cast<std::size_t>(row) * model_.cfg().n_c + col; }
    void check_address(const Address& a) const;
    WriteResult cached_transient(double p0, const std::vector<double>& levels,
                                 const std::vector<PhaseTiming>& timing);

    ArrayModel model_;
    std::vector<double> p_;
    std::map<std::pair<double, std::vector<double>>, WriteResult> cache_;
};

/// Two-word benchmark: the stored word alternates bits, the new word is half ones,
/// half zeros and flips exactly half of the bits.
std::pair<Word, Word> benchmark_words(int n_w);

}  // namespace pefet
