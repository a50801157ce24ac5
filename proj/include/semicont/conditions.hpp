#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semicont/piecewise.hpp"
#include "semicont/topology.hpp"

namespace semicont {

/** The 27 weak lower-semicontinuity conditions. UBLSCA and UBSLSCA are the
    only global-only members; everything else is pointwise. */
enum class cond : unsigned char {
    lsc, slsc, lpc, slpc, wlc, swlc, lqc, slqc, plc, splc,
    sm, lm, lsca, dsc, sdsc, rgi, islsc, qrgi, sqrgi,
    ublsca, ubslsca, blsca, bslsca, tlc, stlc, twlc, stwlc,
};

inline constexpr int cond_count = 27;

enum class quantifier_style : unsigned char { filter, sequence, net };

struct cond_info {
    const char* tag;        // "LSC"
    const char* name;       // "lower semi-continuous"
    quantifier_style quant;
    bool pointwise;         // false for the two uniform conditions
    const char* origin;     // where the notion was introduced
};

const cond_info& info(cond c);
std::optional<cond> parse_cond(std::string_view tag); // case-insensitive
const std::array<cond, cond_count>& all_conds();

struct verdict {
    bool holds = false;
    std::string witness;   // deterministic, replayable description
    std::string reduction; // documented backend reduction that decided it
};

// Hypothesis atoms a concrete model (or model/point) satisfies; shared with
// the implication graph.
struct hypothesis_set {
    unsigned char bits = 0;
    bool n1() const { return bits & 1; }
    bool no_jump() const { return bits & 2; }
    bool conv_min_seq() const { return bits & 4; }
    bool conv_min_net() const { return bits & 8; }
    bool empty_argmin() const { return bits & 16; }
    hypothesis_set& set_n1() { bits |= 1; return *this; }
    hypothesis_set& set_no_jump() { bits |= 2; return *this; }
    hypothesis_set& set_conv_min_seq() { bits |= 4; return *this; }
    hypothesis_set& set_conv_min_net() { bits |= 8; return *this; }
    hypothesis_set& set_empty_argmin() { bits |= 16; return *this; }
    bool includes(const hypothesis_set& o) const { return (bits & o.bits) == o.bits; }
    friend bool operator==(const hypothesis_set&, const hypothesis_set&) = default;
    std::string str() const;
    static std::optional<hypothesis_set> parse(std::string_view comma_list);
};

/** Decision procedures over a finite topological model. Net and sequence
    quantifiers are evaluated through the minimal-neighborhood reductions
    proved in docs/reductions.md; every reduction is cross-checked against
    the literal-definition oracle by the search module. */
class finite_checker {
public:
    explicit finite_checker(finite_model m); // validates space and totality

    const finite_model& model() const { return m_; }
    size_t points() const { return m_.space.point_count(); }

    verdict at(cond c, size_t x) const;     // throws on global-only cond / bad point
    verdict global(cond c) const;

    // hypothesis atoms
    bool conv_min_seq_at(size_t x) const;   // equal to the net version here
    bool jump_at(size_t x) const;
    bool has_jumps() const;
    hypothesis_set atoms_at(size_t x) const;
    hypothesis_set atoms_global() const;

    // shared analysis, read-only after construction
    point_set min_nb(size_t x) const { return nb_[x]; }
    const ext_real& min_over_nb(size_t x) const { return nb_min_[x]; }
    const ext_real& global_min() const { return min_; }
    point_set argmin_mask() const { return argmin_; }
    point_set argmin_closure() const { return cl_argmin_; }

private:
    finite_model m_;
    std::vector<point_set> nb_;
    std::vector<ext_real> nb_min_;
    ext_real min_;
    point_set argmin_ = 0;
    point_set cl_argmin_ = 0;
    std::vector<ext_real> values_sorted_; // distinct, ascending

    bool truth_at(cond c, size_t x) const;
    verdict describe_at(cond c, size_t x) const;
};

/** Decision procedures over a piecewise function on a finite union of real
    intervals. Sequential and net conditions are evaluated through the
    side-approach-profile reductions in docs/reductions.md. */
class piecewise_checker {
public:
    explicit piecewise_checker(piecewise_fn f);

    const piecewise_fn& fn() const { return f_; }
    const image_description& image() const { return img_; }

    verdict at(cond c, const rational& x) const;
    verdict global(cond c) const;

    bool conv_min_seq_at(const rational& x) const;
    bool jump_at(const rational& x) const;
    bool has_jumps() const;
    bool argmin_empty() const { return !img_.inf_attained; }
    bool in_argmin_closure(const rational& x) const;
    hypothesis_set atoms_at(const rational& x) const;
    hypothesis_set atoms_global() const;

    // domain points global() examines: explicit critical points, then the
    // staircase breakpoint candidates (everything else is a continuity point)
    std::vector<rational> checked_points() const;

private:
    piecewise_fn f_;
    image_description img_;
    std::vector<rational> criticals_;
    std::vector<interval> argmin_parts_; // closure of the minimizer set
    bool truth_at(cond c, const point_analysis& pa) const;
    verdict describe_at(cond c, const rational& x) const;
    std::vector<long long> stair_candidates() const;
    struct threshold_bound {
        ext_real value = ext_real::pos_inf();
        bool inclusive = true;
        std::string origin;
    };
    threshold_bound uniform_threshold_bound() const;
};

// ---------------------------------------------------------------- suites

/** The four equivalent readings of transfer weak lower continuity at a
    point of a finite model, each evaluated independently. */
struct twlc_equivalence {
    bool item[4] = {false, false, false, false};
    bool agree() const { return item[0] == item[1] && item[1] == item[2] && item[2] == item[3]; }
};
twlc_equivalence check_twlc_equivalences(const finite_checker& fc, size_t x);

struct two_route {
    bool lhs = false;
    bool rhs = false;
    bool agree() const { return lhs == rhs; }
    std::string note;
};

// everywhere-LPC against closedness of every level set at attained heights
two_route check_lpc_levelsets(const finite_checker& fc);
// definitional form against the minimizing-net characterization
two_route check_rgi_char(const finite_checker& fc, size_t x);
two_route check_qrgi_char(const finite_checker& fc, size_t x);
// everywhere-PLC against the countable-jumps + neighborhood-clause form
two_route check_plc_jump_char(const piecewise_checker& pc);

} // namespace semicont
