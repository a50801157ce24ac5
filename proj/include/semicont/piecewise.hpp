#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicont/ext_real.hpp"

namespace semicont {

/** Nonempty real interval with rational or infinite endpoints and
    open/closed flags. Infinite endpoints are always open. Text form uses
    bracket/paren flags, e.g. "(-1,2]". */
struct interval {
    ext_real lo = ext_real::neg_inf();
    ext_real hi = ext_real::pos_inf();
    bool lo_closed = false;
    bool hi_closed = false;

    static interval parse(std::string_view s);
    std::string str() const;
    void check() const; // throws on empty/malformed

    bool contains(const rational& x) const;
    bool is_singleton() const { return lo == hi; }
};

struct affine_expr {
    rational slope;
    rational intercept;
    rational eval(const rational& x) const { return slope * x + intercept; }
    bool is_constant() const { return slope.is_zero(); }
};

struct piece {
    interval dom;
    affine_expr expr;
};

/** The 1/n staircase: value 1/n on (n-1, n] for every n >= start_n,
    occupying (start_n - 1, +inf). Listing outputs are truncated at
    truncation; every verdict is decided against the closed-form rule. */
struct staircase_family {
    long long start_n = 1;
    long long truncation = 12;
};

class piecewise_fn {
public:
    static piecewise_fn make(std::vector<piece> pieces, std::optional<staircase_family> stairs = std::nullopt);

    const std::vector<piece>& pieces() const { return pieces_; }
    const std::optional<staircase_family>& stairs() const { return stairs_; }

    bool in_domain(const rational& x) const;
    rational value_at(const rational& x) const; // throws outside domain

    // the finite piece endpoints that are themselves domain points; every
    // other explicit-piece point is interior, where f is affine and
    // continuous (staircase breakpoints are handled in closed form)
    std::vector<rational> critical_points() const;

private:
    std::vector<piece> pieces_; // sorted, pairwise disjoint
    std::optional<staircase_family> stairs_;
};

enum class approach_kind : unsigned char { none, constant, from_above, from_below };

struct side_profile {
    approach_kind kind = approach_kind::none;
    ext_real limit = ext_real::pos_inf(); // one-sided liminf; +inf when no approach
};

/** Exact one-sided data at a domain point. liminf is the non-punctured
    liminf L(x) = min(f(x), side limits); liminf_attained records whether
    some neighborhood U realizes inf_U f = L(x). */
struct point_analysis {
    rational x;
    ext_real fx;
    side_profile left, right;
    ext_real liminf = ext_real::pos_inf();
    bool liminf_attained = true;
    bool isolated = false;
};

point_analysis analyze_point(const piecewise_fn& fn, const rational& x);

/** Exact range of the function: disjoint sorted interval parts plus an
    optional marker for the staircase family {1/n : n >= stair_from},
    which accumulates at 0 from above. */
struct image_description {
    std::vector<interval> parts;
    bool stair_tail = false;
    long long stair_from = 1;
    ext_real infimum = ext_real::pos_inf();
    bool inf_attained = false;

    bool contains(const ext_real& v) const;
    bool intersects_open(const ext_real& a, const ext_real& b) const;        // any value in (a,b)
    bool intersects_left_closed(const ext_real& a, const ext_real& b) const; // any value in [a,b)
    // some part intersects (a,b) in more than one point
    bool open_overlap_has_two_values(const ext_real& a, const ext_real& b) const;
};

image_description image_of(const piecewise_fn& fn);

struct jump_interval {
    ext_real lo, hi;
};

/** Maximal range gaps with both endpoints attained. With a staircase the
    gaps (1/(n+1), 1/n) continue past the listed truncation; stair_tail
    marks that. */
struct jump_report {
    std::vector<jump_interval> jumps;
    bool stair_tail = false;
    long long stair_from = 1;
};

jump_report jumps_of(const piecewise_fn& fn);

bool is_jump(const image_description& img, const ext_real& p, const ext_real& q);
// unordered pair of attained values forming a jump
bool jump_pair(const image_description& img, const ext_real& v, const ext_real& w);
bool jump_at_value(const image_description& img, const ext_real& v);

bool min_seq_converging_to(const piecewise_fn& fn, const rational& x);

} // namespace semicont
