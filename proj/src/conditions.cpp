#include "semicont/conditions.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace semicont {

// ----------------------------------------------------------------- catalog

namespace {

using qs = quantifier_style;

const std::array<cond_info, cond_count> k_info = {{
    {"LSC", "lower semi-continuous", qs::filter, true, "classical"},
    {"SLSC", "sequentially lower semi-continuous", qs::sequence, true, "classical"},
    {"LPC", "lower pseudo-continuous", qs::filter, true, "morgan2007pseudocontinuous"},
    {"SLPC", "sequentially lower pseudo-continuous", qs::sequence, true, "morgan2004pseudocontinuity"},
    {"WLC", "weakly lower continuous", qs::filter, true, "campbell1990optimization"},
    {"SWLC", "sequentially weakly lower continuous", qs::sequence, true, "campbell1990optimization"},
    {"LQC", "lower quasi-continuous", qs::filter, true, "scalzo2009uniform"},
    {"SLQC", "sequentially lower quasi-continuous", qs::sequence, true, "morgan2004new"},
    {"PLC", "partially lower continuous", qs::filter, true, "nosratabadi2014partially"},
    {"SPLC", "sequentially partially lower continuous", qs::sequence, true, "nosratabadi2014partially"},
    {"SM", "submonotone", qs::net, true, "nemeth1986nonconvex"},
    {"LM", "lower monotone", qs::sequence, true, "al2008some"},
    {"LSCA", "lower semi-continuous from above", qs::sequence, true, "chen2002note; kirk2001b"},
    {"DSC", "decreasing semi-continuous", qs::net, true, "gajek1994weierstrass"},
    {"SDSC", "sequentially decreasing semi-continuous", qs::sequence, true, "gajek1994weierstrass"},
    {"RGI", "regular global infimum", qs::filter, true, "angrisani1982condizione"},
    {"ISLSC", "inf-sequentially lower semi-continuous", qs::sequence, true, "aruffo2008generalizations"},
    {"QRGI", "quasi-regular global infimum", qs::filter, true, "amini2016some"},
    {"SQRGI", "sequentially quasi-regular global infimum", qs::sequence, true, "amini2016some"},
    {"UBLSCA", "uniformly below lower semi-continuous from above", qs::net, false, "bottaro2010some def 3.1"},
    {"UBSLSCA", "uniformly below sequentially lower semi-continuous from above", qs::sequence, false, "bottaro2010some def 3.1"},
    {"BLSCA", "below lower semi-continuous from above", qs::net, true, "bottaro2010some def 3.1"},
    {"BSLSCA", "below sequentially lower semi-continuous from above", qs::sequence, true, "bottaro2010some def 3.1"},
    {"TLC", "transfer lower continuous", qs::filter, true, "tian1995transfer"},
    {"STLC", "sequentially transfer lower continuous", qs::sequence, true, "tian1995transfer"},
    {"TWLC", "transfer weakly lower continuous", qs::filter, true, "tian1995transfer"},
    {"STWLC", "sequentially transfer weakly lower continuous", qs::sequence, true, "morgan2004new"},
}};

std::string upper(std::string_view s) {
    std::string t(s);
    for (char& c : t)
        c = static_cast<char>(toupper(static_cast<unsigned char>(c)));
    return t;
}

} // namespace

const cond_info& info(cond c) {
    return k_info[static_cast<size_t>(c)];
}

std::optional<cond> parse_cond(std::string_view tag) {
    std::string t = upper(tag);
    for (int i = 0; i < cond_count; ++i)
        if (t == k_info[static_cast<size_t>(i)].tag)
            return static_cast<cond>(i);
    return std::nullopt;
}

const std::array<cond, cond_count>& all_conds() {
    static const auto a = [] {
        std::array<cond, cond_count> r{};
        for (int i = 0; i < cond_count; ++i)
            r[static_cast<size_t>(i)] = static_cast<cond>(i);
        return r;
    }();
    return a;
}

std::string hypothesis_set::str() const {
    if (bits == 0)
        return "(none)";
    std::string s;
    auto add = [&](const char* a) {
        if (!s.empty())
            s += ",";
        s += a;
    };
    if (n1())
        add("N1");
    if (no_jump())
        add("no-jump");
    if (conv_min_seq())
        add("conv-min-seq");
    if (conv_min_net())
        add("conv-min-net");
    if (empty_argmin())
        add("empty-argmin");
    return s;
}

std::optional<hypothesis_set> hypothesis_set::parse(std::string_view comma_list) {
    hypothesis_set h;
    size_t pos = 0;
    while (pos < comma_list.size()) {
        size_t c = comma_list.find(',', pos);
        std::string_view tok = comma_list.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos);
        pos = c == std::string_view::npos ? comma_list.size() : c + 1;
        std::string t = upper(tok);
        if (t.empty())
            continue;
        if (t == "N1")
            h.set_n1();
        else if (t == "NO-JUMP" || t == "NO-JUMPS")
            h.set_no_jump();
        else if (t == "CONV-MIN-SEQ")
            h.set_conv_min_seq();
        else if (t == "CONV-MIN-NET")
            h.set_conv_min_net();
        else if (t == "EMPTY-ARGMIN")
            h.set_empty_argmin();
        else
            return std::nullopt;
    }
    return h;
}

// ---------------------------------------------------------- finite_checker

finite_checker::finite_checker(finite_model m) : m_(std::move(m)) {
    auto v = validate(m_.space);
    if (!v.ok)
        throw std::invalid_argument("invalid finite space: " + v.what);
    if (m_.values.size() != m_.space.point_count())
        throw std::invalid_argument("model values not total on points");
    size_t n = m_.space.point_count();
    nb_.resize(n);
    nb_min_.resize(n);
    for (size_t x = 0; x < n; ++x) {
        nb_[x] = min_nbhd(m_.space, x);
        std::vector<ext_real> vals;
        for (size_t i = 0; i < n; ++i)
            if (nb_[x] & (1u << i))
                vals.push_back(m_.values[i]);
        nb_min_[x] = inf_of(vals);
    }
    min_ = inf_of(m_.values);
    for (size_t i = 0; i < n; ++i)
        if (m_.values[i] == min_)
            argmin_ |= (1u << i);
    for (size_t x = 0; x < n; ++x)
        if (nb_[x] & argmin_)
            cl_argmin_ |= (1u << x);
    values_sorted_ = m_.values;
    std::sort(values_sorted_.begin(), values_sorted_.end());
    values_sorted_.erase(std::unique(values_sorted_.begin(), values_sorted_.end()), values_sorted_.end());
}

bool finite_checker::conv_min_seq_at(size_t x) const {
    return nb_min_[x] == min_; // the minimum over a finite set is attained
}

bool finite_checker::jump_at(size_t x) const {
    // with finitely many attained values, every adjacent distinct pair is a
    // jump; x has one iff another value exists at all
    (void)x;
    return values_sorted_.size() >= 2;
}

bool finite_checker::has_jumps() const {
    return values_sorted_.size() >= 2;
}

hypothesis_set finite_checker::atoms_at(size_t x) const {
    hypothesis_set h;
    h.set_n1();
    if (!jump_at(x))
        h.set_no_jump();
    if (conv_min_seq_at(x)) {
        h.set_conv_min_seq();
        h.set_conv_min_net();
    }
    return h;
}

hypothesis_set finite_checker::atoms_global() const {
    hypothesis_set h;
    h.set_n1();
    if (!has_jumps())
        h.set_no_jump();
    // constant sequence at a global minimizer always converges
    h.set_conv_min_seq();
    h.set_conv_min_net();
    return h;
}

namespace {

// largest attained value strictly below v, if any
std::optional<ext_real> prev_value(const std::vector<ext_real>& sorted, const ext_real& v) {
    std::optional<ext_real> out;
    for (const auto& w : sorted) {
        if (w < v)
            out = w;
        else
            break;
    }
    return out;
}

} // namespace

bool finite_checker::truth_at(cond c, size_t x) const {
    const ext_real& fx = m_.values[x];
    const ext_real& mM = nb_min_[x];
    switch (c) {
    case cond::lsc:
    case cond::slsc:
        return fx <= mM;
    case cond::lpc:
    case cond::slpc: {
        auto prev = prev_value(values_sorted_, fx);
        return !prev || *prev < mM;
    }
    case cond::wlc:
    case cond::swlc:
    case cond::lqc:
    case cond::slqc: {
        auto prev = prev_value(values_sorted_, fx);
        return !prev || *prev <= mM;
    }
    case cond::plc:
    case cond::splc: {
        auto prev = prev_value(values_sorted_, fx);
        if (!prev)
            return true;
        auto prev2 = prev_value(values_sorted_, *prev);
        return !prev2 || *prev2 <= mM; // the adjacent value below fx forms a jump pair
    }
    case cond::sm:
    case cond::lm:
    case cond::lsca:
        return fx <= mM; // constant sequences at neighbors are decreasing
    case cond::dsc:
    case cond::sdsc:
        return true; // no strictly decreasing value sequence over a finite image
    case cond::rgi:
    case cond::islsc:
        return fx == min_ || mM > min_;
    case cond::blsca:
    case cond::bslsca:
        return mM >= fx || mM > min_; // no constrained approach, or threshold fits below it
    case cond::qrgi:
    case cond::sqrgi:
        return (nb_[x] & argmin_) != 0 || mM > min_;
    case cond::tlc:
    case cond::stlc:
        return fx == min_ || min_ < mM;
    case cond::twlc:
    case cond::stwlc:
        return min_ <= mM;
    case cond::ublsca:
    case cond::ubslsca:
        throw std::invalid_argument(std::string(info(c).tag) + " is not a pointwise condition");
    }
    return false;
}

namespace {

bool is_sequential(cond c) {
    return info(c).quant == quantifier_style::sequence;
}

std::string note_for(cond c, const char* backend) {
    std::string n = backend;
    if (is_sequential(c))
        n += "; sequential form via its net/filter counterpart (first countable)";
    return n;
}

} // namespace

verdict finite_checker::describe_at(cond c, size_t x) const {
    verdict out;
    out.holds = truth_at(c, x);
    const auto& names = m_.space.point_names;
    const ext_real& fx = m_.values[x];
    const ext_real& mM = nb_min_[x];
    size_t low = x;
    for (size_t i = 0; i < points(); ++i)
        if ((nb_[x] & (1u << i)) && m_.values[i] == mM) {
            low = i;
            break;
        }
    switch (c) {
    case cond::lsc:
    case cond::slsc:
    case cond::sm:
    case cond::lm:
    case cond::lsca:
        out.reduction = note_for(c, "finite: liminf and decreasing approaches realized on the minimal neighborhood");
        if (!out.holds)
            out.witness = "constant sequence at " + names[low] + ": f(" + names[low] + ")=" + mM.str() +
                          " < f(" + names[x] + ")=" + fx.str();
        break;
    case cond::lpc:
    case cond::slpc:
    case cond::wlc:
    case cond::swlc:
    case cond::lqc:
    case cond::slqc:
    case cond::plc:
    case cond::splc: {
        out.reduction = note_for(c, "finite: neighborhood infima realized on the minimal neighborhood");
        if (!out.holds) {
            auto prev = prev_value(values_sorted_, fx);
            ext_real y = *prev;
            if (c == cond::plc || c == cond::splc)
                y = *prev_value(values_sorted_, *prev);
            out.witness = "y with f(y)=" + y.str() + " against inf over min-nbhd(" + names[x] + ")=" + mM.str();
        }
        break;
    }
    case cond::dsc:
    case cond::sdsc:
        out.reduction = note_for(c, "finite: strictly decreasing value sequences cannot exist over a finite image");
        break;
    case cond::rgi:
    case cond::islsc:
    case cond::blsca:
    case cond::bslsca:
        out.reduction = note_for(c, "finite: minimizing sequences reach x iff the minimal neighborhood attains the global minimum");
        if (out.holds && fx == min_)
            out.witness = names[x] + " attains the global infimum " + min_.str();
        else if (out.holds)
            out.witness = "U=min-nbhd(" + names[x] + ") with inf " + mM.str() + " > " + min_.str();
        else
            out.witness = "minimizing constant sequence at " + names[low] + " converges to " + names[x] +
                          ", f(" + names[x] + ")=" + fx.str() + " > " + min_.str();
        break;
    case cond::qrgi:
    case cond::sqrgi:
        out.reduction = note_for(c, "finite: argmin closure and minimal-neighborhood infimum");
        if (out.holds && (nb_[x] & argmin_))
            out.witness = names[x] + " lies in the closure of argmin";
        else if (out.holds)
            out.witness = "U=min-nbhd(" + names[x] + ") with inf " + mM.str() + " > " + min_.str();
        break;
    case cond::tlc:
    case cond::stlc:
        out.reduction = note_for(c, "finite: strict transfer point against the minimal neighborhood");
        if (out.holds && fx == min_)
            out.witness = names[x] + " attains the global infimum";
        else if (out.holds)
            out.witness = "any minimizer y with f(y)=" + min_.str() + " < inf over min-nbhd = " + mM.str();
        else
            out.witness = "every y has f(y) >= inf over min-nbhd(" + names[x] + ") = " + mM.str();
        break;
    case cond::twlc:
    case cond::stwlc:
        out.reduction = note_for(c, "finite: a global minimizer transfers below every neighborhood infimum");
        if (out.holds)
            out.witness = "y = any global minimizer, f(y)=" + min_.str() + " <= inf over min-nbhd = " + mM.str();
        break;
    default:
        break;
    }
    return out;
}

verdict finite_checker::at(cond c, size_t x) const {
    if (!info(c).pointwise)
        throw std::invalid_argument(std::string(info(c).tag) + " is not a pointwise condition");
    if (x >= points())
        throw std::out_of_range("unknown point index");
    return describe_at(c, x);
}

verdict finite_checker::global(cond c) const {
    if (info(c).pointwise) {
        for (size_t x = 0; x < points(); ++x) {
            if (!truth_at(c, x)) {
                verdict out = describe_at(c, x);
                out.witness = "fails at " + m_.space.point_names[x] +
                              (out.witness.empty() ? "" : (": " + out.witness));
                return out;
            }
        }
        verdict out;
        out.holds = true;
        out.reduction = note_for(c, "finite: conjunction over all points");
        return out;
    }
    // uniform thresholds: a must sit strictly below every value of f on a
    // minimal neighborhood that undercuts the center's value
    verdict out;
    out.reduction = note_for(c, "finite: uniform threshold against undercutting neighborhood values");
    ext_real bound = ext_real::pos_inf();
    std::string where;
    for (size_t x = 0; x < points(); ++x) {
        if (nb_min_[x] < m_.values[x] && nb_min_[x] < bound) {
            bound = nb_min_[x];
            where = m_.space.point_names[x];
        }
    }
    if (bound.is_pos_inf()) {
        out.holds = true;
        out.witness = "a = +inf (no decreasing approach undercuts its limit point)";
        return out;
    }
    if (min_ < bound) {
        out.holds = true;
        out.witness = "a = " + strictly_between(min_, bound).str();
        return out;
    }
    out.holds = false;
    out.witness = "no a > " + min_.str() + " avoids the undercutting approach at " + where;
    return out;
}

// ------------------------------------------------------- piecewise_checker

piecewise_checker::piecewise_checker(piecewise_fn f) : f_(std::move(f)), img_(image_of(f_)) {
    criticals_ = f_.critical_points();
    if (img_.inf_attained) {
        for (const auto& p : f_.pieces()) {
            if (p.expr.is_constant()) {
                if (ext_real{p.expr.intercept} == img_.infimum) {
                    interval cl = p.dom; // closure in R
                    if (cl.lo.is_finite())
                        cl.lo_closed = true;
                    if (cl.hi.is_finite())
                        cl.hi_closed = true;
                    argmin_parts_.push_back(cl);
                }
                continue;
            }
            auto endpoint = [&](const ext_real& e, bool closed) {
                if (e.is_finite() && closed && ext_real{p.expr.eval(e.value())} == img_.infimum) {
                    interval s;
                    s.lo = s.hi = e;
                    s.lo_closed = s.hi_closed = true;
                    argmin_parts_.push_back(s);
                }
            };
            endpoint(p.dom.lo, p.dom.lo_closed);
            endpoint(p.dom.hi, p.dom.hi_closed);
        }
    }
}

bool piecewise_checker::in_argmin_closure(const rational& x) const {
    for (const auto& p : argmin_parts_)
        if (p.contains(x))
            return true;
    return false;
}

bool piecewise_checker::conv_min_seq_at(const rational& x) const {
    return analyze_point(f_, x).liminf == img_.infimum;
}

bool piecewise_checker::jump_at(const rational& x) const {
    return jump_at_value(img_, ext_real{f_.value_at(x)});
}

bool piecewise_checker::has_jumps() const {
    jump_report jr = jumps_of(f_);
    return !jr.jumps.empty() || jr.stair_tail;
}

hypothesis_set piecewise_checker::atoms_at(const rational& x) const {
    hypothesis_set h;
    h.set_n1();
    if (!jump_at(x))
        h.set_no_jump();
    if (conv_min_seq_at(x)) {
        h.set_conv_min_seq();
        h.set_conv_min_net();
    }
    return h;
}

hypothesis_set piecewise_checker::atoms_global() const {
    hypothesis_set h;
    h.set_n1();
    if (!has_jumps())
        h.set_no_jump();
    if (!img_.inf_attained)
        h.set_empty_argmin();
    bool conv = img_.inf_attained;
    if (!conv)
        for (const auto& x : checked_points())
            if (analyze_point(f_, x).liminf == img_.infimum) {
                conv = true;
                break;
            }
    if (conv) {
        h.set_conv_min_seq();
        h.set_conv_min_net();
    }
    return h;
}

namespace {

// staircase values 1/n (n >= from) inside the open interval (a, b):
// returns up to two of them, largest first
std::vector<rational> stair_values_in_open(const image_description& img, const ext_real& a, const ext_real& b) {
    std::vector<rational> out;
    if (!img.stair_tail || !(a < b) || !(b > ext_real{rational(0)}))
        return out;
    long long n_min = img.stair_from;
    if (b.is_finite()) {
        rational inv = rational(1) / b.value();
        n_min = std::max(n_min, inv.floor() + 1);
    }
    long long n_max = -1;
    if (!a.is_finite() || !a.value().is_pos()) {
        n_max = n_min + 1; // unbounded below: any two witnesses suffice
    } else {
        rational inv = rational(1) / a.value();
        n_max = inv.is_integer() ? inv.num() - 1 : inv.floor();
    }
    for (long long n = n_min; n <= n_max && out.size() < 2; ++n)
        out.push_back(rational(1, n));
    return out;
}

} // namespace

bool piecewise_checker::truth_at(cond c, const point_analysis& pa) const {
    const ext_real& fx = pa.fx;
    const ext_real& L = pa.liminf;
    const ext_real& gmin = img_.infimum;
    auto side_ok_decreasing = [&](const side_profile& s, bool strict_only) {
        switch (s.kind) {
        case approach_kind::constant:
            return strict_only || fx <= s.limit;
        case approach_kind::from_above:
            return fx <= s.limit;
        default:
            return true; // no approach, or values rising from below
        }
    };
    switch (c) {
    case cond::lsc:
    case cond::slsc:
        return fx <= L;
    case cond::lpc:
    case cond::slpc:
        return !img_.intersects_left_closed(L, fx);
    case cond::lqc:
    case cond::slqc:
        return !img_.intersects_open(L, fx);
    case cond::wlc:
    case cond::swlc:
        if (img_.intersects_open(L, fx))
            return false;
        if (L < fx && img_.contains(L) && !pa.liminf_attained)
            return false; // y with f(y)=L needs a neighborhood attaining the liminf
        return true;
    case cond::plc:
    case cond::splc: {
        if (img_.open_overlap_has_two_values(L, fx))
            return false; // two non-jump-paired values under fx beat any neighborhood
        for (const auto& p : img_.parts)
            if (p.is_singleton() && p.lo > L && p.lo < fx && !jump_pair(img_, p.lo, fx))
                return false;
        auto sv = stair_values_in_open(img_, L, fx);
        if (sv.size() >= 2)
            return false; // the smaller is not jump-paired with fx
        if (sv.size() == 1 && !jump_pair(img_, ext_real{sv[0]}, fx))
            return false;
        if (L < fx && img_.contains(L) && !pa.liminf_attained && !jump_pair(img_, L, fx))
            return false;
        return true;
    }
    case cond::sm:
    case cond::lm:
    case cond::lsca:
        return side_ok_decreasing(pa.left, false) && side_ok_decreasing(pa.right, false);
    case cond::dsc:
    case cond::sdsc:
        return side_ok_decreasing(pa.left, true) && side_ok_decreasing(pa.right, true);
    case cond::rgi:
    case cond::islsc:
        return fx == gmin || L > gmin;
    case cond::blsca:
    case cond::bslsca: {
        ext_real bound = ext_real::pos_inf();
        auto feed = [&](const side_profile& s) {
            if (s.kind == approach_kind::from_above && s.limit < fx && s.limit < bound)
                bound = s.limit;
            if (s.kind == approach_kind::constant && s.limit < fx && s.limit < bound)
                bound = s.limit;
        };
        feed(pa.left);
        feed(pa.right);
        return bound.is_pos_inf() || gmin < bound;
    }
    case cond::qrgi:
    case cond::sqrgi:
        return in_argmin_closure(pa.x) || L > gmin;
    case cond::tlc:
    case cond::stlc:
        return fx == gmin || L > gmin || (img_.inf_attained && !in_argmin_closure(pa.x));
    case cond::twlc:
    case cond::stwlc:
        return L > gmin || img_.inf_attained;
    case cond::ublsca:
    case cond::ubslsca:
        throw std::invalid_argument(std::string(info(c).tag) + " is not a pointwise condition");
    }
    return false;
}

namespace {

std::string seq_toward(const rational& x, bool left) {
    if (x.is_zero())
        return left ? "-1/n" : "1/n";
    return x.str() + (left ? " - 1/n" : " + 1/n");
}

} // namespace

verdict piecewise_checker::describe_at(cond c, const rational& x) const {
    point_analysis pa = analyze_point(f_, x);
    verdict out;
    out.holds = truth_at(c, pa);
    const ext_real& gmin = img_.infimum;
    switch (c) {
    case cond::lsc:
    case cond::slsc:
        out.reduction = note_for(c, "piecewise: one-sided liminf profiles");
        if (!out.holds) {
            bool left = pa.left.kind != approach_kind::none && pa.left.limit == pa.liminf;
            const side_profile& s = left ? pa.left : pa.right;
            out.witness = "sequence " + seq_toward(x, s, left) + " with f-values -> " + pa.liminf.str() +
                          " < f(" + x.str() + ")=" + pa.fx.str();
        }
        break;
    case cond::lpc:
    case cond::slpc:
    case cond::lqc:
    case cond::slqc:
    case cond::wlc:
    case cond::swlc:
    case cond::plc:
    case cond::splc:
        out.reduction = note_for(c, "piecewise: image intervals against the liminf with its attainment flag");
        if (!out.holds)
            out.witness = "some y with " + pa.liminf.str() + " <= f(y) < " + pa.fx.str() +
                          " beats every neighborhood infimum at " + x.str();
        break;
    case cond::sm:
    case cond::lm:
    case cond::lsca:
    case cond::dsc:
    case cond::sdsc: {
        out.reduction = note_for(c, "piecewise: decreasing approaches exist only along constant or from-above sides");
        if (!out.holds) {
            bool left_bad = (pa.left.kind == approach_kind::from_above && pa.left.limit < pa.fx) ||
                            ((c == cond::sm || c == cond::lm || c == cond::lsca) &&
                             pa.left.kind == approach_kind::constant && pa.left.limit < pa.fx);
            const side_profile& s = left_bad ? pa.left : pa.right;
            bool strict = s.kind == approach_kind::from_above;
            out.witness = std::string(strict ? "strictly decreasing" : "constant") + " value sequence along " +
                          seq_toward(x, s, left_bad) + " with limit " + s.limit.str() + " < f(" + x.str() + ")=" +
                          pa.fx.str();
        }
        break;
    }
    case cond::rgi:
    case cond::islsc:
    case cond::blsca:
    case cond::bslsca:
        out.reduction = note_for(c, "piecewise: liminf against the global infimum");
        if (out.holds && pa.fx == gmin)
            out.witness = x.str() + " attains the global infimum " + gmin.str();
        else if (out.holds)
            out.witness = "a neighborhood of " + x.str() + " keeps inf >= " + pa.liminf.str() + " > " + gmin.str();
        else
            out.witness = "minimizing sequence approaches " + x.str() + " (liminf " + pa.liminf.str() +
                          " = global inf), but f(" + x.str() + ")=" + pa.fx.str();
        break;
    case cond::qrgi:
    case cond::sqrgi:
        out.reduction = note_for(c, "piecewise: argmin closure and liminf against the global infimum");
        if (!out.holds)
            out.witness = x.str() + " outside the closure of argmin while minimizing sequences reach it";
        break;
    case cond::tlc:
    case cond::stlc:
        out.reduction = note_for(c, "piecewise: transfer point or neighborhood clear of minimizers");
        if (!out.holds)
            out.witness = "minimizers meet every neighborhood of " + x.str() + " and no transfer point exists";
        break;
    case cond::twlc:
    case cond::stwlc:
        out.reduction = note_for(c, "piecewise: transfer via a minimizer or a raised neighborhood infimum");
        if (!out.holds)
            out.witness = "infimum " + gmin.str() + " unattained and every neighborhood infimum equals it";
        break;
    default:
        break;
    }
    return out;
}

verdict piecewise_checker::at(cond c, const rational& x) const {
    if (!info(c).pointwise)
        throw std::invalid_argument(std::string(info(c).tag) + " is not a pointwise condition");
    if (!f_.in_domain(x))
        throw std::out_of_range("point " + x.str() + " outside the domain");
    return describe_at(c, x);
}

std::vector<long long> piecewise_checker::stair_candidates() const {
    std::vector<long long> cands;
    if (!f_.stairs())
        return cands;
    long long s = f_.stairs()->start_n;
    cands.push_back(s);
    cands.push_back(s + 1);
    ext_real top{rational(1, s)};
    for (const auto& p : img_.parts) {
        ext_real upper = p.hi < top ? p.hi : top;
        if (!(upper > ext_real{rational(0)}))
            continue;
        if (p.is_singleton()) {
            const rational& v = p.lo.value();
            if (v.is_pos() && ext_real{v} < top) {
                rational inv = rational(1) / v;
                if (!inv.is_integer() && inv.floor() >= s)
                    cands.push_back(inv.floor());
            }
            continue;
        }
        // smallest N >= s whose window (1/(N+1), 1/N) dips below this part's top
        rational u = upper.value();
        rational inv = rational(1) / u;
        long long np1 = inv.floor() + 1; // least integer > 1/u
        long long cand = std::max(s, np1 - 1);
        for (long long k = 0; k < 3; ++k)
            cands.push_back(cand + k);
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

std::vector<rational> piecewise_checker::checked_points() const {
    std::vector<rational> pts = criticals_;
    for (long long n : stair_candidates())
        pts.push_back(rational(n));
    return pts; // criticals precede the staircase region by construction
}

piecewise_checker::threshold_bound piecewise_checker::uniform_threshold_bound() const {
    threshold_bound b;
    auto offer = [&](const ext_real& v, bool inclusive, const std::string& origin) {
        if (v < b.value || (v == b.value && !inclusive)) {
            b.value = v;
            b.inclusive = inclusive;
            b.origin = origin;
        }
    };
    for (const auto& x : criticals_) {
        point_analysis pa = analyze_point(f_, x);
        auto feed = [&](const side_profile& s, const char* which) {
            if (s.kind == approach_kind::from_above && s.limit < pa.fx)
                offer(s.limit, true, "strictly decreasing approach at " + x.str() + " (" + which + ")");
            if (s.kind == approach_kind::constant && s.limit < pa.fx)
                offer(s.limit, false, "constant approach at " + x.str() + " (" + which + ")");
        };
        feed(pa.left, "left");
        feed(pa.right, "right");
    }
    if (f_.stairs()) {
        // every breakpoint N forces a < 1/(N+1); jointly a <= 0
        offer(ext_real{rational(0)}, true, "staircase breakpoint constraints accumulate at 0");
    }
    return b;
}

verdict piecewise_checker::global(cond c) const {
    if (info(c).pointwise) {
        for (const auto& x : checked_points()) {
            point_analysis pa = analyze_point(f_, x);
            if (!truth_at(c, pa)) {
                verdict out = describe_at(c, x);
                out.witness = "fails at " + x.str() + (out.witness.empty() ? "" : (": " + out.witness));
                return out;
            }
        }
        verdict out;
        out.holds = true;
        out.reduction = note_for(c, "piecewise: breakpoints and staircase candidates; interior points are continuity points");
        return out;
    }
    verdict out;
    out.reduction = note_for(c, "piecewise: uniform threshold against decreasing-approach limits");
    threshold_bound b = uniform_threshold_bound();
    const ext_real& gmin = img_.infimum;
    if (b.value.is_pos_inf()) {
        out.holds = true;
        out.witness = "a = +inf (no decreasing approach undercuts its limit point)";
        return out;
    }
    if (gmin < b.value) {
        out.holds = true;
        out.witness = "a = " + strictly_between(gmin, b.value).str();
        return out;
    }
    out.holds = false;
    out.witness = "no a > " + gmin.str() + " clears: " + b.origin;
    return out;
}

// ------------------------------------------------------------------ suites

twlc_equivalence check_twlc_equivalences(const finite_checker& fc, size_t x) {
    const finite_model& m = fc.model();
    size_t n = m.space.point_count();
    twlc_equivalence out;
    out.item[0] = fc.at(cond::twlc, x).holds;
    // (2) a transfer point against the literal liminf
    ext_real li = liminf_at(m, x);
    for (size_t y = 0; y < n && !out.item[1]; ++y)
        out.item[1] = m.values[y] <= li;
    // convergent eventually-periodic nets are exactly the cycles inside every
    // open neighborhood; their value liminf is the cycle minimum
    std::vector<ext_real> cycle_liminfs;
    for (point_set s = 1; s < (1u << n); ++s) {
        bool conv = true;
        for (point_set o : m.space.opens)
            if ((o & (1u << x)) && (s & ~o)) {
                conv = false;
                break;
            }
        if (!conv)
            continue;
        std::vector<ext_real> vals;
        for (size_t i = 0; i < n; ++i)
            if (s & (1u << i))
                vals.push_back(m.values[i]);
        cycle_liminfs.push_back(inf_of(vals));
    }
    ext_real worst = inf_of(cycle_liminfs); // constant net at x always converges
    for (size_t y = 0; y < n && !out.item[2]; ++y)
        out.item[2] = m.values[y] <= worst;
    out.item[3] = true;
    for (const auto& li_net : cycle_liminfs) {
        bool some = false;
        for (size_t y = 0; y < n && !some; ++y)
            some = m.values[y] <= li_net;
        out.item[3] = out.item[3] && some;
    }
    return out;
}

two_route check_lpc_levelsets(const finite_checker& fc) {
    const finite_model& m = fc.model();
    size_t n = m.space.point_count();
    two_route out;
    out.lhs = true;
    for (size_t x = 0; x < n; ++x)
        out.lhs = out.lhs && fc.at(cond::lpc, x).holds;
    out.rhs = true;
    for (size_t i = 0; i < n; ++i) {
        const ext_real& lam = m.values[i]; // heights in the image
        point_set lev = 0;
        for (size_t x = 0; x < n; ++x)
            if (m.values[x] <= lam)
                lev |= (1u << x);
        point_set complement = fc.model().space.full_set() & ~lev;
        bool closed = std::find(m.space.opens.begin(), m.space.opens.end(), complement) != m.space.opens.end();
        if (!closed) {
            out.rhs = false;
            out.note = "level set at " + lam.str() + " not closed";
            break;
        }
    }
    return out;
}

namespace {

// independent route: eventually-periodic sequences quantified against the
// raw opens, no minimal-neighborhood shortcut
bool minimizing_seq_to(const finite_model& m, size_t x, const ext_real& gmin) {
    size_t n = m.space.point_count();
    for (point_set s = 1; s < (1u << n); ++s) {
        bool conv = true;
        for (point_set o : m.space.opens)
            if ((o & (1u << x)) && (s & ~o)) {
                conv = false;
                break;
            }
        if (!conv)
            continue;
        bool all_min = true;
        for (size_t i = 0; i < n && all_min; ++i)
            if (s & (1u << i))
                all_min = m.values[i] == gmin;
        if (all_min)
            return true; // cycling minimizers: value sequence -> global inf
    }
    return false;
}

bool argmin_seq_to(const finite_model& m, size_t x, const ext_real& gmin) {
    return minimizing_seq_to(m, x, gmin); // same cycles: values constantly gmin
}

} // namespace

two_route check_rgi_char(const finite_checker& fc, size_t x) {
    const finite_model& m = fc.model();
    two_route out;
    out.lhs = fc.at(cond::rgi, x).holds;
    ext_real gmin = inf_of(m.values);
    out.rhs = !minimizing_seq_to(m, x, gmin) || m.values[x] == gmin;
    return out;
}

two_route check_qrgi_char(const finite_checker& fc, size_t x) {
    const finite_model& m = fc.model();
    two_route out;
    out.lhs = fc.at(cond::qrgi, x).holds;
    ext_real gmin = inf_of(m.values);
    out.rhs = !minimizing_seq_to(m, x, gmin) || argmin_seq_to(m, x, gmin);
    return out;
}

two_route check_plc_jump_char(const piecewise_checker& pc) {
    two_route out;
    out.lhs = pc.global(cond::plc).holds;

    // countably many jumps is structural here: finitely many explicit gaps
    // plus at most the staircase family
    const image_description& img = pc.image();

    // clause: for every x and every attained y-value below f(x) that is not
    // jump-paired with it, some neighborhood keeps f >= that value; decided
    // from raw side profiles, independent of the checker's verdict logic
    auto side_eventually_at_least = [&](const side_profile& s, const ext_real& v) {
        switch (s.kind) {
        case approach_kind::none:
            return true;
        case approach_kind::constant:
            return s.limit >= v;
        case approach_kind::from_above:
            return s.limit >= v;
        case approach_kind::from_below:
            return s.limit > v;
        }
        return true;
    };
    out.rhs = true;
    for (const auto& x : pc.checked_points()) {
        point_analysis pa = analyze_point(pc.fn(), x);
        // candidate y-values: attained part boundaries below fx, interior
        // representatives of each threshold band, staircase values near fx
        std::vector<ext_real> cands;
        std::vector<ext_real> cuts{pa.fx};
        if (pa.left.kind != approach_kind::none)
            cuts.push_back(pa.left.limit);
        if (pa.right.kind != approach_kind::none)
            cuts.push_back(pa.right.limit);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (const auto& p : img.parts) {
            if (p.lo < pa.fx && img.contains(p.lo))
                cands.push_back(p.lo);
            if (p.hi < pa.fx && img.contains(p.hi))
                cands.push_back(p.hi);
            // a representative inside every cut band this part crosses
            for (size_t i = 0; i + 1 <= cuts.size(); ++i) {
                ext_real lo = i == 0 ? ext_real::neg_inf() : cuts[i - 1];
                ext_real hi = cuts[std::min(i, cuts.size() - 1)];
                if (!(lo < hi))
                    continue;
                ext_real a = p.lo > lo ? p.lo : lo;
                ext_real b = p.hi < hi ? p.hi : hi;
                if (a < b)
                    cands.push_back(strictly_between(a, b));
            }
        }
        auto sv = stair_values_in_open(img, ext_real::neg_inf(), pa.fx);
        for (const auto& v : sv)
            cands.push_back(ext_real{v});
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        for (const auto& v : cands) {
            if (!(v < pa.fx) || !img.contains(v))
                continue;
            if (jump_pair(img, v, pa.fx))
                continue;
            bool ok = pa.fx >= v && side_eventually_at_least(pa.left, v) && side_eventually_at_least(pa.right, v);
            if (!ok) {
                out.rhs = false;
                out.note = "clause fails at x=" + x.str() + " for value " + v.str();
                return out;
            }
        }
    }
    return out;
}

} // namespace semicont
