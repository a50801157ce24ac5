#include "semicont/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace semicont {

// ---------------------------------------------------------------- interval

void interval::check() const {
    if (lo > hi)
        throw std::invalid_argument("interval: lo > hi in " + str());
    if (lo == hi && (!lo_closed || !hi_closed || !lo.is_finite()))
        throw std::invalid_argument("interval: degenerate " + str());
    if ((lo.is_neg_inf() && lo_closed) || (hi.is_pos_inf() && hi_closed))
        throw std::invalid_argument("interval: closed infinite endpoint in " + str());
    if (lo.is_pos_inf() || hi.is_neg_inf())
        throw std::invalid_argument("interval: empty " + str());
}

bool interval::contains(const rational& x) const {
    ext_real v{x};
    if (v < lo || (v == lo && !lo_closed))
        return false;
    if (v > hi || (v == hi && !hi_closed))
        return false;
    return true;
}

interval interval::parse(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("interval: bad literal '" + std::string(s) + "'"); };
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c)))
            t += c;
    if (t.size() < 4)
        fail();
    interval iv;
    if (t.front() == '[')
        iv.lo_closed = true;
    else if (t.front() != '(')
        fail();
    if (t.back() == ']')
        iv.hi_closed = true;
    else if (t.back() != ')')
        fail();
    std::string body = t.substr(1, t.size() - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos)
        fail();
    iv.lo = ext_real::parse(body.substr(0, comma));
    iv.hi = ext_real::parse(body.substr(comma + 1));
    iv.check();
    return iv;
}

std::string interval::str() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.str();
    s += ',';
    s += hi.str();
    s += hi_closed ? ']' : ')';
    return s;
}

namespace {

// strict order on disjoint intervals
bool interval_before(const interval& a, const interval& b) {
    if (a.lo != b.lo)
        return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
}

bool intervals_overlap(const interval& a, const interval& b) {
    // assumes interval_before(a, b) or equal lo
    if (a.lo == b.lo)
        return true;
    if (b.lo < a.hi)
        return true;
    if (b.lo == a.hi && b.lo_closed && a.hi_closed)
        return true;
    return false;
}

} // namespace

// ------------------------------------------------------------ piecewise_fn

piecewise_fn piecewise_fn::make(std::vector<piece> pieces, std::optional<staircase_family> stairs) {
    piecewise_fn f;
    for (auto& p : pieces)
        p.dom.check();
    std::sort(pieces.begin(), pieces.end(),
              [](const piece& a, const piece& b) { return interval_before(a.dom, b.dom); });
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
        if (intervals_overlap(pieces[i].dom, pieces[i + 1].dom))
            throw std::invalid_argument("pieces overlap: " + pieces[i].dom.str() + " and " + pieces[i + 1].dom.str());
    if (stairs) {
        if (stairs->start_n < 1)
            throw std::invalid_argument("staircase start must be >= 1");
        if (stairs->truncation < stairs->start_n)
            throw std::invalid_argument("staircase truncation below start");
        ext_real edge{rational(stairs->start_n - 1)};
        for (const auto& p : pieces)
            if (p.dom.hi > edge)
                throw std::invalid_argument("piece " + p.dom.str() + " overlaps the staircase region");
    }
    if (pieces.empty() && !stairs)
        throw std::invalid_argument("piecewise function with empty domain");
    f.pieces_ = std::move(pieces);
    f.stairs_ = stairs;
    return f;
}

bool piecewise_fn::in_domain(const rational& x) const {
    for (const auto& p : pieces_)
        if (p.dom.contains(x))
            return true;
    if (stairs_ && ext_real{x} > ext_real{rational(stairs_->start_n - 1)})
        return true;
    return false;
}

rational piecewise_fn::value_at(const rational& x) const {
    for (const auto& p : pieces_)
        if (p.dom.contains(x))
            return p.expr.eval(x);
    if (stairs_ && ext_real{x} > ext_real{rational(stairs_->start_n - 1)}) {
        long long n = x.ceil(); // cell (n-1, n]
        return rational(1, n);
    }
    throw std::out_of_range("point " + x.str() + " outside the domain");
}

std::vector<rational> piecewise_fn::critical_points() const {
    std::vector<rational> pts;
    for (const auto& p : pieces_) {
        if (p.dom.lo.is_finite() && p.dom.lo_closed)
            pts.push_back(p.dom.lo.value());
        if (p.dom.hi.is_finite() && p.dom.hi_closed)
            pts.push_back(p.dom.hi.value());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// ------------------------------------------------------------ side analysis

namespace {

// occupant of (x, x+eps) for dir=+1 or (x-eps, x) for dir=-1, as a profile
side_profile side_of(const piecewise_fn& fn, const rational& x, int dir) {
    side_profile out;
    ext_real ex{x};
    for (const auto& p : fn.pieces()) {
        bool occupies;
        if (dir > 0)
            occupies = (p.dom.contains(x) && ex < p.dom.hi) || (p.dom.lo == ex && !p.dom.lo_closed);
        else
            occupies = (p.dom.contains(x) && ex > p.dom.lo) || (p.dom.hi == ex && !p.dom.hi_closed);
        if (!occupies)
            continue;
        rational limit = p.expr.eval(x);
        if (p.expr.is_constant()) {
            out.kind = approach_kind::constant;
        } else if ((dir > 0) == p.expr.slope.is_pos()) {
            out.kind = approach_kind::from_above; // values above the limit near x
        } else {
            out.kind = approach_kind::from_below;
        }
        out.limit = ext_real{limit};
        return out;
    }
    if (fn.stairs()) {
        rational edge(fn.stairs()->start_n - 1);
        bool occupies = dir > 0 ? x >= edge : x > edge;
        if (occupies) {
            // points just right of x sit in cell (floor(x), floor(x)+1];
            // points just left of x share x's own cell (ceil(x)-1, ceil(x)]
            long long n = dir > 0 ? x.floor() + 1 : x.ceil();
            out.kind = approach_kind::constant;
            out.limit = ext_real{rational(1, n)};
            return out;
        }
    }
    return out; // none
}

} // namespace

point_analysis analyze_point(const piecewise_fn& fn, const rational& x) {
    if (!fn.in_domain(x))
        throw std::out_of_range("point " + x.str() + " outside the domain");
    point_analysis pa;
    pa.x = x;
    pa.fx = ext_real{fn.value_at(x)};
    pa.left = side_of(fn, x, -1);
    pa.right = side_of(fn, x, +1);
    pa.liminf = pa.fx;
    if (pa.left.kind != approach_kind::none && pa.left.limit < pa.liminf)
        pa.liminf = pa.left.limit;
    if (pa.right.kind != approach_kind::none && pa.right.limit < pa.liminf)
        pa.liminf = pa.right.limit;
    // a side whose values rise to L from strictly below keeps every
    // neighborhood infimum strictly under L
    pa.liminf_attained = !((pa.left.kind == approach_kind::from_below && pa.left.limit == pa.liminf) ||
                           (pa.right.kind == approach_kind::from_below && pa.right.limit == pa.liminf));
    pa.isolated = pa.left.kind == approach_kind::none && pa.right.kind == approach_kind::none;
    return pa;
}

// ------------------------------------------------------------------- image

namespace {

interval piece_image(const piece& p) {
    interval out;
    if (p.expr.is_constant()) {
        rational c = p.expr.intercept;
        out.lo = out.hi = ext_real{c};
        out.lo_closed = out.hi_closed = true;
        return out;
    }
    auto eval_end = [&](const ext_real& e) -> ext_real {
        if (e.is_finite())
            return ext_real{p.expr.eval(e.value())};
        bool up = p.expr.slope.is_pos() == e.is_pos_inf();
        return up ? ext_real::pos_inf() : ext_real::neg_inf();
    };
    ext_real vlo = eval_end(p.dom.lo), vhi = eval_end(p.dom.hi);
    bool clo = p.dom.lo_closed, chi = p.dom.hi_closed;
    if (p.expr.slope.is_pos()) {
        out = interval{vlo, vhi, clo, chi};
    } else {
        out = interval{vhi, vlo, chi, clo};
    }
    return out;
}

} // namespace

image_description image_of(const piecewise_fn& fn) {
    image_description img;
    std::vector<interval> parts;
    for (const auto& p : fn.pieces())
        parts.push_back(piece_image(p));
    std::sort(parts.begin(), parts.end(), [](const interval& a, const interval& b) {
        if (a.lo != b.lo)
            return a.lo < b.lo;
        if (a.lo_closed != b.lo_closed)
            return a.lo_closed;
        return a.hi < b.hi;
    });
    for (const auto& part : parts) {
        if (!img.parts.empty()) {
            interval& last = img.parts.back();
            bool joins = part.lo < last.hi || (part.lo == last.hi && (part.lo_closed || last.hi_closed));
            if (joins) {
                if (part.hi > last.hi) {
                    last.hi = part.hi;
                    last.hi_closed = part.hi_closed;
                } else if (part.hi == last.hi) {
                    last.hi_closed = last.hi_closed || part.hi_closed;
                }
                continue;
            }
        }
        img.parts.push_back(part);
    }
    if (fn.stairs()) {
        img.stair_tail = true;
        img.stair_from = fn.stairs()->start_n;
    }
    // global infimum and attainment
    if (!img.parts.empty()) {
        img.infimum = img.parts.front().lo;
        img.inf_attained = img.parts.front().lo_closed;
    }
    if (img.stair_tail) {
        ext_real zero{rational(0)};
        if (img.parts.empty() || zero < img.infimum) {
            img.infimum = zero;
            img.inf_attained = false; // the staircase only accumulates at 0
        }
    }
    return img;
}

bool image_description::contains(const ext_real& v) const {
    if (!v.is_finite())
        return false;
    for (const auto& p : parts) {
        if (v < p.lo || (v == p.lo && !p.lo_closed))
            continue;
        if (v > p.hi || (v == p.hi && !p.hi_closed))
            continue;
        return true;
    }
    if (stair_tail && v.value().is_pos() && v.value().num() == 1 && v.value().den() >= stair_from)
        return true;
    return false;
}

bool image_description::intersects_open(const ext_real& a, const ext_real& b) const {
    if (!(a < b))
        return false;
    for (const auto& p : parts)
        if (p.lo < b && a < p.hi)
            return true;
    if (stair_tail) {
        // any n >= stair_from with a < 1/n < b
        if (!(b > ext_real{rational(0)}))
            return false;
        long long n_min = stair_from;
        if (b.is_finite()) {
            rational inv = rational(1) / b.value(); // 1/n < b  <=>  n > 1/b
            n_min = std::max(n_min, inv.floor() + 1);
        }
        if (!a.is_finite() || !a.value().is_pos())
            return true; // all large n qualify
        rational inv = rational(1) / a.value(); // 1/n > a  <=>  n < 1/a
        long long n_max = inv.is_integer() ? inv.num() - 1 : inv.floor();
        return n_min <= n_max;
    }
    return false;
}

bool image_description::intersects_left_closed(const ext_real& a, const ext_real& b) const {
    if (!(a < b))
        return false;
    return contains(a) || intersects_open(a, b);
}

bool image_description::open_overlap_has_two_values(const ext_real& a, const ext_real& b) const {
    if (!(a < b))
        return false;
    for (const auto& p : parts) {
        if (!(p.lo < b && a < p.hi))
            continue;
        if (p.is_singleton())
            continue;
        // overlap of a nondegenerate part with an open interval is open-ended
        // on at least one side, hence infinite
        ext_real lo = std::max(p.lo, a), hi = std::min(p.hi, b);
        if (lo < hi)
            return true;
    }
    return false;
}

// ------------------------------------------------------------------- jumps

namespace {

struct boundary_probe {
    bool any = false;          // some value on that side of v
    bool accumulates = false;  // values approach v arbitrarily closely
    ext_real s;                // the extreme value otherwise
    bool attained = false;
};

boundary_probe sup_below(const image_description& img, const ext_real& v) {
    boundary_probe out;
    bool cand = false;
    auto offer = [&](const ext_real& s, bool attained) {
        if (!cand || s > out.s || (s == out.s && attained)) {
            out.s = s;
            out.attained = attained;
            cand = true;
        }
    };
    for (const auto& p : img.parts) {
        if (!(p.lo < v))
            continue; // no value of this part is < v
        out.any = true;
        if (p.hi > v || p.hi == v) {
            out.accumulates = true; // values arbitrarily close below v
            return out;
        }
        offer(p.hi, p.hi_closed);
    }
    if (img.stair_tail && v.is_finite() && v.value().is_pos()) {
        // largest staircase value strictly below v: 1/n with n > 1/v
        rational inv = rational(1) / v.value();
        long long n = std::max(img.stair_from, inv.is_integer() ? inv.num() + 1 : inv.floor() + 1);
        out.any = true;
        offer(ext_real{rational(1, n)}, true);
    }
    return out;
}

boundary_probe inf_above(const image_description& img, const ext_real& v) {
    boundary_probe out;
    bool cand = false;
    auto offer = [&](const ext_real& s, bool attained) {
        if (!cand || s < out.s || (s == out.s && attained)) {
            out.s = s;
            out.attained = attained;
            cand = true;
        }
    };
    for (const auto& p : img.parts) {
        if (!(p.hi > v))
            continue;
        out.any = true;
        if (p.lo < v || p.lo == v) {
            out.accumulates = true; // values arbitrarily close above v
            return out;
        }
        offer(p.lo, p.lo_closed);
    }
    if (img.stair_tail) {
        ext_real zero{rational(0)};
        if (v < zero || v == zero) {
            out.any = true;
            out.accumulates = true; // the staircase accumulates at 0 from above
            return out;
        }
        if (v.is_finite() && v < ext_real{rational(1, img.stair_from)}) {
            // smallest staircase value strictly above v: largest n with 1/n > v
            rational inv = rational(1) / v.value();
            long long n = inv.is_integer() ? inv.num() - 1 : inv.floor();
            if (n >= img.stair_from) {
                out.any = true;
                offer(ext_real{rational(1, n)}, true);
            }
        }
    }
    return out;
}

} // namespace

bool is_jump(const image_description& img, const ext_real& p, const ext_real& q) {
    return p < q && img.contains(p) && img.contains(q) && !img.intersects_open(p, q);
}

bool jump_pair(const image_description& img, const ext_real& v, const ext_real& w) {
    if (v == w)
        return false;
    const ext_real& p = v < w ? v : w;
    const ext_real& q = v < w ? w : v;
    return is_jump(img, p, q);
}

bool jump_at_value(const image_description& img, const ext_real& v) {
    if (!img.contains(v))
        return false;
    auto below = sup_below(img, v);
    if (below.any && !below.accumulates && below.attained)
        return true;
    auto above = inf_above(img, v);
    if (above.any && !above.accumulates && above.attained)
        return true;
    return false;
}

jump_report jumps_of(const piecewise_fn& fn) {
    image_description img = image_of(fn);
    jump_report out;

    // assemble the attained-value structure: parts plus explicit staircase
    // singletons up to the truncation; intersects_open consults the symbolic
    // tail, so gaps crowded by un-materialized 1/n values drop out exactly
    std::vector<interval> segs = img.parts;
    if (img.stair_tail) {
        const auto& st = *fn.stairs();
        out.stair_tail = true;
        out.stair_from = st.truncation;
        for (long long n = st.start_n; n <= st.truncation; ++n) {
            interval s;
            s.lo = s.hi = ext_real{rational(1, n)};
            s.lo_closed = s.hi_closed = true;
            segs.push_back(s);
        }
    }
    std::sort(segs.begin(), segs.end(), [](const interval& a, const interval& b) {
        if (a.lo != b.lo)
            return a.lo < b.lo;
        return a.lo_closed && !b.lo_closed;
    });
    for (size_t i = 0; i + 1 < segs.size(); ++i) {
        const interval& a = segs[i];
        const interval& b = segs[i + 1];
        if (!(a.hi < b.lo))
            continue;
        if (!a.hi_closed || !b.lo_closed)
            continue;
        if (img.intersects_open(a.hi, b.lo))
            continue;
        out.jumps.push_back(jump_interval{a.hi, b.lo});
    }
    return out;
}

bool min_seq_converging_to(const piecewise_fn& fn, const rational& x) {
    image_description img = image_of(fn);
    return analyze_point(fn, x).liminf == img.infimum;
}

} // namespace semicont
