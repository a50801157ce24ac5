#include "semicont/value_sequence.hpp"

#include <algorithm>
#include <numeric>

namespace semicont {

namespace {

ext_real strand_term(const value_sequence::strand& s, long long n) {
    if (const auto* p = std::get_if<value_sequence::periodic_tail>(&s)) {
        long long k = n - 1;
        if (k < static_cast<long long>(p->prefix.size()))
            return p->prefix[static_cast<size_t>(k)];
        k -= static_cast<long long>(p->prefix.size());
        return p->cycle[static_cast<size_t>(k % static_cast<long long>(p->cycle.size()))];
    }
    const auto& h = std::get<value_sequence::harmonic_decay>(s);
    return ext_real(h.limit + h.scale / rational(n));
}

ext_real strand_liminf(const value_sequence::strand& s) {
    if (const auto* p = std::get_if<value_sequence::periodic_tail>(&s))
        return inf_of(p->cycle);
    return ext_real(std::get<value_sequence::harmonic_decay>(s).limit);
}

ext_real strand_inf(const value_sequence::strand& s) {
    if (const auto* p = std::get_if<value_sequence::periodic_tail>(&s)) {
        ext_real m = inf_of(p->cycle);
        for (const auto& v : p->prefix)
            if (v < m)
                m = v;
        return m;
    }
    const auto& h = std::get<value_sequence::harmonic_decay>(s);
    if (h.scale.is_neg())
        return ext_real(h.limit + h.scale); // increasing from n = 1
    return ext_real(h.limit);               // constant or decreasing to the limit
}

std::optional<ext_real> strand_limit(const value_sequence::strand& s) {
    if (const auto* p = std::get_if<value_sequence::periodic_tail>(&s)) {
        for (const auto& v : p->cycle)
            if (!(v == p->cycle.front()))
                return std::nullopt;
        return p->cycle.front();
    }
    return ext_real(std::get<value_sequence::harmonic_decay>(s).limit);
}

// Is  A*k^2 + B*k + C  (>=|>) 0  for every integer k >= from?
bool quad_holds_from(const rational& A, const rational& B, const rational& C, long long from, bool strict) {
    auto ok = [&](const rational& q) { return strict ? q.is_pos() : !q.is_neg(); };
    auto eval = [&](long long k) { return A * rational(k) * rational(k) + B * rational(k) + C; };
    if (A.is_zero()) {
        if (B.is_zero())
            return ok(C);
        if (B.is_neg())
            return false; // heads to -inf
        return ok(eval(from));
    }
    if (A.is_neg())
        return false;
    // upward parabola: minimum near k* = -B/(2A), clamped to [from, inf)
    rational kstar = -B / (rational(2) * A);
    long long lo = kstar.floor(), hi = kstar.ceil();
    bool good = ok(eval(from));
    if (lo >= from)
        good = good && ok(eval(lo));
    if (hi >= from)
        good = good && ok(eval(hi));
    return good;
}

// forall k >= 1:  a.term(k) (>=|>) b.term(k + shift)
bool strand_dominates(const value_sequence::strand& a, const value_sequence::strand& b, long long shift, bool strict) {
    auto cmp_ok = [&](const ext_real& x, const ext_real& y) { return strict ? x > y : x >= y; };

    const auto* pa = std::get_if<value_sequence::periodic_tail>(&a);
    const auto* pb = std::get_if<value_sequence::periodic_tail>(&b);

    if (pa && pb) {
        long long head = static_cast<long long>(std::max(pa->prefix.size(), pb->prefix.size())) + shift + 1;
        long long period = std::lcm(static_cast<long long>(pa->cycle.size()), static_cast<long long>(pb->cycle.size()));
        for (long long k = 1; k <= head + period; ++k)
            if (!cmp_ok(strand_term(a, k), strand_term(b, k + shift)))
                return false;
        return true;
    }
    if (!pa && !pb) {
        const auto& ha = std::get<value_sequence::harmonic_decay>(a);
        const auto& hb = std::get<value_sequence::harmonic_decay>(b);
        // (la - lb) k(k+shift) + ca (k+shift) - cb k  (>=|>) 0  for all k >= 1
        rational A = ha.limit - hb.limit;
        rational B = A * rational(shift) + ha.scale - hb.scale;
        rational C = ha.scale * rational(shift);
        return quad_holds_from(A, B, C, 1, strict);
    }

    // one harmonic strand against one periodic strand; the harmonic side is
    // monotone, so each pairing class is decided by its first index or by
    // the harmonic limit
    const auto& h = pa ? std::get<value_sequence::harmonic_decay>(b) : std::get<value_sequence::harmonic_decay>(a);
    const auto* per = pa ? pa : pb;
    bool harmonic_left = !pa;

    // indices where the periodic strand is still in its prefix
    long long prefix_span = static_cast<long long>(per->prefix.size()) + shift + 1;
    for (long long k = 1; k <= prefix_span; ++k)
        if (!cmp_ok(strand_term(a, k), strand_term(b, k + shift)))
            return false;

    long long cyc = static_cast<long long>(per->cycle.size());
    for (long long r = 0; r < cyc; ++r) {
        // first k past the explicit window whose periodic partner has residue r
        long long k0 = 0;
        for (long long k = prefix_span + 1; k <= prefix_span + cyc; ++k) {
            long long per_idx = harmonic_left ? k + shift : k;
            long long off = per_idx - 1 - static_cast<long long>(per->prefix.size());
            if (off >= 0 && off % cyc == r) {
                k0 = k;
                break;
            }
        }
        if (k0 == 0)
            continue;
        const ext_real& cv = per->cycle[static_cast<size_t>(r)];
        long long harm_idx0 = harmonic_left ? k0 : k0 + shift;
        ext_real first = ext_real(h.limit + h.scale / rational(harm_idx0));
        if (harmonic_left) {
            if (cv.is_pos_inf())
                return false;
            if (cv.is_neg_inf())
                continue;
            if (h.scale.is_pos()) {
                // terms decrease to the limit from above: all dominate iff limit >= cv
                if (h.limit < cv.value())
                    return false;
            } else if (h.scale.is_neg()) {
                if (!cmp_ok(first, cv)) // increasing: minimum at the first pairing
                    return false;
            } else if (!cmp_ok(ext_real(h.limit), cv)) {
                return false;
            }
        } else {
            if (cv.is_pos_inf())
                continue;
            if (cv.is_neg_inf())
                return false;
            if (h.scale.is_pos()) {
                if (!cmp_ok(cv, first)) // decreasing: maximum at the first pairing
                    return false;
            } else if (h.scale.is_neg()) {
                // terms increase to the limit from below: cv >(=) them all iff cv >= limit
                if (cv.value() < h.limit)
                    return false;
            } else if (!cmp_ok(cv, ext_real(h.limit))) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

value_sequence value_sequence::constant(ext_real v) {
    value_sequence s;
    s.strands_.push_back(periodic_tail{{}, {std::move(v)}});
    return s;
}

value_sequence value_sequence::eventually_constant(std::vector<ext_real> prefix, ext_real tail) {
    value_sequence s;
    s.strands_.push_back(periodic_tail{std::move(prefix), {std::move(tail)}});
    return s;
}

value_sequence value_sequence::periodic(std::vector<ext_real> prefix, std::vector<ext_real> cycle) {
    if (cycle.empty())
        throw std::invalid_argument("value_sequence: empty cycle");
    value_sequence s;
    s.strands_.push_back(periodic_tail{std::move(prefix), std::move(cycle)});
    return s;
}

value_sequence value_sequence::harmonic(rational limit, rational scale) {
    value_sequence s;
    s.strands_.push_back(harmonic_decay{std::move(limit), std::move(scale)});
    return s;
}

value_sequence value_sequence::interleave(const value_sequence& a, const value_sequence& b) {
    if (a.strands_.size() != 1 || b.strands_.size() != 1)
        throw std::invalid_argument("value_sequence: interleave takes single strands");
    value_sequence s;
    s.strands_.push_back(a.strands_[0]);
    s.strands_.push_back(b.strands_[0]);
    return s;
}

ext_real value_sequence::term(long long n) const {
    if (n < 1)
        throw std::invalid_argument("value_sequence: term index starts at 1");
    if (strands_.size() == 1)
        return strand_term(strands_[0], n);
    if (n % 2 == 1)
        return strand_term(strands_[0], (n + 1) / 2);
    return strand_term(strands_[1], n / 2);
}

ext_real value_sequence::infimum() const {
    ext_real m = strand_inf(strands_[0]);
    if (strands_.size() == 2) {
        ext_real m2 = strand_inf(strands_[1]);
        if (m2 < m)
            m = m2;
    }
    return m;
}

ext_real value_sequence::liminf() const {
    ext_real m = strand_liminf(strands_[0]);
    if (strands_.size() == 2) {
        ext_real m2 = strand_liminf(strands_[1]);
        if (m2 < m)
            m = m2;
    }
    return m;
}

std::optional<ext_real> value_sequence::limit() const {
    auto l0 = strand_limit(strands_[0]);
    if (strands_.size() == 1)
        return l0;
    auto l1 = strand_limit(strands_[1]);
    if (l0 && l1 && *l0 == *l1)
        return l0;
    return std::nullopt;
}

bool value_sequence::converges_to_infimum() const {
    auto l = limit();
    return l && *l == infimum();
}

bool value_sequence::is_decreasing() const {
    if (strands_.size() == 1) {
        if (const auto* p = std::get_if<periodic_tail>(&strands_[0])) {
            for (size_t i = 0; i + 1 < p->prefix.size(); ++i)
                if (p->prefix[i + 1] > p->prefix[i])
                    return false;
            for (const auto& v : p->cycle)
                if (!(v == p->cycle.front()))
                    return false;
            if (!p->prefix.empty() && p->cycle.front() > p->prefix.back())
                return false;
            return true;
        }
        return !std::get<harmonic_decay>(strands_[0]).scale.is_neg();
    }
    return strand_dominates(strands_[0], strands_[1], 0, false) &&
           strand_dominates(strands_[1], strands_[0], 1, false);
}

bool value_sequence::is_strictly_decreasing() const {
    if (strands_.size() == 1) {
        if (std::holds_alternative<periodic_tail>(strands_[0]))
            return false; // an infinite periodic tail repeats some value
        return std::get<harmonic_decay>(strands_[0]).scale.is_pos();
    }
    return strand_dominates(strands_[0], strands_[1], 0, true) &&
           strand_dominates(strands_[1], strands_[0], 1, true);
}

namespace {

// First index from which every term equals v, or nullopt.
std::optional<long long> constant_tail_start(const value_sequence::strand& s, const ext_real& v) {
    if (const auto* p = std::get_if<value_sequence::periodic_tail>(&s)) {
        for (const auto& c : p->cycle)
            if (!(c == v))
                return std::nullopt;
        long long from = static_cast<long long>(p->prefix.size()) + 1;
        for (size_t i = p->prefix.size(); i-- > 0;) {
            if (p->prefix[i] == v)
                from = static_cast<long long>(i) + 1;
            else
                break;
        }
        return from;
    }
    const auto& h = std::get<value_sequence::harmonic_decay>(s);
    if (h.scale.is_zero() && ext_real(h.limit) == v)
        return 1;
    return std::nullopt;
}

} // namespace

decreasing_extraction extract_decreasing(const value_sequence& seq, int materialize) {
    decreasing_extraction out;
    if (!seq.converges_to_infimum()) {
        out.result = decreasing_extraction::outcome::precondition_violation;
        return out;
    }
    ext_real m = seq.infimum();

    const auto& strands = seq.strands();
    auto c0 = constant_tail_start(strands[0], m);
    if (strands.size() == 1) {
        if (c0) {
            out.result = decreasing_extraction::outcome::eventually_constant_at_inf;
            out.constant_from = *c0;
            return out;
        }
    } else {
        auto c1 = constant_tail_start(strands[1], m);
        if (c0 && c1) {
            out.result = decreasing_extraction::outcome::eventually_constant_at_inf;
            out.constant_from = std::max(2 * *c0 - 1, 2 * *c1);
            return out;
        }
    }

    // Dichotomy's second branch. Greedy scan: repeatedly pick the next index
    // whose value lies strictly between the infimum and the last picked
    // value (terms equal to the infimum are skipped so the descent never
    // stalls; convergence to the infimum supplies the next pick).
    out.result = decreasing_extraction::outcome::strictly_decreasing_subsequence;
    ext_real last = ext_real::pos_inf();
    const long long scan_budget = 100000;
    for (long long n = 1; n <= scan_budget && static_cast<int>(out.indices.size()) < materialize; ++n) {
        ext_real v = seq.term(n);
        if (v > m && v < last) {
            out.indices.push_back(n);
            last = v;
        }
    }
    return out;
}

} // namespace semicont
