#include "semicont/topology.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace semicont {

size_t finite_space::point_index(std::string_view name) const {
    for (size_t i = 0; i < point_names.size(); ++i)
        if (point_names[i] == name)
            return i;
    throw std::out_of_range("unknown point '" + std::string(name) + "'");
}

space_violation validate(const finite_space& s) {
    space_violation v;
    if (s.point_names.size() > 31) {
        v.ok = false;
        v.what = "too many points";
        return v;
    }
    point_set full = s.full_set();
    auto has = [&](point_set o) { return std::find(s.opens.begin(), s.opens.end(), o) != s.opens.end(); };
    for (point_set o : s.opens) {
        if ((o & ~full) != 0) {
            v.ok = false;
            v.what = "open set mentions unknown points";
            v.a = o;
            return v;
        }
    }
    if (!has(0)) {
        v.ok = false;
        v.what = "empty set missing";
        v.missing = 0;
        return v;
    }
    if (!has(full)) {
        v.ok = false;
        v.what = "full point set missing";
        v.missing = full;
        return v;
    }
    for (size_t i = 0; i < s.opens.size(); ++i) {
        for (size_t j = i + 1; j < s.opens.size(); ++j) {
            point_set u = s.opens[i] | s.opens[j];
            point_set n = s.opens[i] & s.opens[j];
            if (!has(u)) {
                v.ok = false;
                v.what = "union missing";
                v.a = s.opens[i];
                v.b = s.opens[j];
                v.missing = u;
                return v;
            }
            if (!has(n)) {
                v.ok = false;
                v.what = "intersection missing";
                v.a = s.opens[i];
                v.b = s.opens[j];
                v.missing = n;
                return v;
            }
        }
    }
    return v;
}

point_set min_nbhd(const finite_space& s, size_t x) {
    if (x >= s.point_count())
        throw std::out_of_range("unknown point index");
    point_set acc = s.full_set();
    for (point_set o : s.opens)
        if (o & (1u << x))
            acc &= o;
    return acc;
}

ext_real liminf_at(const finite_model& m, size_t x) {
    if (m.values.size() != m.space.point_count())
        throw std::invalid_argument("model values not total on points");
    point_set nb = min_nbhd(m.space, x);
    std::vector<ext_real> vals;
    for (size_t i = 0; i < m.space.point_count(); ++i)
        if (nb & (1u << i))
            vals.push_back(m.values[i]);
    return inf_of(vals);
}

bool converges(const finite_space& s, const point_sequence& seq, size_t x) {
    if (seq.cycle.empty())
        throw std::invalid_argument("point_sequence: empty cycle");
    point_set nb = min_nbhd(s, x);
    for (size_t p : seq.cycle) {
        if (p >= s.point_count())
            throw std::out_of_range("unknown point index in sequence");
        if (!(nb & (1u << p)))
            return false;
    }
    return true; // eventually inside the minimal neighborhood <=> inside every open
}

namespace {

// Finite topologies correspond to specialization preorders: le[y][x] holds
// iff y belongs to every open containing x. Opens are exactly the sets
// closed under "contains x => contains every y <= x".
void emit_space(int n, const std::vector<uint8_t>& le, const std::function<void(const finite_space&)>& fn) {
    finite_space s;
    for (int i = 0; i < n; ++i)
        s.point_names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<point_set> min_nb(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (le[static_cast<size_t>(y * n + x)])
                min_nb[static_cast<size_t>(x)] |= (1u << y);
    point_set full = static_cast<point_set>((1u << n) - 1u);
    for (point_set cand = 0; cand <= full; ++cand) {
        bool open = true;
        for (int x = 0; x < n && open; ++x)
            if (cand & (1u << x))
                open = (min_nb[static_cast<size_t>(x)] & ~cand) == 0;
        if (open)
            s.opens.push_back(cand);
    }
    fn(s);
}

} // namespace

void for_each_space(int n, const std::function<void(const finite_space&)>& fn) {
    if (n < 1 || n > 5)
        throw std::out_of_range("for_each_space: supported n is 1..5");
    int off_diag = n * (n - 1);
    std::vector<uint8_t> le(static_cast<size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        le[static_cast<size_t>(i * n + i)] = 1;
    // enumerate all reflexive relations in deterministic bit order, keep the
    // transitive ones
    for (uint64_t bits = 0; bits < (1ull << off_diag); ++bits) {
        int b = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                le[static_cast<size_t>(i * n + j)] = static_cast<uint8_t>((bits >> b) & 1u);
                ++b;
            }
        }
        bool transitive = true;
        for (int i = 0; i < n && transitive; ++i)
            for (int j = 0; j < n && transitive; ++j) {
                if (!le[static_cast<size_t>(i * n + j)])
                    continue;
                for (int k = 0; k < n; ++k)
                    if (le[static_cast<size_t>(j * n + k)] && !le[static_cast<size_t>(i * n + k)]) {
                        transitive = false;
                        break;
                    }
            }
        if (transitive)
            emit_space(n, le, fn);
    }
}

std::vector<finite_space> enumerate_spaces(int n) {
    std::vector<finite_space> out;
    for_each_space(n, [&](const finite_space& s) { out.push_back(s); });
    return out;
}

long long count_spaces(int n) {
    long long c = 0;
    for_each_space(n, [&](const finite_space&) { ++c; });
    return c;
}

} // namespace semicont
