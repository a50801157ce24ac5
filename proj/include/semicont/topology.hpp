#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semicont/ext_real.hpp"

namespace semicont {

using point_set = uint32_t; // bitmask over points, point i = bit i

/** Finite topological space on named points. opens must contain the empty
    set and the full set and be closed under pairwise union/intersection;
    validate() checks this and reports the first failing pair. */
struct finite_space {
    std::vector<std::string> point_names;
    std::vector<point_set> opens;

    size_t point_count() const { return point_names.size(); }
    point_set full_set() const { return static_cast<point_set>((1u << point_names.size()) - 1u); }
    size_t point_index(std::string_view name) const; // throws on unknown name
};

struct space_violation {
    bool ok = true;
    std::string what;     // empty when ok
    point_set a = 0, b = 0, missing = 0;
};

space_violation validate(const finite_space& s);

// Intersection of all opens containing x; itself open and the realizer of
// every neighborhood-filter infimum.
point_set min_nbhd(const finite_space& s, size_t x);

struct finite_model {
    finite_space space;
    std::vector<ext_real> values; // total on points

    const ext_real& value(size_t x) const { return values.at(x); }
};

// sup over opens O containing x of inf f(O); non-punctured (x included).
ext_real liminf_at(const finite_model& m, size_t x);

/** Eventually periodic point sequence: prefix then cycle forever. In a
    finite space every convergence-relevant sequence behavior is captured
    by this class (tail-set analysis, see docs/reductions.md). */
struct point_sequence {
    std::vector<size_t> prefix;
    std::vector<size_t> cycle; // nonempty
};

bool converges(const finite_space& s, const point_sequence& seq, size_t x);

// Every labeled topology on n points (1 <= n <= 5), exactly once, in a
// deterministic order; implemented by enumerating specialization preorders.
void for_each_space(int n, const std::function<void(const finite_space&)>& fn);
std::vector<finite_space> enumerate_spaces(int n);
long long count_spaces(int n);

} // namespace semicont
