#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "semicont/ext_real.hpp"

namespace semicont {

/** Finitely presented infinite sequence of extended reals. Presentations:
      - explicit prefix + eventually-periodic tail (constant = cycle of 1),
      - harmonic-style closed form  limit + scale/n  (n >= 1),
      - interleave of two such strands (odd terms from the first).
    Every presentation admits exact evaluation of term n and exact
    liminf/limit/infimum computation. */
class value_sequence {
public:
    struct periodic_tail {
        std::vector<ext_real> prefix;
        std::vector<ext_real> cycle; // nonempty
    };
    struct harmonic_decay {
        rational limit;
        rational scale;
    };
    using strand = std::variant<periodic_tail, harmonic_decay>;

    static value_sequence constant(ext_real v);
    static value_sequence eventually_constant(std::vector<ext_real> prefix, ext_real tail);
    static value_sequence periodic(std::vector<ext_real> prefix, std::vector<ext_real> cycle);
    static value_sequence harmonic(rational limit, rational scale);
    static value_sequence interleave(const value_sequence& a, const value_sequence& b);

    ext_real term(long long n) const; // n >= 1
    ext_real infimum() const;
    ext_real liminf() const;
    std::optional<ext_real> limit() const;
    bool converges_to_infimum() const;

    // The two monotonicity notions, verbatim: decreasing allows equal
    // consecutive values, strictly decreasing does not.
    bool is_decreasing() const;
    bool is_strictly_decreasing() const;

    const std::vector<strand>& strands() const { return strands_; }

private:
    std::vector<strand> strands_; // size 1, or 2 when interleaved
};

/** Outcome of the decreasing-subnet dichotomy for a sequence converging to
    its own infimum: either the tail is constantly the infimum from some
    index on, or a strictly increasing index map selecting strictly
    decreasing values. */
struct decreasing_extraction {
    enum class outcome { eventually_constant_at_inf, strictly_decreasing_subsequence, precondition_violation };
    outcome result;
    long long constant_from = 0;             // first index of the constant tail
    std::vector<long long> indices;          // materialized head of the index map
};

decreasing_extraction extract_decreasing(const value_sequence& seq, int materialize = 24);

} // namespace semicont
