#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semicont/rational.hpp"

namespace semicont {

enum class ext_kind : unsigned char { neg_inf, finite, pos_inf };

/** Value in R united with {-inf, +inf}, totally ordered. Finite values are
    exact rationals; no rounding happens anywhere downstream of this type. */
class ext_real {
public:
    ext_real() = default; // finite 0
    ext_real(rational v) : kind_(ext_kind::finite), val_(std::move(v)) {}
    ext_real(long long v) : kind_(ext_kind::finite), val_(v) {}

    static ext_real neg_inf() { return ext_real(ext_kind::neg_inf); }
    static ext_real pos_inf() { return ext_real(ext_kind::pos_inf); }

    ext_kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == ext_kind::finite; }
    bool is_neg_inf() const { return kind_ == ext_kind::neg_inf; }
    bool is_pos_inf() const { return kind_ == ext_kind::pos_inf; }

    const rational& value() const {
        if (!is_finite())
            throw std::logic_error("ext_real: value() on infinity");
        return val_;
    }

    friend bool operator==(const ext_real& a, const ext_real& b) {
        if (a.kind_ != b.kind_)
            return false;
        return a.kind_ != ext_kind::finite || a.val_ == b.val_;
    }
    std::strong_ordering operator<=>(const ext_real& o) const;

    std::string str() const;
    // "p/q", decimal, "-inf", "+inf" (also accepts "inf").
    static ext_real parse(std::string_view s);

private:
    explicit ext_real(ext_kind k) : kind_(k) {}
    ext_kind kind_ = ext_kind::finite;
    rational val_;
};

std::strong_ordering compare(const ext_real& a, const ext_real& b);

struct empty_set_error : std::invalid_argument {
    empty_set_error() : std::invalid_argument("infimum of empty set requested; use inf_or_top") {}
};

// Least element of a nonempty finite set. Throws empty_set_error on {}.
ext_real inf_of(std::span<const ext_real> values);
// Empty-infimum convention, quarantined under its own name: inf {} = +inf.
ext_real inf_or_top(std::span<const ext_real> values);
ext_real sup_of(std::span<const ext_real> values);
ext_real sup_or_bottom(std::span<const ext_real> values);

// Some value strictly between lo and hi; throws if the interval is empty.
ext_real strictly_between(const ext_real& lo, const ext_real& hi);

} // namespace semicont
