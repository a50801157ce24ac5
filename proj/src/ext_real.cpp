#include "semicont/ext_real.hpp"

namespace semicont {

std::strong_ordering ext_real::operator<=>(const ext_real& o) const {
    auto rank = [](ext_kind k) { return k == ext_kind::neg_inf ? 0 : k == ext_kind::finite ? 1 : 2; };
    if (rank(kind_) != rank(o.kind_))
        return rank(kind_) <=> rank(o.kind_);
    if (kind_ != ext_kind::finite)
        return std::strong_ordering::equal;
    return val_ <=> o.val_;
}

std::string ext_real::str() const {
    switch (kind_) {
    case ext_kind::neg_inf: return "-inf";
    case ext_kind::pos_inf: return "+inf";
    default: return val_.str();
    }
}

ext_real ext_real::parse(std::string_view s) {
    if (s == "-inf")
        return neg_inf();
    if (s == "+inf" || s == "inf")
        return pos_inf();
    return ext_real(rational::parse(s));
}

std::strong_ordering compare(const ext_real& a, const ext_real& b) {
    return a <=> b;
}

ext_real inf_of(std::span<const ext_real> values) {
    if (values.empty())
        throw empty_set_error();
    ext_real best = values[0];
    for (const auto& v : values.subspan(1))
        if (v < best)
            best = v;
    return best;
}

ext_real inf_or_top(std::span<const ext_real> values) {
    return values.empty() ? ext_real::pos_inf() : inf_of(values);
}

ext_real sup_of(std::span<const ext_real> values) {
    if (values.empty())
        throw empty_set_error();
    ext_real best = values[0];
    for (const auto& v : values.subspan(1))
        if (v > best)
            best = v;
    return best;
}

ext_real sup_or_bottom(std::span<const ext_real> values) {
    return values.empty() ? ext_real::neg_inf() : sup_of(values);
}

ext_real strictly_between(const ext_real& lo, const ext_real& hi) {
    if (!(lo < hi))
        throw std::invalid_argument("strictly_between: empty interval");
    if (lo.is_finite() && hi.is_finite())
        return ext_real(midpoint(lo.value(), hi.value()));
    if (lo.is_neg_inf() && hi.is_pos_inf())
        return ext_real(0);
    if (lo.is_neg_inf())
        return ext_real(hi.value() - rational(1));
    return ext_real(lo.value() + rational(1));
}

} // namespace semicont
