#include "semicont/rational.hpp"

#include <numeric>

namespace semicont {

namespace {

long long checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

} // namespace

void rational::normalize() {
    if (den_ == 0)
        throw std::invalid_argument("rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

rational::rational(long long n, long long d) : num_(n), den_(d) {
    normalize();
}

rational rational::operator-() const {
    rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

rational& rational::operator+=(const rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    // reduce in 128-bit before narrowing
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    num_ = checked_narrow(n);
    den_ = checked_narrow(d);
    return *this;
}

rational& rational::operator-=(const rational& o) {
    return *this += -o;
}

rational& rational::operator*=(const rational& o) {
    // cross-reduce first to keep intermediates small
    long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    num_ = checked_narrow(n);
    den_ = checked_narrow(d);
    return *this;
}

rational& rational::operator/=(const rational& o) {
    if (o.num_ == 0)
        throw std::invalid_argument("rational: division by zero");
    rational inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
}

std::strong_ordering rational::operator<=>(const rational& o) const {
    __int128 l = static_cast<__int128>(num_) * o.den_;
    __int128 r = static_cast<__int128>(o.num_) * den_;
    if (l < r)
        return std::strong_ordering::less;
    if (l > r)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long long rational::floor() const {
    if (num_ >= 0)
        return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
}

long long rational::ceil() const {
    if (num_ >= 0)
        return (num_ + den_ - 1) / den_;
    return -((-num_) / den_);
}

std::string rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

rational rational::parse(std::string_view s) {
    if (s.empty())
        throw std::invalid_argument("rational: empty literal");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        std::string n(s.substr(0, slash)), d(s.substr(slash + 1));
        size_t pn = 0, pd = 0;
        long long nn = std::stoll(n, &pn);
        long long dd = std::stoll(d, &pd);
        if (pn != n.size() || pd != d.size())
            throw std::invalid_argument("rational: bad literal '" + std::string(s) + "'");
        return rational(nn, dd);
    }
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string head(s.substr(0, dot)), frac(s.substr(dot + 1));
        if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("rational: bad decimal '" + std::string(s) + "'");
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head == "+")
            head += "0";
        size_t ph = 0;
        long long ip = head.empty() ? 0 : std::stoll(head, &ph);
        if (!head.empty() && ph != head.size())
            throw std::invalid_argument("rational: bad decimal '" + std::string(s) + "'");
        long long scale = 1;
        long long fp = 0;
        for (char c : frac) {
            if (scale > INT64_MAX / 10)
                throw std::overflow_error("rational: decimal too long");
            scale *= 10;
            fp = fp * 10 + (c - '0');
        }
        rational r(ip);
        rational f(fp, scale);
        return neg ? r - f : r + f;
    }
    std::string n(s);
    size_t pn = 0;
    long long v = std::stoll(n, &pn);
    if (pn != n.size())
        throw std::invalid_argument("rational: bad literal '" + std::string(s) + "'");
    return rational(v);
}

rational abs(const rational& r) {
    return r.is_neg() ? -r : r;
}

rational midpoint(const rational& a, const rational& b) {
    return (a + b) / rational(2);
}

} // namespace semicont
