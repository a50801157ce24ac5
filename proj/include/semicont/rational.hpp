#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semicont {

/** Exact rational number, int64 numerator/denominator, always normalized
    (den > 0, gcd(|num|, den) = 1). Intermediate products are computed in
    128-bit; results that do not fit int64 throw std::overflow_error. */
class rational {
public:
    rational() = default;
    rational(long long n) : num_(n) {}
    rational(long long n, long long d);

    // Accepts "p/q", integer, and plain decimal strings ("-0.25").
    static rational parse(std::string_view s);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_neg() const { return num_ < 0; }
    bool is_pos() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    rational operator-() const;
    rational& operator+=(const rational& o);
    rational& operator-=(const rational& o);
    rational& operator*=(const rational& o);
    rational& operator/=(const rational& o); // throws on division by zero

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational&, const rational&) = default;
    std::strong_ordering operator<=>(const rational& o) const;

    long long floor() const;
    long long ceil() const;

    std::string str() const; // "p" or "p/q"

private:
    long long num_ = 0;
    long long den_ = 1;
    void normalize();
};

rational abs(const rational& r);
rational midpoint(const rational& a, const rational& b);

} // namespace semicont
