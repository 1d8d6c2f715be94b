#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace romanovski {

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; every operation is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n, 1) {}  // NOLINT: implicit by design, scalars mix freely
    Rational(long num, long den);

    /// Accepts "num", "num/den", optional leading '-'. Throws
    /// std::invalid_argument on anything else (including zero denominator).
    static Rational parse(std::string_view s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws on division by zero
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const int c = cmp(v_, o.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const { return v_.get_str(); }

    /// Nearest-double conversion; error is at most one ulp.
    double to_double() const { return v_.get_d(); }

    /// Exact integer value; throws std::domain_error if not an integer
    /// or out of range of long.
    long to_long() const;

    bool is_integer() const { return v_.get_den() == 1; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Generalized binomial coefficient r(r-1)...(r-n+1)/n! with rational upper
/// argument, exact.
Rational binomial(const Rational& r, unsigned n);

/// n!, exact.
Rational factorial(unsigned n);

}  // namespace romanovski
