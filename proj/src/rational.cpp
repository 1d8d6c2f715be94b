#include "romanovski/rational.hpp"

#include <cctype>

namespace romanovski {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(s) + "'");
    };
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t n = 0;
        while (from + n < s.size() && std::isdigit(static_cast<unsigned char>(s[from + n]))) ++n;
        return n;
    };
    if (i < s.size() && s[i] == '-') ++i;
    const std::size_t num_len = digits(i);
    if (num_len == 0) throw bad();
    i += num_len;
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        const std::size_t den_len = digits(i);
        if (den_len == 0 || i + den_len != s.size()) throw bad();
    }
    mpq_class v;
    if (v.set_str(std::string(s), 10) != 0) throw bad();
    if (v.get_den() == 0) throw bad();
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational Rational::operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }

Rational Rational::operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }

Rational Rational::operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rational: out of long range");
    return v_.get_num().get_si();
}

Rational binomial(const Rational& r, unsigned n) {
    Rational acc(1);
    for (unsigned i = 0; i < n; ++i) acc *= r - Rational(static_cast<long>(i));
    return acc / factorial(n);
}

Rational factorial(unsigned n) {
    Rational acc(1);
    for (unsigned i = 2; i <= n; ++i) acc *= Rational(static_cast<long>(i));
    return acc;
}

}  // namespace romanovski
