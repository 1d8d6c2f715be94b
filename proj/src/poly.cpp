#include "romanovski/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace romanovski {

Poly Poly::monomial(Rational c, std::size_t k) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (c_.empty() || o.c_.empty()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& s) const {
    if (s.is_zero()) return Poly();
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x0) const {
    Rational acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
    return acc;
}

Poly Poly::reflected() const {
    std::vector<Rational> v(c_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return Poly(std::move(v));
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << c_[i].str() << ")";
        if (i == 1) os << "*x";
        if (i > 1) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

Poly pow(const Poly& base, unsigned k) {
    Poly acc = Poly::constant(1);
    for (unsigned i = 0; i < k; ++i) acc *= base;
    return acc;
}

std::optional<Poly> divide_exact(const Poly& num, const Poly& div) {
    if (div.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return Poly();
    const auto dn = *num.degree();
    const auto dd = *div.degree();
    if (dn < dd) return std::nullopt;
    std::vector<Rational> rem(num.coeffs());
    std::vector<Rational> quo(dn - dd + 1);
    for (std::size_t i = dn - dd + 1; i-- > 0;) {
        const Rational q = rem[i + dd] / div.leading();
        quo[i] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * div.coeff(j);
    }
    for (const auto& r : rem)
        if (!r.is_zero()) return std::nullopt;
    return Poly(std::move(quo));
}

const Poly& sigma_poly() {
    static const Poly sigma{Rational(1), Rational(0), Rational(1)};
    return sigma;
}

}  // namespace romanovski
