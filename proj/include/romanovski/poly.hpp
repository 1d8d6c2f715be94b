#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "romanovski/rational.hpp"

namespace romanovski {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree order. The zero polynomial is the empty coefficient list; its
/// degree is "minus infinity", modeled as an empty optional.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(Rational c) { return Poly({std::move(c)}); }
    static Poly monomial(Rational c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    /// Coefficient of x^i; zero beyond the stored degree.
    const Rational& coeff(std::size_t i) const {
        static const Rational zero;
        return i < c_.size() ? c_[i] : zero;
    }
    const Rational& leading() const;  // throws on the zero polynomial
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    /// Formal derivative.
    Poly derivative() const;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x0) const;

    /// p(-x).
    Poly reflected() const;

    std::string str() const;  // human-readable, for diagnostics

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

/// p^k by repeated multiplication (k is small everywhere in this project).
Poly pow(const Poly& base, unsigned k);

/// Exact quotient num/div, or nullopt if div does not divide num.
std::optional<Poly> divide_exact(const Poly& num, const Poly& div);

/// sigma(x) = 1 + x^2, the fixed second-order ODE coefficient.
const Poly& sigma_poly();

}  // namespace romanovski
