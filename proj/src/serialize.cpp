#include "romanovski/serialize.hpp"

#include <cstdio>

namespace romanovski {

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("Poly JSON must be an array");
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& e : j) coeffs.push_back(Rational::parse(e.get<std::string>()));
    return Poly(std::move(coeffs));
}

std::string poly_csv_row(std::size_t degree_index, const Poly& p) {
    std::string row = std::to_string(degree_index);
    const std::size_t n = p.is_zero() ? 1 : *p.degree() + 1;
    for (std::size_t i = 0; i < n; ++i) {
        row += ',';
        row += p.coeff(i).str();
    }
    return row;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace romanovski
