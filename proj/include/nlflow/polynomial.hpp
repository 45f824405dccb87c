#pragma once

// Sparse univariate polynomials with arbitrary-precision integer
// coefficients, and exact interpolation through integer points.

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "nlflow/error.hpp"

namespace nlflow {

class IntPolynomial {
public:
    using Exponent = unsigned;
    using Coefficient = mpz_class;

    IntPolynomial() = default;

    static IntPolynomial constant(const Coefficient& c) { return monomial(c, 0); }

    static IntPolynomial monomial(const Coefficient& c, Exponent e) {
        IntPolynomial p;
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    static IntPolynomial x() { return monomial(1, 1); }

    /// Terms in ascending exponent order; no zero coefficients.
    const std::map<Exponent, Coefficient>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }

    /// Empty for the zero polynomial.
    std::optional<Exponent> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }

    Coefficient coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Coefficient(0) : it->second;
    }

    void add_term(const Coefficient& c, Exponent e) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(c, e);
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(-c, e);
        return *this;
    }

    IntPolynomial operator-() const {
        IntPolynomial p = *this;
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    IntPolynomial scale(const Coefficient& s) const {
        if (s == 0) return {};
        IntPolynomial p = *this;
        for (auto& [e, c] : p.terms_) c *= s;
        return p;
    }

    /// this * c x^e
    IntPolynomial mul_monomial(const Coefficient& c, Exponent e) const {
        IntPolynomial p;
        if (c == 0) return p;
        for (const auto& [ex, co] : terms_) p.terms_.emplace(ex + e, co * c);
        return p;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial p;
        for (const auto& [e, c] : b.terms_) p += a.mul_monomial(c, e);
        return p;
    }

    Coefficient evaluate(const Coefficient& at) const {
        Coefficient acc = 0;
        Exponent prev = terms_.empty() ? 0 : terms_.rbegin()->first;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            acc *= power(at, prev - it->first);
            acc += it->second;
            prev = it->first;
        }
        return acc * power(at, prev);
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Descending exponents, explicit signs, unit coefficients elided:
    /// `x^10-2x^6+x^3-x^2+2x-1`. The zero polynomial renders as `0`.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            mpz_class mag = abs(c);
            if (c < 0) s += '-';
            else if (!first) s += '+';
            first = false;
            if (e == 0 || mag != 1) s += mag.get_str();
            if (e >= 1) s += 'x';
            if (e >= 2) s += '^' + std::to_string(e);
        }
        return s;
    }

    /// `{"coeffs": {"<exp>": "<decimal coefficient>"}}`
    nlohmann::json to_json() const {
        nlohmann::json coeffs = nlohmann::json::object();
        for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = c.get_str();
        return nlohmann::json{{"coeffs", coeffs}};
    }

    static IntPolynomial from_json(const nlohmann::json& j) {
        IntPolynomial p;
        for (const auto& [key, value] : j.at("coeffs").items())
            p.add_term(mpz_class(value.get<std::string>()), static_cast<Exponent>(std::stoul(key)));
        return p;
    }

private:
    static Coefficient power(const Coefficient& base, Exponent e) {
        Coefficient r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
        return r;
    }

    std::map<Exponent, Coefficient> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

struct InterpolationPoint {
    mpz_class k;
    mpz_class value;
};

namespace detail {

inline void check_nodes(const std::vector<InterpolationPoint>& points, std::size_t used) {
    if (points.size() < used)
        throw PreconditionError("interpolation needs " + std::to_string(used) + " points, got " +
                                std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].k == points[j].k)
                throw PreconditionError("interpolation nodes must be distinct");
}

inline mpq_class evaluate_rational(const std::vector<mpq_class>& coeffs, const mpq_class& at) {
    mpq_class acc = 0;
    for (std::size_t e = coeffs.size(); e-- > 0;) acc = acc * at + coeffs[e];
    return acc;
}

}  // namespace detail

/// Coefficients (low to high) of the unique polynomial of degree <=
/// degree_bound through the first degree_bound + 1 points, in exact rational
/// Newton form. Every remaining point is a witness that must lie on it.
inline std::vector<mpq_class> interpolate_rational(const std::vector<InterpolationPoint>& points,
                                                   std::size_t degree_bound) {
    const std::size_t used = degree_bound + 1;
    detail::check_nodes(points, used);

    // Divided differences in place.
    std::vector<mpq_class> dd(used);
    for (std::size_t i = 0; i < used; ++i) dd[i] = points[i].value;
    for (std::size_t level = 1; level < used; ++level)
        for (std::size_t i = used - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(points[i].k - points[i - level].k);
            if (i == level) break;
        }

    // Horner on the Newton form.
    std::vector<mpq_class> coeffs{dd[used - 1]};
    for (std::size_t i = used - 1; i-- > 0;) {
        std::vector<mpq_class> next(coeffs.size() + 1, 0);
        const mpq_class node(points[i].k);
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j + 1] += coeffs[j];
            next[j] -= node * coeffs[j];
        }
        next[0] += dd[i];
        coeffs = std::move(next);
    }
    for (auto& c : coeffs) c.canonicalize();
    while (coeffs.size() > 1 && sgn(coeffs.back()) == 0) coeffs.pop_back();

    for (std::size_t i = used; i < points.size(); ++i) {
        const mpq_class predicted = detail::evaluate_rational(coeffs, mpq_class(points[i].k));
        if (predicted != mpq_class(points[i].value))
            throw PolynomialityError("interpolant predicts " + predicted.get_str() + " at k=" +
                                     points[i].k.get_str() + ", observed " + points[i].value.get_str());
    }
    return coeffs;
}

/// Same style as IntPolynomial::to_string, with rational coefficients
/// written `a/b`: `16/3x^3+8x^2+14/3x+1`.
inline std::string render_rational_polynomial(const std::vector<mpq_class>& coeffs) {
    std::string s;
    for (std::size_t e = coeffs.size(); e-- > 0;) {
        const mpq_class& c = coeffs[e];
        if (sgn(c) == 0) continue;
        mpq_class mag = abs(c);
        if (sgn(c) < 0) s += '-';
        else if (!s.empty()) s += '+';
        if (e == 0 || mag != 1) s += mag.get_str();
        if (e >= 1) s += 'x';
        if (e >= 2) s += '^' + std::to_string(e);
    }
    return s.empty() ? "0" : s;
}

/// interpolate_rational, additionally requiring integer coefficients.
inline IntPolynomial interpolate_exact(const std::vector<InterpolationPoint>& points, std::size_t degree_bound) {
    detail::check_nodes(points, degree_bound + 1);
    std::vector<mpq_class> coeffs;
    std::optional<PolynomialityError> witness_failure;
    try {
        coeffs = interpolate_rational(points, degree_bound);
    } catch (const PolynomialityError& e) {
        // Integrality is reported first; refit without witnesses to inspect it.
        witness_failure = e;
        coeffs = interpolate_rational({points.begin(), points.begin() + static_cast<std::ptrdiff_t>(degree_bound + 1)},
                                      degree_bound);
    }
    IntPolynomial p;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        if (coeffs[e].get_den() != 1)
            throw NotIntegerPolynomialError("not an integer polynomial: coefficient of x^" + std::to_string(e) +
                                            " is " + coeffs[e].get_str() + " (interpolant " +
                                            render_rational_polynomial(coeffs) + ")");
        p.add_term(coeffs[e].get_num(), static_cast<IntPolynomial::Exponent>(e));
    }
    if (witness_failure) throw *witness_failure;
    return p;
}

}  // namespace nlflow
