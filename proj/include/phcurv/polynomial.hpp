#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "phcurv/rational.hpp"

namespace phcurv {

/// Univariate polynomial in t with exact rational coefficients.
///
/// Coefficient k multiplies t^k. Trailing zeros are stripped on every
/// mutation, so the zero polynomial has no coefficients and equality is
/// coefficient-wise.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients);

    static Polynomial constant(const Rational& c);
    /// The monomial t.
    static Polynomial t();

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Zero for k beyond the degree.
    Rational coefficient(std::size_t k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& at) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form, e.g. "1 + 3t + 3/2t^2".
    std::string to_string() const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

/// F(t) = integral of p from 0 to t, term by term.
Polynomial antiderivative(const Polynomial& p);

} // namespace phcurv
