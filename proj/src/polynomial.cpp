#include "phcurv/polynomial.hpp"

#include <algorithm>

namespace phcurv {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients)
{
    normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::t() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Polynomial::evaluate(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    normalize();
    return *this;
}

std::string Polynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0 || mag != 1)
            out += phcurv::to_string(mag);
        if (k >= 1)
            out += "t";
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

Polynomial antiderivative(const Polynomial& p)
{
    if (p.is_zero())
        return {};
    std::vector<Rational> out(p.coefficients().size() + 1);
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        out[k + 1] = p.coefficients()[k] / Rational(static_cast<long long>(k + 1));
    return Polynomial(std::move(out));
}

} // namespace phcurv
