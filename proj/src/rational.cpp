#include "phcurv/rational.hpp"

#include <limits>
#include <stdexcept>

namespace phcurv {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole)
{
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+'))
        pos = 1;
    if (pos == s.size())
        throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    BigInt z(std::string(s.substr(pos)));
    return s[0] == '-' ? BigInt(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::int64_t to_int64(const BigInt& z)
{
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer " + z.str() + " does not fit in 64 bits");
    return z.convert_to<std::int64_t>();
}

} // namespace phcurv
