#include "galepoly/linalg.hpp"

#include <cctype>

#include "galepoly/errors.hpp"

namespace galepoly {

std::string toString(const Rational& q)
{
    return q.str();
}

namespace {

bool isIntegerLiteral(std::string_view s, bool allowSign)
{
    if (!s.empty() && allowSign && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parseRational(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!isIntegerLiteral(num, true))
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
    if (slash == std::string_view::npos)
        return Rational(n);
    const std::string_view den = text.substr(slash + 1);
    if (!isIntegerLiteral(den, false))
        throw ParseError("not a rational: \"" + std::string(text) + "\"");
    Integer d{std::string(den)};
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    return Rational(n, d);
}

bool isCanonical(const Rational& q)
{
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    return den > 0 && gcd(num, den) == 1;
}

}  // namespace galepoly
