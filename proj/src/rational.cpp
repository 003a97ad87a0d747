#include "stringcubes/rational.hpp"

#include <cctype>

namespace stringcubes {

std::string to_fraction_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    auto check_int = [](const std::string& part) {
        if (part.empty())
            throw std::invalid_argument("malformed rational literal");
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size())
            throw std::invalid_argument("malformed rational literal");
        for (std::size_t i = start; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                throw std::invalid_argument("malformed rational literal: " + part);
    };
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(Integer(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    Integer d(den);
    if (d <= 0)
        throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rational(Integer(num), d);
}

bool is_integral(const Rational& q)
{
    return denominator(q) == 1;
}

Integer floor_int(const Rational& q)
{
    Integer n = numerator(q), d = denominator(q);
    Integer r = n / d;
    if (n % d != 0 && n < 0)
        --r;
    return r;
}

Integer ceil_int(const Rational& q)
{
    return -floor_int(-q);
}

bool lex_less(const VectorXr& a, const VectorXr& b)
{
    const auto n = std::min(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        if (a(i) != b(i))
            return a(i) < b(i);
    }
    return a.size() < b.size();
}

}  // namespace stringcubes
