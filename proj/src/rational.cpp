#include "linf/rational.hpp"

#include <stdexcept>

namespace linf {

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    while (!s.empty() && s.front() == ' ')
        s.erase(s.begin());
    while (!s.empty() && s.back() == ' ')
        s.pop_back();
    if (s.empty())
        throw std::invalid_argument("empty rational");
    std::string body = s;
    if (body[0] == '+' || body[0] == '-')
        body = body.substr(1);
    auto slash = body.find('/');
    auto digits = [](const std::string& d) {
        if (d.empty())
            return false;
        for (char c : d)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    if (slash == std::string::npos ? !digits(body)
                                   : !digits(body.substr(0, slash)) || !digits(body.substr(slash + 1)))
        throw std::invalid_argument("malformed rational: " + s);
    if (slash != std::string::npos && body.substr(slash + 1).find_first_not_of('0') == std::string::npos)
        throw std::invalid_argument("zero denominator: " + s);
    if (s[0] == '+')
        s = s.substr(1);
    Rational q(s, 10);
    q.canonicalize();
    return q;
}

Rational factorial(unsigned n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

Rational make_rational(long p, long q)
{
    if (q == 0)
        throw std::invalid_argument("zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}
