#include "tropext/rational.hpp"

#include <numeric>

namespace tropext {

namespace {

bool valid_integer_text(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!valid_integer_text(s))
        throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
    if (s[0] == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q)
{
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

QVec to_qvec(const IntVec& v)
{
    QVec out;
    out.reserve(v.size());
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

Rational dot(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw DomainError("dimension mismatch in pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw DomainError("dimension mismatch in pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += Rational(static_cast<long>(a[i])) * b[i];
    return s;
}

std::int64_t dot(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size())
        throw DomainError("dimension mismatch in pairing");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero(const QVec& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

bool is_zero(const IntVec& v)
{
    for (auto x : v)
        if (x != 0)
            return false;
    return true;
}

IntVec primitive(const IntVec& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    if (g == 0)
        return v;
    IntVec out(v);
    for (auto& x : out)
        x /= g;
    return out;
}

IntVec primitive(const QVec& v)
{
    Integer l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> scaled;
    Integer g = 0;
    for (const auto& x : v) {
        Integer s = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
        scaled.push_back(s);
    }
    IntVec out;
    out.reserve(v.size());
    for (auto& s : scaled)
        out.push_back(g == 0 ? 0 : to_int64(Integer(s / g)));
    return out;
}

std::int64_t to_int64(const Integer& z)
{
    if (!z.fits_slong_p())
        throw DomainError("integer overflow: " + z.get_str());
    return z.get_si();
}

} // namespace tropext
