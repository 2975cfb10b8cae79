#include "tropext/scalars.hpp"

#include <sstream>

namespace tropext {

const Rational& ExtVal::value() const
{
    if (!value_)
        throw DomainError("value of +inf requested");
    return *value_;
}

bool operator==(const ExtVal& a, const ExtVal& b)
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b)
{
    if (a.is_infinite() && b.is_infinite())
        return std::strong_ordering::equal;
    if (a.is_infinite())
        return std::strong_ordering::greater;
    if (b.is_infinite())
        return std::strong_ordering::less;
    int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string ExtVal::str() const
{
    return is_infinite() ? "inf" : format_rational(*value_);
}

ExtVal ExtVal::parse(std::string_view text)
{
    if (text == "inf" || text == "+inf")
        return infinity();
    return ExtVal(parse_rational(text));
}

ExtVal ext_add(const ExtVal& x, const ExtVal& y)
{
    if (x.is_infinite() || y.is_infinite())
        return ExtVal::infinity();
    return ExtVal(Rational(x.value() + y.value()));
}

ExtVal ext_min(const ExtVal& x, const ExtVal& y)
{
    return (y < x) ? y : x;
}

bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

FieldConfig FieldConfig::padic(std::int64_t p)
{
    if (!is_prime(p))
        throw DomainError("p-adic field requires a prime, got " + std::to_string(p));
    return FieldConfig(FieldKind::Padic, p);
}

FieldConfig FieldConfig::parse(std::string_view text)
{
    if (text == "trivial")
        return trivial();
    if (text == "tadic")
        return tadic();
    if (text.substr(0, 6) == "padic:") {
        auto rest = std::string(text.substr(6));
        std::size_t used = 0;
        long long p = 0;
        try {
            p = std::stoll(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != rest.size())
            throw std::invalid_argument("malformed prime in field '" + std::string(text) + "'");
        return padic(p);
    }
    throw std::invalid_argument("unknown field '" + std::string(text) + "'");
}

std::string FieldConfig::str() const
{
    switch (kind_) {
    case FieldKind::Trivial:
        return "trivial";
    case FieldKind::Padic:
        return "padic:" + std::to_string(prime_);
    case FieldKind::Tadic:
        return "tadic";
    }
    return "?";
}

namespace {

void normalize(TSeries& s)
{
    for (auto it = s.begin(); it != s.end();) {
        if (it->second == 0)
            it = s.erase(it);
        else
            ++it;
    }
}

void require_same_kind(const Scalar& a, const Scalar& b)
{
    if (a.is_series() != b.is_series())
        throw DomainError("field mismatch: rational scalar combined with t-adic scalar");
}

std::int64_t padic_val_int(Integer n, std::int64_t p)
{
    std::int64_t v = 0;
    Integer pz(static_cast<long>(p));
    while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
        n /= pz;
        ++v;
    }
    return v;
}

} // namespace

Scalar::Scalar(TSeries s)
{
    normalize(s);
    rep_ = std::move(s);
}

Scalar Scalar::constant(const Rational& c, const FieldConfig& field)
{
    if (field.kind() == FieldKind::Tadic) {
        TSeries s;
        s[0] = c;
        return Scalar(std::move(s));
    }
    return Scalar(c);
}

Scalar Scalar::monomial_t(const Rational& c, std::int64_t k)
{
    TSeries s;
    s[k] = c;
    return Scalar(std::move(s));
}

bool Scalar::is_zero() const
{
    if (is_series())
        return std::get<TSeries>(rep_).empty();
    return std::get<Rational>(rep_) == 0;
}

const Rational& Scalar::rational() const
{
    if (is_series())
        throw DomainError("t-adic scalar used where a rational was expected");
    return std::get<Rational>(rep_);
}

const TSeries& Scalar::series() const
{
    if (!is_series())
        throw DomainError("rational scalar used where a t-adic scalar was expected");
    return std::get<TSeries>(rep_);
}

void Scalar::check_field(const FieldConfig& field) const
{
    bool want_series = field.kind() == FieldKind::Tadic;
    if (want_series != is_series())
        throw DomainError("malformed scalar for field " + field.str());
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.is_series() != b.is_series())
        return false;
    if (a.is_series())
        return a.series() == b.series();
    return a.rational() == b.rational();
}

std::string Scalar::str() const
{
    if (!is_series())
        return format_rational(rational());
    const auto& s = series();
    if (s.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : s) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << format_rational(c) << ")";
        if (k != 0)
            os << "*t^" << k;
    }
    return os.str();
}

ExtVal val(const Scalar& a, const FieldConfig& field)
{
    a.check_field(field);
    if (a.is_zero())
        return ExtVal::infinity();
    switch (field.kind()) {
    case FieldKind::Trivial:
        return ExtVal(0L);
    case FieldKind::Padic: {
        const Rational& q = a.rational();
        auto v = padic_val_int(q.get_num(), field.prime()) - padic_val_int(q.get_den(), field.prime());
        return ExtVal(static_cast<long>(v));
    }
    case FieldKind::Tadic:
        return ExtVal(static_cast<long>(a.series().begin()->first));
    }
    throw DomainError("unknown field kind");
}

Scalar scalar_add(const Scalar& a, const Scalar& b)
{
    require_same_kind(a, b);
    if (!a.is_series())
        return Scalar(Rational(a.rational() + b.rational()));
    TSeries s = a.series();
    for (const auto& [k, c] : b.series())
        s[k] += c;
    return Scalar(std::move(s));
}

Scalar scalar_mul(const Scalar& a, const Scalar& b)
{
    require_same_kind(a, b);
    if (!a.is_series())
        return Scalar(Rational(a.rational() * b.rational()));
    TSeries s;
    for (const auto& [k1, c1] : a.series())
        for (const auto& [k2, c2] : b.series())
            s[k1 + k2] += c1 * c2;
    return Scalar(std::move(s));
}

Scalar scalar_neg(const Scalar& a)
{
    if (!a.is_series())
        return Scalar(Rational(-a.rational()));
    TSeries s = a.series();
    for (auto& [k, c] : s)
        c = -c;
    return Scalar(std::move(s));
}

Scalar scalar_sub(const Scalar& a, const Scalar& b)
{
    return scalar_add(a, scalar_neg(b));
}

Scalar scalar_pow(const Scalar& a, std::int64_t e)
{
    if (e < 0) {
        if (a.is_zero())
            throw DomainError("negative power of zero");
        if (!a.is_series()) {
            Rational inv = 1 / a.rational();
            return scalar_pow(Scalar(inv), -e);
        }
        if (a.series().size() != 1)
            throw DomainError("negative power of a non-monomial Laurent polynomial in t");
        const auto& [k, c] = *a.series().begin();
        return scalar_pow(Scalar::monomial_t(Rational(1 / c), -k), -e);
    }
    Scalar result = a.is_series() ? Scalar::monomial_t(1, 0) : Scalar(1L);
    Scalar base = a;
    while (e > 0) {
        if (e & 1)
            result = scalar_mul(result, base);
        e >>= 1;
        if (e > 0)
            base = scalar_mul(base, base);
    }
    return result;
}

} // namespace tropext
