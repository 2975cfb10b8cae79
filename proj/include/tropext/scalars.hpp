#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "tropext/rational.hpp"

namespace tropext {

/// Element of Q ∪ {+∞}: the value monoid of every valuation and tropical evaluation.
class ExtVal {
public:
    ExtVal() : value_(std::nullopt) {}
    ExtVal(const Rational& q) : value_(q) { value_->canonicalize(); }
    ExtVal(long v) : value_(Rational(v)) {}

    static ExtVal infinity() { return ExtVal(); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    bool is_finite() const noexcept { return value_.has_value(); }
    /// Throws DomainError on +∞.
    const Rational& value() const;

    friend bool operator==(const ExtVal& a, const ExtVal& b);
    friend std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b);

    /// "num/den" or "inf".
    std::string str() const;
    static ExtVal parse(std::string_view text);

private:
    std::optional<Rational> value_;
};

ExtVal ext_add(const ExtVal& x, const ExtVal& y);
ExtVal ext_min(const ExtVal& x, const ExtVal& y);

enum class FieldKind { Trivial, Padic, Tadic };

/// The valued field K: Q with the trivial or a p-adic valuation, or Q(t) restricted to
/// Laurent polynomials with the t-adic valuation.
class FieldConfig {
public:
    static FieldConfig trivial() { return FieldConfig(FieldKind::Trivial, 0); }
    /// Throws DomainError unless p is prime.
    static FieldConfig padic(std::int64_t p);
    static FieldConfig tadic() { return FieldConfig(FieldKind::Tadic, 0); }

    /// Accepts "trivial", "padic:<p>", "tadic".
    static FieldConfig parse(std::string_view text);
    std::string str() const;

    FieldKind kind() const noexcept { return kind_; }
    std::int64_t prime() const noexcept { return prime_; }

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

private:
    FieldConfig(FieldKind k, std::int64_t p) : kind_(k), prime_(p) {}
    FieldKind kind_;
    std::int64_t prime_;
};

/// Laurent polynomial in t with rational coefficients. Keys are exponents; no zero coefficients.
using TSeries = std::map<std::int64_t, Rational>;

/// Field element. Holds a rational for the trivial and p-adic fields, a Laurent polynomial
/// in t for the t-adic field. Zero is the rational 0 or the empty Laurent polynomial.
class Scalar {
public:
    Scalar() : rep_(Rational(0)) {}
    Scalar(const Rational& q) : rep_(q) {}
    Scalar(long v) : rep_(Rational(v)) {}
    explicit Scalar(TSeries s);

    /// The constant `c` in the representation used by `field`.
    static Scalar constant(const Rational& c, const FieldConfig& field);
    /// c·t^k; only meaningful over the t-adic field.
    static Scalar monomial_t(const Rational& c, std::int64_t k);
    static Scalar zero(const FieldConfig& field) { return constant(0, field); }
    static Scalar one(const FieldConfig& field) { return constant(1, field); }

    bool is_series() const noexcept { return std::holds_alternative<TSeries>(rep_); }
    bool is_zero() const;
    const Rational& rational() const;
    const TSeries& series() const;

    /// Throws DomainError when the representation does not match the field kind.
    void check_field(const FieldConfig& field) const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string str() const;

private:
    std::variant<Rational, TSeries> rep_;
};

ExtVal val(const Scalar& a, const FieldConfig& field);

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
/// Integer power; negative exponents require an invertible base (nonzero rational, or a
/// single-term Laurent polynomial).
Scalar scalar_pow(const Scalar& a, std::int64_t e);

bool is_prime(std::int64_t p);

} // namespace tropext
