#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tropext {

using Rational = mpq_class;
using Integer = mpz_class;

/// Rational vector in N_R or M_R.
using QVec = std::vector<Rational>;
/// Lattice vector (or covector) with exact integer entries.
using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;
using QMatrix = std::vector<QVec>;

/// Raised when an operation's mathematical precondition fails.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when external input cannot be decoded. `path` names the offending location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Parses "n", "-n", "n/d". Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Always "num/den" with den > 0, e.g. "3/1", "-1/2".
std::string format_rational(const Rational& q);

QVec to_qvec(const IntVec& v);
Rational dot(const QVec& a, const QVec& b);
Rational dot(const IntVec& a, const QVec& b);
std::int64_t dot(const IntVec& a, const IntVec& b);

bool is_zero(const QVec& v);
bool is_zero(const IntVec& v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
/// Clears denominators and returns the primitive integer vector on the same ray.
IntVec primitive(const QVec& v);

std::int64_t to_int64(const Integer& z);

} // namespace tropext
