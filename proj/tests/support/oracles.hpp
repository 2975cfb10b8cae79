#pragma once

#include <optional>
#include <vector>

#include "tropext/tropvar.hpp"

// Reference computations that share no code with the library beyond the number types.

namespace tropext::oracle {

/// Exponent of p in a nonzero rational.
std::int64_t padic_order(const Rational& q, std::int64_t p);

/// Valuation of a scalar computed from scratch (order of the lowest t-power for series).
std::optional<Rational> valuation(const Scalar& a, const FieldConfig& f);

/// Minimum of val(a_u) + <u, w> attained at least twice.
bool min_twice(const LaurentPoly& f, const QVec& w);

/// Rational points n/d of [lo, hi]^2 with 1 <= d <= maxden, each listed once.
std::vector<QVec> grid(long lo, long hi, long maxden);

/// Hilbert basis of a full-dimensional pointed cone in Z^2 by brute force over the closed
/// fundamental parallelepiped of its two extremal rays. Sorted.
std::vector<IntVec> hilbert_basis_2d(const IntVec& g1, const IntVec& g2);

/// Membership in cone(g1, g2) in the plane via cross products.
bool in_cone_2d(const IntVec& g1, const IntVec& g2, const IntVec& x);

/// Normals u in [-r, r]^n (u != 0) with <u, g> >= 0 for all generators: a direct enumeration
/// of the dual cone's lattice points in a box.
std::vector<IntVec> dual_points_in_box(const std::vector<IntVec>& gens, std::size_t n, long r);

} // namespace tropext::oracle
