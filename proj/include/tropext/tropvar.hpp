#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropext/linalg.hpp"
#include "tropext/scalars.hpp"
#include "tropext/tropspace.hpp"

namespace tropext {

/// Laurent polynomial over K in `nvars` variables. Exponents are distinct and no stored
/// coefficient is zero.
class LaurentPoly {
public:
    LaurentPoly(FieldConfig field, std::size_t nvars);
    /// Combines repeated exponents and drops zero coefficients.
    LaurentPoly(FieldConfig field, std::size_t nvars, const std::vector<std::pair<Scalar, IntVec>>& terms);

    static LaurentPoly constant(const FieldConfig& field, std::size_t nvars, const Scalar& c);
    static LaurentPoly variable(const FieldConfig& field, std::size_t nvars, std::size_t i);
    static LaurentPoly monomial(const FieldConfig& field, std::size_t nvars, const Scalar& c, IntVec exp);

    const FieldConfig& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const std::map<IntVec, Scalar>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    /// Exact value at a point with nonzero coordinates (for negative exponents).
    Scalar evaluate(const std::vector<Scalar>& point) const;

    /// Moves variable i to variable `placement[i]` of a ring with `new_nvars` variables.
    LaurentPoly relabel(std::size_t new_nvars, const std::vector<std::size_t>& placement) const;

    /// Human-readable form, e.g. "x0 + x1 + 1". `names` overrides the variable names.
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void insert(const IntVec& exp, const Scalar& c);

    FieldConfig field_;
    std::size_t nvars_;
    std::map<IntVec, Scalar> terms_;
};

/// Min-plus polynomial: min over terms of coeff + ⟨exp, w⟩. Every coefficient is finite.
struct TropicalPolynomial {
    struct Term {
        Rational coeff;
        IntVec exp;
        friend bool operator==(const Term&, const Term&) = default;
    };
    std::size_t nvars = 0;
    std::vector<Term> terms;
    friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;
};

/// Coefficient of x^u becomes val(a_u). Throws DomainError on the zero polynomial.
TropicalPolynomial tropicalize_poly(const LaurentPoly& f);

struct TropEval {
    ExtVal min;
    std::size_t argmin_count = 0;
};

/// Evaluation at a point of N_R (the torus stratum).
TropEval trop_eval(const TropicalPolynomial& f, const QVec& w);
/// Evaluation at an extended point; exponents must lie in S_σ for the chart σ ⊇ τ. A term
/// whose exponent is not in τ^⊥ evaluates to +∞.
TropEval trop_eval(const TropicalPolynomial& f, const ExtendedPoint& p, std::size_t chart);

/// Minimum attained at least twice, or equal to +∞.
bool membership_min_twice(const TropicalPolynomial& f, const QVec& w);
bool membership_min_twice(const TropicalPolynomial& f, const ExtendedPoint& p, std::size_t chart);

/// Closed polyhedron in N_R / span(τ), given in the coordinates of N_R:
///   a·w = b for each equation row and a·w <= b for each inequality row.
struct Cell {
    std::vector<linalg::Constraint> equations;
    std::vector<linalg::Constraint> inequalities;
    std::size_t dim = 0;
    /// For hypersurface cells: indices (in exponent order) of the terms attaining the minimum
    /// in the relative interior.
    std::vector<std::size_t> terms;

    bool contains(const QVec& w) const;
    std::vector<linalg::Constraint> constraints() const;
    friend bool operator==(const Cell&, const Cell&) = default;
};

struct PolyhedralComplex {
    std::size_t stratum = 0;
    std::size_t ambient_dim = 0;
    std::vector<Cell> cells;
    /// Set when the input has a single term and its tropicalization is empty.
    bool empty_tropicalization = false;

    bool contains(const QVec& w) const;
    friend bool operator==(const PolyhedralComplex&, const PolyhedralComplex&) = default;
};

/// Dimension of a nonempty polyhedron (implicit equalities are detected exactly).
/// Returns nullopt when empty.
std::optional<std::size_t> polyhedron_dim(std::size_t n, const std::vector<linalg::Constraint>& cons);

/// a ⊆ b for closed polyhedra.
bool cell_contains(std::size_t n, const Cell& outer, const Cell& inner);

/// Every cell of `inner` lies in some cell of `outer`.
bool complex_covers(const PolyhedralComplex& outer, const PolyhedralComplex& inner);
/// Mutual cellwise containment.
bool same_support_cellwise(const PolyhedralComplex& a, const PolyhedralComplex& b);

/// The min-attained-twice locus of f in N_R, one cell per set of at least two terms that is
/// the exact argmin set somewhere (relative interiors), closed cells.
PolyhedralComplex trop_hypersurface(const LaurentPoly& f);

/// Common refinement: all nonempty pairwise intersections of cells, deduplicated.
PolyhedralComplex intersect_complexes(const PolyhedralComplex& a, const PolyhedralComplex& b);

/// Intersection of the hypersurface complexes of all generators (the tropical prevariety;
/// equal to the tropicalization when the generators form a tropical basis).
PolyhedralComplex trop_prevariety(const std::vector<LaurentPoly>& gens);

/// Image of a torus-stratum complex under v ↦ A v + shift. Throws DomainError for complexes
/// on a boundary stratum.
PolyhedralComplex project_complex(const PolyhedralComplex& c, const TropMap& m);

struct OrbitRestriction {
    std::vector<LaurentPoly> gens;
    /// Number of generators that vanish identically on the orbit and were dropped.
    std::size_t dropped = 0;
};

/// Deletes every term whose exponent is not in τ^⊥. Exponents keep their coordinates in M.
/// Throws if an exponent is outside S_σ or τ is not a face of σ.
OrbitRestriction orbit_restriction(const std::vector<LaurentPoly>& gens, const Cone& sigma, const Cone& tau);

enum class BasisFlag { Asserted, Unknown };
enum class Membership { In, Out, InPrevariety };

std::string to_string(Membership m);
std::string to_string(BasisFlag b);

/// Membership of an extended point in trop of V(gens): restrict the generators to the orbit of
/// the point's stratum and test the min-twice condition for each survivor. The generators are
/// read in the chart of the stratum itself unless `chart` is given.
Membership extended_membership(const std::vector<LaurentPoly>& gens, const ExtendedPoint& p, BasisFlag flag,
                               std::optional<std::size_t> chart = std::nullopt);

/// Explicitly constructible point of the analytification: the valuation of a K-point of the
/// torus, or the weight (Gauss) valuation of the ambient torus ring.
class PointValuation {
public:
    enum class Kind { KPoint, Weight };

    /// Throws DomainError when a coordinate is zero or does not match the field.
    static PointValuation kpoint(std::vector<Scalar> coords, const FieldConfig& field);
    static PointValuation weight(QVec w);

    Kind kind() const noexcept { return kind_; }
    const std::vector<Scalar>& coords() const noexcept { return coords_; }
    const QVec& weight_vector() const noexcept { return weight_; }
    const FieldConfig& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return kind_ == Kind::KPoint ? coords_.size() : weight_.size(); }
    /// Weights are valuations on the ambient torus ring only.
    bool ambient_only() const noexcept { return kind_ == Kind::Weight; }

    /// η(f): val(f(x)) for a K-point; min over terms of val(a_u) + ⟨u, w⟩ for a weight.
    ExtVal value_of(const LaurentPoly& f) const;

    /// Throws DomainError unless every generator vanishes at the K-point.
    void check_on(const std::vector<LaurentPoly>& gens) const;

    friend bool operator==(const PointValuation& a, const PointValuation& b);

private:
    Kind kind_ = Kind::KPoint;
    FieldConfig field_ = FieldConfig::trivial();
    std::vector<Scalar> coords_;
    QVec weight_;
};

/// The monoid homomorphism u ↦ η(x^u) on S_σ, as an extended point of `fan`.
ExtendedPoint trop_of_point_valuation(const PointValuation& eta, FanPtr fan, std::size_t chart,
                                      const std::vector<LaurentPoly>& ideal = {});

} // namespace tropext
