#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "tropext/fan.hpp"
#include "tropext/scalars.hpp"

namespace tropext {

using FanPtr = std::shared_ptr<const Fan>;

inline FanPtr make_fan(Fan f)
{
    return std::make_shared<const Fan>(std::move(f));
}

/// Identity columns chosen greedily (in index order) to extend a basis of span(τ) to a basis
/// of N_R.
std::vector<std::size_t> complement_columns(const Cone& tau);

/// Reduces v modulo span(τ) against the complement spanned by the identity columns chosen
/// greedily (in index order) to extend a basis of span(τ). The result is zero on every
/// coordinate not chosen.
QVec canonical_rep(const Cone& tau, const QVec& v);

/// Point of the extended tropicalization N_R(Δ): a stratum τ ∈ Δ together with a class in
/// N_R / span(τ), stored by its canonical representative. Equivalent to the monoid
/// homomorphism S_σ → Q ∪ {+∞} sending u to ⟨u, rep⟩ when u ∈ τ^⊥ and to +∞ otherwise.
class ExtendedPoint {
public:
    /// Canonicalizes `rep`. Throws DomainError if the stratum index is out of range.
    ExtendedPoint(FanPtr fan, std::size_t stratum, QVec rep);

    static ExtendedPoint torus_point(FanPtr fan, QVec rep);

    const Fan& fan() const { return *fan_; }
    const FanPtr& fan_ptr() const noexcept { return fan_; }
    std::size_t stratum() const noexcept { return stratum_; }
    const Cone& stratum_cone() const { return fan_->cone(stratum_); }
    const QVec& rep() const noexcept { return rep_; }

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b);

private:
    FanPtr fan_;
    std::size_t stratum_;
    QVec rep_;
};

/// Rebuilds the point with its canonical representative (idempotent).
ExtendedPoint canonicalize(const ExtendedPoint& p);

/// val(a) + ⟨u, rep⟩ when u ∈ τ^⊥, +∞ otherwise. Requires τ ≤ σ (σ = fan cone `chart`)
/// and u ∈ S_σ.
ExtVal eval_monomial(const ExtendedPoint& p, std::size_t chart, const IntVec& u, const Scalar& a,
                     const FieldConfig& field);
/// Same with coefficient 1.
ExtVal eval_monomial(const ExtendedPoint& p, std::size_t chart, const IntVec& u);

using HomTable = std::vector<std::pair<IntVec, ExtVal>>;

/// Values of the point on the Hilbert basis of S_σ.
HomTable as_monoid_hom(const ExtendedPoint& p, std::size_t chart);

/// Inverse of as_monoid_hom. The table may list any elements of S_σ; it must be additive
/// (checked on every pairwise sum that appears in the table), its +∞ entries must be exactly
/// those outside τ^⊥ for a face τ of σ, and its finite entries must determine the class.
ExtendedPoint hom_to_point(FanPtr fan, std::size_t chart, const HomTable& table);

/// Tropicalization of an equivariant toric morphism composed with a torus translation:
/// v ↦ A v + shift on N_R, extended to the boundary strata.
class TropMap {
public:
    /// Throws DomainError when A does not map every cone of `source` into a cone of `target`.
    TropMap(IntMatrix matrix, QVec shift, FanPtr source, FanPtr target);
    TropMap(IntMatrix matrix, FanPtr source, FanPtr target);

    const IntMatrix& matrix() const noexcept { return matrix_; }
    const QVec& shift() const noexcept { return shift_; }
    const Fan& source() const { return *source_; }
    const Fan& target() const { return *target_; }
    const FanPtr& source_ptr() const noexcept { return source_; }
    const FanPtr& target_ptr() const noexcept { return target_; }
    /// Smallest target cone containing the image of each source cone.
    const std::vector<std::optional<std::size_t>>& assignment() const noexcept { return assignment_; }

private:
    IntMatrix matrix_;
    QVec shift_;
    FanPtr source_, target_;
    std::vector<std::optional<std::size_t>> assignment_;
};

/// Stratum of the image = the target cone whose relative interior contains A·(sum of the
/// generators of τ); rep' = A·rep + shift, reduced modulo the new stratum.
ExtendedPoint trop_map_apply(const TropMap& m, const ExtendedPoint& p);

/// The same image computed on the dual side: the monoid homomorphism of p composed with
/// u' ↦ Aᵀu' (plus ⟨u', shift⟩), converted back with hom_to_point.
ExtendedPoint trop_map_apply_dual(const TropMap& m, const ExtendedPoint& p);

/// second ∘ first.
TropMap compose(const TropMap& second, const TropMap& first);

} // namespace tropext
