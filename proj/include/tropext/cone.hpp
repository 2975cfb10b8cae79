#pragma once

#include <cstddef>
#include <vector>

#include "tropext/rational.hpp"

namespace tropext {

/// Rational polyhedral cone in a lattice of rank n, given by generators.
///
/// The inequality description is computed once at construction:
///   cone = { v : ⟨e, v⟩ = 0 for e in equations, ⟨f, v⟩ >= 0 for f in facet_normals }.
/// Equations span the orthogonal complement of the linear span; facet normals are primitive
/// integer covectors taken inside the linear span, so both lists are canonical.
/// Generators are stored primitive, deduplicated and sorted; for pointed cones only the
/// extremal rays are kept.
class Cone {
public:
    Cone() = default;
    Cone(std::size_t rank, std::vector<IntVec> generators);

    static Cone zero(std::size_t rank) { return Cone(rank, {}); }
    /// Cone generated by ±e_i.
    static Cone full(std::size_t rank);
    static Cone orthant(std::size_t rank);

    std::size_t ambient_rank() const noexcept { return rank_; }
    const std::vector<IntVec>& generators() const noexcept { return gens_; }
    const std::vector<IntVec>& facet_normals() const noexcept { return facets_; }
    const std::vector<IntVec>& equations() const noexcept { return equations_; }
    /// Dimension of the linear span.
    std::size_t dim() const noexcept { return dim_; }
    /// Dimension of the largest linear subspace contained in the cone.
    std::size_t lineality_dim() const noexcept { return lineality_dim_; }
    bool is_pointed() const noexcept { return lineality_dim_ == 0; }

    bool contains(const QVec& v) const;
    bool contains(const IntVec& v) const;
    bool contains(const Cone& other) const;
    /// v lies in the cone and strictly inside every facet (relative interior).
    bool relint_contains(const QVec& v) const;

    /// Set equality by mutual containment.
    friend bool operator==(const Cone& a, const Cone& b);

    /// Sum of the generators: a point of the relative interior.
    IntVec interior_sample() const;

    /// Covectors u with ⟨u, v⟩ = 0 on the whole cone: a rational basis of span(σ)^⊥.
    const std::vector<IntVec>& orthogonal_basis() const noexcept { return equations_; }
    /// True iff ⟨u, v⟩ = 0 for every v in the cone.
    bool annihilated_by(const IntVec& u) const;
    /// True iff ⟨u, v⟩ >= 0 for every v in the cone (u in the dual cone).
    bool nonnegative_on(const IntVec& u) const;

private:
    void compute_inequalities();

    std::size_t rank_ = 0;
    std::size_t dim_ = 0;
    std::size_t lineality_dim_ = 0;
    std::vector<IntVec> gens_;
    std::vector<IntVec> facets_;
    std::vector<IntVec> equations_;
};

/// {u : ⟨u, v⟩ >= 0 for all v in σ}.
Cone dual_cone(const Cone& sigma);

Cone intersect(const Cone& a, const Cone& b);

/// All faces of σ, including the minimal face (the lineality space) and σ itself, ordered by
/// dimension and then by generators.
std::vector<Cone> faces(const Cone& sigma);

/// Supporting covector u in the dual cone with face = σ ∩ u^⊥. Throws if `face` is not a face.
IntVec supporting_normal(const Cone& sigma, const Cone& face);

bool is_face(const Cone& sigma, const Cone& candidate);

/// The unique face of σ containing v in its relative interior. Throws DomainError if v ∉ σ.
Cone minimal_face_containing(const Cone& sigma, const QVec& v);

/// σ × σ' in the direct sum lattice.
Cone product_cone(const Cone& a, const Cone& b);

/// Image of the cone under an integer matrix (rows = target coordinates).
Cone image_cone(const IntMatrix& a, std::size_t target_rank, const Cone& sigma);

/// Minimal generating set of the monoid C ∩ Z^n. For non-pointed cones the output contains
/// ± a lattice basis of the lineality lattice followed by lifts of the Hilbert basis of the
/// pointed quotient. Sorted for determinism (pointed case).
std::vector<IntVec> hilbert_basis(const Cone& c);

} // namespace tropext
