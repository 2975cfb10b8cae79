#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropext/cone.hpp"

namespace tropext {

/// Finite collection of cones in a lattice of fixed rank. A Fan built with
/// `complete_faces = true` contains every face of every cone, sorted by dimension and
/// generators so that cone indices are deterministic.
class Fan {
public:
    Fan() = default;
    Fan(std::size_t rank, std::vector<Cone> cones, bool complete_faces = true);

    /// The fan consisting of the origin only: the torus itself.
    static Fan torus(std::size_t rank) { return Fan(rank, {Cone::zero(rank)}); }
    /// Fan of A^1: the ray e_1 and the origin.
    static Fan affine_line();
    /// Fan of P^1: rays ±e_1 and the origin.
    static Fan projective_line();
    /// Fan of P^2: rays e1, e2, -e1-e2 and the three 2-cones.
    static Fan projective_plane();
    /// All faces of the positive orthant.
    static Fan orthant(std::size_t rank);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<Cone>& cones() const noexcept { return cones_; }
    const Cone& cone(std::size_t i) const { return cones_.at(i); }
    std::size_t size() const noexcept { return cones_.size(); }

    /// Index of a cone equal to `c`, if present.
    std::optional<std::size_t> find(const Cone& c) const;
    std::size_t index_of(const Cone& c) const;
    /// Index of the zero cone. Throws if the fan does not contain it.
    std::size_t zero_index() const;

    friend bool operator==(const Fan& a, const Fan& b);

private:
    std::size_t rank_ = 0;
    std::vector<Cone> cones_;
};

struct FanViolation {
    enum class Kind { MissingFace, BadIntersection, WrongRank } kind;
    std::size_t first;
    std::size_t second; // equals `first` for MissingFace / WrongRank
    std::string detail;
};

struct FanReport {
    bool valid = true;
    std::vector<FanViolation> violations;
};

/// Checks face closure and that every pairwise intersection is a face of both cones.
FanReport fan_validate(const Fan& fan);

Fan product_fan(const Fan& a, const Fan& b);

/// Smallest cone of `target` containing `c`, if any.
std::optional<std::size_t> smallest_containing(const Fan& target, const Cone& c);

struct FanMapCompatibility {
    bool compatible = true;
    /// For every source cone, the smallest target cone containing its image.
    std::vector<std::optional<std::size_t>> assignment;
};

/// Whether the integer matrix (rows = target coordinates) maps every cone of `source`
/// into some cone of `target`.
FanMapCompatibility fan_map_compatible(const IntMatrix& a, const Fan& source, const Fan& target);

} // namespace tropext
