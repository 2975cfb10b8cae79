#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropext/tropvar.hpp"

namespace tropext {

/// p/q with q a unit on X°.
struct RationalFunction {
    LaurentPoly num;
    LaurentPoly den;

    static RationalFunction polynomial(LaurentPoly p);
    std::size_t nvars() const noexcept { return num.nvars(); }
    /// Identity p·q' = p'·q in the Laurent ring.
    bool same_as(const RationalFunction& other) const;
    std::string str(const std::vector<std::string>& names = {}) const;
};

/// Ambient fan used for one appended coordinate: A^1 (ray e) or P^1 (rays ±e).
enum class ExtensionFan { Affine, Projective };

std::string to_string(ExtensionFan e);

/// X° = X ∩ T presented in the base torus of rank n.
struct BaseChart {
    std::size_t rank = 0;
    FieldConfig field = FieldConfig::trivial();
    std::vector<LaurentPoly> gens;
    /// Ambient fan of the base embedding; the torus itself when not given.
    FanPtr fan;
    BasisFlag basis = BasisFlag::Unknown;
};

struct ToricEmbedding {
    std::size_t id = 0;
    /// Coordinate functions; the first `base rank` entries are the base coordinates.
    std::vector<RationalFunction> coords;
    /// One entry per coordinate beyond the base.
    std::vector<ExtensionFan> extensions;
    FanPtr fan;
    /// Base generators followed by one relation z_k·q_k - p_k per appended coordinate.
    std::vector<LaurentPoly> ideal_gens;
    BasisFlag basis = BasisFlag::Unknown;
    std::string origin;

    std::size_t rank() const noexcept { return coords.size(); }
    /// Variable names: x, y, z for the base when rank <= 3 (x0, x1, ... otherwise), then
    /// z1, z2, ... for appended coordinates.
    std::vector<std::string> names(std::size_t base_rank) const;
};

struct EmbeddingMorphism {
    std::size_t source = 0;
    std::size_t target = 0;
    TropMap trop;
};

/// Diagram of toric embeddings of X sharing the base coordinates, with registered sample
/// valuations. Grows only by appending nodes, arrows and valuations.
class EmbeddingSystem {
public:
    explicit EmbeddingSystem(BaseChart base);

    const BaseChart& base() const noexcept { return base_; }
    std::size_t base_rank() const noexcept { return base_.rank; }
    const FieldConfig& field() const noexcept { return base_.field; }
    const std::vector<ToricEmbedding>& nodes() const noexcept { return nodes_; }
    const ToricEmbedding& node(std::size_t id) const;
    const std::vector<EmbeddingMorphism>& arrows() const noexcept { return arrows_; }
    const std::vector<PointValuation>& valuations() const noexcept { return valuations_; }

    /// K-points must satisfy the base generators and keep every coordinate denominator nonzero.
    std::size_t register_valuation(PointValuation eta);
    std::size_t add_node(ToricEmbedding node);
    /// Any arrow between existing nodes; commutativity is checked by verify_morphism.
    std::size_t add_arrow(EmbeddingMorphism arrow);

    /// Builds a node from appended coordinates over the base (used by loaders and graph
    /// embeddings). Does not register it.
    ToricEmbedding make_node(std::vector<RationalFunction> extra, std::vector<ExtensionFan> ext,
                             std::string origin) const;

    /// Coordinate projection node `from` → node `to`, when every coordinate of `to` is a
    /// coordinate of `from` (matched structurally; base coordinates first).
    std::optional<IntMatrix> projection_matrix(std::size_t from, std::size_t to) const;

private:
    BaseChart base_;
    std::vector<ToricEmbedding> nodes_;
    std::vector<EmbeddingMorphism> arrows_;
    std::vector<PointValuation> valuations_;
};

struct ProductResult {
    std::size_t node = 0;
    std::size_t arrow_to_first = 0;
    std::size_t arrow_to_second = 0;
};

/// ι × ι' with shared base coordinates deduplicated; adds the node and both projections.
ProductResult product_embedding(EmbeddingSystem& s, std::size_t first, std::size_t second);

/// Product of several nodes without registering it. `placements[i][k]` is the product
/// coordinate of coordinate k of nodes[i].
struct TransientProduct {
    ToricEmbedding node;
    std::vector<std::vector<std::size_t>> placements;
};
TransientProduct build_product(const EmbeddingSystem& s, const std::vector<std::size_t>& nodes);

struct GraphResult {
    std::size_t node = 0;
    std::size_t arrow = 0;
};

/// Appends a coordinate z = f = p/q to node ι with relation z·q - p, ambient fan
/// Δ × (A^1 or P^1), and the projection forgetting z. Throws if q vanishes at a registered
/// K-point.
GraphResult graph_embedding(EmbeddingSystem& s, std::size_t node, const RationalFunction& f,
                            ExtensionFan ext = ExtensionFan::Affine);

/// η(f) for a registered valuation (val(p(x)) - val(q(x)) for a K-point).
ExtVal valuation_of(const PointValuation& eta, const RationalFunction& f);

/// trop(ι^an(η)) as a point of N_R(Δ_ι).
ExtendedPoint trop_image(const EmbeddingSystem& s, std::size_t node, const PointValuation& eta);
ExtendedPoint trop_image(const EmbeddingSystem& s, std::size_t node, std::size_t valuation);

struct MorphismFailure {
    std::size_t valuation = 0;
    std::optional<ExtendedPoint> mapped;   // trop(φ)(trop_source(η))
    std::optional<ExtendedPoint> expected; // trop_target(η)
    std::string message;
};

struct MorphismReport {
    std::size_t arrow = 0;
    std::size_t checked = 0;
    bool passed = true;
    std::vector<MorphismFailure> failures;
};

/// trop(φ) ∘ trop_source = trop_target on every registered valuation, exactly.
MorphismReport verify_morphism(const EmbeddingSystem& s, std::size_t arrow);

/// Target coordinates equal the monomials A·(source coordinates) as rational functions
/// (coefficient 1); checked symbolically, then on registered K-points.
bool coordinates_compatible(const EmbeddingSystem& s, std::size_t arrow);

struct SeparationOptions {
    std::size_t budget = 5;
    std::uint64_t seed = 1;
    bool search_existing = true;
    bool allow_random = true;
};

struct SeparationResult {
    enum class Stage { ExistingNode, DeterministicPool, RandomPool, Failure } stage = Stage::Failure;
    bool success = false;
    std::size_t node = 0;
    bool constructed = false;
    std::optional<RationalFunction> function;
    std::optional<ExtendedPoint> first_image, second_image;
    std::size_t candidates_tried = 0;
};

std::string to_string(SeparationResult::Stage stage);

/// Finds an embedding whose tropicalization separates two distinct registered valuations:
/// first among existing nodes, then by graph-embedding a function from the pool
/// {x_i - c : c a coordinate of either point}, then seeded random affine functions.
SeparationResult separate_points(EmbeddingSystem& s, std::size_t first, std::size_t second,
                                 const SeparationOptions& opts = {});

struct StarWitness {
    std::size_t node = 0;
    bool constructed = false;
    /// f = coefficient · x^exponent on the node's ambient torus.
    IntVec exponent;
    Scalar coefficient;
    /// X° is the preimage of the dense torus: the zero cone of the node's fan.
    std::size_t open_cone = 0;
    /// Largest cone σ of the fan with the exponent in S_σ (the monomial is regular on U_σ).
    std::size_t regular_cone = 0;
};

/// Returns a node on which f is the pullback of a monomial, constructing a graph embedding
/// over the base when no existing node has one.
StarWitness star_witness(EmbeddingSystem& s, const RationalFunction& f, ExtensionFan ext = ExtensionFan::Affine);

/// Finite subdiagram: node ids and arrow indices of the system.
struct Subdiagram {
    std::vector<std::size_t> nodes;
    std::vector<std::size_t> arrows;
};

using Tuple = std::map<std::size_t, ExtendedPoint>;

struct LimitCheckResult {
    enum class Status { CompatibleLifted, CompatibleNoEvidence, CompatibleOutOfPrevariety, Incompatible } status =
        Status::CompatibleLifted;
    std::optional<std::size_t> arrow;
    std::string message;
};

std::string to_string(LimitCheckResult::Status s);

/// Checks the tuple along every arrow of D, then lifts it to the product of the nodes of D
/// and tests membership there.
LimitCheckResult finite_stage_limit_check(const EmbeddingSystem& s, const Subdiagram& d, const Tuple& tuple);

/// Tuple induced by a valuation on the nodes of D.
Tuple induced_tuple(const EmbeddingSystem& s, const Subdiagram& d, const PointValuation& eta);

struct ProbeReport {
    std::size_t checked = 0;
    std::size_t lifted = 0;
    std::size_t no_evidence = 0;
    std::size_t out_of_prevariety = 0;
    std::size_t incompatible = 0;
    std::size_t errors = 0;
    bool passed = true;
    std::vector<std::string> failures;
};

/// Runs the limit check on tuples induced by the first k registered K-points.
ProbeReport surjectivity_probe(const EmbeddingSystem& s, const Subdiagram& d, std::size_t k);

} // namespace tropext
