#pragma once

#include <string>

#include <json.hpp>

#include "tropext/systems.hpp"

namespace tropext::io {

using nlohmann::json;

// Every decoder takes the JSON location of its argument ("$.cones[0]") and throws
// ParseError naming the offending path and field.

json encode(const Rational& q);
json encode(const ExtVal& v);
json encode(const FieldConfig& f);
json encode(const Scalar& s);
json encode(const QVec& v);
json encode(const IntVec& v);
json encode(const IntMatrix& m);

Rational decode_rational(const json& j, const std::string& path);
ExtVal decode_extval(const json& j, const std::string& path);
/// Accepts {"kind": "trivial"|"padic"|"tadic", "p": prime} or the flag text "padic:<p>".
FieldConfig decode_field(const json& j, const std::string& path);
Scalar decode_scalar(const json& j, const FieldConfig& field, const std::string& path);
QVec decode_qvec(const json& j, const std::string& path);
IntVec decode_intvec(const json& j, const std::string& path);
IntMatrix decode_intmatrix(const json& j, const std::string& path);

json encode(const Cone& c);
/// {"rank", "cones": [{"generators"}]}; every face is listed, in index order.
json encode(const Fan& f);
/// Faces may be omitted; the loader completes them unless `complete_faces` is false (the
/// raw list is then kept as given, for validation). With `require_valid` a completed list
/// that still fails fan_validate throws DomainError.
Fan decode_fan(const json& j, const std::string& path, bool complete_faces = true, bool require_valid = true);
json encode(const FanReport& r, const Fan& f);

/// {"stratum": index, "rep": [...]}. The stratum generators are emitted alongside for
/// reading; on input "stratum" may be an index or a list of generators.
json encode(const ExtendedPoint& p);
ExtendedPoint decode_point(const json& j, FanPtr fan, const std::string& path);

json encode(const TropMap& m);
TropMap decode_trop_map(const json& j, FanPtr source, FanPtr target, const std::string& path);

/// {"field", "nvars", "terms": [{"coeff", "exp"}]}; "field" is omitted when `with_field` is
/// false (inside a system, which fixes the field once).
json encode(const LaurentPoly& p, bool with_field = true);
/// `field` is used when the object carries none; a carried field must agree with it.
LaurentPoly decode_poly(const json& j, const std::optional<FieldConfig>& field, const std::string& path);

json encode(const PolyhedralComplex& c);
PolyhedralComplex decode_complex(const json& j, const std::string& path);

json encode(const PointValuation& v);
PointValuation decode_valuation(const json& j, const FieldConfig& field, const std::string& path);

json encode(const RationalFunction& f, const std::vector<std::string>& names = {});
/// Either {"num", "den"} (den defaults to 1) or a bare polynomial.
RationalFunction decode_function(const json& j, const FieldConfig& field, std::size_t nvars,
                                 const std::string& path);

/// {"base", "nodes", "arrows", "valuations"}.
json encode(const EmbeddingSystem& s);
EmbeddingSystem decode_system(const json& j, const std::string& path = "$");

json encode(const EmbeddingSystem& s, const MorphismReport& r);
json encode(const EmbeddingSystem& s, const SeparationResult& r);
json encode(const EmbeddingSystem& s, const StarWitness& w);
json encode(const LimitCheckResult& r);
json encode(const ProbeReport& r);

Subdiagram decode_subdiagram(const json& j, const EmbeddingSystem& s, const std::string& path);
json encode(const Subdiagram& d);
/// [{"node": id, "point": {...}}, ...]
Tuple decode_tuple(const json& j, const EmbeddingSystem& s, const std::string& path);
json encode(const Tuple& t);

/// Pretty-printed with a trailing newline.
std::string dump(const json& j);
json parse_text(const std::string& text, const std::string& source);
json load_file(const std::string& path);

} // namespace tropext::io
