#include "tropext/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tropext::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw ParseError(path, what);
}

std::string at(const std::string& path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

std::string at(const std::string& path, const char* key)
{
    return path + "." + key;
}

const json& field(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(at(path, key), "missing field");
    return *it;
}

const json* optional_field(const json& j, const char* key, const std::string& path)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

const json& array(const json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array");
    return j;
}

std::int64_t integer(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::size_t index(const json& j, const std::string& path)
{
    auto v = integer(j, path);
    if (v < 0)
        fail(path, "expected a nonnegative index");
    return static_cast<std::size_t>(v);
}

const std::string& text(const json& j, const std::string& path)
{
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get_ref<const std::string&>();
}

std::vector<std::size_t> index_list(const json& j, const std::string& path)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
        out.push_back(index(j[i], at(path, i)));
    return out;
}

json encode_row(const linalg::Constraint& c)
{
    json row = json::array();
    for (const auto& a : c.a)
        row.push_back(encode(a));
    row.push_back(encode(c.b));
    return row;
}

linalg::Constraint decode_row(const json& j, std::size_t n, linalg::Rel rel, const std::string& path)
{
    QVec v = decode_qvec(j, path);
    if (v.size() != n + 1)
        fail(path, "expected " + std::to_string(n + 1) + " entries (coefficients then bound)");
    linalg::Constraint c;
    c.b = v.back();
    v.pop_back();
    c.a = std::move(v);
    c.rel = rel;
    return c;
}

} // namespace

json encode(const Rational& q)
{
    return format_rational(q);
}

json encode(const ExtVal& v)
{
    return v.str();
}

json encode(const FieldConfig& f)
{
    json j = {{"kind", f.kind() == FieldKind::Trivial ? "trivial" : f.kind() == FieldKind::Padic ? "padic" : "tadic"}};
    if (f.kind() == FieldKind::Padic)
        j["p"] = f.prime();
    return j;
}

json encode(const Scalar& s)
{
    if (!s.is_series())
        return encode(s.rational());
    json out = json::array();
    for (const auto& [k, c] : s.series())
        out.push_back(json::array({k, encode(c)}));
    return out;
}

json encode(const QVec& v)
{
    json out = json::array();
    for (const auto& q : v)
        out.push_back(encode(q));
    return out;
}

json encode(const IntVec& v)
{
    return json(v);
}

json encode(const IntMatrix& m)
{
    json out = json::array();
    for (const auto& row : m)
        out.push_back(encode(row));
    return out;
}

Rational decode_rational(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    try {
        return parse_rational(text(j, path));
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

ExtVal decode_extval(const json& j, const std::string& path)
{
    if (j.is_string() && j.get_ref<const std::string&>() == "inf")
        return ExtVal::infinity();
    return ExtVal(decode_rational(j, path));
}

FieldConfig decode_field(const json& j, const std::string& path)
{
    try {
        if (j.is_string())
            return FieldConfig::parse(j.get_ref<const std::string&>());
        const auto& kind = text(field(j, "kind", path), at(path, "kind"));
        if (kind == "padic")
            return FieldConfig::padic(integer(field(j, "p", path), at(path, "p")));
        return FieldConfig::parse(kind);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    } catch (const DomainError& e) {
        fail(path, e.what());
    }
}

Scalar decode_scalar(const json& j, const FieldConfig& f, const std::string& path)
{
    if (f.kind() != FieldKind::Tadic) {
        if (j.is_array())
            fail(path, "t-adic series given for field " + f.str());
        return Scalar(decode_rational(j, path));
    }
    if (!j.is_array())
        return Scalar::constant(decode_rational(j, path), f);
    TSeries s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto p = at(path, i);
        if (!j[i].is_array() || j[i].size() != 2)
            fail(p, "expected [exponent, \"num/den\"]");
        auto k = integer(j[i][0], at(p, std::size_t{0}));
        if (s.count(k))
            fail(p, "repeated exponent");
        Rational c = decode_rational(j[i][1], at(p, std::size_t{1}));
        if (c != 0)
            s.emplace(k, c);
    }
    return Scalar(std::move(s));
}

QVec decode_qvec(const json& j, const std::string& path)
{
    QVec out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
        out.push_back(decode_rational(j[i], at(path, i)));
    return out;
}

IntVec decode_intvec(const json& j, const std::string& path)
{
    IntVec out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
        out.push_back(integer(j[i], at(path, i)));
    return out;
}

IntMatrix decode_intmatrix(const json& j, const std::string& path)
{
    IntMatrix out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
        out.push_back(decode_intvec(j[i], at(path, i)));
    return out;
}

json encode(const Cone& c)
{
    return {{"generators", encode(IntMatrix(c.generators()))}};
}

json encode(const Fan& f)
{
    json cones = json::array();
    for (const auto& c : f.cones())
        cones.push_back(encode(c));
    return {{"rank", f.rank()}, {"cones", cones}};
}

Fan decode_fan(const json& j, const std::string& path, bool complete_faces, bool require_valid)
{
    auto rank = index(field(j, "rank", path), at(path, "rank"));
    const auto& cones = array(field(j, "cones", path), at(path, "cones"));
    std::vector<Cone> out;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        auto p = at(at(path, "cones"), i);
        auto gens = decode_intmatrix(field(cones[i], "generators", p), at(p, "generators"));
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (gens[g].size() != rank)
                fail(at(at(p, "generators"), g), "generator length differs from rank " + std::to_string(rank));
        out.emplace_back(rank, std::move(gens));
    }
    Fan fan(rank, std::move(out), complete_faces);
    if (complete_faces && require_valid) {
        auto r = fan_validate(fan);
        if (!r.valid)
            throw DomainError(path + ": not a fan: " + r.violations.front().detail);
    }
    return fan;
}

json encode(const FanReport& r, const Fan& f)
{
    json v = json::array();
    for (const auto& x : r.violations) {
        const char* kind = x.kind == FanViolation::Kind::MissingFace       ? "missing-face"
                           : x.kind == FanViolation::Kind::BadIntersection ? "bad-intersection"
                                                                           : "wrong-rank";
        v.push_back({{"kind", kind},
                     {"first", x.first},
                     {"second", x.second},
                     {"first_generators", encode(IntMatrix(f.cone(x.first).generators()))},
                     {"second_generators", encode(IntMatrix(f.cone(x.second).generators()))},
                     {"detail", x.detail}});
    }
    return {{"valid", r.valid}, {"violations", v}};
}

json encode(const ExtendedPoint& p)
{
    return {{"stratum", p.stratum()},
            {"stratum_generators", encode(IntMatrix(p.stratum_cone().generators()))},
            {"rep", encode(p.rep())}};
}

ExtendedPoint decode_point(const json& j, FanPtr fan, const std::string& path)
{
    // "stratum" may be an index or a generator list; "stratum_generators" alone also works.
    const char* key = "stratum";
    if (j.is_object() && !j.contains("stratum") && j.contains("stratum_generators"))
        key = "stratum_generators";
    const auto& s = field(j, key, path);
    std::size_t stratum = 0;
    if (s.is_array()) {
        auto gens = decode_intmatrix(s, at(path, key));
        for (const auto& g : gens)
            if (g.size() != fan->rank())
                fail(at(path, key), "generator length differs from the fan rank");
        auto found = fan->find(Cone(fan->rank(), std::move(gens)));
        if (!found)
            fail(at(path, key), "cone is not in the fan");
        stratum = *found;
    } else {
        stratum = index(s, at(path, key));
        if (stratum >= fan->size())
            fail(at(path, key), "cone index out of range");
    }
    auto rep = decode_qvec(field(j, "rep", path), at(path, "rep"));
    if (rep.size() != fan->rank())
        fail(at(path, "rep"), "length differs from the fan rank");
    return ExtendedPoint(std::move(fan), stratum, std::move(rep));
}

json encode(const TropMap& m)
{
    return {{"matrix", encode(m.matrix())}, {"shift", encode(m.shift())}};
}

TropMap decode_trop_map(const json& j, FanPtr source, FanPtr target, const std::string& path)
{
    auto a = decode_intmatrix(field(j, "matrix", path), at(path, "matrix"));
    if (a.size() != target->rank())
        fail(at(path, "matrix"), "expected one row per target coordinate");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].size() != source->rank())
            fail(at(at(path, "matrix"), i), "row length differs from the source rank");
    QVec shift(target->rank(), Rational(0));
    if (const auto* s = optional_field(j, "shift", path)) {
        shift = decode_qvec(*s, at(path, "shift"));
        if (shift.size() != target->rank())
            fail(at(path, "shift"), "length differs from the target rank");
    }
    return TropMap(std::move(a), std::move(shift), std::move(source), std::move(target));
}

json encode(const LaurentPoly& p, bool with_field)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"coeff", encode(c)}, {"exp", encode(e)}});
    json j;
    if (with_field)
        j["field"] = encode(p.field());
    j["nvars"] = p.nvars();
    j["terms"] = terms;
    return j;
}

LaurentPoly decode_poly(const json& j, const std::optional<FieldConfig>& fallback, const std::string& path)
{
    std::optional<FieldConfig> f;
    if (const auto* fj = optional_field(j, "field", path)) {
        f = decode_field(*fj, at(path, "field"));
        if (fallback && !(*f == *fallback))
            fail(at(path, "field"), "field differs from the enclosing field " + fallback->str());
    } else {
        f = fallback;
    }
    if (!f)
        fail(at(path, "field"), "missing field");
    const auto& terms = array(field(j, "terms", path), at(path, "terms"));
    std::optional<std::size_t> nvars;
    if (const auto* nj = optional_field(j, "nvars", path))
        nvars = index(*nj, at(path, "nvars"));
    std::vector<std::pair<Scalar, IntVec>> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto p = at(at(path, "terms"), i);
        auto e = decode_intvec(field(terms[i], "exp", p), at(p, "exp"));
        if (!nvars)
            nvars = e.size();
        if (e.size() != *nvars)
            fail(at(p, "exp"), "exponent length differs from nvars " + std::to_string(*nvars));
        out.emplace_back(decode_scalar(field(terms[i], "coeff", p), *f, at(p, "coeff")), std::move(e));
    }
    if (!nvars)
        fail(at(path, "nvars"), "missing field (needed when there are no terms)");
    return LaurentPoly(*f, *nvars, out);
}

json encode(const PolyhedralComplex& c)
{
    json cells = json::array();
    for (const auto& cell : c.cells) {
        json eq = json::array(), ineq = json::array();
        for (const auto& r : cell.equations)
            eq.push_back(encode_row(r));
        for (const auto& r : cell.inequalities)
            ineq.push_back(encode_row(r));
        cells.push_back({{"dim", cell.dim}, {"eq", eq}, {"ineq", ineq}, {"terms", cell.terms}});
    }
    return {{"stratum", c.stratum},
            {"ambient_dim", c.ambient_dim},
            {"empty_tropicalization", c.empty_tropicalization},
            {"cells", cells}};
}

PolyhedralComplex decode_complex(const json& j, const std::string& path)
{
    PolyhedralComplex c;
    c.stratum = index(field(j, "stratum", path), at(path, "stratum"));
    c.ambient_dim = index(field(j, "ambient_dim", path), at(path, "ambient_dim"));
    if (const auto* e = optional_field(j, "empty_tropicalization", path)) {
        if (!e->is_boolean())
            fail(at(path, "empty_tropicalization"), "expected a boolean");
        c.empty_tropicalization = e->get<bool>();
    }
    const auto& cells = array(field(j, "cells", path), at(path, "cells"));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto p = at(at(path, "cells"), i);
        Cell cell;
        const auto& eq = array(field(cells[i], "eq", p), at(p, "eq"));
        for (std::size_t r = 0; r < eq.size(); ++r)
            cell.equations.push_back(decode_row(eq[r], c.ambient_dim, linalg::Rel::Eq, at(at(p, "eq"), r)));
        const auto& ineq = array(field(cells[i], "ineq", p), at(p, "ineq"));
        for (std::size_t r = 0; r < ineq.size(); ++r)
            cell.inequalities.push_back(
                decode_row(ineq[r], c.ambient_dim, linalg::Rel::Le, at(at(p, "ineq"), r)));
        auto dim = polyhedron_dim(c.ambient_dim, cell.constraints());
        if (!dim)
            fail(p, "cell is empty");
        if (const auto* d = optional_field(cells[i], "dim", p)) {
            if (index(*d, at(p, "dim")) != *dim)
                fail(at(p, "dim"), "stated dimension differs from the computed " + std::to_string(*dim));
        }
        cell.dim = *dim;
        if (const auto* t = optional_field(cells[i], "terms", p))
            cell.terms = index_list(*t, at(p, "terms"));
        c.cells.push_back(std::move(cell));
    }
    return c;
}

json encode(const PointValuation& v)
{
    if (v.kind() == PointValuation::Kind::Weight)
        return {{"kind", "weight"}, {"w", encode(v.weight_vector())}};
    json coords = json::array();
    for (const auto& c : v.coords())
        coords.push_back(encode(c));
    return {{"kind", "kpoint"}, {"coords", coords}};
}

PointValuation decode_valuation(const json& j, const FieldConfig& f, const std::string& path)
{
    const auto& kind = text(field(j, "kind", path), at(path, "kind"));
    if (kind == "weight")
        return PointValuation::weight(decode_qvec(field(j, "w", path), at(path, "w")));
    if (kind != "kpoint")
        fail(at(path, "kind"), "expected \"kpoint\" or \"weight\"");
    const auto& coords = array(field(j, "coords", path), at(path, "coords"));
    std::vector<Scalar> xs;
    for (std::size_t i = 0; i < coords.size(); ++i)
        xs.push_back(decode_scalar(coords[i], f, at(at(path, "coords"), i)));
    try {
        return PointValuation::kpoint(std::move(xs), f);
    } catch (const DomainError& e) {
        fail(at(path, "coords"), e.what());
    }
}

json encode(const RationalFunction& f, const std::vector<std::string>& names)
{
    return {{"text", f.str(names)}, {"num", encode(f.num, false)}, {"den", encode(f.den, false)}};
}

RationalFunction decode_function(const json& j, const FieldConfig& f, std::size_t nvars, const std::string& path)
{
    auto check = [&](const LaurentPoly& p, const std::string& where) {
        if (p.nvars() != nvars)
            fail(where, "expected a polynomial in " + std::to_string(nvars) + " variables");
    };
    if (!optional_field(j, "num", path)) {
        auto p = decode_poly(j, f, path);
        check(p, path);
        return RationalFunction::polynomial(std::move(p));
    }
    auto num = decode_poly(field(j, "num", path), f, at(path, "num"));
    check(num, at(path, "num"));
    if (const auto* d = optional_field(j, "den", path)) {
        auto den = decode_poly(*d, f, at(path, "den"));
        check(den, at(path, "den"));
        if (den.is_zero())
            fail(at(path, "den"), "zero denominator");
        return {std::move(num), std::move(den)};
    }
    return RationalFunction::polynomial(std::move(num));
}

json encode(const EmbeddingSystem& s)
{
    const auto& b = s.base();
    auto names = s.node(0).names(s.base_rank());
    json gens = json::array();
    for (const auto& g : b.gens) {
        auto e = encode(g, false);
        e["text"] = g.str(names);
        gens.push_back(e);
    }
    json base = {{"rank", b.rank}, {"field", encode(b.field)}, {"gens", gens}, {"fan", encode(*b.fan)},
                 {"basis", to_string(b.basis)}};

    json nodes = json::array();
    for (const auto& n : s.nodes()) {
        json coords = json::array();
        json ext = json::array();
        for (std::size_t k = s.base_rank(); k < n.rank(); ++k) {
            coords.push_back(encode(n.coords[k], names));
            ext.push_back(to_string(n.extensions[k - s.base_rank()]));
        }
        auto own = n.names(s.base_rank());
        json ideal = json::array();
        for (const auto& g : n.ideal_gens)
            ideal.push_back(g.str(own));
        nodes.push_back({{"id", n.id},
                         {"origin", n.origin},
                         {"coords", coords},
                         {"extensions", ext},
                         {"basis", to_string(n.basis)},
                         {"ideal", ideal}});
    }
    json arrows = json::array();
    for (const auto& a : s.arrows())
        arrows.push_back({{"source", a.source},
                          {"target", a.target},
                          {"matrix", encode(a.trop.matrix())},
                          {"shift", encode(a.trop.shift())}});
    json vals = json::array();
    for (const auto& v : s.valuations())
        vals.push_back(encode(v));
    return {{"base", base}, {"nodes", nodes}, {"arrows", arrows}, {"valuations", vals}};
}

namespace {

BasisFlag decode_basis(const json& j, const std::string& path)
{
    const auto& t = text(j, path);
    if (t == "asserted")
        return BasisFlag::Asserted;
    if (t == "unknown")
        return BasisFlag::Unknown;
    fail(path, "expected \"asserted\" or \"unknown\"");
}

ExtensionFan decode_extension(const json& j, const std::string& path)
{
    const auto& t = text(j, path);
    if (t == "A1")
        return ExtensionFan::Affine;
    if (t == "P1")
        return ExtensionFan::Projective;
    fail(path, "expected \"A1\" or \"P1\"");
}

} // namespace

EmbeddingSystem decode_system(const json& j, const std::string& path)
{
    const auto& bj = field(j, "base", path);
    auto bp = at(path, "base");
    BaseChart base;
    base.rank = index(field(bj, "rank", bp), at(bp, "rank"));
    base.field = decode_field(field(bj, "field", bp), at(bp, "field"));
    const auto& gens = array(field(bj, "gens", bp), at(bp, "gens"));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto g = decode_poly(gens[i], base.field, at(at(bp, "gens"), i));
        if (g.nvars() != base.rank)
            fail(at(at(bp, "gens"), i), "expected a polynomial in " + std::to_string(base.rank) + " variables");
        base.gens.push_back(std::move(g));
    }
    if (const auto* f = optional_field(bj, "fan", bp)) {
        base.fan = make_fan(decode_fan(*f, at(bp, "fan")));
        if (base.fan->rank() != base.rank)
            fail(at(bp, "fan"), "fan rank differs from the base rank");
    }
    if (const auto* b = optional_field(bj, "basis", bp))
        base.basis = decode_basis(*b, at(bp, "basis"));

    EmbeddingSystem s(std::move(base));
    const auto& nodes = array(field(j, "nodes", path), at(path, "nodes"));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto p = at(at(path, "nodes"), i);
        if (const auto* id = optional_field(nodes[i], "id", p))
            if (index(*id, at(p, "id")) != i)
                fail(at(p, "id"), "node ids must be 0, 1, 2, ... in order");
        std::vector<RationalFunction> coords;
        std::vector<ExtensionFan> ext;
        if (const auto* cj = optional_field(nodes[i], "coords", p)) {
            for (std::size_t k = 0; k < array(*cj, at(p, "coords")).size(); ++k)
                coords.push_back(decode_function((*cj)[k], s.field(), s.base_rank(), at(at(p, "coords"), k)));
        }
        if (const auto* ej = optional_field(nodes[i], "extensions", p)) {
            for (std::size_t k = 0; k < array(*ej, at(p, "extensions")).size(); ++k)
                ext.push_back(decode_extension((*ej)[k], at(at(p, "extensions"), k)));
        } else {
            ext.assign(coords.size(), ExtensionFan::Affine);
        }
        if (ext.size() != coords.size())
            fail(at(p, "extensions"), "expected one entry per appended coordinate");
        std::string origin = "node";
        if (const auto* o = optional_field(nodes[i], "origin", p))
            origin = text(*o, at(p, "origin"));
        if (i == 0) {
            if (!coords.empty())
                fail(at(p, "coords"), "node 0 is the base and has no appended coordinates");
            continue;
        }
        auto node = s.make_node(std::move(coords), std::move(ext), origin);
        if (const auto* b = optional_field(nodes[i], "basis", p))
            node.basis = decode_basis(*b, at(p, "basis"));
        s.add_node(std::move(node));
    }

    const auto& arrows = array(field(j, "arrows", path), at(path, "arrows"));
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        auto p = at(at(path, "arrows"), i);
        auto src = index(field(arrows[i], "source", p), at(p, "source"));
        auto tgt = index(field(arrows[i], "target", p), at(p, "target"));
        if (src >= s.nodes().size())
            fail(at(p, "source"), "unknown node");
        if (tgt >= s.nodes().size())
            fail(at(p, "target"), "unknown node");
        TropMap m = [&]() -> TropMap {
            if (!optional_field(arrows[i], "matrix", p)) {
                auto proj = s.projection_matrix(src, tgt);
                if (!proj)
                    fail(at(p, "matrix"), "missing field and no coordinate projection exists");
                return TropMap(*proj, s.node(src).fan, s.node(tgt).fan);
            }
            return decode_trop_map(arrows[i], s.node(src).fan, s.node(tgt).fan, p);
        }();
        s.add_arrow({src, tgt, std::move(m)});
    }

    const auto& vals = array(field(j, "valuations", path), at(path, "valuations"));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        auto p = at(at(path, "valuations"), i);
        s.register_valuation(decode_valuation(vals[i], s.field(), p));
    }
    return s;
}

json encode(const EmbeddingSystem& s, const MorphismReport& r)
{
    (void)s;
    json failures = json::array();
    for (const auto& f : r.failures) {
        json x = {{"valuation", f.valuation}, {"message", f.message}};
        if (f.mapped)
            x["mapped"] = encode(*f.mapped);
        if (f.expected)
            x["expected"] = encode(*f.expected);
        failures.push_back(x);
    }
    return {{"arrow", r.arrow}, {"checked", r.checked}, {"passed", r.passed}, {"failures", failures}};
}

json encode(const EmbeddingSystem& s, const SeparationResult& r)
{
    json j = {{"success", r.success},
              {"stage", to_string(r.stage)},
              {"candidates_tried", r.candidates_tried}};
    if (!r.success)
        return j;
    const auto& node = s.node(r.node);
    j["node"] = r.node;
    j["constructed"] = r.constructed;
    if (r.function) {
        j["function"] = encode(*r.function, node.names(s.base_rank()));
        j["monomial"] = node.names(s.base_rank()).back();
    }
    j["first_image"] = encode(*r.first_image);
    j["second_image"] = encode(*r.second_image);
    return j;
}

json encode(const EmbeddingSystem& s, const StarWitness& w)
{
    const auto& node = s.node(w.node);
    auto names = node.names(s.base_rank());
    std::string mono;
    for (std::size_t i = 0; i < w.exponent.size(); ++i) {
        if (w.exponent[i] == 0)
            continue;
        if (!mono.empty())
            mono += "*";
        mono += names[i];
        if (w.exponent[i] != 1)
            mono += "^" + std::to_string(w.exponent[i]);
    }
    return {{"node", w.node},
            {"constructed", w.constructed},
            {"monomial", mono.empty() ? "1" : mono},
            {"exponent", encode(w.exponent)},
            {"coefficient", encode(w.coefficient)},
            {"open_cone", w.open_cone},
            {"regular_cone", w.regular_cone},
            {"regular_cone_generators", encode(IntMatrix(node.fan->cone(w.regular_cone).generators()))}};
}

json encode(const LimitCheckResult& r)
{
    json j = {{"status", to_string(r.status)}, {"message", r.message}};
    j["arrow"] = r.arrow ? json(*r.arrow) : json(nullptr);
    return j;
}

json encode(const ProbeReport& r)
{
    return {{"checked", r.checked},
            {"lifted", r.lifted},
            {"no_evidence", r.no_evidence},
            {"out_of_prevariety", r.out_of_prevariety},
            {"incompatible", r.incompatible},
            {"errors", r.errors},
            {"passed", r.passed},
            {"failures", r.failures}};
}

Subdiagram decode_subdiagram(const json& j, const EmbeddingSystem& s, const std::string& path)
{
    Subdiagram d;
    d.nodes = index_list(field(j, "nodes", path), at(path, "nodes"));
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        if (d.nodes[i] >= s.nodes().size())
            fail(at(at(path, "nodes"), i), "unknown node");
    if (const auto* a = optional_field(j, "arrows", path)) {
        d.arrows = index_list(*a, at(path, "arrows"));
        for (std::size_t i = 0; i < d.arrows.size(); ++i)
            if (d.arrows[i] >= s.arrows().size())
                fail(at(at(path, "arrows"), i), "unknown arrow");
    } else {
        for (std::size_t i = 0; i < s.arrows().size(); ++i) {
            const auto& a = s.arrows()[i];
            auto in = [&](std::size_t id) { return std::find(d.nodes.begin(), d.nodes.end(), id) != d.nodes.end(); };
            if (in(a.source) && in(a.target))
                d.arrows.push_back(i);
        }
    }
    return d;
}

json encode(const Subdiagram& d)
{
    return {{"nodes", d.nodes}, {"arrows", d.arrows}};
}

Tuple decode_tuple(const json& j, const EmbeddingSystem& s, const std::string& path)
{
    Tuple t;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) {
        auto p = at(path, i);
        auto id = index(field(j[i], "node", p), at(p, "node"));
        if (id >= s.nodes().size())
            fail(at(p, "node"), "unknown node");
        if (t.count(id))
            fail(at(p, "node"), "node listed twice");
        t.emplace(id, decode_point(field(j[i], "point", p), s.node(id).fan, at(p, "point")));
    }
    return t;
}

json encode(const Tuple& t)
{
    json out = json::array();
    for (const auto& [id, p] : t)
        out.push_back({{"node", id}, {"point", encode(p)}});
    return out;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json parse_text(const std::string& content, const std::string& source)
{
    try {
        return json::parse(content);
    } catch (const json::parse_error& e) {
        fail(source, std::string("malformed JSON: ") + e.what());
    }
}

json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

} // namespace tropext::io
