#include "tropext/systems.hpp"

#include <algorithm>
#include <random>

namespace tropext {

RationalFunction RationalFunction::polynomial(LaurentPoly p)
{
    auto one = LaurentPoly::constant(p.field(), p.nvars(), Scalar::one(p.field()));
    return {std::move(p), std::move(one)};
}

bool RationalFunction::same_as(const RationalFunction& other) const
{
    if (nvars() != other.nvars())
        return false;
    return num * other.den == other.num * den;
}

std::string RationalFunction::str(const std::vector<std::string>& names) const
{
    bool unit_den = den.size() == 1 && den.terms().begin()->first == IntVec(den.nvars(), 0) &&
                    den.terms().begin()->second == Scalar::one(den.field());
    if (unit_den)
        return num.str(names);
    return "(" + num.str(names) + ")/(" + den.str(names) + ")";
}

std::string to_string(ExtensionFan e)
{
    return e == ExtensionFan::Affine ? "A1" : "P1";
}

std::vector<std::string> ToricEmbedding::names(std::size_t base_rank) const
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < base_rank; ++i) {
        if (base_rank <= 3)
            out.push_back(std::string(1, "xyz"[i]));
        else
            out.push_back("x" + std::to_string(i));
    }
    for (std::size_t k = base_rank; k < coords.size(); ++k)
        out.push_back("z" + std::to_string(k - base_rank + 1));
    return out;
}

namespace {

LaurentPoly poly_pow(const LaurentPoly& p, std::int64_t e)
{
    LaurentPoly r = LaurentPoly::constant(p.field(), p.nvars(), Scalar::one(p.field()));
    for (std::int64_t i = 0; i < e; ++i)
        r = r * p;
    return r;
}

std::vector<std::size_t> identity_placement(std::size_t n)
{
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i)
        p[i] = i;
    return p;
}

} // namespace

EmbeddingSystem::EmbeddingSystem(BaseChart base) : base_(std::move(base))
{
    if (!base_.fan)
        base_.fan = make_fan(Fan::torus(base_.rank));
    if (base_.fan->rank() != base_.rank)
        throw DomainError("base fan rank does not match the base chart");
    for (const auto& g : base_.gens) {
        if (g.nvars() != base_.rank)
            throw DomainError("base generator has the wrong number of variables");
        if (!(g.field() == base_.field))
            throw DomainError("base generator over a different field");
        if (g.is_zero())
            throw DomainError("zero generator in the base chart");
    }
    add_node(make_node({}, {}, "base"));
}

const ToricEmbedding& EmbeddingSystem::node(std::size_t id) const
{
    if (id >= nodes_.size())
        throw DomainError("unknown node id " + std::to_string(id));
    return nodes_[id];
}

ToricEmbedding EmbeddingSystem::make_node(std::vector<RationalFunction> extra, std::vector<ExtensionFan> ext,
                                          std::string origin) const
{
    if (extra.size() != ext.size())
        throw DomainError("one extension fan is required per appended coordinate");
    const std::size_t n = base_.rank;
    const std::size_t m = n + extra.size();
    ToricEmbedding node;
    node.origin = std::move(origin);
    for (std::size_t i = 0; i < n; ++i)
        node.coords.push_back(RationalFunction::polynomial(LaurentPoly::variable(base_.field, n, i)));
    for (auto& f : extra) {
        if (f.num.nvars() != n || f.den.nvars() != n)
            throw DomainError("coordinate function must be written in the base variables");
        if (f.den.is_zero())
            throw DomainError("coordinate function has a zero denominator");
        node.coords.push_back(std::move(f));
    }
    node.extensions = std::move(ext);

    Fan fan = *base_.fan;
    for (auto e : node.extensions)
        fan = product_fan(fan, e == ExtensionFan::Affine ? Fan::affine_line() : Fan::projective_line());
    node.fan = make_fan(std::move(fan));

    auto place = identity_placement(n);
    for (const auto& g : base_.gens)
        node.ideal_gens.push_back(g.relabel(m, place));
    for (std::size_t k = n; k < m; ++k) {
        auto z = LaurentPoly::variable(base_.field, m, k);
        auto p = node.coords[k].num.relabel(m, place);
        auto q = node.coords[k].den.relabel(m, place);
        node.ideal_gens.push_back(z * q - p);
    }
    node.basis = extra.empty() && node.extensions.empty() ? base_.basis : BasisFlag::Unknown;
    if (m == n)
        node.basis = base_.basis;
    return node;
}

std::size_t EmbeddingSystem::register_valuation(PointValuation eta)
{
    if (eta.dim() != base_.rank)
        throw DomainError("valuation has the wrong rank for the base chart");
    if (eta.kind() == PointValuation::Kind::KPoint) {
        if (!(eta.field() == base_.field))
            throw DomainError("K-point over a different field");
        eta.check_on(base_.gens);
        for (const auto& node : nodes_)
            for (const auto& f : node.coords)
                if (f.den.evaluate(eta.coords()).is_zero())
                    throw DomainError("a coordinate denominator vanishes at the K-point");
    }
    valuations_.push_back(std::move(eta));
    return valuations_.size() - 1;
}

std::size_t EmbeddingSystem::add_node(ToricEmbedding node)
{
    node.id = nodes_.size();
    nodes_.push_back(std::move(node));
    return nodes_.size() - 1;
}

std::size_t EmbeddingSystem::add_arrow(EmbeddingMorphism arrow)
{
    const auto& src = node(arrow.source);
    const auto& tgt = node(arrow.target);
    if (!(arrow.trop.source() == *src.fan) || !(arrow.trop.target() == *tgt.fan))
        throw DomainError("arrow fans do not match its endpoints");
    arrows_.push_back(std::move(arrow));
    return arrows_.size() - 1;
}

std::optional<IntMatrix> EmbeddingSystem::projection_matrix(std::size_t from, std::size_t to) const
{
    const auto& a = node(from);
    const auto& b = node(to);
    IntMatrix m;
    for (std::size_t k = 0; k < b.rank(); ++k) {
        std::optional<std::size_t> hit;
        if (k < base_.rank) {
            hit = k;
        } else {
            for (std::size_t j = base_.rank; j < a.rank(); ++j)
                if (a.coords[j].num == b.coords[k].num && a.coords[j].den == b.coords[k].den &&
                    a.extensions[j - base_.rank] == b.extensions[k - base_.rank]) {
                    hit = j;
                    break;
                }
        }
        if (!hit)
            return std::nullopt;
        IntVec row(a.rank(), 0);
        row[*hit] = 1;
        m.push_back(std::move(row));
    }
    return m;
}

TransientProduct build_product(const EmbeddingSystem& s, const std::vector<std::size_t>& nodes)
{
    const std::size_t n = s.base_rank();
    std::vector<RationalFunction> extra;
    std::vector<ExtensionFan> ext;
    TransientProduct out;
    std::string origin = "product(";
    std::size_t next = n;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = s.node(nodes[i]);
        std::vector<std::size_t> place;
        for (std::size_t k = 0; k < node.rank(); ++k) {
            if (k < n) {
                place.push_back(k);
            } else {
                place.push_back(next++);
                extra.push_back(node.coords[k]);
                ext.push_back(node.extensions[k - n]);
            }
        }
        out.placements.push_back(std::move(place));
        origin += (i ? "," : "") + std::to_string(nodes[i]);
    }
    out.node = s.make_node(std::move(extra), std::move(ext), origin + ")");
    return out;
}

namespace {

IntMatrix placement_projection(const std::vector<std::size_t>& placement, std::size_t source_rank)
{
    IntMatrix m;
    for (auto p : placement) {
        IntVec row(source_rank, 0);
        row[p] = 1;
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

ProductResult product_embedding(EmbeddingSystem& s, std::size_t first, std::size_t second)
{
    auto tp = build_product(s, {first, second});
    const std::size_t m = tp.node.rank();
    FanPtr fan = tp.node.fan;
    ProductResult r;
    r.node = s.add_node(std::move(tp.node));
    IntMatrix to_first = placement_projection(tp.placements[0], m);
    IntMatrix to_second = placement_projection(tp.placements[1], m);
    r.arrow_to_first = s.add_arrow({r.node, first, TropMap(std::move(to_first), fan, s.node(first).fan)});
    r.arrow_to_second = s.add_arrow({r.node, second, TropMap(std::move(to_second), fan, s.node(second).fan)});
    return r;
}

GraphResult graph_embedding(EmbeddingSystem& s, std::size_t node_id, const RationalFunction& f, ExtensionFan ext)
{
    const auto& src = s.node(node_id);
    if (f.nvars() != s.base_rank() || f.den.nvars() != s.base_rank())
        throw DomainError("function must be written in the base variables");
    if (f.den.is_zero())
        throw DomainError("function has a zero denominator");
    for (const auto& eta : s.valuations())
        if (eta.kind() == PointValuation::Kind::KPoint && f.den.evaluate(eta.coords()).is_zero())
            throw DomainError("denominator vanishes at a registered K-point");

    const std::size_t n = s.base_rank();
    std::vector<RationalFunction> extra(src.coords.begin() + static_cast<std::ptrdiff_t>(n), src.coords.end());
    std::vector<ExtensionFan> exts = src.extensions;
    extra.push_back(f);
    exts.push_back(ext);
    auto node = s.make_node(std::move(extra), std::move(exts), "graph(" + std::to_string(node_id) + ")");
    const std::size_t m = node.rank();
    FanPtr fan = node.fan;
    FanPtr target = src.fan;

    GraphResult r;
    r.node = s.add_node(std::move(node));
    r.arrow = s.add_arrow({r.node, node_id, TropMap(placement_projection(identity_placement(m - 1), m), fan, target)});
    return r;
}

ExtVal valuation_of(const PointValuation& eta, const RationalFunction& f)
{
    ExtVal q = eta.value_of(f.den);
    if (q.is_infinite())
        throw DomainError("denominator vanishes at the valuation (0/0 or pole)");
    ExtVal p = eta.value_of(f.num);
    if (p.is_infinite())
        return p;
    return ExtVal(Rational(p.value() - q.value()));
}

ExtendedPoint trop_image(const EmbeddingSystem& s, std::size_t node_id, const PointValuation& eta)
{
    const auto& node = s.node(node_id);
    if (eta.dim() != s.base_rank())
        throw DomainError("valuation has the wrong rank for the base chart");
    const std::size_t m = node.rank();
    QVec rep(m, Rational(0));
    std::vector<IntVec> boundary;
    for (std::size_t k = 0; k < m; ++k) {
        ExtVal v = valuation_of(eta, node.coords[k]);
        if (v.is_infinite()) {
            IntVec e(m, 0);
            e[k] = 1;
            boundary.push_back(std::move(e));
        } else {
            rep[k] = v.value();
        }
    }
    auto stratum = node.fan->find(Cone(m, std::move(boundary)));
    if (!stratum)
        throw DomainError("image leaves the ambient toric variety of node " + std::to_string(node_id));
    return ExtendedPoint(node.fan, *stratum, std::move(rep));
}

ExtendedPoint trop_image(const EmbeddingSystem& s, std::size_t node, std::size_t valuation)
{
    if (valuation >= s.valuations().size())
        throw DomainError("unknown valuation index");
    return trop_image(s, node, s.valuations()[valuation]);
}

MorphismReport verify_morphism(const EmbeddingSystem& s, std::size_t arrow_id)
{
    if (arrow_id >= s.arrows().size())
        throw DomainError("unknown arrow index");
    const auto& arrow = s.arrows()[arrow_id];
    MorphismReport report;
    report.arrow = arrow_id;
    for (std::size_t v = 0; v < s.valuations().size(); ++v) {
        ++report.checked;
        MorphismFailure fail;
        fail.valuation = v;
        try {
            fail.mapped = trop_map_apply(arrow.trop, trop_image(s, arrow.source, v));
            fail.expected = trop_image(s, arrow.target, v);
            if (*fail.mapped == *fail.expected)
                continue;
            fail.message = "diagram does not commute";
        } catch (const DomainError& e) {
            fail.message = e.what();
        }
        report.failures.push_back(std::move(fail));
    }
    report.passed = report.failures.empty();
    return report;
}

bool coordinates_compatible(const EmbeddingSystem& s, std::size_t arrow_id)
{
    const auto& arrow = s.arrows().at(arrow_id);
    if (!is_zero(arrow.trop.shift()))
        return false;
    const auto& src = s.node(arrow.source);
    const auto& tgt = s.node(arrow.target);
    const auto& field = s.field();
    const std::size_t n = s.base_rank();
    for (std::size_t j = 0; j < tgt.rank(); ++j) {
        auto num = LaurentPoly::constant(field, n, Scalar::one(field));
        auto den = num;
        for (std::size_t i = 0; i < src.rank(); ++i) {
            auto a = arrow.trop.matrix()[j][i];
            if (a > 0) {
                num = num * poly_pow(src.coords[i].num, a);
                den = den * poly_pow(src.coords[i].den, a);
            } else if (a < 0) {
                num = num * poly_pow(src.coords[i].den, -a);
                den = den * poly_pow(src.coords[i].num, -a);
            }
        }
        RationalFunction mono{num, den};
        if (mono.same_as(tgt.coords[j]))
            continue;
        // Fall back to equality on the registered K-points of X°.
        for (const auto& eta : s.valuations()) {
            if (eta.kind() != PointValuation::Kind::KPoint)
                continue;
            const auto& x = eta.coords();
            Scalar lhs = scalar_mul(mono.num.evaluate(x), tgt.coords[j].den.evaluate(x));
            Scalar rhs = scalar_mul(tgt.coords[j].num.evaluate(x), mono.den.evaluate(x));
            if (!(lhs == rhs))
                return false;
        }
    }
    return true;
}

std::string to_string(SeparationResult::Stage stage)
{
    switch (stage) {
    case SeparationResult::Stage::ExistingNode:
        return "existing-node";
    case SeparationResult::Stage::DeterministicPool:
        return "deterministic-pool";
    case SeparationResult::Stage::RandomPool:
        return "random-pool";
    case SeparationResult::Stage::Failure:
        return "failure";
    }
    return "?";
}

SeparationResult separate_points(EmbeddingSystem& s, std::size_t first, std::size_t second,
                                 const SeparationOptions& opts)
{
    if (first >= s.valuations().size() || second >= s.valuations().size())
        throw DomainError("unknown valuation index");
    const PointValuation eta = s.valuations()[first];
    const PointValuation eta2 = s.valuations()[second];
    if (eta == eta2)
        throw DomainError("valuations coincide; nothing to separate");

    SeparationResult r;
    if (opts.search_existing) {
        for (const auto& node : s.nodes()) {
            auto a = trop_image(s, node.id, first);
            auto b = trop_image(s, node.id, second);
            if (!(a == b)) {
                r.stage = SeparationResult::Stage::ExistingNode;
                r.success = true;
                r.node = node.id;
                r.first_image = a;
                r.second_image = b;
                return r;
            }
        }
    }

    const auto& field = s.field();
    const std::size_t n = s.base_rank();
    auto try_candidate = [&](const LaurentPoly& p, SeparationResult::Stage stage) {
        ++r.candidates_tried;
        auto f = RationalFunction::polynomial(p);
        if (valuation_of(eta, f) == valuation_of(eta2, f))
            return false;
        auto g = graph_embedding(s, 0, f, ExtensionFan::Affine);
        r.stage = stage;
        r.success = true;
        r.node = g.node;
        r.constructed = true;
        r.function = f;
        r.first_image = trop_image(s, g.node, first);
        r.second_image = trop_image(s, g.node, second);
        return true;
    };

    // Deterministic pool: x_i - c for the coordinate values of both points.
    for (std::size_t i = 0; i < n && r.candidates_tried < opts.budget; ++i) {
        std::vector<Scalar> values;
        for (const auto* p : {&eta, &eta2}) {
            if (p->kind() != PointValuation::Kind::KPoint)
                continue;
            const Scalar& c = p->coords()[i];
            if (std::find(values.begin(), values.end(), c) == values.end())
                values.push_back(c);
        }
        for (const auto& c : values) {
            if (r.candidates_tried >= opts.budget)
                break;
            auto f = LaurentPoly::variable(field, n, i) - LaurentPoly::constant(field, n, c);
            if (try_candidate(f, SeparationResult::Stage::DeterministicPool))
                return r;
        }
    }

    if (opts.allow_random) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> coeff(-3, 3);
        while (r.candidates_tried < opts.budget) {
            std::vector<std::pair<Scalar, IntVec>> terms;
            bool linear = false;
            for (std::size_t i = 0; i < n; ++i) {
                int a = coeff(rng);
                linear |= a != 0;
                IntVec e(n, 0);
                e[i] = 1;
                terms.emplace_back(Scalar::constant(a, field), e);
            }
            terms.emplace_back(Scalar::constant(coeff(rng), field), IntVec(n, 0));
            if (!linear) {
                ++r.candidates_tried;
                continue;
            }
            if (try_candidate(LaurentPoly(field, n, terms), SeparationResult::Stage::RandomPool))
                return r;
        }
    }
    r.stage = SeparationResult::Stage::Failure;
    r.success = false;
    return r;
}

StarWitness star_witness(EmbeddingSystem& s, const RationalFunction& f, ExtensionFan ext)
{
    if (f.nvars() != s.base_rank())
        throw DomainError("function must be written in the base variables");
    StarWitness w;
    auto finish = [&](std::size_t node_id) {
        const auto& fan = *s.node(node_id).fan;
        w.node = node_id;
        w.open_cone = fan.zero_index();
        w.regular_cone = w.open_cone;
        for (std::size_t i = 0; i < fan.size(); ++i)
            if (fan.cone(i).nonnegative_on(w.exponent) && fan.cone(i).dim() > fan.cone(w.regular_cone).dim())
                w.regular_cone = i;
        return w;
    };

    if (f.num.size() == 1 && f.den.size() == 1) {
        const auto& [en, cn] = *f.num.terms().begin();
        const auto& [ed, cd] = *f.den.terms().begin();
        w.exponent.resize(en.size());
        for (std::size_t i = 0; i < en.size(); ++i)
            w.exponent[i] = en[i] - ed[i];
        w.coefficient = scalar_mul(cn, scalar_pow(cd, -1));
        return finish(0);
    }
    for (const auto& node : s.nodes()) {
        for (std::size_t k = 0; k < node.rank(); ++k) {
            if (node.coords[k].same_as(f)) {
                w.exponent.assign(node.rank(), 0);
                w.exponent[k] = 1;
                w.coefficient = Scalar::one(s.field());
                return finish(node.id);
            }
        }
    }
    auto g = graph_embedding(s, 0, f, ext);
    const auto& node = s.node(g.node);
    w.constructed = true;
    w.exponent.assign(node.rank(), 0);
    w.exponent.back() = 1;
    w.coefficient = Scalar::one(s.field());
    return finish(g.node);
}

std::string to_string(LimitCheckResult::Status st)
{
    switch (st) {
    case LimitCheckResult::Status::CompatibleLifted:
        return "CompatibleLifted";
    case LimitCheckResult::Status::CompatibleNoEvidence:
        return "CompatibleNoEvidence";
    case LimitCheckResult::Status::CompatibleOutOfPrevariety:
        return "CompatibleOutOfPrevariety";
    case LimitCheckResult::Status::Incompatible:
        return "Incompatible";
    }
    return "?";
}

namespace {

bool contains_id(const std::vector<std::size_t>& ids, std::size_t id)
{
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ExtendedPoint to_base(const EmbeddingSystem& s, std::size_t node_id, const ExtendedPoint& p)
{
    const auto& node = s.node(node_id);
    TropMap proj(placement_projection(identity_placement(s.base_rank()), node.rank()), node.fan, s.node(0).fan);
    return trop_map_apply(proj, p);
}

} // namespace

LimitCheckResult finite_stage_limit_check(const EmbeddingSystem& s, const Subdiagram& d, const Tuple& tuple)
{
    if (d.nodes.empty())
        throw DomainError("empty subdiagram");
    for (auto id : d.nodes) {
        auto it = tuple.find(id);
        if (it == tuple.end())
            throw DomainError("tuple has no entry for node " + std::to_string(id));
        const auto& node = s.node(id);
        if (it->second.fan_ptr() != node.fan && !(it->second.fan() == *node.fan))
            throw DomainError("tuple entry for node " + std::to_string(id) + " lives on the wrong fan");
    }

    LimitCheckResult r;
    for (auto a : d.arrows) {
        if (a >= s.arrows().size())
            throw DomainError("unknown arrow index");
        const auto& arrow = s.arrows()[a];
        if (!contains_id(d.nodes, arrow.source) || !contains_id(d.nodes, arrow.target))
            throw DomainError("arrow " + std::to_string(a) + " leaves the subdiagram");
        bool ok = false;
        try {
            ok = trop_map_apply(arrow.trop, tuple.at(arrow.source)) == tuple.at(arrow.target);
        } catch (const DomainError&) {
            ok = false;
        }
        if (!ok) {
            r.status = LimitCheckResult::Status::Incompatible;
            r.arrow = a;
            r.message = "arrow " + std::to_string(a) + " does not map the source entry to the target entry";
            return r;
        }
    }

    const auto base0 = to_base(s, d.nodes[0], tuple.at(d.nodes[0]));
    for (std::size_t i = 1; i < d.nodes.size(); ++i) {
        if (!(to_base(s, d.nodes[i], tuple.at(d.nodes[i])) == base0)) {
            r.status = LimitCheckResult::Status::Incompatible;
            r.message = "base coordinates of nodes " + std::to_string(d.nodes[0]) + " and " +
                        std::to_string(d.nodes[i]) + " disagree";
            return r;
        }
    }

    Membership m;
    if (d.nodes.size() == 1) {
        const auto& node = s.node(d.nodes[0]);
        m = extended_membership(node.ideal_gens, tuple.at(d.nodes[0]), node.basis);
    } else {
        auto tp = build_product(s, d.nodes);
        const std::size_t rank = tp.node.rank();
        std::vector<IntVec> gens;
        QVec rep(rank, Rational(0));
        for (std::size_t i = 0; i < d.nodes.size(); ++i) {
            const auto& p = tuple.at(d.nodes[i]);
            const auto& place = tp.placements[i];
            for (const auto& g : p.stratum_cone().generators()) {
                IntVec lifted(rank, 0);
                for (std::size_t k = 0; k < g.size(); ++k)
                    lifted[place[k]] = g[k];
                gens.push_back(std::move(lifted));
            }
            for (std::size_t k = 0; k < place.size(); ++k)
                rep[place[k]] = p.rep()[k];
        }
        auto stratum = tp.node.fan->find(Cone(rank, std::move(gens)));
        if (!stratum)
            throw DomainError("combined stratum is not a cone of the product fan");
        ExtendedPoint combined(tp.node.fan, *stratum, std::move(rep));
        m = extended_membership(tp.node.ideal_gens, combined, tp.node.basis);
    }
    switch (m) {
    case Membership::In:
        r.status = LimitCheckResult::Status::CompatibleLifted;
        break;
    case Membership::InPrevariety:
        r.status = LimitCheckResult::Status::CompatibleNoEvidence;
        break;
    case Membership::Out:
        r.status = LimitCheckResult::Status::CompatibleOutOfPrevariety;
        break;
    }
    return r;
}

Tuple induced_tuple(const EmbeddingSystem& s, const Subdiagram& d, const PointValuation& eta)
{
    Tuple t;
    for (auto id : d.nodes)
        t.emplace(id, trop_image(s, id, eta));
    return t;
}

ProbeReport surjectivity_probe(const EmbeddingSystem& s, const Subdiagram& d, std::size_t k)
{
    ProbeReport report;
    if (d.nodes.empty())
        return report;
    for (std::size_t v = 0; v < s.valuations().size() && report.checked < k; ++v) {
        const auto& eta = s.valuations()[v];
        if (eta.kind() != PointValuation::Kind::KPoint)
            continue;
        ++report.checked;
        try {
            auto res = finite_stage_limit_check(s, d, induced_tuple(s, d, eta));
            switch (res.status) {
            case LimitCheckResult::Status::CompatibleLifted:
                ++report.lifted;
                break;
            case LimitCheckResult::Status::CompatibleNoEvidence:
                ++report.no_evidence;
                break;
            case LimitCheckResult::Status::CompatibleOutOfPrevariety:
                ++report.out_of_prevariety;
                report.failures.push_back("valuation " + std::to_string(v) + ": out of prevariety");
                break;
            case LimitCheckResult::Status::Incompatible:
                ++report.incompatible;
                report.failures.push_back("valuation " + std::to_string(v) + ": " + res.message);
                break;
            }
        } catch (const DomainError& e) {
            ++report.errors;
            report.failures.push_back("valuation " + std::to_string(v) + ": " + e.what());
        }
    }
    report.passed = report.failures.empty();
    return report;
}

} // namespace tropext
