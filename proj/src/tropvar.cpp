#include "tropext/tropvar.hpp"

#include <algorithm>
#include <sstream>

namespace tropext {

using linalg::Constraint;
using linalg::Rel;

LaurentPoly::LaurentPoly(FieldConfig field, std::size_t nvars) : field_(field), nvars_(nvars) {}

LaurentPoly::LaurentPoly(FieldConfig field, std::size_t nvars, const std::vector<std::pair<Scalar, IntVec>>& terms)
    : field_(field), nvars_(nvars)
{
    for (const auto& [c, e] : terms)
        insert(e, c);
}

void LaurentPoly::insert(const IntVec& exp, const Scalar& c)
{
    if (exp.size() != nvars_)
        throw DomainError("exponent length does not match the number of variables");
    c.check_field(field_);
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(exp, c);
        return;
    }
    it->second = scalar_add(it->second, c);
    if (it->second.is_zero())
        terms_.erase(it);
}

LaurentPoly LaurentPoly::constant(const FieldConfig& field, std::size_t nvars, const Scalar& c)
{
    return monomial(field, nvars, c, IntVec(nvars, 0));
}

LaurentPoly LaurentPoly::variable(const FieldConfig& field, std::size_t nvars, std::size_t i)
{
    IntVec e(nvars, 0);
    e.at(i) = 1;
    return monomial(field, nvars, Scalar::one(field), std::move(e));
}

LaurentPoly LaurentPoly::monomial(const FieldConfig& field, std::size_t nvars, const Scalar& c, IntVec exp)
{
    LaurentPoly p(field, nvars);
    p.insert(exp, c);
    return p;
}

namespace {

void require_compatible(const LaurentPoly& a, const LaurentPoly& b)
{
    if (!(a.field() == b.field()))
        throw DomainError("field mismatch between polynomials");
    if (a.nvars() != b.nvars())
        throw DomainError("polynomials live in different numbers of variables");
}

} // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    require_compatible(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.insert(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, scalar_neg(c));
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    require_compatible(*this, o);
    LaurentPoly r(field_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            IntVec e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i)
                e[i] = e1[i] + e2[i];
            r.insert(e, scalar_mul(c1, c2));
        }
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Scalar LaurentPoly::evaluate(const std::vector<Scalar>& point) const
{
    if (point.size() != nvars_)
        throw DomainError("evaluation point has wrong length");
    Scalar sum = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0)
                t = scalar_mul(t, scalar_pow(point[i], e[i]));
        sum = scalar_add(sum, t);
    }
    return sum;
}

LaurentPoly LaurentPoly::relabel(std::size_t new_nvars, const std::vector<std::size_t>& placement) const
{
    if (placement.size() != nvars_)
        throw DomainError("variable placement has wrong length");
    LaurentPoly r(field_, new_nvars);
    for (const auto& [e, c] : terms_) {
        IntVec ne(new_nvars, 0);
        for (std::size_t i = 0; i < nvars_; ++i)
            ne.at(placement[i]) += e[i];
        r.insert(ne, c);
    }
    return r;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    auto name = [&](std::size_t i) { return i < names.size() ? names[i] : "x" + std::to_string(i); };
    std::ostringstream os;
    bool first = true;
    // Highest exponents first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += name(i);
            if (e[i] != 1)
                mono += "^" + std::to_string(e[i]);
        }
        std::string coeff;
        bool negative = false;
        if (!c.is_series()) {
            Rational q = c.rational();
            negative = q < 0;
            Rational a = abs(q);
            coeff = a.get_den() == 1 ? a.get_num().get_str() : a.get_str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        bool unit = coeff == "1" && !mono.empty();
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (mono.empty())
            os << coeff;
        else if (unit)
            os << mono;
        else
            os << coeff << "*" << mono;
    }
    return os.str();
}

TropicalPolynomial tropicalize_poly(const LaurentPoly& f)
{
    if (f.is_zero())
        throw DomainError("cannot tropicalize the zero polynomial");
    TropicalPolynomial t;
    t.nvars = f.nvars();
    for (const auto& [e, c] : f.terms())
        t.terms.push_back({val(c, f.field()).value(), e});
    return t;
}

namespace {

TropEval min_count(const std::vector<ExtVal>& values)
{
    TropEval r{ExtVal::infinity(), 0};
    for (const auto& v : values) {
        if (v < r.min) {
            r.min = v;
            r.argmin_count = 1;
        } else if (v == r.min) {
            ++r.argmin_count;
        }
    }
    return r;
}

} // namespace

TropEval trop_eval(const TropicalPolynomial& f, const QVec& w)
{
    if (w.size() != f.nvars)
        throw DomainError("evaluation point has wrong length");
    std::vector<ExtVal> values;
    for (const auto& t : f.terms)
        values.emplace_back(Rational(t.coeff + dot(t.exp, w)));
    return min_count(values);
}

TropEval trop_eval(const TropicalPolynomial& f, const ExtendedPoint& p, std::size_t chart)
{
    if (p.fan().rank() != f.nvars)
        throw DomainError("tropical polynomial and point live in different ranks");
    std::vector<ExtVal> values;
    for (const auto& t : f.terms)
        values.push_back(ext_add(ExtVal(t.coeff), eval_monomial(p, chart, t.exp)));
    return min_count(values);
}

bool membership_min_twice(const TropicalPolynomial& f, const QVec& w)
{
    auto r = trop_eval(f, w);
    return r.min.is_infinite() || r.argmin_count >= 2;
}

bool membership_min_twice(const TropicalPolynomial& f, const ExtendedPoint& p, std::size_t chart)
{
    auto r = trop_eval(f, p, chart);
    return r.min.is_infinite() || r.argmin_count >= 2;
}

std::vector<Constraint> Cell::constraints() const
{
    std::vector<Constraint> all = equations;
    all.insert(all.end(), inequalities.begin(), inequalities.end());
    return all;
}

bool Cell::contains(const QVec& w) const
{
    for (const auto& c : equations)
        if (!linalg::satisfies(c, w))
            return false;
    for (const auto& c : inequalities)
        if (!linalg::satisfies(c, w))
            return false;
    return true;
}

bool PolyhedralComplex::contains(const QVec& w) const
{
    return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.contains(w); });
}

std::optional<std::size_t> polyhedron_dim(std::size_t n, const std::vector<Constraint>& cons)
{
    if (!linalg::feasible(n, cons))
        return std::nullopt;
    QMatrix eqs;
    for (const auto& c : cons) {
        if (c.rel == Rel::Eq) {
            eqs.push_back(c.a);
            continue;
        }
        auto probe = cons;
        probe.push_back({c.a, c.b, Rel::Lt});
        if (!linalg::feasible(n, probe))
            eqs.push_back(c.a);
    }
    return n - linalg::rank(eqs, n);
}

namespace {

// Constraints whose union covers the complement of the half-space or hyperplane.
std::vector<Constraint> violations(const Constraint& c)
{
    QVec neg(c.a);
    for (auto& x : neg)
        x = -x;
    std::vector<Constraint> out;
    out.push_back({neg, Rational(-c.b), Rel::Lt}); // a·w > b
    if (c.rel == Rel::Eq)
        out.push_back({c.a, c.b, Rel::Lt});        // a·w < b
    return out;
}

Cell make_cell(std::size_t n, std::vector<Constraint> cons)
{
    // Promote implicit equalities so the cell records its affine hull explicitly.
    Cell cell;
    for (const auto& c : cons) {
        bool all_zero = is_zero(c.a);
        if (all_zero)
            continue;
        if (c.rel == Rel::Eq) {
            cell.equations.push_back(c);
            continue;
        }
        auto probe = cons;
        probe.push_back({c.a, c.b, Rel::Lt});
        if (linalg::feasible(n, probe))
            cell.inequalities.push_back(c);
        else
            cell.equations.push_back({c.a, c.b, Rel::Eq});
    }
    cell.equations = linalg::normalize_system(cell.equations);
    cell.inequalities = linalg::normalize_system(cell.inequalities);
    QMatrix eqs;
    for (const auto& c : cell.equations)
        eqs.push_back(c.a);
    cell.dim = n - linalg::rank(eqs, n);
    return cell;
}

void add_unique(std::size_t n, std::vector<Cell>& cells, Cell c)
{
    for (const auto& existing : cells)
        if (cell_contains(n, existing, c) && cell_contains(n, c, existing))
            return;
    cells.push_back(std::move(c));
}

} // namespace

bool cell_contains(std::size_t n, const Cell& outer, const Cell& inner)
{
    auto base = inner.constraints();
    for (const auto& c : outer.constraints()) {
        for (const auto& v : violations(c)) {
            auto probe = base;
            probe.push_back(v);
            if (linalg::feasible(n, probe))
                return false;
        }
    }
    return true;
}

bool complex_covers(const PolyhedralComplex& outer, const PolyhedralComplex& inner)
{
    if (outer.ambient_dim != inner.ambient_dim)
        return false;
    for (const auto& c : inner.cells) {
        bool found = std::any_of(outer.cells.begin(), outer.cells.end(),
                                 [&](const Cell& o) { return cell_contains(outer.ambient_dim, o, c); });
        if (!found)
            return false;
    }
    return true;
}

bool same_support_cellwise(const PolyhedralComplex& a, const PolyhedralComplex& b)
{
    return complex_covers(a, b) && complex_covers(b, a);
}

PolyhedralComplex trop_hypersurface(const LaurentPoly& f)
{
    auto trop = tropicalize_poly(f);
    const std::size_t n = f.nvars();
    const std::size_t t = trop.terms.size();
    PolyhedralComplex out;
    out.ambient_dim = n;
    if (t < 2) {
        out.empty_tropicalization = true;
        return out;
    }
    if (t > 20)
        throw DomainError("too many terms for cell enumeration");

    for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < t; ++i)
            if (mask & (1u << i))
                set.push_back(i);
        if (set.size() < 2)
            continue;
        const auto& lead = trop.terms[set[0]];
        Cell cell;
        for (std::size_t k = 1; k < set.size(); ++k) {
            const auto& other = trop.terms[set[k]];
            QVec a(n);
            for (std::size_t j = 0; j < n; ++j)
                a[j] = Rational(static_cast<long>(other.exp[j] - lead.exp[j]));
            cell.equations.push_back({a, Rational(lead.coeff - other.coeff), Rel::Eq});
        }
        std::vector<Constraint> strict = cell.equations;
        for (std::size_t k = 0; k < t; ++k) {
            if (mask & (1u << k))
                continue;
            const auto& other = trop.terms[k];
            QVec a(n);
            for (std::size_t j = 0; j < n; ++j)
                a[j] = Rational(static_cast<long>(lead.exp[j] - other.exp[j]));
            Rational b = other.coeff - lead.coeff;
            cell.inequalities.push_back({a, b, Rel::Le});
            strict.push_back({a, b, Rel::Lt});
        }
        if (!linalg::feasible(n, strict))
            continue;
        QMatrix eqs;
        for (const auto& c : cell.equations)
            eqs.push_back(c.a);
        cell.dim = n - linalg::rank(eqs, n);
        cell.terms = std::move(set);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

PolyhedralComplex intersect_complexes(const PolyhedralComplex& a, const PolyhedralComplex& b)
{
    if (a.ambient_dim != b.ambient_dim || a.stratum != b.stratum)
        throw DomainError("complexes live in different spaces");
    PolyhedralComplex out;
    out.ambient_dim = a.ambient_dim;
    out.stratum = a.stratum;
    out.empty_tropicalization = a.empty_tropicalization || b.empty_tropicalization;
    for (const auto& x : a.cells) {
        for (const auto& y : b.cells) {
            auto cons = x.constraints();
            auto more = y.constraints();
            cons.insert(cons.end(), more.begin(), more.end());
            if (!linalg::feasible(out.ambient_dim, cons))
                continue;
            add_unique(out.ambient_dim, out.cells, make_cell(out.ambient_dim, std::move(cons)));
        }
    }
    return out;
}

PolyhedralComplex trop_prevariety(const std::vector<LaurentPoly>& gens)
{
    if (gens.empty())
        throw DomainError("prevariety of an empty generator list");
    PolyhedralComplex acc = trop_hypersurface(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i)
        acc = intersect_complexes(acc, trop_hypersurface(gens[i]));
    return acc;
}

PolyhedralComplex project_complex(const PolyhedralComplex& c, const TropMap& m)
{
    const std::size_t n = m.source().rank();
    const std::size_t nt = m.target().rank();
    if (c.ambient_dim != n)
        throw DomainError("complex does not live on the source of the map");
    if (c.stratum != m.source().zero_index())
        throw DomainError("stratum-crossing image: only torus-stratum complexes are projected");

    PolyhedralComplex out;
    out.ambient_dim = nt;
    out.stratum = m.target().zero_index();
    out.empty_tropicalization = c.empty_tropicalization;
    for (const auto& cell : c.cells) {
        // Variables: (w' in target, w in source).
        std::vector<Constraint> cons;
        for (const auto& k : cell.constraints()) {
            QVec a(nt, Rational(0));
            a.insert(a.end(), k.a.begin(), k.a.end());
            cons.push_back({std::move(a), k.b, k.rel});
        }
        for (std::size_t i = 0; i < nt; ++i) {
            QVec a(nt + n, Rational(0));
            a[i] = 1;
            for (std::size_t j = 0; j < n; ++j)
                a[nt + j] = Rational(static_cast<long>(-m.matrix()[i][j]));
            cons.push_back({std::move(a), m.shift()[i], Rel::Eq});
        }
        auto projected = linalg::project(nt + n, std::move(cons), nt);
        if (!linalg::feasible(nt, projected))
            continue;
        add_unique(nt, out.cells, make_cell(nt, std::move(projected)));
    }
    return out;
}

OrbitRestriction orbit_restriction(const std::vector<LaurentPoly>& gens, const Cone& sigma, const Cone& tau)
{
    if (!is_face(sigma, tau))
        throw DomainError("orbit cone is not a face of the chart cone");
    OrbitRestriction out;
    for (const auto& g : gens) {
        if (g.nvars() != sigma.ambient_rank())
            throw DomainError("generator and chart live in different ranks");
        std::vector<std::pair<Scalar, IntVec>> kept;
        for (const auto& [e, c] : g.terms()) {
            if (!sigma.nonnegative_on(e))
                throw DomainError("exponent outside the monoid of the chart");
            if (tau.annihilated_by(e))
                kept.emplace_back(c, e);
        }
        LaurentPoly r(g.field(), g.nvars(), kept);
        if (r.is_zero())
            ++out.dropped;
        else
            out.gens.push_back(std::move(r));
    }
    return out;
}

std::string to_string(Membership m)
{
    switch (m) {
    case Membership::In:
        return "In";
    case Membership::Out:
        return "Out";
    case Membership::InPrevariety:
        return "InPrevariety";
    }
    return "?";
}

std::string to_string(BasisFlag b)
{
    return b == BasisFlag::Asserted ? "asserted" : "unknown";
}

namespace {

// Divides f by the monomial of a term that is minimal on every generator of σ, when some
// exponent of f lies outside S_σ. Leaves f alone otherwise.
LaurentPoly into_chart(const LaurentPoly& f, const Cone& sigma)
{
    bool inside = true;
    for (const auto& [u, a] : f.terms())
        inside = inside && sigma.nonnegative_on(u);
    if (inside)
        return f;
    for (const auto& [u0, a0] : f.terms()) {
        bool minimal = true;
        for (const auto& g : sigma.generators())
            for (const auto& [u, a] : f.terms())
                minimal = minimal && dot(u0, g) <= dot(u, g);
        if (!minimal)
            continue;
        IntVec shift(u0.size());
        for (std::size_t i = 0; i < u0.size(); ++i)
            shift[i] = -u0[i];
        return f * LaurentPoly::monomial(f.field(), f.nvars(), Scalar::one(f.field()), shift);
    }
    return f;
}

} // namespace

Membership extended_membership(const std::vector<LaurentPoly>& gens, const ExtendedPoint& p, BasisFlag flag,
                               std::optional<std::size_t> chart)
{
    std::size_t sigma = chart.value_or(p.stratum());
    if (sigma >= p.fan().size())
        throw DomainError("chart index is not a cone of the fan");
    std::vector<LaurentPoly> local;
    for (const auto& g : gens)
        local.push_back(into_chart(g, p.fan().cone(sigma)));
    auto restricted = orbit_restriction(local, p.fan().cone(sigma), p.stratum_cone());
    for (const auto& g : restricted.gens) {
        // Surviving exponents lie in τ^⊥, so pairing with any representative is well defined.
        if (!membership_min_twice(tropicalize_poly(g), p.rep()))
            return Membership::Out;
    }
    return flag == BasisFlag::Asserted ? Membership::In : Membership::InPrevariety;
}

PointValuation PointValuation::kpoint(std::vector<Scalar> coords, const FieldConfig& field)
{
    for (const auto& c : coords) {
        c.check_field(field);
        if (c.is_zero())
            throw DomainError("K-point coordinate is zero (not a torus point)");
    }
    PointValuation p;
    p.kind_ = Kind::KPoint;
    p.field_ = field;
    p.coords_ = std::move(coords);
    return p;
}

PointValuation PointValuation::weight(QVec w)
{
    PointValuation p;
    p.kind_ = Kind::Weight;
    p.weight_ = std::move(w);
    return p;
}

ExtVal PointValuation::value_of(const LaurentPoly& f) const
{
    if (f.nvars() != dim())
        throw DomainError("function and valuation live in different ranks");
    if (f.is_zero())
        return ExtVal::infinity();
    if (kind_ == Kind::KPoint)
        return val(f.evaluate(coords_), field_);
    return trop_eval(tropicalize_poly(f), weight_).min;
}

void PointValuation::check_on(const std::vector<LaurentPoly>& gens) const
{
    if (kind_ != Kind::KPoint)
        return;
    for (const auto& g : gens) {
        if (g.nvars() != coords_.size())
            throw DomainError("generator and K-point live in different ranks");
        if (!g.evaluate(coords_).is_zero())
            throw DomainError("K-point does not satisfy generator " + g.str());
    }
}

bool operator==(const PointValuation& a, const PointValuation& b)
{
    if (a.kind_ != b.kind_)
        return false;
    if (a.kind_ == PointValuation::Kind::Weight)
        return a.weight_ == b.weight_;
    return a.field_ == b.field_ && a.coords_ == b.coords_;
}

ExtendedPoint trop_of_point_valuation(const PointValuation& eta, FanPtr fan, std::size_t chart,
                                      const std::vector<LaurentPoly>& ideal)
{
    if (eta.dim() != fan->rank())
        throw DomainError("valuation and fan live in different ranks");
    eta.check_on(ideal);
    QVec coordinate_values;
    if (eta.kind() == PointValuation::Kind::KPoint) {
        for (const auto& c : eta.coords())
            coordinate_values.push_back(val(c, eta.field()).value());
    } else {
        coordinate_values = eta.weight_vector();
    }
    if (chart >= fan->size())
        throw DomainError("chart index is not a cone of the fan");
    HomTable table;
    for (auto& u : hilbert_basis(dual_cone(fan->cone(chart)))) {
        ExtVal v(dot(u, coordinate_values));
        table.emplace_back(std::move(u), v);
    }
    return hom_to_point(std::move(fan), chart, table);
}

} // namespace tropext
