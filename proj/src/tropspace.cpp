#include "tropext/tropspace.hpp"

#include "tropext/linalg.hpp"

namespace tropext {

namespace {

QMatrix span_basis(const Cone& tau)
{
    QMatrix g;
    for (const auto& x : tau.generators())
        g.push_back(to_qvec(x));
    return linalg::rref(g, tau.ambient_rank());
}

} // namespace

std::vector<std::size_t> complement_columns(const Cone& tau)
{
    const std::size_t n = tau.ambient_rank();
    QMatrix span = span_basis(tau);
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < n && span.size() < n; ++j) {
        QVec e(n, Rational(0));
        e[j] = 1;
        if (!linalg::in_span(span, e)) {
            span.push_back(e);
            chosen.push_back(j);
        }
    }
    return chosen;
}

QVec canonical_rep(const Cone& tau, const QVec& v)
{
    const std::size_t n = tau.ambient_rank();
    if (v.size() != n)
        throw DomainError("representative has wrong length");
    QMatrix basis = span_basis(tau);
    if (basis.empty())
        return v;
    auto chosen = complement_columns(tau);
    QMatrix span = basis;
    for (auto j : chosen) {
        QVec e(n, Rational(0));
        e[j] = 1;
        span.push_back(std::move(e));
    }
    // Solve v = Σ β_i basis_i + Σ γ_j e_j; keep the γ part.
    QMatrix sys(n, QVec(span.size()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < span.size(); ++c)
            sys[r][c] = span[c][r];
    auto coeffs = linalg::solve(sys, v, span.size());
    if (!coeffs)
        throw DomainError("internal error: complement does not span");
    QVec out(n, Rational(0));
    for (std::size_t k = 0; k < chosen.size(); ++k)
        out[chosen[k]] = (*coeffs)[basis.size() + k];
    return out;
}

ExtendedPoint::ExtendedPoint(FanPtr fan, std::size_t stratum, QVec rep)
    : fan_(std::move(fan)), stratum_(stratum)
{
    if (!fan_)
        throw DomainError("extended point without a fan");
    if (stratum_ >= fan_->size())
        throw DomainError("stratum index " + std::to_string(stratum_) + " is not a cone of the fan");
    rep_ = canonical_rep(fan_->cone(stratum_), rep);
}

ExtendedPoint ExtendedPoint::torus_point(FanPtr fan, QVec rep)
{
    std::size_t z = fan->zero_index();
    return ExtendedPoint(std::move(fan), z, std::move(rep));
}

bool operator==(const ExtendedPoint& a, const ExtendedPoint& b)
{
    if (a.fan_ != b.fan_ && !(*a.fan_ == *b.fan_))
        return false;
    return a.stratum_ == b.stratum_ && a.rep_ == b.rep_;
}

ExtendedPoint canonicalize(const ExtendedPoint& p)
{
    return ExtendedPoint(p.fan_ptr(), p.stratum(), p.rep());
}

namespace {

void check_chart(const ExtendedPoint& p, std::size_t chart)
{
    if (chart >= p.fan().size())
        throw DomainError("chart index is not a cone of the fan");
    if (!is_face(p.fan().cone(chart), p.stratum_cone()))
        throw DomainError("stratum is not a face of the chart cone");
}

} // namespace

ExtVal eval_monomial(const ExtendedPoint& p, std::size_t chart, const IntVec& u, const Scalar& a,
                     const FieldConfig& field)
{
    check_chart(p, chart);
    if (!p.fan().cone(chart).nonnegative_on(u))
        throw DomainError("exponent is not in the monoid of the chart");
    if (!p.stratum_cone().annihilated_by(u))
        return ExtVal::infinity();
    return ext_add(val(a, field), ExtVal(dot(u, p.rep())));
}

ExtVal eval_monomial(const ExtendedPoint& p, std::size_t chart, const IntVec& u)
{
    return eval_monomial(p, chart, u, Scalar(1L), FieldConfig::trivial());
}

HomTable as_monoid_hom(const ExtendedPoint& p, std::size_t chart)
{
    check_chart(p, chart);
    HomTable table;
    for (auto& u : hilbert_basis(dual_cone(p.fan().cone(chart)))) {
        ExtVal v = eval_monomial(p, chart, u);
        table.emplace_back(std::move(u), v);
    }
    return table;
}

ExtendedPoint hom_to_point(FanPtr fan, std::size_t chart, const HomTable& table)
{
    if (chart >= fan->size())
        throw DomainError("chart index is not a cone of the fan");
    const Cone& sigma = fan->cone(chart);
    const std::size_t n = fan->rank();
    for (const auto& [u, v] : table) {
        if (u.size() != n)
            throw DomainError("table exponent has wrong length");
        if (!sigma.nonnegative_on(u))
            throw DomainError("table exponent is not in the monoid of the chart");
    }

    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i; j < table.size(); ++j) {
            IntVec s(n);
            for (std::size_t k = 0; k < n; ++k)
                s[k] = table[i].first[k] + table[j].first[k];
            ExtVal expected = ext_add(table[i].second, table[j].second);
            for (const auto& [u, v] : table)
                if (u == s && !(v == expected))
                    throw DomainError("table is not additive");
        }
    }

    std::optional<std::size_t> stratum;
    for (const auto& face : faces(sigma)) {
        bool matches = true;
        for (const auto& [u, v] : table)
            if (face.annihilated_by(u) != v.is_finite()) {
                matches = false;
                break;
            }
        if (matches) {
            stratum = fan->find(face);
            if (!stratum)
                throw DomainError("face of the chart is missing from the fan");
            break;
        }
    }
    if (!stratum)
        throw DomainError("infinite entries do not match the pattern of any face");

    const Cone& tau = fan->cone(*stratum);
    QMatrix rows;
    QVec rhs;
    for (const auto& [u, v] : table) {
        if (v.is_infinite())
            continue;
        rows.push_back(to_qvec(u));
        rhs.push_back(v.value());
    }
    // Unknowns are the coordinates of the canonical complement; the rest are zero.
    auto free_cols = complement_columns(tau);
    QMatrix sys;
    for (const auto& r : rows) {
        QVec row;
        for (auto j : free_cols)
            row.push_back(r[j]);
        sys.push_back(std::move(row));
    }
    if (linalg::rank(sys, free_cols.size()) != free_cols.size())
        throw DomainError("table does not determine the point");
    auto sol = linalg::solve(sys, rhs, free_cols.size());
    if (!sol)
        throw DomainError("table is not additive (inconsistent finite values)");
    QVec rep(n, Rational(0));
    for (std::size_t k = 0; k < free_cols.size(); ++k)
        rep[free_cols[k]] = (*sol)[k];
    return ExtendedPoint(std::move(fan), *stratum, std::move(rep));
}

TropMap::TropMap(IntMatrix matrix, QVec shift, FanPtr source, FanPtr target)
    : matrix_(std::move(matrix)), shift_(std::move(shift)), source_(std::move(source)), target_(std::move(target))
{
    if (shift_.size() != target_->rank())
        throw DomainError("shift has wrong length");
    auto compat = fan_map_compatible(matrix_, *source_, *target_);
    if (!compat.compatible)
        throw DomainError("incompatible fans: some cone maps into no target cone");
    assignment_ = std::move(compat.assignment);
}

TropMap::TropMap(IntMatrix matrix, FanPtr source, FanPtr target)
    : TropMap(std::move(matrix), QVec(target->rank(), Rational(0)), source, target)
{
}

ExtendedPoint trop_map_apply(const TropMap& m, const ExtendedPoint& p)
{
    if (p.fan_ptr() != m.source_ptr() && !(p.fan() == m.source()))
        throw DomainError("point does not live on the source fan of the map");
    const Cone& tau = p.stratum_cone();
    const Cone& host = m.target().cone(*m.assignment()[p.stratum()]);
    QVec sample = to_qvec(linalg::apply(m.matrix(), tau.interior_sample()));
    Cone image_stratum = minimal_face_containing(host, sample);
    std::size_t idx = m.target().index_of(image_stratum);
    QVec rep = linalg::apply(m.matrix(), p.rep());
    for (std::size_t i = 0; i < rep.size(); ++i)
        rep[i] += m.shift()[i];
    return ExtendedPoint(m.target_ptr(), idx, std::move(rep));
}

ExtendedPoint trop_map_apply_dual(const TropMap& m, const ExtendedPoint& p)
{
    if (p.fan_ptr() != m.source_ptr() && !(p.fan() == m.source()))
        throw DomainError("point does not live on the source fan of the map");
    std::size_t chart = *m.assignment()[p.stratum()];
    const Cone& host = m.target().cone(chart);
    IntMatrix at = linalg::transpose(m.matrix(), m.source().rank());
    HomTable table;
    for (auto& u : hilbert_basis(dual_cone(host))) {
        IntVec pulled = linalg::apply(at, u);
        ExtVal v = ext_add(eval_monomial(p, p.stratum(), pulled), ExtVal(dot(u, m.shift())));
        table.emplace_back(std::move(u), v);
    }
    return hom_to_point(m.target_ptr(), chart, table);
}

TropMap compose(const TropMap& second, const TropMap& first)
{
    if (first.target_ptr() != second.source_ptr() && !(first.target() == second.source()))
        throw DomainError("maps are not composable");
    IntMatrix a = linalg::multiply(second.matrix(), first.matrix(), first.target().rank());
    QVec shift = linalg::apply(second.matrix(), first.shift());
    for (std::size_t i = 0; i < shift.size(); ++i)
        shift[i] += second.shift()[i];
    return TropMap(std::move(a), std::move(shift), first.source_ptr(), second.target_ptr());
}

} // namespace tropext
