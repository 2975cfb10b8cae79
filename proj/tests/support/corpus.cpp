#include "corpus.hpp"

#include <algorithm>
#include <numeric>

namespace tropext::testing {

LaurentPoly poly(const FieldConfig& f, std::size_t nvars, const std::vector<std::pair<Scalar, IntVec>>& terms)
{
    return LaurentPoly(f, nvars, terms);
}

std::vector<Rational> small_rationals(std::size_t count, const std::vector<Rational>& excluded)
{
    std::vector<Rational> out;
    for (long h = 1; out.size() < count; ++h) {
        // All n/d with max(|n|, d) = h, in a fixed order.
        for (long d = 1; d <= h && out.size() < count; ++d) {
            for (long n = -h; n <= h && out.size() < count; ++n) {
                if (std::max(std::labs(n), d) != h || std::gcd(n, d) != 1)
                    continue;
                Rational q(n, d);
                q.canonicalize();
                if (std::find(excluded.begin(), excluded.end(), q) != excluded.end())
                    continue;
                if (std::find(out.begin(), out.end(), q) == out.end())
                    out.push_back(q);
            }
        }
    }
    return out;
}

namespace {

void add_standard_nodes(CorpusVariety& v, const RationalFunction& f1, const RationalFunction& f2)
{
    auto& s = v.system;
    auto g1 = graph_embedding(s, kBase, f1, ExtensionFan::Affine);
    auto g2 = graph_embedding(s, kBase, f2, ExtensionFan::Projective);
    auto p12 = product_embedding(s, g1.node, g2.node);
    auto pb2 = product_embedding(s, kBase, g2.node);
    v.arrows = {g1.arrow, g2.arrow, p12.arrow_to_first, p12.arrow_to_second, pb2.arrow_to_first, pb2.arrow_to_second};
}

} // namespace

CorpusVariety line_trivial(std::size_t npoints)
{
    auto f = FieldConfig::trivial();
    auto x = LaurentPoly::variable(f, 2, 0), y = LaurentPoly::variable(f, 2, 1);
    auto one = LaurentPoly::constant(f, 2, Scalar(1));
    BaseChart base{2, f, {x + y + one}, nullptr, BasisFlag::Asserted};
    CorpusVariety v{"line x+y+1 (trivial)", EmbeddingSystem(base), {}};
    auto three = LaurentPoly::constant(f, 2, Scalar(3));
    add_standard_nodes(v, RationalFunction::polynomial(x - one), RationalFunction{x - one, y + three});

    std::vector<Rational> as{Rational(1)};
    for (auto& a : small_rationals(npoints, {Rational(0), Rational(-1), Rational(2), Rational(1)}))
        as.push_back(a);
    as.resize(npoints);
    for (const auto& a : as)
        v.system.register_valuation(PointValuation::kpoint({Scalar(a), Scalar(Rational(-1 - a))}, f));
    return v;
}

CorpusVariety conic_padic(std::size_t npoints)
{
    auto f = FieldConfig::padic(2);
    auto x = LaurentPoly::variable(f, 2, 0), y = LaurentPoly::variable(f, 2, 1);
    auto c = [&](const Rational& q) { return LaurentPoly::constant(f, 2, Scalar(q)); };
    BaseChart base{2, f, {x * x + y * y - c(1)}, nullptr, BasisFlag::Asserted};
    CorpusVariety v{"conic x^2+y^2-1 (2-adic)", EmbeddingSystem(base), {}};
    add_standard_nodes(v, RationalFunction::polynomial(x + c(Rational(3, 5))), RationalFunction{y, x + c(2)});

    std::vector<Rational> ss{Rational(2)};
    for (auto& s : small_rationals(npoints, {Rational(0), Rational(1), Rational(-1), Rational(2)}))
        ss.push_back(s);
    ss.resize(npoints);
    for (const auto& s : ss) {
        Rational d = 1 + s * s;
        Rational px = (1 - s * s) / d;
        Rational py = 2 * s / d;
        v.system.register_valuation(PointValuation::kpoint({Scalar(px), Scalar(py)}, f));
    }
    return v;
}

CorpusVariety line_tadic(std::size_t npoints)
{
    auto f = FieldConfig::tadic();
    auto x = LaurentPoly::variable(f, 2, 0), y = LaurentPoly::variable(f, 2, 1);
    auto t = LaurentPoly::constant(f, 2, Scalar::monomial_t(1, 1));
    auto one = LaurentPoly::constant(f, 2, Scalar::one(f));
    BaseChart base{2, f, {x + y + t}, nullptr, BasisFlag::Asserted};
    CorpusVariety v{"line x+y+t (t-adic)", EmbeddingSystem(base), {}};
    add_standard_nodes(v, RationalFunction::polynomial(x - t), RationalFunction{x + one, y});

    // a = t (z1 hits its boundary), a = -1 (z2 hits its boundary), then c·t^k and -1 + c·t^k.
    std::vector<Scalar> as{Scalar::monomial_t(1, 1), Scalar::constant(-1, f)};
    auto cs = small_rationals(npoints, {Rational(0)});
    const Scalar minus_t = Scalar::monomial_t(-1, 1);
    for (std::size_t i = 0; as.size() < npoints; ++i) {
        const auto& c = cs[i / 8];
        std::int64_t k = static_cast<std::int64_t>(i % 4) - 1;
        Scalar a = Scalar::monomial_t(c, k);
        if ((i / 4) % 2 == 1)
            a = scalar_add(Scalar::constant(-1, f), a);
        if (a.is_zero() || a == minus_t || std::find(as.begin(), as.end(), a) != as.end())
            continue;
        as.push_back(a);
    }
    for (const auto& a : as) {
        Scalar b = scalar_neg(scalar_add(a, Scalar::monomial_t(1, 1)));
        v.system.register_valuation(PointValuation::kpoint({a, b}, f));
    }
    return v;
}

std::vector<CorpusVariety> full_corpus(std::size_t npoints)
{
    std::vector<CorpusVariety> out;
    out.push_back(line_trivial(npoints));
    out.push_back(conic_padic(npoints));
    out.push_back(line_tadic(npoints));
    return out;
}

} // namespace tropext::testing
