#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "tropext/fan.hpp"

using namespace tropext;

namespace {

Cone random_cone(std::mt19937_64& rng, std::size_t rank, std::size_t ngens)
{
    std::uniform_int_distribution<long> e(-5, 5);
    std::vector<IntVec> gens;
    while (gens.size() < ngens) {
        IntVec g(rank);
        for (auto& x : g)
            x = e(rng);
        if (!is_zero(g))
            gens.push_back(g);
    }
    return Cone(rank, gens);
}

std::vector<IntVec> sorted(std::vector<IntVec> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// Lattice points of the cone with entries bounded by r.
std::vector<IntVec> box_points(const Cone& c, long r)
{
    std::vector<IntVec> out;
    for (auto& u : oracle::dual_points_in_box({}, c.ambient_rank(), r))
        if (c.contains(u))
            out.push_back(u);
    return out;
}

bool representable(const IntVec& x, const std::vector<IntVec>& basis, const Cone& c, std::map<IntVec, bool>& memo)
{
    if (is_zero(x))
        return true;
    if (auto it = memo.find(x); it != memo.end())
        return it->second;
    bool ok = false;
    for (const auto& h : basis) {
        IntVec r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i)
            r[i] = x[i] - h[i];
        if (c.contains(r) && representable(r, basis, c, memo)) {
            ok = true;
            break;
        }
    }
    memo[x] = ok;
    return ok;
}

} // namespace

TEST_CASE("dual cones")
{
    CHECK(dual_cone(Cone::orthant(2)) == Cone::orthant(2));
    CHECK(dual_cone(Cone::full(2)) == Cone::zero(2));
    CHECK(dual_cone(Cone::zero(3)) == Cone::full(3));

    Cone sigma(2, {{2, -1}, {0, 1}});
    Cone d = dual_cone(sigma);
    CHECK(sorted(d.generators()) == std::vector<IntVec>{{1, 0}, {1, 2}});
    // Normal enumeration in [-4, 4]^2 spans the same cone.
    auto normals = oracle::dual_points_in_box(sigma.generators(), 2, 4);
    for (const auto& u : normals)
        CHECK(d.contains(u));
    CHECK(Cone(2, normals) == d);
}

TEST_CASE("double duality on random cones")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        std::size_t rank = i % 2 ? 3 : 2;
        std::uniform_int_distribution<std::size_t> ng(1, rank + 2);
        Cone c = random_cone(rng, rank, ng(rng));
        Cone dd = dual_cone(dual_cone(c));
        REQUIRE(dd == c);
        for (const auto& g : c.generators())
            for (const auto& f : c.facet_normals())
                REQUIRE(dot(f, g) >= 0);
        for (const auto& g : c.generators())
            for (const auto& e : c.equations())
                REQUIRE(dot(e, g) == 0);
    }
}

TEST_CASE("Hilbert bases")
{
    CHECK(sorted(hilbert_basis(Cone::orthant(2))) == std::vector<IntVec>{{0, 1}, {1, 0}});
    CHECK(sorted(hilbert_basis(Cone(2, {{1, 2}, {1, 0}}))) == std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}});
    CHECK(hilbert_basis(Cone::zero(2)).empty());
    CHECK(sorted(hilbert_basis(dual_cone(Cone(2, {{2, -1}, {0, 1}})))) ==
          oracle::hilbert_basis_2d({1, 0}, {1, 2}));
    // A line: the lattice of units.
    auto line = sorted(hilbert_basis(Cone(2, {{1, 1}, {-1, -1}})));
    CHECK(line == std::vector<IntVec>{{-1, -1}, {1, 1}});
    // Half-plane: ± lineality plus one lift.
    auto half = hilbert_basis(Cone(2, {{1, 0}, {-1, 0}, {0, 1}}));
    CHECK(half.size() == 3);
    CHECK(Cone(2, half) == Cone(2, {{1, 0}, {-1, 0}, {0, 1}}));
}

TEST_CASE("Hilbert bases generate every bounded lattice point and are minimal")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        std::size_t rank = i % 2 ? 3 : 2;
        Cone c = random_cone(rng, rank, rank);
        if (!c.is_pointed()) {
            --i;
            continue;
        }
        auto basis = hilbert_basis(c);
        for (const auto& h : basis) {
            REQUIRE(c.contains(h));
            for (const auto& k : basis) {
                if (k == h)
                    continue;
                IntVec r(rank);
                for (std::size_t j = 0; j < rank; ++j)
                    r[j] = h[j] - k[j];
                REQUIRE_FALSE(c.contains(r));
            }
        }
        std::map<IntVec, bool> memo;
        for (const auto& x : box_points(c, rank == 2 ? 6 : 4))
            REQUIRE(representable(x, basis, c, memo));
    }
}

TEST_CASE("faces")
{
    CHECK(faces(Cone::orthant(2)).size() == 4);
    CHECK(faces(Cone(2, {{1, 1}})).size() == 2);
    Cone sigma(2, {{2, -1}, {0, 1}});
    auto fs = faces(sigma);
    CHECK(fs.size() == 4);
    for (const auto& f : fs) {
        IntVec u = supporting_normal(sigma, f);
        CHECK(sigma.nonnegative_on(u));
        for (const auto& g : sigma.generators())
            CHECK((dot(u, g) == 0) == f.contains(g));
    }
    CHECK(faces(Cone::full(2)).size() == 1);
    CHECK(faces(Cone(2, {{1, 0}, {-1, 0}, {0, 1}})).size() == 2);
}

TEST_CASE("minimal face containing a point")
{
    Cone o = Cone::orthant(2);
    CHECK(minimal_face_containing(o, {1, 1}) == o);
    CHECK(minimal_face_containing(o, {1, 0}) == Cone(2, {{1, 0}}));
    CHECK(minimal_face_containing(o, {0, 0}) == Cone::zero(2));
    CHECK_THROWS_AS(minimal_face_containing(o, {-1, 0}), DomainError);

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> e(0, 3);
    for (int i = 0; i < 50; ++i) {
        Cone c = random_cone(rng, 3, 4);
        QVec v(3, Rational(0));
        for (const auto& g : c.generators()) {
            long w = e(rng);
            for (std::size_t j = 0; j < 3; ++j)
                v[j] += w * g[j];
        }
        Cone f = minimal_face_containing(c, v);
        REQUIRE(is_face(c, f));
        REQUIRE(f.relint_contains(v));
    }
}

TEST_CASE("fan validation")
{
    CHECK(fan_validate(Fan::projective_line()).valid);
    CHECK(fan_validate(Fan::projective_plane()).valid);
    CHECK(fan_validate(Fan::orthant(3)).valid);

    Fan overlap(2, {Cone(2, {{1, 0}, {0, 1}}), Cone(2, {{1, 1}, {-1, 1}})});
    auto r = fan_validate(overlap);
    CHECK_FALSE(r.valid);
    CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                      [](const FanViolation& v) { return v.kind == FanViolation::Kind::BadIntersection; }));

    Fan missing(2, {Cone::orthant(2)}, false);
    auto m = fan_validate(missing);
    CHECK_FALSE(m.valid);
    CHECK(m.violations.front().kind == FanViolation::Kind::MissingFace);
}

TEST_CASE("perturbing a generator of a corpus fan breaks it")
{
    for (const Fan& f : {Fan::projective_plane(), product_fan(Fan::projective_line(), Fan::projective_line())}) {
        REQUIRE(fan_validate(f).valid);
        // Move one generator of a maximal cone; its old faces stay listed.
        std::vector<Cone> cones = f.cones();
        auto it = std::max_element(cones.begin(), cones.end(),
                                   [](const Cone& a, const Cone& b) { return a.dim() < b.dim(); });
        auto gens = it->generators();
        for (std::size_t k = 0; k < f.rank(); ++k)
            gens[0][k] += gens[1][k];
        *it = Cone(f.rank(), gens);
        CHECK_FALSE(fan_validate(Fan(f.rank(), cones, false)).valid);
    }
}

TEST_CASE("product fans")
{
    CHECK(product_fan(Fan::projective_line(), Fan::projective_line()).size() == 9);
    CHECK(product_fan(Fan::projective_line(), Fan::projective_plane()).size() == 3 * 7);
    CHECK(product_fan(Fan::projective_plane(), Fan::torus(1)).size() == Fan::projective_plane().size());
    CHECK(fan_validate(product_fan(Fan::projective_plane(), Fan::affine_line())).valid);
}

TEST_CASE("fan map compatibility")
{
    auto p2 = Fan::projective_plane();
    IntMatrix id{{1, 0}, {0, 1}};
    auto c = fan_map_compatible(id, p2, p2);
    CHECK(c.compatible);
    for (std::size_t i = 0; i < p2.size(); ++i)
        CHECK(c.assignment[i] == i);

    auto p1p1 = product_fan(Fan::projective_line(), Fan::projective_line());
    CHECK(fan_map_compatible({{1, 0}}, p1p1, Fan::projective_line()).compatible);
    CHECK_FALSE(fan_map_compatible(id, p2, p1p1).compatible);
    CHECK_FALSE(fan_map_compatible(id, p2, Fan::orthant(2)).compatible);
}
