#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace tropext::oracle {

std::int64_t padic_order(const Rational& q, std::int64_t p)
{
    std::int64_t k = 0;
    Integer n = q.get_num(), d = q.get_den();
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    while (d % p == 0) {
        d /= p;
        --k;
    }
    return k;
}

std::optional<Rational> valuation(const Scalar& a, const FieldConfig& f)
{
    switch (f.kind()) {
    case FieldKind::Trivial:
        return a.rational() == 0 ? std::nullopt : std::optional<Rational>(0);
    case FieldKind::Padic:
        if (a.rational() == 0)
            return std::nullopt;
        return Rational(padic_order(a.rational(), f.prime()));
    case FieldKind::Tadic:
        for (const auto& [k, c] : a.series())
            if (c != 0)
                return Rational(k);
        return std::nullopt;
    }
    return std::nullopt;
}

bool min_twice(const LaurentPoly& f, const QVec& w)
{
    std::vector<Rational> vals;
    for (const auto& [u, a] : f.terms()) {
        auto v = valuation(a, f.field());
        Rational s = *v;
        for (std::size_t i = 0; i < u.size(); ++i)
            s += u[i] * w[i];
        vals.push_back(s);
    }
    if (vals.empty())
        return true;
    auto m = *std::min_element(vals.begin(), vals.end());
    return std::count(vals.begin(), vals.end(), m) >= 2;
}

std::vector<QVec> grid(long lo, long hi, long maxden)
{
    std::vector<Rational> axis;
    for (long d = 1; d <= maxden; ++d)
        for (long n = lo * d; n <= hi * d; ++n)
            if (std::gcd(n, d) == 1)
                axis.emplace_back(n, d);
    for (auto& q : axis)
        q.canonicalize();
    std::vector<QVec> out;
    for (const auto& a : axis)
        for (const auto& b : axis)
            out.push_back({a, b});
    return out;
}

namespace {

long cross(const IntVec& a, const IntVec& b)
{
    return a[0] * b[1] - a[1] * b[0];
}

} // namespace

bool in_cone_2d(const IntVec& g1, const IntVec& g2, const IntVec& x)
{
    long orient = cross(g1, g2);
    if (orient == 0)
        std::abort();
    if (orient < 0)
        return in_cone_2d(g2, g1, x);
    return cross(g1, x) >= 0 && cross(x, g2) >= 0;
}

std::vector<IntVec> hilbert_basis_2d(const IntVec& g1, const IntVec& g2)
{
    // Closed parallelepiped {a g1 + b g2 : 0 <= a, b <= 1} in the bounding box.
    long det = std::labs(cross(g1, g2));
    long bx = std::labs(g1[0]) + std::labs(g2[0]);
    long by = std::labs(g1[1]) + std::labs(g2[1]);
    std::vector<IntVec> pts;
    for (long i = -bx; i <= bx; ++i)
        for (long j = -by; j <= by; ++j) {
            IntVec x{i, j};
            if ((i == 0 && j == 0) || !in_cone_2d(g1, g2, x))
                continue;
            // Coordinates a = cross(x, g2)/cross(g1, g2), b = cross(g1, x)/cross(g1, g2).
            long o = cross(g1, g2);
            long an = cross(x, g2) * (o > 0 ? 1 : -1), bn = cross(g1, x) * (o > 0 ? 1 : -1);
            if (an <= det && bn <= det)
                pts.push_back(x);
        }
    std::vector<IntVec> out;
    for (const auto& x : pts) {
        bool reducible = false;
        for (const auto& y : pts) {
            IntVec r{x[0] - y[0], x[1] - y[1]};
            if (y != x && !(r[0] == 0 && r[1] == 0) && in_cone_2d(g1, g2, r)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> dual_points_in_box(const std::vector<IntVec>& gens, std::size_t n, long r)
{
    std::vector<IntVec> out;
    IntVec u(n, -r);
    while (true) {
        bool ok = std::any_of(u.begin(), u.end(), [](auto c) { return c != 0; });
        for (const auto& g : gens) {
            long s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += u[i] * g[i];
            ok = ok && s >= 0;
        }
        if (ok)
            out.push_back(u);
        std::size_t i = 0;
        while (i < n && u[i] == r)
            u[i++] = -r;
        if (i == n)
            break;
        ++u[i];
    }
    return out;
}

} // namespace tropext::oracle
