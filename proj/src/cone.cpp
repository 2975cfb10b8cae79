#include "tropext/cone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "tropext/linalg.hpp"

namespace tropext {

namespace {

QMatrix to_qmatrix(const std::vector<IntVec>& rows)
{
    QMatrix out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(to_qvec(r));
    return out;
}

// Calls fn on every k-subset of {0..n-1} (as sorted index list).
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn)
{
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

} // namespace

Cone::Cone(std::size_t rank, std::vector<IntVec> generators) : rank_(rank)
{
    std::set<IntVec> uniq;
    for (auto& g : generators) {
        if (g.size() != rank)
            throw DomainError("cone generator has wrong length");
        if (is_zero(g))
            continue;
        uniq.insert(primitive(g));
    }
    gens_.assign(uniq.begin(), uniq.end());
    compute_inequalities();
}

Cone Cone::full(std::size_t rank)
{
    std::vector<IntVec> g;
    for (std::size_t i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        g.push_back(e);
        e[i] = -1;
        g.push_back(e);
    }
    return Cone(rank, std::move(g));
}

Cone Cone::orthant(std::size_t rank)
{
    std::vector<IntVec> g;
    for (std::size_t i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        g.push_back(e);
    }
    return Cone(rank, std::move(g));
}

void Cone::compute_inequalities()
{
    QMatrix gq = to_qmatrix(gens_);
    QMatrix span = linalg::rref(gq, rank_);
    dim_ = span.size();

    for (const auto& e : linalg::nullspace(gq, rank_))
        equations_.push_back(primitive(e));

    std::set<IntVec> normals;
    if (dim_ > 0) {
        for_each_subset(gens_.size(), dim_ - 1, [&](const std::vector<std::size_t>& sub) {
            QMatrix chosen;
            for (auto i : sub)
                chosen.push_back(gq[i]);
            if (linalg::rank(chosen, rank_) != dim_ - 1)
                return;
            // u = Σ c_i span_i with ⟨u, g⟩ = 0 for every chosen g.
            QMatrix sys;
            for (const auto& g : chosen) {
                QVec row;
                for (const auto& b : span)
                    row.push_back(dot(b, g));
                sys.push_back(std::move(row));
            }
            auto ker = linalg::nullspace(sys, dim_);
            if (ker.size() != 1)
                return;
            QVec u(rank_, Rational(0));
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < rank_; ++j)
                    u[j] += ker[0][i] * span[i][j];
            bool pos = false, neg = false;
            for (const auto& g : gq) {
                int s = sgn(dot(u, g));
                pos |= s > 0;
                neg |= s < 0;
            }
            if (pos && neg)
                return;
            if (neg)
                for (auto& x : u)
                    x = -x;
            normals.insert(primitive(u));
        });
    }
    facets_.assign(normals.begin(), normals.end());

    std::vector<IntVec> both = equations_;
    both.insert(both.end(), facets_.begin(), facets_.end());
    lineality_dim_ = rank_ - linalg::rank(both, rank_);

    if (lineality_dim_ == 0 && dim_ > 1) {
        std::vector<IntVec> extremal;
        for (const auto& g : gens_) {
            std::vector<IntVec> tight = equations_;
            for (const auto& f : facets_)
                if (dot(f, g) == 0)
                    tight.push_back(f);
            if (linalg::rank(tight, rank_) == rank_ - 1)
                extremal.push_back(g);
        }
        gens_ = std::move(extremal);
    }
}

bool Cone::contains(const QVec& v) const
{
    if (v.size() != rank_)
        throw DomainError("vector length does not match cone rank");
    for (const auto& e : equations_)
        if (dot(e, v) != 0)
            return false;
    for (const auto& f : facets_)
        if (dot(f, v) < 0)
            return false;
    return true;
}

bool Cone::contains(const IntVec& v) const
{
    if (v.size() != rank_)
        throw DomainError("vector length does not match cone rank");
    for (const auto& e : equations_)
        if (dot(e, v) != 0)
            return false;
    for (const auto& f : facets_)
        if (dot(f, v) < 0)
            return false;
    return true;
}

bool Cone::contains(const Cone& other) const
{
    if (other.rank_ != rank_)
        return false;
    for (const auto& g : other.gens_)
        if (!contains(g))
            return false;
    return true;
}

bool Cone::relint_contains(const QVec& v) const
{
    if (!contains(v))
        return false;
    for (const auto& f : facets_)
        if (dot(f, v) == 0)
            return false;
    return true;
}

bool operator==(const Cone& a, const Cone& b)
{
    return a.rank_ == b.rank_ && a.dim_ == b.dim_ && a.contains(b) && b.contains(a);
}

IntVec Cone::interior_sample() const
{
    IntVec s(rank_, 0);
    for (const auto& g : gens_)
        for (std::size_t i = 0; i < rank_; ++i)
            s[i] += g[i];
    return s;
}

bool Cone::annihilated_by(const IntVec& u) const
{
    for (const auto& g : gens_)
        if (dot(u, g) != 0)
            return false;
    return true;
}

bool Cone::nonnegative_on(const IntVec& u) const
{
    for (const auto& g : gens_)
        if (dot(u, g) < 0)
            return false;
    return true;
}

Cone dual_cone(const Cone& sigma)
{
    std::vector<IntVec> g = sigma.facet_normals();
    for (const auto& e : sigma.equations()) {
        g.push_back(e);
        IntVec m(e);
        for (auto& x : m)
            x = -x;
        g.push_back(std::move(m));
    }
    return Cone(sigma.ambient_rank(), std::move(g));
}

Cone intersect(const Cone& a, const Cone& b)
{
    if (a.ambient_rank() != b.ambient_rank())
        throw DomainError("intersecting cones of different rank");
    auto da = dual_cone(a);
    auto db = dual_cone(b);
    std::vector<IntVec> g = da.generators();
    g.insert(g.end(), db.generators().begin(), db.generators().end());
    return dual_cone(Cone(a.ambient_rank(), std::move(g)));
}

namespace {

std::vector<IntVec> gens_on(const std::vector<IntVec>& gens, const IntVec& f)
{
    std::vector<IntVec> out;
    for (const auto& g : gens)
        if (dot(f, g) == 0)
            out.push_back(g);
    return out;
}

bool face_order(const Cone& a, const Cone& b)
{
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    return a.generators() < b.generators();
}

} // namespace

std::vector<Cone> faces(const Cone& sigma)
{
    std::set<std::vector<IntVec>> seen;
    std::vector<Cone> out;
    std::deque<std::vector<IntVec>> queue;
    queue.push_back(sigma.generators());
    seen.insert(sigma.generators());
    while (!queue.empty()) {
        auto gens = queue.front();
        queue.pop_front();
        out.emplace_back(sigma.ambient_rank(), gens);
        for (const auto& f : sigma.facet_normals()) {
            auto sub = gens_on(gens, f);
            if (sub.size() == gens.size())
                continue;
            if (seen.insert(sub).second)
                queue.push_back(std::move(sub));
        }
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

bool is_face(const Cone& sigma, const Cone& candidate)
{
    if (!sigma.contains(candidate))
        return false;
    for (const auto& f : faces(sigma))
        if (f == candidate)
            return true;
    return false;
}

IntVec supporting_normal(const Cone& sigma, const Cone& face)
{
    IntVec u(sigma.ambient_rank(), 0);
    for (const auto& f : sigma.facet_normals()) {
        if (face.annihilated_by(f))
            for (std::size_t i = 0; i < u.size(); ++i)
                u[i] += f[i];
    }
    Cone cut(sigma.ambient_rank(), gens_on(sigma.generators(), u));
    if (!(cut == face))
        throw DomainError("cone is not a face");
    return u;
}

Cone minimal_face_containing(const Cone& sigma, const QVec& v)
{
    if (!sigma.contains(v))
        throw DomainError("point is not in the cone");
    std::vector<IntVec> gens = sigma.generators();
    for (const auto& f : sigma.facet_normals())
        if (dot(f, v) == 0)
            gens = gens_on(gens, f);
    return Cone(sigma.ambient_rank(), std::move(gens));
}

Cone product_cone(const Cone& a, const Cone& b)
{
    std::size_t n = a.ambient_rank(), m = b.ambient_rank();
    std::vector<IntVec> g;
    for (const auto& x : a.generators()) {
        IntVec v(x);
        v.resize(n + m, 0);
        g.push_back(std::move(v));
    }
    for (const auto& y : b.generators()) {
        IntVec v(n, 0);
        v.insert(v.end(), y.begin(), y.end());
        g.push_back(std::move(v));
    }
    return Cone(n + m, std::move(g));
}

Cone image_cone(const IntMatrix& a, std::size_t target_rank, const Cone& sigma)
{
    std::vector<IntVec> g;
    for (const auto& x : sigma.generators())
        g.push_back(linalg::apply(a, x));
    return Cone(target_rank, std::move(g));
}

namespace {

// Minimal generators of C ∩ Z^n for a pointed cone.
std::vector<IntVec> hilbert_pointed(const Cone& c)
{
    const std::size_t n = c.ambient_rank();
    const std::size_t d = c.dim();
    const auto& rays = c.generators();
    std::set<IntVec> candidates(rays.begin(), rays.end());

    for_each_subset(rays.size(), d, [&](const std::vector<std::size_t>& sub) {
        QMatrix basis;
        for (auto i : sub)
            basis.push_back(to_qvec(rays[i]));
        if (linalg::rank(basis, n) != d)
            return;
        IntVec lo(n, 0), hi(n, 0);
        for (auto i : sub)
            for (std::size_t j = 0; j < n; ++j) {
                if (rays[i][j] < 0)
                    lo[j] += rays[i][j];
                else
                    hi[j] += rays[i][j];
            }
        // Coordinates of x in the ray basis: solve Σ λ_i r_i = x.
        QMatrix sys(n, QVec(d));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < d; ++i)
                sys[j][i] = basis[i][j];
        IntVec x(n);
        std::function<void(std::size_t)> rec = [&](std::size_t j) {
            if (j == n) {
                if (is_zero(x))
                    return;
                for (const auto& e : c.equations())
                    if (dot(e, x) != 0)
                        return;
                auto lam = linalg::solve(sys, to_qvec(x), d);
                if (!lam)
                    return;
                for (std::size_t i = 0; i < n; ++i)
                    if (dot(sys[i], *lam) != x[i])
                        return;
                for (const auto& l : *lam)
                    if (l < 0 || l >= 1)
                        return;
                candidates.insert(x);
                return;
            }
            for (auto v = lo[j]; v <= hi[j]; ++v) {
                x[j] = v;
                rec(j + 1);
            }
        };
        rec(0);
    });

    std::vector<IntVec> cand(candidates.begin(), candidates.end());
    std::vector<IntVec> basis;
    for (const auto& x : cand) {
        bool reducible = false;
        for (const auto& y : cand) {
            if (y == x)
                continue;
            IntVec diff(n);
            for (std::size_t i = 0; i < n; ++i)
                diff[i] = x[i] - y[i];
            if (c.contains(diff)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            basis.push_back(x);
    }
    return basis;
}

} // namespace

std::vector<IntVec> hilbert_basis(const Cone& c)
{
    if (c.dim() == 0)
        return {};
    if (c.is_pointed())
        return hilbert_pointed(c);

    const std::size_t n = c.ambient_rank();
    IntMatrix rows = c.equations();
    rows.insert(rows.end(), c.facet_normals().begin(), c.facet_normals().end());
    auto red = linalg::column_reduce(rows, n);
    const std::size_t r = red.rank;

    std::vector<IntVec> out;
    for (std::size_t j = r; j < n; ++j) {
        IntVec col(n), neg(n);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = red.unimodular[i][j];
            neg[i] = -col[i];
        }
        out.push_back(col);
        out.push_back(neg);
    }
    if (r == 0)
        return out;

    // Quotient by the lineality lattice: x ↦ (U^{-1} x)_{0..r-1}.
    IntMatrix proj(red.inverse.begin(), red.inverse.begin() + static_cast<std::ptrdiff_t>(r));
    std::vector<IntVec> qgens;
    for (const auto& g : c.generators())
        qgens.push_back(linalg::apply(proj, g));
    Cone quotient(r, std::move(qgens));
    for (const auto& h : hilbert_pointed(quotient)) {
        IntVec lift(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < r; ++k)
                lift[i] += red.unimodular[i][k] * h[k];
        out.push_back(std::move(lift));
    }
    return out;
}

} // namespace tropext
