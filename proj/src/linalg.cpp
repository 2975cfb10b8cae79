#include "tropext/linalg.hpp"

#include <algorithm>
#include <map>

namespace tropext::linalg {

QMatrix rref(QMatrix m, std::size_t ncols, std::vector<std::size_t>* pivots)
{
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0)
            ++sel;
        if (sel == m.size())
            continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        piv.push_back(col);
        ++row;
    }
    m.resize(row);
    if (pivots)
        *pivots = std::move(piv);
    return m;
}

std::size_t rank(const QMatrix& rows, std::size_t ncols)
{
    return rref(rows, ncols).size();
}

std::size_t rank(const IntMatrix& rows, std::size_t ncols)
{
    QMatrix q;
    for (const auto& r : rows)
        q.push_back(to_qvec(r));
    return rank(q, ncols);
}

QMatrix nullspace(const QMatrix& rows, std::size_t ncols)
{
    std::vector<std::size_t> piv;
    QMatrix r = rref(rows, ncols, &piv);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : piv)
        is_pivot[p] = true;
    QMatrix basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free])
            continue;
        QVec v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMatrix& a, const QVec& b, std::size_t ncols)
{
    QMatrix aug;
    for (std::size_t i = 0; i < a.size(); ++i) {
        QVec row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    std::vector<std::size_t> piv;
    QMatrix r = rref(aug, ncols + 1, &piv);
    if (!piv.empty() && piv.back() == ncols)
        return std::nullopt;
    QVec x(ncols, Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = r[i][ncols];
    return x;
}

bool in_span(const QMatrix& basis, const QVec& v)
{
    if (basis.empty())
        return is_zero(v);
    QMatrix m = basis;
    std::size_t n = v.size();
    std::size_t r0 = rank(m, n);
    m.push_back(v);
    return rank(m, n) == r0;
}

IntVec apply(const IntMatrix& a, const IntVec& v)
{
    IntVec out;
    out.reserve(a.size());
    for (const auto& row : a)
        out.push_back(dot(row, v));
    return out;
}

QVec apply(const IntMatrix& a, const QVec& v)
{
    QVec out;
    out.reserve(a.size());
    for (const auto& row : a)
        out.push_back(dot(row, v));
    return out;
}

IntMatrix transpose(const IntMatrix& a, std::size_t ncols)
{
    IntMatrix t(ncols, IntVec(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            t[j][i] = a[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner)
{
    std::size_t ncols = b.empty() ? 0 : b[0].size();
    IntMatrix out(a.size(), IntVec(ncols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < ncols; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

ColumnReduction column_reduce(const IntMatrix& rows, std::size_t n)
{
    using ZMat = std::vector<std::vector<Integer>>;
    ZMat m(rows.size(), std::vector<Integer>(n));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = static_cast<long>(rows[i][j]);
    ZMat u(n, std::vector<Integer>(n, 0));
    ZMat uinv(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        u[i][i] = uinv[i][i] = 1;

    // col_j -= q * col_i, mirrored on U and on U^{-1} (row_i += q * row_j).
    auto axpy = [&](std::size_t j, std::size_t i, const Integer& q) {
        for (auto& r : m)
            r[j] -= q * r[i];
        for (auto& r : u)
            r[j] -= q * r[i];
        for (std::size_t c = 0; c < n; ++c)
            uinv[i][c] += q * uinv[j][c];
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (auto& r : m)
            std::swap(r[a], r[b]);
        for (auto& r : u)
            std::swap(r[a], r[b]);
        std::swap(uinv[a], uinv[b]);
    };

    std::size_t k = 0;
    for (std::size_t r = 0; r < m.size() && k < n; ++r) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = k; c < n; ++c)
                if (m[r][c] != 0 && (best == n || abs(m[r][c]) < abs(m[r][best])))
                    best = c;
            if (best == n)
                break;
            bool others = false;
            for (std::size_t c = k; c < n; ++c) {
                if (c == best || m[r][c] == 0)
                    continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][best].get_mpz_t());
                axpy(c, best, q);
                if (m[r][c] != 0)
                    others = true;
            }
            if (!others) {
                swap_cols(k, best);
                ++k;
                break;
            }
        }
    }

    ColumnReduction out;
    out.rank = k;
    out.unimodular.assign(n, IntVec(n, 0));
    out.inverse.assign(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            out.unimodular[i][j] = to_int64(u[i][j]);
            out.inverse[i][j] = to_int64(uinv[i][j]);
        }
    return out;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n)
{
    auto red = column_reduce(rows, n);
    IntMatrix basis;
    for (std::size_t j = red.rank; j < n; ++j) {
        IntVec col(n);
        for (std::size_t i = 0; i < n; ++i)
            col[i] = red.unimodular[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

bool satisfies(const Constraint& c, const QVec& x)
{
    Rational lhs = dot(c.a, x);
    switch (c.rel) {
    case Rel::Le:
        return lhs <= c.b;
    case Rel::Lt:
        return lhs < c.b;
    case Rel::Eq:
        return lhs == c.b;
    }
    return false;
}

namespace {

// Scales by a positive factor so the first nonzero coefficient has absolute value 1.
Constraint normalized(Constraint c)
{
    for (const auto& x : c.a) {
        if (x == 0)
            continue;
        Rational s = abs(x);
        for (auto& y : c.a)
            y /= s;
        c.b /= s;
        break;
    }
    return c;
}

} // namespace

std::vector<Constraint> normalize_system(const std::vector<Constraint>& cons)
{
    std::map<QVec, Constraint> ineq;
    std::map<std::pair<QVec, Rational>, Constraint> eq;
    std::vector<Constraint> out;
    for (const auto& raw : cons) {
        Constraint c = normalized(raw);
        if (c.rel == Rel::Eq) {
            // An equality is also stored with the sign that makes its leading entry positive.
            bool flip = false;
            for (const auto& x : c.a)
                if (x != 0) {
                    flip = x < 0;
                    break;
                }
            if (flip) {
                for (auto& x : c.a)
                    x = -x;
                c.b = -c.b;
            }
            eq.emplace(std::make_pair(c.a, c.b), c);
            continue;
        }
        auto it = ineq.find(c.a);
        if (it == ineq.end()) {
            ineq.emplace(c.a, c);
        } else {
            Constraint& old = it->second;
            if (c.b < old.b || (c.b == old.b && c.rel == Rel::Lt))
                old = c;
        }
    }
    for (auto& [k, c] : eq)
        out.push_back(c);
    for (auto& [k, c] : ineq)
        out.push_back(c);
    return out;
}

namespace {

bool trivially_true(const Constraint& c)
{
    switch (c.rel) {
    case Rel::Le:
        return 0 <= c.b;
    case Rel::Lt:
        return 0 < c.b;
    case Rel::Eq:
        return c.b == 0;
    }
    return false;
}

// Removes variable `j` from the system.
std::vector<Constraint> eliminate(const std::vector<Constraint>& cons, std::size_t j)
{
    std::vector<Constraint> keep, lower, upper;
    const Constraint* eq = nullptr;
    for (const auto& c : cons) {
        if (c.a[j] == 0)
            keep.push_back(c);
        else if (c.rel == Rel::Eq && !eq)
            eq = &c;
    }
    if (eq) {
        // Substitute x_j from the equality into every other constraint.
        for (const auto& c : cons) {
            if (&c == eq || c.a[j] == 0)
                continue;
            Rational f = c.a[j] / eq->a[j];
            Constraint d = c;
            for (std::size_t i = 0; i < d.a.size(); ++i)
                d.a[i] -= f * eq->a[i];
            d.b -= f * eq->b;
            d.a[j] = 0;
            keep.push_back(std::move(d));
        }
        return normalize_system(keep);
    }
    for (const auto& c : cons) {
        if (c.a[j] > 0)
            upper.push_back(c);
        else if (c.a[j] < 0)
            lower.push_back(c);
    }
    for (const auto& lo : lower) {
        for (const auto& up : upper) {
            Rational fl = up.a[j];
            Rational fu = -lo.a[j];
            Constraint d;
            d.a.resize(lo.a.size());
            for (std::size_t i = 0; i < d.a.size(); ++i)
                d.a[i] = fl * lo.a[i] + fu * up.a[i];
            d.a[j] = 0;
            d.b = fl * lo.b + fu * up.b;
            d.rel = (lo.rel == Rel::Lt || up.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
            keep.push_back(std::move(d));
        }
    }
    return normalize_system(keep);
}

} // namespace

std::vector<Constraint> project(std::size_t n, std::vector<Constraint> cons, std::size_t keep)
{
    cons = normalize_system(cons);
    for (std::size_t j = n; j-- > keep;)
        cons = eliminate(cons, j);
    for (auto& c : cons)
        c.a.resize(keep);
    return cons;
}

std::optional<QVec> find_point(std::size_t n, const std::vector<Constraint>& input)
{
    // levels[k] constrains x_0..x_{k-1} only.
    std::vector<std::vector<Constraint>> levels(n + 1);
    levels[n] = normalize_system(input);
    for (std::size_t k = n; k > 0; --k)
        levels[k - 1] = eliminate(levels[k], k - 1);
    for (const auto& c : levels[0])
        if (!trivially_true(c))
            return std::nullopt;

    QVec x(n, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t j = k - 1;
        std::optional<Rational> fixed, lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : levels[k]) {
            if (c.a[j] == 0)
                continue;
            Rational rest = 0;
            for (std::size_t i = 0; i < j; ++i)
                rest += c.a[i] * x[i];
            Rational bound = (c.b - rest) / c.a[j];
            if (c.rel == Rel::Eq) {
                fixed = bound;
                break;
            }
            bool strict = c.rel == Rel::Lt;
            if (c.a[j] > 0) {
                if (!hi || bound < *hi || (bound == *hi && strict)) {
                    hi_strict = (hi && bound == *hi) ? (hi_strict || strict) : strict;
                    hi = bound;
                }
            } else {
                if (!lo || bound > *lo || (bound == *lo && strict)) {
                    lo_strict = (lo && bound == *lo) ? (lo_strict || strict) : strict;
                    lo = bound;
                }
            }
        }
        if (fixed)
            x[j] = *fixed;
        else if (lo && hi)
            x[j] = (*lo == *hi) ? *lo : Rational((*lo + *hi) / 2);
        else if (lo)
            x[j] = lo_strict ? Rational(*lo + 1) : *lo;
        else if (hi)
            x[j] = hi_strict ? Rational(*hi - 1) : *hi;
        else
            x[j] = 0;
    }
    for (const auto& c : input)
        if (!satisfies(c, x))
            throw DomainError("internal error: Fourier-Motzkin witness violates a constraint");
    return x;
}

} // namespace tropext::linalg
