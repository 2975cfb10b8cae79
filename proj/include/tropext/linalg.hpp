#pragma once

#include <optional>
#include <vector>

#include "tropext/rational.hpp"

namespace tropext::linalg {

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
QMatrix rref(QMatrix m, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const QMatrix& rows, std::size_t ncols);
std::size_t rank(const IntMatrix& rows, std::size_t ncols);

/// Basis of {x : rows·x = 0}.
QMatrix nullspace(const QMatrix& rows, std::size_t ncols);

/// Some solution of A x = b (free variables set to zero), or nullopt.
std::optional<QVec> solve(const QMatrix& a, const QVec& b, std::size_t ncols);

/// True when v lies in the rational span of `basis`.
bool in_span(const QMatrix& basis, const QVec& v);

/// Integer matrix A (rows) times integer vector.
IntVec apply(const IntMatrix& a, const IntVec& v);
QVec apply(const IntMatrix& a, const QVec& v);
IntMatrix transpose(const IntMatrix& a, std::size_t ncols);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner);

/// Column Hermite reduction: a unimodular U with rows·U = [H | 0]. The last
/// `ncols - rank` columns of U form a lattice basis of ker(rows) ∩ Z^n.
struct ColumnReduction {
    IntMatrix unimodular;    // n×n, stored by rows
    IntMatrix inverse;       // U^{-1}, n×n
    std::size_t rank = 0;
};
ColumnReduction column_reduce(const IntMatrix& rows, std::size_t ncols);

/// Lattice basis of ker(rows) ∩ Z^n.
IntMatrix integer_kernel(const IntMatrix& rows, std::size_t ncols);

enum class Rel { Le, Lt, Eq };

/// a·x (rel) b.
struct Constraint {
    QVec a;
    Rational b;
    Rel rel = Rel::Le;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Exact feasibility by Fourier–Motzkin elimination; returns a witness point when feasible.
/// Strict inequalities are honored.
std::optional<QVec> find_point(std::size_t n, const std::vector<Constraint>& cons);

inline bool feasible(std::size_t n, const std::vector<Constraint>& cons)
{
    return find_point(n, cons).has_value();
}

/// Eliminates the variables with index >= keep; the result constrains x_0..x_{keep-1}
/// and describes the projection of the input polyhedron.
std::vector<Constraint> project(std::size_t n, std::vector<Constraint> cons, std::size_t keep);

bool satisfies(const Constraint& c, const QVec& x);

/// Scales each row so its leading coefficient has absolute value 1 (equalities: value 1),
/// drops duplicates and keeps only the tightest of parallel inequalities.
std::vector<Constraint> normalize_system(const std::vector<Constraint>& cons);

} // namespace tropext::linalg
