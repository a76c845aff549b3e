#pragma once

#include <optional>
#include <vector>

#include "liecent/matrix.hpp"
#include "liecent/polynomial.hpp"
#include "liecent/subspace.hpp"

namespace liecent {

struct RowEchelon {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
/// Some x with m x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

Polynomial char_poly(const Matrix& m);
Polynomial min_poly(const Matrix& m);
/// Minimal polynomial of m inside the algebra whose unit is `unit`
/// (the constant term maps to a multiple of `unit`).
Polynomial min_poly(const Matrix& m, const Matrix& unit);

struct JordanChevalley {
    Matrix semisimple;
    Matrix nilpotent;
};

/// m = s + n with s semisimple, n nilpotent and sn = ns, via Newton iteration
/// on the squarefree part of the characteristic polynomial.
JordanChevalley jordan_chevalley(const Matrix& m);

/// Accumulates linear equations over a fixed set of unknowns and keeps them in
/// reduced echelon form, so huge redundant systems never materialize.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    [[nodiscard]] std::size_t unknowns() const { return unknowns_; }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }

    /// Adds sum_k coeff[k] * x[k] = 0. Returns false when it was implied already.
    bool add_equation(Vector coeffs);
    [[nodiscard]] Subspace solutions() const;

private:
    std::size_t unknowns_;
    std::vector<Vector> rows_;        // each row has a leading 1 at pivots_[i]
    std::vector<std::size_t> pivots_;
};

} // namespace liecent
