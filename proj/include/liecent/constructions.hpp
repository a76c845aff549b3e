#pragma once

#include <string>
#include <vector>

#include "liecent/lie_algebra.hpp"
#include "liecent/structure_tensor.hpp"

namespace liecent {

/// Finite-dimensional commutative associative unital algebra over Q.
class CommutativeAlgebra {
public:
    CommutativeAlgebra() = default;
    /// Validates commutativity, associativity and the unit; throws ValidationError.
    static CommutativeAlgebra from_tensor(std::vector<std::string> names, StructureTensor c, Vector unit);

    [[nodiscard]] std::size_t dim() const { return c_.dim(); }
    [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
    [[nodiscard]] const StructureTensor& structure() const { return c_; }
    [[nodiscard]] const Vector& unit() const { return unit_; }
    [[nodiscard]] Vector product(const Vector& a, const Vector& b) const { return c_.product(a, b); }
    /// Matrix of b -> a b.
    [[nodiscard]] Matrix multiplication(const Vector& a) const { return c_.left_multiplication(a); }
    [[nodiscard]] Matrix multiplication(std::size_t i) const { return c_.left_multiplication(i); }

private:
    std::vector<std::string> names_;
    StructureTensor c_;
    Vector unit_;
};

enum class ClassicalKind { sl, gl, so, sp, u, su };

/// Matrix Lie algebras in their standard bases. For sp, `n` is the even size of
/// the ambient matrices; u(n) and su(n) are real algebras realized on 2n x 2n
/// real matrices so their structure constants are rational.
LieAlgebra classical(ClassicalKind kind, std::size_t n);

/// Lie algebra spanned by linearly independent square matrices, closed under commutators.
LieAlgebra from_matrix_basis(std::vector<std::string> names, const std::vector<Matrix>& basis);

enum class ExampleAlgebra { two_dim, five_dim };

struct ExampleTable {
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<BracketEntry> table;
};

/// The bracket tables exactly as stated: [x1, x2] = x1 (two_dim), and
/// [y1,y2]=y1, [y1,y3]=y2, [y1,y4]=y3, [y2,y3]=y4, [y2,y4]=y5 (five_dim).
ExampleTable example_table(ExampleAlgebra which);
/// Builds the table with full validation. The five_dim table violates Jacobi on
/// (y1, y2, y3), so that case throws ValidationError.
LieAlgebra example_algebra(ExampleAlgebra which);

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);
/// The same algebra in the basis e'_i = e_perm[i].
LieAlgebra permute_basis(const LieAlgebra& g, const std::vector<std::size_t>& perm);

/// Q[x1..xm] modulo monomials of total degree >= order, graded monomial basis.
CommutativeAlgebra truncated_poly(std::size_t vars, unsigned order);
/// Q^k with pointwise product.
CommutativeAlgebra point_functions(std::size_t points);
/// Q(i) = Q[t]/(t^2 + 1), basis (1, i).
CommutativeAlgebra gaussian_rationals();

/// k (x) A with [x (x) a, y (x) b] = [x, y] (x) ab; basis index i * dim A + a.
LieAlgebra current_algebra(const LieAlgebra& k, const CommutativeAlgebra& a);

/// Coordinates of x (x) a in the tensor basis.
Vector tensor(const Vector& x, const Vector& a);

/// sum_i ad(x_i) ad(x^i) with x^i the Killing-dual basis; throws
/// PreconditionError when the Killing form is degenerate.
Matrix casimir_adjoint(const LieAlgebra& k);

/// sum_i ad(x_i (x) a) ad(x^i (x) 1) on k (x) A, which maps x (x) b to x (x) ab
/// when the Casimir of k acts as the identity.
Matrix casimir_coefficient_action(const LieAlgebra& k, const CommutativeAlgebra& a, const Vector& coeff);

/// x (x) b -> x (x) ab, i.e. 1 (x) L_a.
Matrix coefficient_multiplication(const LieAlgebra& k, const CommutativeAlgebra& a, const Vector& coeff);

} // namespace liecent
