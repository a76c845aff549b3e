#pragma once

#include <string>
#include <vector>

#include "liecent/matrix.hpp"
#include "liecent/structure_tensor.hpp"
#include "liecent/subspace.hpp"

namespace liecent {

/// One row of a bracket table: [e_left, e_right] = value, with left < right.
struct BracketEntry {
    std::size_t left = 0;
    std::size_t right = 0;
    Vector value;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i, j, k) e_k. Construction validates antisymmetry and
/// the Jacobi identity; instances are immutable afterwards.
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// Builds from brackets of basis pairs i < j; unlisted pairs bracket to zero.
    /// Throws ValidationError naming the first triple that violates Jacobi.
    static LieAlgebra build(std::size_t dim, std::vector<std::string> basis_names,
                            const std::vector<BracketEntry>& table);
    static LieAlgebra from_tensor(std::vector<std::string> basis_names, StructureTensor c);
    static LieAlgebra abelian(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return c_.dim(); }
    [[nodiscard]] const std::vector<std::string>& basis_names() const { return names_; }
    [[nodiscard]] const StructureTensor& structure() const { return c_; }
    [[nodiscard]] const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }

    [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const;
    [[nodiscard]] Vector bracket(std::size_t i, std::size_t j) const { return c_.basis_product(i, j); }
    /// Column j is [x, e_j].
    [[nodiscard]] Matrix ad(const Vector& x) const;
    [[nodiscard]] Matrix ad(std::size_t i) const { return c_.left_multiplication(i); }
    [[nodiscard]] const std::vector<Matrix>& ad_basis() const { return ad_; }

    /// Nonzero brackets of basis pairs i < j.
    [[nodiscard]] std::vector<BracketEntry> bracket_table() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b)
    {
        return a.names_ == b.names_ && a.c_ == b.c_;
    }

private:
    LieAlgebra(std::vector<std::string> names, StructureTensor c);

    std::vector<std::string> names_;
    StructureTensor c_;
    std::vector<Matrix> ad_;
};

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);
Matrix ad_matrix(const LieAlgebra& g, const Vector& x);

Subspace center(const LieAlgebra& g);
/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);
Subspace commutator(const LieAlgebra& g);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

enum class SeriesKind { lower_central, derived };
/// Terms g = s_0, s_1, ... up to the first term equal to its successor.
std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind);

Matrix killing_form(const LieAlgebra& g);

struct StructureFlags {
    bool abelian = false;
    bool nilpotent = false;
    bool solvable = false;
    bool perfect = false;
    bool centerfree = false;
    bool semisimple = false;
    bool reductive = false;
    bool simple = false;
};

StructureFlags flags(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);

/// g / I on the non-pivot coordinates of I. Throws PreconditionError when I is
/// not an ideal.
LieAlgebra quotient(const LieAlgebra& g, const Subspace& ideal);
/// The subalgebra s with its reduced-echelon basis; throws PreconditionError when
/// s is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& s);

} // namespace liecent
