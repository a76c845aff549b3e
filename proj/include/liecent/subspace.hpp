#pragma once

#include <optional>
#include <vector>

#include "liecent/matrix.hpp"

namespace liecent {

/// A coordinate subspace of Q^n stored as its reduced row-echelon basis.
/// The representation is canonical, so equality of subspaces is equality of
/// the basis matrices.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    /// Subspace spanned by the columns of m.
    static Subspace column_space(const Matrix& m);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
    [[nodiscard]] bool is_zero() const { return dim() == 0; }
    [[nodiscard]] bool is_full() const { return dim() == ambient_; }
    [[nodiscard]] const Matrix& basis() const { return basis_; }
    [[nodiscard]] Vector vector(std::size_t i) const { return basis_.row(i); }
    [[nodiscard]] std::vector<Vector> vectors() const;
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Coordinates not used as pivots; a canonical complement.
    [[nodiscard]] std::vector<std::size_t> free_coordinates() const;

    /// Coordinates of v in this basis, or nullopt when v is outside.
    [[nodiscard]] std::optional<Vector> coordinates(const Vector& v) const;
    [[nodiscard]] bool contains(const Vector& v) const { return coordinates(v).has_value(); }
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// v minus its component along the pivots, i.e. v reduced modulo this subspace.
    [[nodiscard]] Vector reduce(const Vector& v) const;

    [[nodiscard]] Subspace operator+(const Subspace& other) const;
    [[nodiscard]] Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace liecent
