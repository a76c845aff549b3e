#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liecent/lie_algebra.hpp"

namespace liecent {

enum class EndoKind { derivations, inner, centroid, j_space, nilpotent_part, semisimple_part, commutant };

std::string to_string(EndoKind kind);

/// A linear space of endomorphisms of Q^n, kept with a canonical basis
/// (reduced echelon form of the row-major flattened matrices).
class EndoSpace {
public:
    EndoSpace(EndoKind kind, std::size_t space_dim, const std::vector<Matrix>& spanning);

    [[nodiscard]] EndoKind kind() const { return kind_; }
    [[nodiscard]] std::size_t space_dim() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Matrix>& basis() const { return basis_; }
    /// The flattened span inside Q^(n*n).
    [[nodiscard]] const Subspace& span() const { return span_; }
    [[nodiscard]] bool contains(const Matrix& m) const;
    /// Coordinates of m in basis(), or nullopt when m is outside.
    [[nodiscard]] std::optional<Vector> coordinates(const Matrix& m) const;
    [[nodiscard]] Matrix element(const Vector& coords) const;

private:
    EndoKind kind_;
    std::size_t n_;
    Subspace span_;
    std::vector<Matrix> basis_;
};

EndoSpace derivations(const LieAlgebra& g);
EndoSpace inner_derivations(const LieAlgebra& g);
/// dim Der(g) - dim ad(g)
std::size_t outer_dimension(const LieAlgebra& g);
EndoSpace centroid(const LieAlgebra& g);
/// Centroid elements killed by ad on both sides; isomorphic to Hom(g/[g,g], z(g)).
EndoSpace j_space(const LieAlgebra& g);
/// (dim g - dim [g,g]) * dim z(g), computed from dimensions alone.
std::size_t hom_abelianization_to_center_dim(const LieAlgebra& g);

/// Commutant {T : T r = r T for all r in rep} of a family of square matrices.
EndoSpace module_commutant(std::span<const Matrix> rep);

/// First pair of basis elements that do not commute, if any.
std::optional<std::pair<std::size_t, std::size_t>> noncommuting_pair(std::span<const Matrix> basis);

struct CentroidSplit {
    EndoSpace nilpotent;
    EndoSpace semisimple;
};

/// Jordan-Chevalley split of an abelian centroid, N(g) + S(g).
/// Throws PreconditionError naming a noncommuting pair when Cent(g) is not abelian.
CentroidSplit split_centroid(const LieAlgebra& g);
/// Same split for any commutative family of matrices acting on Q^space_dim.
CentroidSplit split_commutative(std::size_t space_dim, std::span<const Matrix> basis);

} // namespace liecent
