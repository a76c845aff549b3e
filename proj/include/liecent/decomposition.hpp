#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liecent/endo.hpp"
#include "liecent/lie_algebra.hpp"
#include "liecent/polynomial.hpp"

namespace liecent {

/// How far the rational idempotent search got relative to the reals.
enum class SplitStatus {
    split,           ///< every piece is split: its semisimple quotient is Q
    nonsplit_real,   ///< some piece has a field of the form Q(sqrt(-d)); a complex structure candidate
    nonsplit_unknown ///< some piece may split further over R; the decomposition may be too coarse
};

std::string to_string(SplitStatus status);

struct IdempotentSet {
    std::vector<Matrix> projections;
    /// Spectral projectors each projection was lifted from (same order).
    std::vector<Matrix> spectral;
    SplitStatus status = SplitStatus::split;
};

/// Nilpotent radical of an abelian centroid as coordinates over C.basis():
/// the kernel of the trace form (f, g) -> tr(f g).
Subspace centroid_radical(const EndoSpace& c);

/// Primitive idempotents of an abelian centroid (or any commutative matrix algebra
/// containing the identity).
IdempotentSet primitive_idempotents(const EndoSpace& c);
IdempotentSet primitive_idempotents(std::size_t space_dim, std::span<const Matrix> basis);

struct DecompositionReport {
    std::vector<Subspace> ideals;
    IdempotentSet idempotents;
    /// blocks[i][j] = dim p_i Cent(g) p_j
    std::vector<std::vector<std::size_t>> blocks;
    /// hom_dims[i][j] = dim Hom(g_j / [g_j, g_j], z(g_i)) for i != j, 0 on the diagonal.
    std::vector<std::vector<std::size_t>> hom_dims;
    /// centroid dimension of each g_i computed on the restricted algebra
    std::vector<std::size_t> local_centroid_dims;
    std::vector<std::size_t> j_dims;
    SplitStatus status = SplitStatus::split;
    bool blocks_sum_to_centroid = false;
    bool off_diagonal_matches_hom = false;
    bool local_centroids_match = false;
    /// All off-diagonal Hom spaces vanish, so the ideals are unique up to order.
    bool unique = false;
};

/// Splits g into indecomposable ideals. Requires z(g) inside [g, g]; throws
/// PreconditionError naming a central vector outside the commutator otherwise.
DecompositionReport indecompose(const LieAlgebra& g);

struct ComplexStructure {
    Matrix j;
    /// Minimal polynomial t^2 - 2a t + (a^2 + b^2) of the element J was derived from.
    Polynomial source_min_poly;
};

/// J with J^2 = -1 spanning S(g) together with the identity, if S(g) is two-dimensional.
/// J and -J are the only such structures.
std::optional<ComplexStructure> complex_structure(const LieAlgebra& g);

} // namespace liecent
