#include "liecent/decomposition.hpp"
#include "liecent/lie_algebra.hpp"

namespace liecent {

StructureFlags flags(const LieAlgebra& g)
{
    StructureFlags f;
    const std::size_t n = g.dim();
    const Subspace z = center(g);
    const Subspace gg = commutator(g);
    f.abelian = gg.is_zero();
    f.nilpotent = series(g, SeriesKind::lower_central).back().is_zero();
    f.solvable = series(g, SeriesKind::derived).back().is_zero();
    f.perfect = gg.is_full();
    f.centerfree = z.is_zero();
    f.semisimple = is_semisimple(g);
    f.reductive = (z + gg).is_full() && z.intersect(gg).is_zero() && is_semisimple(restrict_to(g, gg));
    if (f.semisimple && !f.abelian && n > 0) {
        f.simple = indecompose(g).ideals.size() == 1;
    }
    return f;
}

} // namespace liecent
