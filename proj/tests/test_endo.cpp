#include <random>

#include "doctest.h"
#include "liecent/constructions.hpp"
#include "liecent/decomposition.hpp"
#include "liecent/endo.hpp"
#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"

using namespace liecent;

namespace {

LieAlgebra sl2() { return classical(ClassicalKind::sl, 2); }
LieAlgebra two_dim() { return example_algebra(ExampleAlgebra::two_dim); }

// Brute-force oracle: all T with T[x,y] = [Tx,y] for basis x,y, solved as one
// kernel computation over the n^2 entries of T.
std::size_t centroid_dim_oracle(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector bij = g.bracket(i, j);
            for (std::size_t out = 0; out < n; ++out) {
                Vector row(n * n);
                // (T b_ij)_out
                for (std::size_t k = 0; k < n; ++k) {
                    row[out * n + k] += bij[k];
                }
                // [T e_i, e_j]_out = sum_k T(k, i) c(k, j, out)
                for (std::size_t k = 0; k < n; ++k) {
                    row[k * n + i] -= g.c(k, j, out);
                }
                rows.push_back(row);
            }
        }
    }
    if (rows.empty()) {
        return n * n;
    }
    return n * n - Subspace::span(n * n, rows).dim();
}

std::size_t derivation_dim_oracle(const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector bij = g.bracket(i, j);
            for (std::size_t out = 0; out < n; ++out) {
                Vector row(n * n);
                for (std::size_t k = 0; k < n; ++k) {
                    row[out * n + k] += bij[k];
                    row[k * n + i] -= g.c(k, j, out);
                    row[k * n + j] -= g.c(i, k, out);
                }
                rows.push_back(row);
            }
        }
    }
    return n * n - Subspace::span(n * n, rows).dim();
}

Matrix companion(const Polynomial& p)
{
    const auto n = static_cast<std::size_t>(p.degree());
    Matrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        c(i, i - 1) = Rational(1);
    }
    for (std::size_t i = 0; i < n; ++i) {
        c(i, n - 1) = -p.coefficient(i) / p.leading();
    }
    return c;
}

std::vector<Matrix> powers_of(const Matrix& c)
{
    std::vector<Matrix> out;
    Matrix m = Matrix::identity(c.rows());
    for (std::size_t i = 0; i < c.rows(); ++i) {
        out.push_back(m);
        m = m * c;
    }
    return out;
}

} // namespace

TEST_CASE("derivation and centroid dimensions")
{
    CHECK(derivations(LieAlgebra::abelian(2)).dim() == 4);
    CHECK(centroid(LieAlgebra::abelian(2)).dim() == 4);
    CHECK(inner_derivations(LieAlgebra::abelian(2)).dim() == 0);
    CHECK(outer_dimension(LieAlgebra::abelian(3)) == 9);

    CHECK(derivations(sl2()).dim() == 3);
    CHECK(inner_derivations(sl2()).dim() == 3);
    CHECK(outer_dimension(sl2()) == 0);
    CHECK(centroid(sl2()).dim() == 1);

    CHECK(derivations(two_dim()).dim() == 2);
    CHECK(outer_dimension(two_dim()) == 0);
    const EndoSpace c2 = centroid(two_dim());
    CHECK(c2.dim() == 1);
    CHECK(c2.contains(Matrix::identity(2)));

    const LieAlgebra gl2 = classical(ClassicalKind::gl, 2);
    CHECK(derivations(gl2).dim() == 4);
    CHECK(centroid(gl2).dim() == 2);
    CHECK(hom_abelianization_to_center_dim(gl2) == 1);
    CHECK(hom_abelianization_to_center_dim(LieAlgebra::abelian(2)) == 4);
    CHECK(hom_abelianization_to_center_dim(two_dim()) == 0);
    CHECK(hom_abelianization_to_center_dim(sl2()) == 0);
}

TEST_CASE("centroid of current algebras matches the coefficient algebra")
{
    CHECK(centroid(current_algebra(sl2(), truncated_poly(1, 3))).dim() == 3);
    CHECK(centroid(current_algebra(sl2(), truncated_poly(2, 2))).dim() == 3);
    CHECK(centroid(current_algebra(sl2(), point_functions(3))).dim() == 3);
    CHECK(centroid(current_algebra(sl2(), gaussian_rationals())).dim() == 2);
}

TEST_CASE("oracle: centroid and derivations by direct linear algebra")
{
    const std::vector<LieAlgebra> zoo{sl2(),
                                      two_dim(),
                                      LieAlgebra::abelian(3),
                                      classical(ClassicalKind::gl, 2),
                                      classical(ClassicalKind::so, 4),
                                      direct_sum({sl2(), two_dim()}),
                                      current_algebra(two_dim(), truncated_poly(1, 2)),
                                      current_algebra(sl2(), truncated_poly(1, 2))};
    for (const auto& g : zoo) {
        CHECK(centroid(g).dim() == centroid_dim_oracle(g));
        CHECK(derivations(g).dim() == derivation_dim_oracle(g));
        CHECK(derivations(g).span().contains(inner_derivations(g).span()));
    }
}

TEST_CASE("EndoSpace coordinates")
{
    const EndoSpace d = derivations(sl2());
    CHECK(d.kind() == EndoKind::derivations);
    CHECK(d.space_dim() == 3);
    const Matrix h = sl2().ad(2);
    const auto coords = d.coordinates(h);
    REQUIRE(coords.has_value());
    CHECK(d.element(*coords) == h);
    CHECK_FALSE(d.coordinates(Matrix::identity(3)).has_value());
    CHECK_FALSE(d.contains(Matrix::identity(3)));
    CHECK_THROWS_AS(static_cast<void>(d.contains(Matrix::identity(2))), InputError);
    CHECK_THROWS_AS(static_cast<void>(d.element(Vector{1})), InputError);
    CHECK(to_string(EndoKind::centroid) == "centroid");
}

TEST_CASE("J-space")
{
    CHECK(j_space(sl2()).dim() == 0);
    CHECK(j_space(two_dim()).dim() == 0);
    const EndoSpace j = j_space(LieAlgebra::abelian(2));
    CHECK(j.dim() == 4);
    const LieAlgebra gl2 = classical(ClassicalKind::gl, 2);
    const EndoSpace jg = j_space(gl2);
    CHECK(jg.dim() == 1);
    for (const auto& m : jg.basis()) {
        CHECK(centroid(gl2).contains(m));
        CHECK(center(gl2).contains(Subspace::column_space(m)));
        for (const auto& v : commutator(gl2).vectors()) {
            CHECK(is_zero(m * v));
        }
    }
}

TEST_CASE("centroid split into nilpotent and semisimple parts")
{
    const CentroidSplit a = split_centroid(current_algebra(sl2(), truncated_poly(1, 2)));
    CHECK(a.nilpotent.dim() == 1);
    CHECK(a.semisimple.dim() == 1);
    for (const auto& m : a.nilpotent.basis()) {
        CHECK(m.is_nilpotent());
    }
    const CentroidSplit b = split_centroid(current_algebra(sl2(), point_functions(2)));
    CHECK(b.nilpotent.dim() == 0);
    CHECK(b.semisimple.dim() == 2);
    CHECK_THROWS_AS(static_cast<void>(split_centroid(LieAlgebra::abelian(2))), PreconditionError);
    const CentroidSplit c = split_centroid(two_dim());
    CHECK(c.nilpotent.dim() == 0);
    CHECK(c.semisimple.dim() == 1);
}

TEST_CASE("module commutant")
{
    const std::vector<Matrix> std_rep{Matrix{{0, 1}, {0, 0}}, Matrix{{0, 0}, {1, 0}}, Matrix{{1, 0}, {0, -1}}};
    CHECK(module_commutant(std_rep).dim() == 1);
    const std::vector<Matrix> diag{Matrix{{1, 0}, {0, 2}}};
    CHECK(module_commutant(diag).dim() == 2);
    const std::vector<Matrix> rot{Matrix{{0, -1}, {1, 0}}};
    CHECK(module_commutant(rot).dim() == 2);
    CHECK_THROWS_AS(static_cast<void>(module_commutant(std::vector<Matrix>{})), InputError);
    const std::vector<Matrix> mixed{Matrix::identity(2), Matrix::identity(3)};
    CHECK_THROWS_AS(static_cast<void>(module_commutant(mixed)), InputError);
    CHECK(noncommuting_pair(std_rep).has_value());
    CHECK_FALSE(noncommuting_pair(diag).has_value());
}

TEST_CASE("centroid radical")
{
    CHECK(centroid_radical(centroid(current_algebra(sl2(), truncated_poly(1, 3)))).dim() == 2);
    CHECK(centroid_radical(centroid(current_algebra(sl2(), truncated_poly(2, 2)))).dim() == 2);
    CHECK(centroid_radical(centroid(sl2())).is_zero());
    CHECK(centroid_radical(centroid(current_algebra(sl2(), point_functions(3)))).is_zero());
    CHECK_THROWS_AS(static_cast<void>(centroid_radical(centroid(LieAlgebra::abelian(2)))), PreconditionError);
}

TEST_CASE("primitive idempotents of commutative matrix algebras")
{
    // Q[t]/(t^3 - 2) is a field: one idempotent, not split.
    const Polynomial cubic{-2, 0, 0, 1};
    const auto field = powers_of(companion(cubic));
    const IdempotentSet f = primitive_idempotents(3, field);
    CHECK(f.projections.size() == 1);
    CHECK(f.status == SplitStatus::nonsplit_unknown);

    // Q[t]/((t - 1)(t^3 - 2)) = Q x Q(cbrt 2).
    const auto product = powers_of(companion(Polynomial::linear(Rational(1)) * cubic));
    const IdempotentSet p = primitive_idempotents(4, product);
    REQUIRE(p.projections.size() == 2);
    Matrix sum(4, 4);
    for (const auto& e : p.projections) {
        CHECK(e * e == e);
        sum += e;
    }
    CHECK(sum == Matrix::identity(4));
    CHECK(p.projections[0] * p.projections[1] == Matrix(4, 4));

    // Q[t]/(t^2 + 1)(t - 2)^2.
    const auto mixed = powers_of(companion(Polynomial{1, 0, 1} * power(Polynomial::linear(Rational(2)), 2)));
    const IdempotentSet m = primitive_idempotents(4, mixed);
    CHECK(m.projections.size() == 2);
    CHECK(m.status == SplitStatus::nonsplit_real);

    const std::vector<Matrix> no_unit{Matrix{{0, 1}, {0, 0}}};
    CHECK_THROWS_AS(static_cast<void>(primitive_idempotents(2, no_unit)), PreconditionError);
    CHECK(to_string(SplitStatus::split) == "split");
}

TEST_CASE("indecomposable ideals")
{
    const DecompositionReport a = indecompose(direct_sum({sl2(), sl2()}));
    CHECK(a.ideals.size() == 2);
    CHECK(a.unique);
    CHECK(a.status == SplitStatus::split);
    CHECK(a.blocks_sum_to_centroid);
    CHECK(a.off_diagonal_matches_hom);
    CHECK(a.local_centroids_match);

    CHECK(indecompose(current_algebra(sl2(), point_functions(3))).ideals.size() == 3);
    CHECK(indecompose(current_algebra(sl2(), truncated_poly(1, 3))).ideals.size() == 1);
    CHECK(indecompose(classical(ClassicalKind::so, 4)).ideals.size() == 2);
    const DecompositionReport g = indecompose(current_algebra(sl2(), gaussian_rationals()));
    CHECK(g.ideals.size() == 1);
    CHECK(g.status == SplitStatus::nonsplit_real);

    CHECK_THROWS_AS(static_cast<void>(indecompose(LieAlgebra::abelian(2))), PreconditionError);
    CHECK_THROWS_AS(static_cast<void>(indecompose(classical(ClassicalKind::gl, 2))), PreconditionError);

    const DecompositionReport mix = indecompose(direct_sum({sl2(), two_dim()}));
    CHECK(mix.ideals.size() == 2);
    std::size_t total = 0;
    for (const auto& i : mix.ideals) {
        total += i.dim();
    }
    CHECK(total == 5);
}

TEST_CASE("complex structure")
{
    const LieAlgebra g = current_algebra(sl2(), gaussian_rationals());
    const auto cs = complex_structure(g);
    REQUIRE(cs.has_value());
    CHECK(cs->j * cs->j == -Matrix::identity(6));
    CHECK(centroid(g).contains(cs->j));
    CHECK(cs->source_min_poly.degree() == 2);

    CHECK_FALSE(complex_structure(sl2()).has_value());
    CHECK_THROWS_AS(static_cast<void>(complex_structure(direct_sum({sl2(), sl2()}))), PreconditionError);
}

TEST_CASE("property: centroid elements commute with every ad")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    const std::vector<LieAlgebra> zoo{current_algebra(sl2(), truncated_poly(1, 3)),
                                      current_algebra(two_dim(), point_functions(2)),
                                      direct_sum({sl2(), two_dim()})};
    for (const auto& g : zoo) {
        const EndoSpace c = centroid(g);
        const EndoSpace d = derivations(g);
        for (int trial = 0; trial < 4; ++trial) {
            Vector coords(c.dim());
            for (auto& x : coords) {
                x = dist(rng);
            }
            const Matrix t = c.element(coords);
            for (std::size_t i = 0; i < g.dim(); ++i) {
                CHECK(t * g.ad(i) == g.ad(i) * t);
            }
            // [D, T] is again in the centroid for D a derivation.
            for (const auto& dm : d.basis()) {
                CHECK(c.contains(commutator(dm, t)));
            }
        }
    }
}

TEST_CASE("commutant of a zero representation and complex structure refusals")
{
    const std::vector<Matrix> zero{Matrix(3, 3), Matrix(3, 3)};
    CHECK(module_commutant(zero).dim() == 9);
    CHECK(module_commutant(classical(ClassicalKind::sl, 2).ad_basis()).dim() == 1);
    CHECK(module_commutant(LieAlgebra::abelian(2).ad_basis()).dim() == 4);
    CHECK_THROWS_AS(static_cast<void>(complex_structure(LieAlgebra::abelian(2))), PreconditionError);
    const IdempotentSet one = primitive_idempotents(centroid(current_algebra(sl2(), gaussian_rationals())));
    CHECK(one.projections.size() == 1);
    CHECK(one.status == SplitStatus::nonsplit_real);
}
