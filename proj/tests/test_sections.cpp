#include <random>

#include "doctest.h"
#include "liecent/constructions.hpp"
#include "liecent/errors.hpp"
#include "liecent/linalg.hpp"
#include "liecent/sections.hpp"

using namespace liecent;

namespace {

LieAlgebra sl2() { return classical(ClassicalKind::sl, 2); }
LieAlgebra two_dim() { return example_algebra(ExampleAlgebra::two_dim); }

MultiIndex mi(std::vector<unsigned> c) { return MultiIndex{std::move(c)}; }

// Composition a(t) -> a(t + n(t)) in Q[t]/(t^order), computed by expanding powers.
Matrix substitution_oracle(const Vector& n, unsigned order)
{
    const std::size_t d = order;
    Vector shift(d);
    shift[1 % d] += Rational(d > 1 ? 1 : 0);
    for (std::size_t i = 0; i < d; ++i) {
        shift[i] += n[i];
    }
    Matrix out(d, d);
    Vector p = unit_vector(d, 0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            out(i, j) = p[i];
        }
        Vector next(d);
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t b = 0; a + b < d; ++b) {
                next[a + b] += p[a] * shift[b];
            }
        }
        p = next;
    }
    return out;
}

} // namespace

TEST_CASE("jet algebras")
{
    const JetAlgebra q = jet_algebra(0, 3);
    CHECK(q.algebra.dim() == 1);
    const JetAlgebra j = jet_algebra(2, 3);
    CHECK(j.algebra.dim() == 6);
    CHECK(j.partials.size() == 2);
    CHECK(j.eval == unit_vector(6, 0));
    CHECK(jet_invariants_hold(j));
    CHECK(jet_invariants_hold(jet_algebra(1, 5)));
    CHECK(jet_invariants_hold(jet_algebra(3, 2)));
    CHECK(j.index_of(mi({0, 0})) == 0);
    CHECK(j.monomials[j.index_of(mi({1, 1}))] == mi({1, 1}));
    CHECK_THROWS_AS(static_cast<void>(j.index_of(mi({3, 0}))), InputError);
    // d/dx (x y) = y
    const std::size_t xy = j.index_of(mi({1, 1}));
    const std::size_t y = j.index_of(mi({0, 1}));
    CHECK(j.partials[0] * unit_vector(6, xy) == unit_vector(6, y));
}

TEST_CASE("sections of center and commutator")
{
    const auto a = section_center_check(two_dim(), truncated_poly(1, 3));
    CHECK(a.passed());
    CHECK(a.get("dim_center_sections") == 0);
    const auto b = section_commutator_check(sl2(), truncated_poly(2, 2));
    CHECK(b.passed());
    CHECK(b.get("dim_commutator_sections") == 9);
    const auto c = section_commutator_check(two_dim(), point_functions(3));
    CHECK(c.passed());
    CHECK(c.get("dim_commutator_sections") == 3);
    const auto g = section_center_check(classical(ClassicalKind::gl, 2), point_functions(2));
    CHECK(g.passed());
    CHECK(g.get("dim_center_sections") == 2);
    CHECK_THROWS_AS(static_cast<void>(a.get("missing")), InputError);
}

TEST_CASE("x-derivations and the symbol map")
{
    const auto s1 = symbol_check(sl2(), 1);
    CHECK(s1.passed());
    CHECK(s1.get("dim_x_derivations") == 4);
    CHECK(s1.get("kernel_dim") == 3);
    CHECK(s1.get("image_dim") == 1);
    const auto s2 = symbol_check(sl2(), 2);
    CHECK(s2.passed());
    CHECK(s2.get("dim_x_derivations") == 5);
    const auto e = symbol_check(two_dim(), 3);
    CHECK(e.passed());
    CHECK(e.get("dim_x_derivations") == 2 + 3 * 1);

    const XDerivationSpace xs = x_derivations(sl2(), 1);
    CHECK(xs.basis.size() == 4);
    for (const auto& x : xs.basis) {
        CHECK(x.s.size() == 1);
    }
}

TEST_CASE("derivations of current algebras")
{
    const auto r = current_der_decomposition(sl2(), truncated_poly(1, 3));
    CHECK(r.passed());
    CHECK(r.get("dim_der_sections") == 3 * 3 + 1 * 2);
    CHECK(r.get("dim_der_a") == 2);
    const auto p = current_der_decomposition(sl2(), point_functions(2));
    CHECK(p.passed());
    CHECK(p.get("dim_der_sections") == 6);
    CHECK(current_der_decomposition(two_dim(), truncated_poly(2, 2)).passed());
}

TEST_CASE("centroid, indecomposability and S-part of sections")
{
    const auto c = centroid_of_sections_check(sl2(), truncated_poly(1, 4));
    CHECK(c.passed());
    CHECK(c.get("dim_centroid_sections") == 4);

    const auto i = indecomposability_of_sections_check(sl2(), point_functions(3));
    CHECK(i.passed());
    CHECK(i.get("ideals") == 3);
    CHECK(i.get("local") == 0);
    const auto l = indecomposability_of_sections_check(sl2(), truncated_poly(1, 3));
    CHECK(l.passed());
    CHECK(l.get("local") == 1);
    CHECK(l.get("ideals") == 1);

    const auto s = s_part_of_sections_check(sl2(), truncated_poly(1, 3));
    CHECK(s.passed());
    CHECK(s.get("dim_s_sections") == 1);
    CHECK(s.get("dim_n_sections") == 2);
    CHECK(s_part_of_sections_check(sl2(), gaussian_rationals()).passed());
    CHECK_THROWS_AS(static_cast<void>(s_part_of_sections_check(LieAlgebra::abelian(1), point_functions(2))), PreconditionError);
}

TEST_CASE("multinomial identity")
{
    CHECK(multinomial_sum(mi({0, 0})) == Rational(1));
    CHECK(multinomial_sum(mi({1})) == Rational(0));
    CHECK(multinomial_sum(mi({2, 1, 3})) == Rational(0));
    for (const auto& a : graded_monomials(3, 5)) {
        CHECK(multinomial_sum(a) == Rational(a.is_zero() ? 1 : 0));
    }
}

TEST_CASE("Leibniz expansion agrees with direct differentiation")
{
    const JetAlgebra jet = jet_algebra(2, 4);
    const std::size_t d = jet.algebra.dim();
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        MatrixJet t(d, Matrix(2, 2));
        VectorJet f(d, Vector(2));
        // Coefficients only up to degree 1 so the product stays below the truncation.
        for (std::size_t i = 0; i < d; ++i) {
            if (jet.monomials[i].order() > 1) {
                continue;
            }
            for (std::size_t r = 0; r < 2; ++r) {
                f[i][r] = dist(rng);
                for (std::size_t c = 0; c < 2; ++c) {
                    t[i](r, c) = dist(rng);
                }
            }
        }
        for (const auto& alpha : graded_monomials(2, 3)) {
            CHECK_NOTHROW(leibniz_expand(alpha, t, f, jet));
        }
    }
    VectorJet g(d, Vector(1));
    g[jet.index_of(mi({1, 0}))] = Vector{1};
    const VectorJet dg = jet_derivative(jet, mi({1, 0}), g);
    CHECK(dg[0] == Vector{1});
    CHECK(is_zero(dg[jet.index_of(mi({1, 0}))]));
}

TEST_CASE("Leibniz rejects products that overflow the truncation")
{
    const JetAlgebra jet = jet_algebra(1, 3);
    MatrixJet t(3, Matrix(1, 1));
    VectorJet f(3, Vector(1));
    t[2](0, 0) = Rational(1);
    f[2][0] = Rational(1);
    CHECK_THROWS_AS(static_cast<void>(leibniz_expand(mi({1}), t, f, jet)), InputError);
}

TEST_CASE("jet reparametrization automorphisms")
{
    const JetAlgebra jet = jet_algebra(1, 4);
    const Vector sq{0, 0, 1, 0};
    const JetAutomorphism a = jet_reparametrization_automorphism(sl2(), jet, sq);
    CHECK(a.coefficient_map == substitution_oracle(sq, 4));
    CHECK(a.bracket_preserving);
    CHECK(a.invertible);
    CHECK(a.triangular);
    CHECK(a.unipotent);

    // n = t on Q[t]/(t^2): t -> 2t.
    const JetAlgebra two = jet_algebra(1, 2);
    const JetAutomorphism b = jet_reparametrization_automorphism(sl2(), two, Vector{0, 1});
    CHECK(b.coefficient_map == (Matrix{{1, 0}, {0, 2}}));
    CHECK(b.invertible);
    CHECK_FALSE(b.unipotent);
    CHECK(b.mu * tensor(unit_vector(3, 0), unit_vector(2, 1)) == tensor(unit_vector(3, 0), Vector{0, 2}));

    CHECK_THROWS_AS(static_cast<void>(jet_reparametrization_automorphism(sl2(), two, Vector{1, 0})), PreconditionError);
    CHECK_THROWS_AS(static_cast<void>(jet_reparametrization_automorphism(sl2(), two, Vector{0, 1, 0})), InputError);
    CHECK_THROWS_AS(static_cast<void>(jet_reparametrization_automorphism(sl2(), jet_algebra(2, 2), Vector{0, 0, 0})), InputError);
}

TEST_CASE("property: reparametrization matches substitution for random shifts")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (unsigned order = 1; order <= 6; ++order) {
        const JetAlgebra jet = jet_algebra(1, order);
        for (int trial = 0; trial < 4; ++trial) {
            Vector n(order);
            for (std::size_t i = 1; i < order; ++i) {
                n[i] = Rational(dist(rng), 1 + trial);
            }
            const JetAutomorphism a = jet_reparametrization_automorphism(two_dim(), jet, n);
            CHECK(a.coefficient_map == substitution_oracle(n, order));
            CHECK(a.bracket_preserving);
            CHECK(a.triangular);
            CHECK(a.unipotent == (order < 2 || n[1].is_zero()));
        }
    }
}

TEST_CASE("worked Leibniz and section examples")
{
    // d/dt (t . t v) = 2 t v in Q[t]/(t^3).
    const JetAlgebra j3 = jet_algebra(1, 3);
    MatrixJet t(3, Matrix(2, 2));
    t[1] = Matrix::identity(2);
    VectorJet f(3, Vector(2));
    f[1] = Vector{1, -1};
    const VectorJet d1 = leibniz_expand(mi({1}), t, f, j3);
    CHECK(d1[1] == Vector{2, -2});
    CHECK(is_zero(d1[0]));
    CHECK(is_zero(d1[2]));

    // d^2/dt^2 (t^2 v) = 2 v in Q[t]/(t^4).
    const JetAlgebra j4 = jet_algebra(1, 4);
    MatrixJet t4(4, Matrix(2, 2));
    t4[1] = Matrix::identity(2);
    VectorJet f4(4, Vector(2));
    f4[1] = Vector{1, -1};
    const VectorJet d2 = leibniz_expand(mi({2}), t4, f4, j4);
    CHECK(d2[0] == Vector{2, -2});
    CHECK(leibniz_expand(mi({0}), t4, f4, j4)[2] == Vector{1, -1});

    CHECK(s_part_of_sections_check(sl2(), point_functions(3)).get("dim_s_sections") == 3);
    CHECK(s_part_of_sections_check(sl2(), point_functions(1)).get("dim_s_sections") == 1);
    // Cent(two_dim) is the scalars, so the sections centroid has dim 1 * 2.
    CHECK(centroid_of_sections_check(two_dim(), point_functions(2)).get("dim_centroid_sections") == 2);
    CHECK(indecomposability_of_sections_check(two_dim(), truncated_poly(1, 2)).get("ideals") == 1);

    const JetAutomorphism id = jet_reparametrization_automorphism(sl2(), j3, Vector{0, 0, 0});
    CHECK(id.mu == Matrix::identity(9));
}

TEST_CASE("degenerate jet directions and derivation counts")
{
    const auto s0 = symbol_check(sl2(), 0);
    CHECK(s0.passed());
    CHECK(s0.get("image_dim") == 0);
    CHECK(s0.get("kernel_dim") == 3);
    CHECK(symbol_check(sl2(), 2).get("image_dim") == 2);
    CHECK(current_der_decomposition(sl2(), truncated_poly(1, 2)).get("dim_der_sections") == 7);
    CHECK(current_der_decomposition(sl2(), point_functions(1)).get("dim_der_sections") == 3);
    CHECK(current_der_decomposition(sl2(), point_functions(2)).get("dim_der_a") == 0);
}
