#include <random>

#include "doctest.h"
#include "liecent/constructions.hpp"
#include "liecent/errors.hpp"
#include "liecent/lie_algebra.hpp"
#include "liecent/linalg.hpp"

using namespace liecent;

namespace {

LieAlgebra sl2() { return classical(ClassicalKind::sl, 2); }
LieAlgebra two_dim() { return example_algebra(ExampleAlgebra::two_dim); }

Vector random_vector(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> dist(-4, 4);
    Vector v(n);
    for (auto& x : v) {
        x = dist(rng);
    }
    return v;
}

std::vector<LieAlgebra> zoo()
{
    return {sl2(),
            classical(ClassicalKind::sl, 3),
            classical(ClassicalKind::gl, 2),
            classical(ClassicalKind::so, 3),
            classical(ClassicalKind::so, 4),
            classical(ClassicalKind::sp, 4),
            classical(ClassicalKind::u, 2),
            classical(ClassicalKind::su, 2),
            two_dim(),
            LieAlgebra::abelian(2),
            direct_sum({sl2(), two_dim()}),
            current_algebra(sl2(), truncated_poly(1, 3)),
            current_algebra(two_dim(), point_functions(2))};
}

} // namespace

TEST_CASE("build validates the table")
{
    const LieAlgebra g = two_dim();
    CHECK(g.dim() == 2);
    CHECK(g.bracket(0, 1) == Vector{1, 0});
    CHECK(g.bracket(1, 0) == Vector{-1, 0});

    const auto bad = [] {
        return LieAlgebra::build(3, {}, {{0, 1, {0, 0, 1}}, {1, 2, {0, 1, 0}}});
    };
    CHECK_THROWS_AS(static_cast<void>(bad()), ValidationError);
    try {
        bad();
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("(0, 1, 2)") != std::string::npos);
        CHECK(msg.find("defect") != std::string::npos);
    }
    CHECK_THROWS_AS(static_cast<void>(LieAlgebra::build(2, {}, {{1, 0, {1, 0}}})), InputError);
    CHECK_THROWS_AS(static_cast<void>(LieAlgebra::build(2, {}, {{0, 1, {1}}})), InputError);
    CHECK_THROWS_AS(static_cast<void>(LieAlgebra::build(2, {}, {{0, 1, {1, 0}}, {0, 1, {1, 0}}})), InputError);
    CHECK_THROWS_AS(static_cast<void>(LieAlgebra::build(2, {"a"}, {})), InputError);
}

TEST_CASE("the verbatim five-dimensional table is rejected")
{
    const ExampleTable t = example_table(ExampleAlgebra::five_dim);
    CHECK(t.dim == 5);
    CHECK(t.table.size() == 5);
    // [y1,[y2,y3]] + [y2,[y3,y1]] + [y3,[y1,y2]] = y3 - y2 by hand.
    try {
        example_algebra(ExampleAlgebra::five_dim);
        FAIL("expected a Jacobi failure");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("(y1, y2, y3)") != std::string::npos);
        CHECK(msg.find("(0, -1, 1, 0, 0)") != std::string::npos);
    }
}

TEST_CASE("bracket and ad")
{
    const LieAlgebra g = sl2();
    CHECK(g.basis_names() == std::vector<std::string>{"e", "f", "h"});
    CHECK(g.bracket(unit_vector(3, 0), unit_vector(3, 1)) == unit_vector(3, 2));
    CHECK(is_zero(g.bracket(Vector{1, 2, 3}, Vector{1, 2, 3})));
    CHECK_THROWS_AS(static_cast<void>(g.bracket(Vector{1, 2}, Vector{1, 2, 3})), InputError);
    CHECK(two_dim().ad(0) == (Matrix{{0, 1}, {0, 0}}));
    CHECK(g.ad(zero_vector(3)).is_zero());
    CHECK(LieAlgebra::abelian(3).ad(Vector{1, 2, 3}).is_zero());
}

TEST_CASE("center and commutator")
{
    CHECK(center(LieAlgebra::abelian(2)).is_full());
    CHECK(center(two_dim()).is_zero());
    CHECK(commutator(LieAlgebra::abelian(2)).is_zero());
    CHECK(commutator(two_dim()) == Subspace::span(2, {{1, 0}}));
    CHECK(commutator(sl2()).is_full());
    const LieAlgebra gl2 = classical(ClassicalKind::gl, 2);
    CHECK(center(gl2).dim() == 1);
    CHECK(center(gl2).contains(Matrix::identity(2).flatten()));
}

TEST_CASE("series")
{
    const auto ab = series(LieAlgebra::abelian(2), SeriesKind::derived);
    REQUIRE(ab.size() == 2);
    CHECK(ab[1].is_zero());
    CHECK(series(LieAlgebra::abelian(2), SeriesKind::lower_central).back().is_zero());

    const auto d = series(two_dim(), SeriesKind::derived);
    REQUIRE(d.size() == 3);
    CHECK(d[1] == Subspace::span(2, {{1, 0}}));
    CHECK(d[2].is_zero());
    const auto l = series(two_dim(), SeriesKind::lower_central);
    REQUIRE(l.size() == 2);
    CHECK(l.back() == Subspace::span(2, {{1, 0}}));
}

TEST_CASE("Killing form")
{
    CHECK(killing_form(LieAlgebra::abelian(3)).is_zero());
    const Matrix k = killing_form(sl2());
    CHECK(k(2, 2) == Rational(8));
    CHECK(k(0, 1) == Rational(4));
    CHECK(k(0, 0) == Rational(0));
    CHECK(k == k.transpose());
    const Matrix k2 = killing_form(two_dim());
    CHECK(k2 == (Matrix{{0, 0}, {0, 1}}));
}

TEST_CASE("structure flags")
{
    const auto s = flags(sl2());
    CHECK(s.semisimple);
    CHECK(s.simple);
    CHECK(s.perfect);
    CHECK(s.centerfree);
    const auto gl = flags(classical(ClassicalKind::gl, 2));
    CHECK(gl.reductive);
    CHECK_FALSE(gl.semisimple);
    const auto t = flags(two_dim());
    CHECK(t.centerfree);
    CHECK_FALSE(t.perfect);
    CHECK_FALSE(t.reductive);
    CHECK(t.solvable);
    CHECK_FALSE(t.nilpotent);
    const auto ab = flags(LieAlgebra::abelian(2));
    CHECK(ab.abelian);
    CHECK(ab.nilpotent);
    CHECK(ab.reductive);
    CHECK_FALSE(ab.simple);
    const auto ss = flags(direct_sum({sl2(), sl2()}));
    CHECK(ss.semisimple);
    CHECK_FALSE(ss.simple);
    // so(4) = sl2 + sl2 over Q(i)... but over Q it splits as two so(3)-forms.
    CHECK_FALSE(flags(classical(ClassicalKind::so, 4)).simple);
}

TEST_CASE("quotient and restriction")
{
    const LieAlgebra g = two_dim();
    CHECK(quotient(g, Subspace::zero(2)) == g);
    const LieAlgebra q = quotient(g, Subspace::span(2, {{1, 0}}));
    CHECK(q.dim() == 1);
    CHECK(flags(q).abelian);
    CHECK_THROWS_AS(static_cast<void>(quotient(g, Subspace::span(2, {{0, 1}}))), PreconditionError);

    // gl2 / center is sl2-like: semisimple of dim 3.
    const LieAlgebra gl2 = classical(ClassicalKind::gl, 2);
    const LieAlgebra pgl = quotient(gl2, center(gl2));
    CHECK(pgl.dim() == 3);
    CHECK(is_semisimple(pgl));
    CHECK(restrict_to(gl2, commutator(gl2)).dim() == 3);
    CHECK_THROWS_AS(static_cast<void>(restrict_to(sl2(), Subspace::span(3, {{1, 0, 0}, {0, 1, 0}}))), PreconditionError);
}

TEST_CASE("classical dimensions")
{
    CHECK(classical(ClassicalKind::sl, 3).dim() == 8);
    CHECK(classical(ClassicalKind::gl, 3).dim() == 9);
    CHECK(classical(ClassicalKind::so, 3).dim() == 3);
    CHECK(classical(ClassicalKind::so, 5).dim() == 10);
    CHECK(classical(ClassicalKind::sp, 4).dim() == 10);
    CHECK(classical(ClassicalKind::u, 2).dim() == 4);
    CHECK(classical(ClassicalKind::su, 2).dim() == 3);
    CHECK(classical(ClassicalKind::gl, 1).dim() == 1);
    CHECK(flags(classical(ClassicalKind::gl, 1)).abelian);
    CHECK(flags(classical(ClassicalKind::su, 2)).simple);
    CHECK_THROWS_AS(static_cast<void>(classical(ClassicalKind::sp, 3)), InputError);
    CHECK_THROWS_AS(static_cast<void>(classical(ClassicalKind::sl, 0)), InputError);
}

TEST_CASE("direct sums and current algebras")
{
    CHECK(direct_sum({sl2()}) == sl2());
    const LieAlgebra s = direct_sum({sl2(), sl2()});
    CHECK(s.dim() == 6);
    CHECK(is_zero(s.bracket(0, 3)));
    CHECK_THROWS_AS(static_cast<void>(direct_sum({})), InputError);

    const LieAlgebra c = current_algebra(sl2(), truncated_poly(1, 3));
    CHECK(c.dim() == 9);
    // (e (x) t) . (f (x) t) = h (x) t^2, with index = lie * 3 + coefficient.
    CHECK(c.bracket(0 * 3 + 1, 1 * 3 + 1) == unit_vector(9, 2 * 3 + 2));
    const LieAlgebra one = current_algebra(sl2(), point_functions(1));
    CHECK(one.structure() == sl2().structure());
    CHECK(flags(c).perfect);
    CHECK(flags(current_algebra(two_dim(), truncated_poly(1, 2))).centerfree);
}

TEST_CASE("basis permutation preserves the algebra")
{
    const LieAlgebra g = direct_sum({sl2(), two_dim()});
    const LieAlgebra p = permute_basis(g, {4, 0, 3, 1, 2});
    CHECK(p.basis_names()[0] == g.basis_names()[4]);
    CHECK(flags(p).centerfree == flags(g).centerfree);
    CHECK(derivations_of(p.structure(), false).size() == derivations_of(g.structure(), false).size());
    CHECK_THROWS_AS(static_cast<void>(permute_basis(g, {0, 0, 1, 2, 3})), InputError);
}

TEST_CASE("property: ad is a representation and the center is killed")
{
    std::mt19937 rng(4242);
    for (const auto& g : zoo()) {
        const std::size_t n = g.dim();
        for (int trial = 0; trial < 5; ++trial) {
            const Vector x = random_vector(rng, n);
            const Vector y = random_vector(rng, n);
            CHECK(g.ad(g.bracket(x, y)) == commutator(g.ad(x), g.ad(y)));
            const Vector z = random_vector(rng, n);
            // Jacobi on random elements.
            Vector j = g.bracket(x, g.bracket(y, z));
            const Vector j2 = g.bracket(y, g.bracket(z, x));
            const Vector j3 = g.bracket(z, g.bracket(x, y));
            for (std::size_t k = 0; k < n; ++k) {
                j[k] += j2[k] + j3[k];
            }
            CHECK(is_zero(j));
        }
        const Subspace z = center(g);
        CHECK(bracket_span(g, Subspace::full(n), z).is_zero());
        const auto derived = series(g, SeriesKind::derived);
        const auto lower = series(g, SeriesKind::lower_central);
        for (std::size_t i = 0; i < std::min(derived.size(), lower.size()); ++i) {
            CHECK(lower[i].contains(derived[i]));
        }
        const auto f = flags(g);
        if (f.semisimple) {
            CHECK(z.is_zero());
            CHECK(f.perfect);
        }
        // Invariance of the Killing form on basis triples.
        const Matrix k = killing_form(g);
        for (std::size_t a = 0; a < n && n <= 10; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    const Vector ab = g.bracket(a, b);
                    const Vector bc = g.bracket(b, c);
                    Rational lhs;
                    Rational rhs;
                    for (std::size_t i = 0; i < n; ++i) {
                        lhs += ab[i] * k(i, c);
                        rhs += k(a, i) * bc[i];
                    }
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("a semidirect product table passes validation")
{
    // e1 acts on the abelian span{e2, e3} by swapping; the cyclic Jacobi sum on (e1, e2, e3) is
    // 0 + [e2, -e2] + [e3, e3] = 0.
    const LieAlgebra g = LieAlgebra::build(3, {}, {{0, 1, {0, 0, 1}}, {0, 2, {0, 1, 0}}});
    CHECK(commutator(g) == Subspace::span(3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(flags(g).solvable);
    CHECK(center(g).is_zero());
}

TEST_CASE("Casimir operator")
{
    CHECK(casimir_adjoint(sl2()) == Matrix::identity(3));
    CHECK(casimir_adjoint(classical(ClassicalKind::so, 3)) == Matrix::identity(3));
    CHECK(casimir_adjoint(classical(ClassicalKind::sl, 3)) == Matrix::identity(8));
    CHECK_THROWS_AS(static_cast<void>(casimir_adjoint(LieAlgebra::abelian(2))), PreconditionError);
    CHECK_THROWS_AS(static_cast<void>(casimir_adjoint(two_dim())), PreconditionError);

    // f_a (x (x) b) = x (x) ab on sl2 (x) Q[t]/(t^2).
    const CommutativeAlgebra a = truncated_poly(1, 2);
    const Matrix f = casimir_coefficient_action(sl2(), a, Vector{0, 1});
    CHECK(f * tensor(unit_vector(3, 0), Vector{1, 0}) == tensor(unit_vector(3, 0), Vector{0, 1}));
    CHECK(is_zero(f * tensor(unit_vector(3, 2), Vector{0, 1})));
    CHECK(f == coefficient_multiplication(sl2(), a, Vector{0, 1}));
}

TEST_CASE("coefficient algebras")
{
    const CommutativeAlgebra t3 = truncated_poly(1, 3);
    CHECK(t3.dim() == 3);
    CHECK(t3.product(Vector{0, 1, 0}, Vector{0, 1, 0}) == Vector{0, 0, 1});
    CHECK(is_zero(t3.product(Vector{0, 1, 0}, Vector{0, 0, 1})));
    CHECK(t3.unit() == Vector{1, 0, 0});
    const CommutativeAlgebra t22 = truncated_poly(2, 2);
    CHECK(t22.dim() == 3);
    CHECK(is_zero(t22.product(Vector{0, 1, 0}, Vector{0, 0, 1})));
    const CommutativeAlgebra p2 = point_functions(2);
    CHECK(p2.product(Vector{1, 0}, Vector{1, 0}) == Vector{1, 0});
    CHECK(is_zero(p2.product(Vector{1, 0}, Vector{0, 1})));
    CHECK(p2.unit() == Vector{1, 1});
    const CommutativeAlgebra qi = gaussian_rationals();
    CHECK(qi.product(Vector{0, 1}, Vector{0, 1}) == Vector{-1, 0});
    CHECK_THROWS_AS(static_cast<void>(point_functions(0)), InputError);
}

TEST_CASE("sums keep centers")
{
    const LieAlgebra s = direct_sum({two_dim(), LieAlgebra::abelian(1), sl2()});
    CHECK(s.dim() == 6);
    CHECK(center(s).dim() == 1);
    CHECK(commutator(s).dim() == 4);
}
