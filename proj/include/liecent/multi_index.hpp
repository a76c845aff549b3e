#pragma once

#include <string>
#include <vector>

#include "liecent/rational.hpp"

namespace liecent {

struct MultiIndex {
    std::vector<unsigned> components;

    [[nodiscard]] std::size_t size() const { return components.size(); }
    /// |alpha|
    [[nodiscard]] unsigned order() const;
    /// alpha! = prod alpha_i!
    [[nodiscard]] Rational factorial() const;
    [[nodiscard]] bool is_zero() const { return order() == 0; }
    /// gamma <= alpha componentwise
    [[nodiscard]] bool dominated_by(const MultiIndex& alpha) const;
    [[nodiscard]] std::string monomial_name(const std::vector<std::string>& vars) const;

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
    /// Componentwise difference; requires b <= a.
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// All gamma <= alpha, in lexicographic order.
std::vector<MultiIndex> dominated(const MultiIndex& alpha);
/// Multi-indices in m variables of total degree < order, by degree and then
/// lexicographically descending (x1 before x2).
std::vector<MultiIndex> graded_monomials(std::size_t vars, unsigned order);
/// prod binomial(alpha_i, gamma_i)
Rational binomial(const MultiIndex& alpha, const MultiIndex& gamma);

} // namespace liecent
