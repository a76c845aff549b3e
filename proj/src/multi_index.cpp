#include "liecent/multi_index.hpp"

#include <functional>

#include "liecent/errors.hpp"

namespace liecent {

unsigned MultiIndex::order() const
{
    unsigned s = 0;
    for (auto c : components) {
        s += c;
    }
    return s;
}

Rational MultiIndex::factorial() const
{
    Rational f(1);
    for (auto c : components) {
        f *= liecent::factorial(c);
    }
    return f;
}

bool MultiIndex::dominated_by(const MultiIndex& alpha) const
{
    if (alpha.size() != size()) {
        throw InputError("multi-index length mismatch");
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (components[i] > alpha.components[i]) {
            return false;
        }
    }
    return true;
}

std::string MultiIndex::monomial_name(const std::vector<std::string>& vars) const
{
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (components[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += vars.at(i);
        if (components[i] > 1) {
            out += "^" + std::to_string(components[i]);
        }
    }
    return out.empty() ? "1" : out;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
{
    if (a.size() != b.size()) {
        throw InputError("multi-index length mismatch");
    }
    MultiIndex r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.components[i] += b.components[i];
    }
    return r;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b)
{
    if (!b.dominated_by(a)) {
        throw InputError("multi-index difference would be negative");
    }
    MultiIndex r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        r.components[i] -= b.components[i];
    }
    return r;
}

std::vector<MultiIndex> dominated(const MultiIndex& alpha)
{
    std::vector<MultiIndex> out;
    MultiIndex g{std::vector<unsigned>(alpha.size(), 0)};
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == alpha.size()) {
            out.push_back(g);
            return;
        }
        for (unsigned v = 0; v <= alpha.components[i]; ++v) {
            g.components[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<MultiIndex> graded_monomials(std::size_t vars, unsigned order)
{
    std::vector<MultiIndex> out;
    MultiIndex cur{std::vector<unsigned>(vars, 0)};
    // Distribute `left` over variables i.. with x_i taking as much as possible first.
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 >= vars) {
            if (vars > 0) {
                cur.components[vars - 1] = left;
            }
            if (vars > 0 || left == 0) {
                out.push_back(cur);
            }
            return;
        }
        for (unsigned v = left + 1; v-- > 0;) {
            cur.components[i] = v;
            rec(i + 1, left - v);
        }
    };
    for (unsigned d = 0; d < order; ++d) {
        rec(0, d);
    }
    return out;
}

Rational binomial(const MultiIndex& alpha, const MultiIndex& gamma)
{
    Rational b(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        b *= binomial(alpha.components[i], gamma.components[i]);
    }
    return b;
}

} // namespace liecent
