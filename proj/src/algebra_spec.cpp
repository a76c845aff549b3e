#include "liecent/algebra_spec.hpp"

#include <cctype>
#include <vector>

#include "liecent/json_io.hpp"
#include "liecent/sections.hpp"

namespace liecent {

SpecError::SpecError(const std::string& message, std::size_t position)
    : InputError("parse error at position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedAlgebra top()
    {
        std::optional<ParsedAlgebra::Current> current;
        LieAlgebra g = lie(&current);
        end();
        return {std::move(g), std::move(current)};
    }

    ParsedCoefficients top_coefficients()
    {
        ParsedCoefficients a = coefficients();
        end();
        return a;
    }

private:
    void end()
    {
        if (pos_ != text_.size()) {
            fail("unexpected trailing input '" + std::string(text_.substr(pos_)) + "'");
        }
    }

    [[noreturn]] void fail(const std::string& message) const { throw SpecError(message, pos_); }

    bool accept(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token)
    {
        if (!accept(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }

    std::string word()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t integer()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a non-negative integer");
        }
        if (pos_ - start > 6) {
            pos_ = start;
            fail("integer too large");
        }
        return std::stoul(std::string(text_.substr(start, pos_ - start)));
    }

    template <typename F>
    auto guarded(std::size_t at, F&& build)
    {
        try {
            return build();
        } catch (const SpecError&) {
            throw;
        } catch (const InputError& e) {
            throw SpecError(e.what(), at);
        }
    }

    LieAlgebra lie(std::optional<ParsedAlgebra::Current>* current = nullptr)
    {
        const std::size_t start = pos_;
        if (accept("@")) {
            const std::size_t path_start = pos_;
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '+') {
                ++pos_;
            }
            if (pos_ == path_start) {
                fail("expected a file path after '@'");
            }
            const std::string path(text_.substr(path_start, pos_ - path_start));
            try {
                return algebra_from_file(path);
            } catch (const JsonFormatError& e) {
                throw SpecError(e.what(), path_start);
            }
        }
        const std::string name = word();
        if (name.empty()) {
            fail("expected an algebra builder");
        }
        expect(":");
        if (name == "cur") {
            LieAlgebra k = lie();
            expect(",");
            ParsedCoefficients a = coefficients();
            LieAlgebra g = current_algebra(k, a.algebra);
            if (current != nullptr) {
                *current = ParsedAlgebra::Current{std::move(k), std::move(a)};
            }
            return g;
        }
        if (name == "sum") {
            std::vector<LieAlgebra> parts{lie()};
            while (accept("+")) {
                parts.push_back(lie());
            }
            if (parts.size() < 2) {
                fail("sum needs at least two summands separated by '+'");
            }
            return direct_sum(parts);
        }
        if (name == "ex") {
            if (accept("2dim")) {
                return example_algebra(ExampleAlgebra::two_dim);
            }
            if (accept("5dim")) {
                return example_algebra(ExampleAlgebra::five_dim);
            }
            fail("expected '2dim' or '5dim'");
        }
        const std::size_t arg_pos = pos_;
        const std::size_t n = integer();
        if (name == "abelian") {
            return LieAlgebra::abelian(n);
        }
        static const std::vector<std::pair<std::string, ClassicalKind>> kinds = {
            {"sl", ClassicalKind::sl}, {"gl", ClassicalKind::gl}, {"so", ClassicalKind::so},
            {"sp", ClassicalKind::sp}, {"u", ClassicalKind::u},   {"su", ClassicalKind::su}};
        for (const auto& [label, kind] : kinds) {
            if (label == name) {
                return guarded(arg_pos, [&] { return classical(kind, n); });
            }
        }
        pos_ = start;
        fail("unknown builder '" + name + "'");
    }

    ParsedCoefficients coefficients()
    {
        const std::size_t start = pos_;
        const std::string name = word();
        if (name == "gauss") {
            return {gaussian_rationals(), std::nullopt};
        }
        if (name.empty()) {
            fail("expected a coefficient algebra");
        }
        expect(":");
        const std::size_t arg_pos = pos_;
        if (name == "points") {
            const std::size_t k = integer();
            return guarded(arg_pos, [&] { return ParsedCoefficients{point_functions(k), std::nullopt}; });
        }
        if (name == "jet") {
            const std::size_t m = integer();
            expect(",");
            const std::size_t order_pos = pos_;
            const auto order = static_cast<unsigned>(integer());
            if (order < 1) {
                pos_ = order_pos;
                fail("jet order must be at least 1");
            }
            return guarded(arg_pos, [&] {
                return ParsedCoefficients{jet_algebra(m, order).algebra, JetShape{m, order}};
            });
        }
        pos_ = start;
        fail("unknown coefficient algebra '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ParsedAlgebra parse_algebra(std::string_view spec) { return Parser(spec).top(); }

ParsedCoefficients parse_coefficients(std::string_view spec) { return Parser(spec).top_coefficients(); }

} // namespace liecent
