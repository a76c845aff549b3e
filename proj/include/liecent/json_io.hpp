#pragma once

#include <string>

#include "json.hpp"
#include "liecent/decomposition.hpp"
#include "liecent/endo.hpp"
#include "liecent/errors.hpp"
#include "liecent/lie_algebra.hpp"

namespace liecent {

using Json = nlohmann::ordered_json;

/// Malformed JSON text or a document that does not follow the algebra schema.
class JsonFormatError : public InputError {
public:
    using InputError::InputError;
};

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Subspace& s);
Json to_json(const StructureFlags& f);
Json to_json(const EndoSpace& e);
Json to_json(const DecompositionReport& r);

/// {"dim": n, "basis": [...], "brackets": [{"left": i, "right": j, "value": {"k": "c"}}]}
/// with i < j and value keys the 0-based index of the basis vector.
Json algebra_to_json(const LieAlgebra& g);
/// Inverse of algebra_to_json. Value keys may also be basis names. Schema problems
/// throw JsonFormatError; a table that is not a Lie algebra throws ValidationError.
LieAlgebra algebra_from_json(const Json& j);
LieAlgebra algebra_from_json_text(const std::string& text);
LieAlgebra algebra_from_file(const std::string& path);

} // namespace liecent
