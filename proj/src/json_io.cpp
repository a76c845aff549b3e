#include "liecent/json_io.hpp"

#include <fstream>
#include <sstream>

#include "liecent/errors.hpp"

namespace liecent {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Vector& v)
{
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(x.str());
    }
    return out;
}

Json to_json(const Matrix& m)
{
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out.push_back(to_json(m.row(r)));
    }
    return out;
}

Json to_json(const Subspace& s)
{
    Json out = Json::array();
    for (const auto& v : s.vectors()) {
        out.push_back(to_json(v));
    }
    return out;
}

Json to_json(const StructureFlags& f)
{
    return Json{{"abelian", f.abelian},     {"nilpotent", f.nilpotent},   {"solvable", f.solvable},
                {"perfect", f.perfect},     {"centerfree", f.centerfree}, {"semisimple", f.semisimple},
                {"reductive", f.reductive}, {"simple", f.simple}};
}

Json to_json(const EndoSpace& e)
{
    Json basis = Json::array();
    for (const auto& m : e.basis()) {
        basis.push_back(to_json(m));
    }
    return Json{{"kind", to_string(e.kind())}, {"dim", e.dim()}, {"basis", basis}};
}

Json to_json(const DecompositionReport& r)
{
    Json ideals = Json::array();
    for (const auto& s : r.ideals) {
        ideals.push_back(Json{{"dim", s.dim()}, {"basis", to_json(s)}});
    }
    return Json{{"ideals", ideals},
                {"status", to_string(r.status)},
                {"blocks", r.blocks},
                {"hom_dims", r.hom_dims},
                {"local_centroid_dims", r.local_centroid_dims},
                {"j_dims", r.j_dims},
                {"blocks_sum_to_centroid", r.blocks_sum_to_centroid},
                {"off_diagonal_matches_hom", r.off_diagonal_matches_hom},
                {"local_centroids_match", r.local_centroids_match},
                {"unique", r.unique}};
}

Json algebra_to_json(const LieAlgebra& g)
{
    Json brackets = Json::array();
    for (const auto& e : g.bracket_table()) {
        Json value = Json::object();
        for (std::size_t k = 0; k < e.value.size(); ++k) {
            if (!e.value[k].is_zero()) {
                value[std::to_string(k)] = e.value[k].str();
            }
        }
        brackets.push_back(Json{{"left", e.left}, {"right", e.right}, {"value", value}});
    }
    return Json{{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

namespace {

std::size_t read_index(const Json& j, const char* field, std::size_t entry)
{
    if (!j.contains(field) || !j[field].is_number_unsigned()) {
        throw JsonFormatError("bracket " + std::to_string(entry) + ": '" + field +
                              "' must be a non-negative integer");
    }
    return j[field].get<std::size_t>();
}

std::size_t resolve_key(const std::string& key, const std::vector<std::string>& names, std::size_t entry)
{
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == key) {
            return i;
        }
    }
    if (!key.empty() && key.find_first_not_of("0123456789") == std::string::npos) {
        const std::size_t k = std::stoul(key);
        if (k < names.size()) {
            return k;
        }
    }
    throw JsonFormatError("bracket " + std::to_string(entry) + ": value key '" + key +
                          "' is neither a basis name nor an index below dim");
}

} // namespace

LieAlgebra algebra_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw JsonFormatError("algebra document must be an object");
    }
    if (!j.contains("dim") || !j["dim"].is_number_unsigned()) {
        throw JsonFormatError("'dim' must be a non-negative integer");
    }
    const auto n = j["dim"].get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) {
            throw JsonFormatError("'basis' must be an array of strings");
        }
        for (const auto& b : j["basis"]) {
            if (!b.is_string()) {
                throw JsonFormatError("'basis' must be an array of strings");
            }
            names.push_back(b.get<std::string>());
        }
        if (names.size() != n) {
            throw JsonFormatError("'basis' has " + std::to_string(names.size()) + " names, dim is " +
                                  std::to_string(n));
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            names.push_back("e" + std::to_string(i + 1));
        }
    }
    std::vector<BracketEntry> table;
    if (j.contains("brackets")) {
        if (!j["brackets"].is_array()) {
            throw JsonFormatError("'brackets' must be an array");
        }
        std::size_t entry = 0;
        for (const auto& b : j["brackets"]) {
            if (!b.is_object()) {
                throw JsonFormatError("bracket " + std::to_string(entry) + " must be an object");
            }
            BracketEntry e{read_index(b, "left", entry), read_index(b, "right", entry), Vector(n)};
            if (!b.contains("value") || !b["value"].is_object()) {
                throw JsonFormatError("bracket " + std::to_string(entry) + ": 'value' must be an object");
            }
            for (const auto& [key, coeff] : b["value"].items()) {
                if (!coeff.is_string() && !coeff.is_number_integer()) {
                    throw JsonFormatError("bracket " + std::to_string(entry) +
                                          ": coefficients must be rational strings");
                }
                const std::string text = coeff.is_string() ? coeff.get<std::string>() : coeff.dump();
                try {
                    e.value[resolve_key(key, names, entry)] += Rational::parse(text);
                } catch (const JsonFormatError&) {
                    throw;
                } catch (const InputError& err) {
                    throw JsonFormatError("bracket " + std::to_string(entry) + ": " + err.what());
                }
            }
            table.push_back(std::move(e));
            ++entry;
        }
    }
    return LieAlgebra::build(n, std::move(names), table);
}

LieAlgebra algebra_from_json_text(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw JsonFormatError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

LieAlgebra algebra_from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw JsonFormatError("cannot read algebra file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json_text(buf.str());
}

} // namespace liecent
