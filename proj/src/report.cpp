#include "liecent/report.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "liecent/decomposition.hpp"
#include "liecent/linalg.hpp"

namespace liecent {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Context {
    const LieAlgebra& g;
    const std::optional<ParsedAlgebra::Current>& current;
};

using Analysis = std::function<void(const Context&, AnalysisResult&)>;

void expect(AnalysisResult& r, bool ok, const std::string& what)
{
    if (!ok) {
        r.failures.push_back(what);
    }
}

Json dims(const std::vector<Subspace>& terms)
{
    Json out = Json::array();
    for (const auto& s : terms) {
        out.push_back(s.dim());
    }
    return out;
}

bool is_derivation(const LieAlgebra& g, const Matrix& d)
{
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const Vector ei = unit_vector(g.dim(), i);
            const Vector ej = unit_vector(g.dim(), j);
            const Vector lhs = d * g.bracket(i, j);
            Vector rhs = g.bracket(d * ei, ej);
            const Vector other = g.bracket(ei, d * ej);
            for (std::size_t k = 0; k < rhs.size(); ++k) {
                rhs[k] += other[k];
            }
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

void analyze_flags(const Context& c, AnalysisResult& r)
{
    const StructureFlags f = flags(c.g);
    r.result["flags"] = to_json(f);
    r.result["center_dim"] = center(c.g).dim();
    r.result["commutator_dim"] = commutator(c.g).dim();
    r.result["lower_central_dims"] = dims(series(c.g, SeriesKind::lower_central));
    r.result["derived_dims"] = dims(series(c.g, SeriesKind::derived));
    expect(r, !f.semisimple || (f.perfect && f.centerfree), "semisimple but not perfect and centerfree");
    expect(r, !f.simple || f.semisimple, "simple but not semisimple");
    expect(r, !f.nilpotent || f.solvable, "nilpotent but not solvable");
    expect(r, !f.abelian || f.nilpotent, "abelian but not nilpotent");
    expect(r, !f.semisimple || f.reductive, "semisimple but not reductive");
}

void analyze_der(const Context& c, AnalysisResult& r)
{
    const EndoSpace der = derivations(c.g);
    const EndoSpace inner = inner_derivations(c.g);
    r.result["dim"] = der.dim();
    r.result["inner_dim"] = inner.dim();
    r.result["outer_dim"] = der.dim() - inner.dim();
    expect(r, der.span().contains(inner.span()), "inner derivations are not all derivations");
    for (const auto& d : der.basis()) {
        expect(r, is_derivation(c.g, d), "basis element fails the Leibniz rule");
    }
}

void analyze_inner(const Context& c, AnalysisResult& r)
{
    const EndoSpace inner = inner_derivations(c.g);
    const std::size_t z = center(c.g).dim();
    r.result["dim"] = inner.dim();
    r.result["center_dim"] = z;
    expect(r, inner.dim() + z == c.g.dim(), "dim ad(g) + dim z(g) differs from dim g");
}

void analyze_cent(const Context& c, AnalysisResult& r)
{
    const EndoSpace cent = centroid(c.g);
    const auto pair = noncommuting_pair(cent.basis());
    r.result["dim"] = cent.dim();
    r.result["abelian"] = !pair.has_value();
    r.result["basis"] = to_json(cent)["basis"];
    expect(r, cent.contains(Matrix::identity(c.g.dim())), "identity is not in the centroid");
    for (const auto& f : cent.basis()) {
        for (const auto& ad : c.g.ad_basis()) {
            expect(r, f * ad == ad * f, "centroid element does not commute with ad");
        }
    }
    if (pair) {
        return;
    }
    const EndoSpace der = derivations(c.g);
    const auto gg = commutator(c.g).vectors();
    bool comp = true;
    bool bracket = true;
    bool kills = true;
    for (const auto& f : cent.basis()) {
        for (const auto& d : der.basis()) {
            comp = comp && der.contains(f * d);
            bracket = bracket && cent.contains(commutator(f, d));
        }
        for (const auto& f2 : cent.basis()) {
            const Matrix br = commutator(f, f2);
            for (const auto& v : gg) {
                kills = kills && is_zero(br * v);
            }
        }
    }
    r.result["laws"] = Json{{"cent_der_in_der", comp}, {"bracket_cent_der_in_cent", bracket},
                            {"cent_cent_kills_commutator", kills}};
    expect(r, comp, "Cent o Der is not inside Der");
    expect(r, bracket, "[Cent, Der] is not inside Cent");
    expect(r, kills, "[Cent, Cent] does not vanish on [g, g]");
}

void analyze_jspace(const Context& c, AnalysisResult& r)
{
    const EndoSpace j = j_space(c.g);
    const std::size_t hom = hom_abelianization_to_center_dim(c.g);
    r.result["dim"] = j.dim();
    r.result["hom_dim"] = hom;
    expect(r, j.dim() == hom, "dim J(g) differs from dim Hom(g/[g,g], z(g))");
    const EndoSpace cent = centroid(c.g);
    expect(r, cent.span().contains(j.span()), "J(g) is not inside the centroid");
}

void analyze_split(const Context& c, AnalysisResult& r)
{
    const CentroidSplit s = split_centroid(c.g);
    const EndoSpace cent = centroid(c.g);
    r.result["centroid_dim"] = cent.dim();
    r.result["nilpotent_dim"] = s.nilpotent.dim();
    r.result["semisimple_dim"] = s.semisimple.dim();
    const Subspace sum = s.nilpotent.span() + s.semisimple.span();
    expect(r, s.nilpotent.dim() + s.semisimple.dim() == sum.dim(), "N and S intersect");
    expect(r, sum == cent.span(), "N + S differs from the centroid");
    for (const auto& n : s.nilpotent.basis()) {
        expect(r, n.is_nilpotent(), "N contains a non-nilpotent element");
    }
}

void analyze_decompose(const Context& c, AnalysisResult& r)
{
    const DecompositionReport d = indecompose(c.g);
    r.result = to_json(d);
    const auto& ps = d.idempotents.projections;
    const std::size_t n = c.g.dim();
    Matrix sum(n, n);
    bool orthogonal = true;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        sum += ps[i];
        for (std::size_t j = 0; j < ps.size(); ++j) {
            orthogonal = orthogonal && ps[i] * ps[j] == (i == j ? ps[i] : Matrix(n, n));
        }
    }
    expect(r, orthogonal, "idempotents are not orthogonal");
    expect(r, sum == Matrix::identity(n), "idempotents do not sum to the identity");
    expect(r, d.blocks_sum_to_centroid, "centroid blocks do not add up to the centroid");
    expect(r, d.off_diagonal_matches_hom, "off-diagonal blocks differ from the Hom spaces");
    expect(r, d.local_centroids_match, "diagonal blocks differ from the local centroids");
    std::size_t total = 0;
    for (const auto& s : d.ideals) {
        total += s.dim();
        expect(r, is_ideal(c.g, s), "a summand is not an ideal");
    }
    expect(r, total == n, "ideal dimensions do not add up to dim g");
}

void analyze_complex(const Context& c, AnalysisResult& r)
{
    const auto cs = complex_structure(c.g);
    r.result["exists"] = cs.has_value();
    r.result["j"] = cs ? to_json(cs->j) : Json(nullptr);
    r.result["source_min_poly"] = cs ? Json(cs->source_min_poly.str()) : Json(nullptr);
    if (cs) {
        const std::size_t n = c.g.dim();
        expect(r, cs->j * cs->j == -Matrix::identity(n), "J^2 differs from -1");
        expect(r, centroid(c.g).contains(cs->j), "J is not in the centroid");
    }
}

void analyze_casimir(const Context& c, AnalysisResult& r)
{
    const Matrix cas = casimir_adjoint(c.g);
    const bool identity = cas == Matrix::identity(c.g.dim());
    r.result["equals_identity"] = identity;
    expect(r, identity, "Casimir operator on the adjoint module is not the identity");
}

const ParsedAlgebra::Current& need_current(const Context& c, const std::string& name)
{
    if (!c.current) {
        throw PreconditionError(name + " needs an algebra of the form cur:<lie>,<alg>");
    }
    return *c.current;
}

const JetShape& need_jet(const ParsedAlgebra::Current& cur, const std::string& name)
{
    if (!cur.a.jet) {
        throw PreconditionError(name + " needs jet coefficients jet:m,N");
    }
    return *cur.a.jet;
}

void absorb(AnalysisResult& r, const CheckReport& check)
{
    r.result = check_to_json(check);
    r.result.erase("passed");
    r.result.erase("failures");
    for (const auto& f : check.failures()) {
        r.failures.push_back(f);
    }
}

CheckReport xder_check(const LieAlgebra& k, std::size_t m)
{
    CheckReport out("xder");
    const XDerivationSpace xs = x_derivations(k, m);
    const std::size_t der = derivations(k).dim();
    const std::size_t cent = centroid(k).dim();
    out.set("dim_x_derivations", static_cast<long long>(xs.deltas.dim()));
    out.set("dim_der", static_cast<long long>(der));
    out.set("dim_cent", static_cast<long long>(cent));
    out.set("m", static_cast<long long>(m));
    out.expect(xs.deltas.dim() == der + m * cent, "dim of x-derivations differs from dim Der + m dim Cent");
    return out;
}

Vector default_shift(const JetAlgebra& jet)
{
    Vector n(jet.monomials.size());
    if (jet.order > 2) {
        n[jet.index_of(MultiIndex{{2}})] = Rational(1);
    }
    return n;
}

CheckReport jetauto_check(const LieAlgebra& k, const JetAlgebra& jet, const Vector& n)
{
    const JetAutomorphism mu = jet_reparametrization_automorphism(k, jet, n);
    CheckReport out("jetauto");
    out.set("order", jet.order);
    out.set("bracket_preserving", mu.bracket_preserving);
    out.set("invertible", mu.invertible);
    out.set("triangular", mu.triangular);
    out.set("unipotent", mu.unipotent);
    // mu - 1 is nilpotent exactly when the shift has no linear term.
    const bool expect_unipotent = jet.order < 2 || n[jet.index_of(MultiIndex{{1}})].is_zero();
    out.expect(mu.bracket_preserving, "mu does not preserve the bracket");
    out.expect(mu.invertible, "mu is not invertible");
    out.expect(mu.triangular, "mu is not triangular in the graded basis");
    out.expect(mu.unipotent == expect_unipotent, "mu - 1 nilpotency differs from the shift's linear term");
    return out;
}

Analysis section_analysis(const std::string& check)
{
    return [check](const Context& c, AnalysisResult& r) {
        const auto& cur = need_current(c, r.name);
        const LieAlgebra& k = cur.k;
        const CommutativeAlgebra& a = cur.a.algebra;
        if (check == "center") {
            absorb(r, section_center_check(k, a));
        } else if (check == "commutator") {
            absorb(r, section_commutator_check(k, a));
        } else if (check == "xder") {
            absorb(r, xder_check(k, need_jet(cur, r.name).vars));
        } else if (check == "symbol") {
            absorb(r, symbol_check(k, need_jet(cur, r.name).vars));
        } else if (check == "derdecomp") {
            absorb(r, current_der_decomposition(k, a));
        } else if (check == "centroid") {
            absorb(r, centroid_of_sections_check(k, a));
        } else if (check == "indec") {
            absorb(r, indecomposability_of_sections_check(k, a));
        } else if (check == "spart") {
            absorb(r, s_part_of_sections_check(k, a));
        } else if (check == "jetauto") {
            const JetShape& shape = need_jet(cur, r.name);
            const JetAlgebra jet = jet_algebra(shape.vars, shape.order);
            absorb(r, jetauto_check(k, jet, default_shift(jet)));
        }
    };
}

const std::vector<std::pair<std::string, Analysis>>& registry()
{
    static const std::vector<std::pair<std::string, Analysis>> table = [] {
        std::vector<std::pair<std::string, Analysis>> t = {
            {"flags", analyze_flags},   {"der", analyze_der},         {"inner", analyze_inner},
            {"cent", analyze_cent},     {"jspace", analyze_jspace},   {"split", analyze_split},
            {"decompose", analyze_decompose}, {"complex", analyze_complex}, {"casimir", analyze_casimir},
        };
        for (const char* check :
             {"center", "commutator", "xder", "symbol", "derdecomp", "centroid", "indec", "spart", "jetauto"}) {
            t.emplace_back(std::string("sections:") + check, section_analysis(check));
        }
        return t;
    }();
    return table;
}

std::string join(const std::vector<std::string>& items, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? sep : "") + items[i];
    }
    return out;
}

std::string scalar_text(const Json& j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    return j.dump();
}

bool is_flat_array(const Json& j)
{
    if (!j.is_array()) {
        return false;
    }
    for (const auto& x : j) {
        if (x.is_structured()) {
            return false;
        }
    }
    return true;
}

std::string matrix_text(const Json& j)
{
    std::vector<std::string> rows;
    for (const auto& row : j) {
        std::vector<std::string> cells;
        for (const auto& x : row) {
            cells.push_back(scalar_text(x));
        }
        rows.push_back(join(cells, " "));
    }
    return "[" + join(rows, "; ") + "]";
}

bool is_matrix(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        return false;
    }
    for (const auto& row : j) {
        if (!is_flat_array(row)) {
            return false;
        }
    }
    return true;
}

void flatten_text(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten_text(v, key.empty() ? k : key + "." + k, rows);
        }
    } else if (is_flat_array(j)) {
        std::vector<std::string> cells;
        for (const auto& x : j) {
            cells.push_back(scalar_text(x));
        }
        rows.emplace_back(key, "[" + join(cells, ", ") + "]");
    } else if (is_matrix(j)) {
        rows.emplace_back(key, matrix_text(j));
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten_text(j[i], key + "[" + std::to_string(i) + "]", rows);
        }
    } else {
        rows.emplace_back(key, scalar_text(j));
    }
}

void table_text(std::ostringstream& os, const std::vector<std::pair<std::string, std::string>>& rows,
                const std::string& indent)
{
    std::size_t width = 0;
    for (const auto& [k, v] : rows) {
        width = std::max(width, k.size());
    }
    for (const auto& [k, v] : rows) {
        os << indent << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    }
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        out.push_back(item);
    }
    return out;
}

} // namespace

bool Report::ok() const
{
    for (const auto& r : results) {
        if (!r.ok()) {
            return false;
        }
    }
    return true;
}

const std::vector<std::string>& analysis_registry()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

void validate_analyses(const std::vector<std::string>& names)
{
    for (const auto& n : names) {
        bool known = false;
        for (const auto& r : analysis_registry()) {
            known = known || r == n;
        }
        if (!known) {
            throw UsageError("unknown analysis '" + n + "'; available: " + join(analysis_registry(), ", "));
        }
    }
}

Report run(const AnalysisRequest& request)
{
    validate_analyses(request.analyses);
    const auto start = Clock::now();
    Report report;
    report.request = request;
    const ParsedAlgebra parsed = parse_algebra(request.algebra_spec);
    const LieAlgebra& g = parsed.algebra;
    report.algebra = Json{{"spec", request.algebra_spec}, {"dim", g.dim()}, {"basis", g.basis_names()}};
    try {
        report.algebra["flags"] = to_json(flags(g));
    } catch (const std::exception& e) {
        report.algebra["flags"] = nullptr;
    }
    const Context ctx{g, parsed.current};
    for (const auto& name : request.analyses) {
        AnalysisResult r;
        r.name = name;
        for (const auto& [n, fn] : registry()) {
            if (n != name) {
                continue;
            }
            try {
                fn(ctx, r);
            } catch (const std::exception& e) {
                r.error = e.what();
            }
        }
        report.results.push_back(std::move(r));
    }
    report.timing_ms = elapsed_ms(start);
    return report;
}

Json report_to_json(const Report& report)
{
    Json analyses = Json::array();
    for (const auto& r : report.results) {
        Json entry{{"name", r.name}, {"ok", r.ok()}};
        if (r.error) {
            entry["error"] = *r.error;
        } else {
            entry["result"] = r.result;
            entry["failures"] = r.failures;
        }
        analyses.push_back(std::move(entry));
    }
    return Json{{"schema", report_schema},
                {"tool", "liecent"},
                {"version", tool_version},
                {"request", Json{{"algebra", report.request.algebra_spec}, {"analyses", report.request.analyses}}},
                {"algebra", report.algebra},
                {"analyses", analyses},
                {"ok", report.ok()},
                {"timing_ms", report.timing_ms}};
}

std::string emit(const Report& report, OutputFormat format)
{
    if (format == OutputFormat::json) {
        return report_to_json(report).dump(2) + "\n";
    }
    std::ostringstream os;
    std::vector<std::pair<std::string, std::string>> head;
    head.emplace_back("algebra", report.request.algebra_spec);
    head.emplace_back("dim", std::to_string(report.algebra["dim"].get<std::size_t>()));
    std::vector<std::string> names;
    for (const auto& b : report.algebra["basis"]) {
        names.push_back(b.get<std::string>());
    }
    head.emplace_back("basis", join(names, " "));
    if (report.algebra["flags"].is_object()) {
        std::vector<std::string> set;
        for (const auto& [k, v] : report.algebra["flags"].items()) {
            if (v.get<bool>()) {
                set.push_back(k);
            }
        }
        head.emplace_back("flags", set.empty() ? "-" : join(set, " "));
    }
    table_text(os, head, "");
    for (const auto& r : report.results) {
        os << '\n' << (r.ok() ? "[ok]   " : "[FAIL] ") << r.name << '\n';
        if (r.error) {
            os << "  error  " << *r.error << '\n';
            continue;
        }
        std::vector<std::pair<std::string, std::string>> rows;
        flatten_text(r.result, "", rows);
        table_text(os, rows, "  ");
        for (const auto& f : r.failures) {
            os << "  failed  " << f << '\n';
        }
    }
    os << "\nstatus     " << (report.ok() ? "ok" : "failed") << '\n';
    os << "timing_ms  " << report.timing_ms << '\n';
    return os.str();
}

Json check_to_json(const CheckReport& r)
{
    Json values = Json::object();
    for (const auto& [k, v] : r.values()) {
        values[k] = v;
    }
    return Json{{"check", r.check()}, {"passed", r.passed()}, {"values", values}, {"failures", r.failures()}};
}

const std::vector<std::string>& section_checks()
{
    static const std::vector<std::string> checks = {"center", "commutator", "xder",  "symbol",   "derdecomp",
                                                    "centroid", "indec",    "spart", "multinom", "jetauto"};
    return checks;
}

SectionsReport run_sections(const SectionsRequest& request)
{
    bool known = false;
    for (const auto& c : section_checks()) {
        known = known || c == request.check;
    }
    if (!known) {
        throw UsageError("unknown check '" + request.check + "'; available: " + join(section_checks(), ", "));
    }
    const auto need = [&request](const auto& field, const char* flag) -> const auto& {
        if (!field) {
            throw UsageError("check '" + request.check + "' needs " + flag);
        }
        return *field;
    };
    const auto start = Clock::now();
    const std::string& check = request.check;
    CheckReport result(check);
    if (check == "multinom") {
        std::vector<MultiIndex> alphas;
        if (request.alpha) {
            MultiIndex alpha;
            for (const auto& part : split_list(*request.alpha)) {
                if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 4) {
                    throw UsageError("--alpha must be a comma-separated list of non-negative integers");
                }
                alpha.components.push_back(static_cast<unsigned>(std::stoul(part)));
            }
            alphas.push_back(alpha);
        } else {
            alphas = graded_monomials(need(request.m, "--m"), 6);
        }
        long long mismatches = 0;
        for (const auto& alpha : alphas) {
            const Rational expected = alpha.is_zero() ? Rational(1) : Rational(0);
            if (multinomial_sum(alpha) != expected) {
                ++mismatches;
                result.expect(false, "identity fails at alpha = " + alpha.monomial_name({}));
            }
        }
        result.set("cases", static_cast<long long>(alphas.size()));
        result.set("mismatches", mismatches);
    } else if (check == "xder" || check == "symbol") {
        const LieAlgebra k = parse_algebra(need(request.k, "--k")).algebra;
        const std::size_t m = need(request.m, "--m");
        result = check == "xder" ? xder_check(k, m) : symbol_check(k, m);
    } else if (check == "jetauto") {
        const LieAlgebra k = parse_algebra(need(request.k, "--k")).algebra;
        const ParsedCoefficients a = parse_coefficients(need(request.a, "--A"));
        if (!a.jet || a.jet->vars != 1) {
            throw UsageError("check 'jetauto' needs --A of the form jet:1,N");
        }
        const JetAlgebra jet = jet_algebra(1, a.jet->order);
        Vector n = default_shift(jet);
        if (request.n) {
            n.clear();
            for (const auto& part : split_list(*request.n)) {
                n.push_back(Rational::parse(part));
            }
        }
        result = jetauto_check(k, jet, n);
    } else {
        const LieAlgebra k = parse_algebra(need(request.k, "--k")).algebra;
        const CommutativeAlgebra a = parse_coefficients(need(request.a, "--A")).algebra;
        if (check == "center") {
            result = section_center_check(k, a);
        } else if (check == "commutator") {
            result = section_commutator_check(k, a);
        } else if (check == "derdecomp") {
            result = current_der_decomposition(k, a);
        } else if (check == "centroid") {
            result = centroid_of_sections_check(k, a);
        } else if (check == "indec") {
            result = indecomposability_of_sections_check(k, a);
        } else {
            result = s_part_of_sections_check(k, a);
        }
    }
    return SectionsReport{request, result, elapsed_ms(start)};
}

Json sections_to_json(const SectionsReport& report)
{
    const SectionsRequest& q = report.request;
    Json request{{"check", q.check}};
    request["k"] = q.k ? Json(*q.k) : Json(nullptr);
    request["A"] = q.a ? Json(*q.a) : Json(nullptr);
    request["m"] = q.m ? Json(*q.m) : Json(nullptr);
    request["alpha"] = q.alpha ? Json(*q.alpha) : Json(nullptr);
    request["n"] = q.n ? Json(*q.n) : Json(nullptr);
    Json out{{"schema", report_schema}, {"tool", "liecent"}, {"version", tool_version}, {"request", request}};
    const Json body = check_to_json(report.check);
    for (const auto& [k, v] : body.items()) {
        out[k] = v;
    }
    out["timing_ms"] = report.timing_ms;
    return out;
}

std::string emit(const SectionsReport& report, OutputFormat format)
{
    if (format == OutputFormat::json) {
        return sections_to_json(report).dump(2) + "\n";
    }
    std::ostringstream os;
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("check", report.check.check());
    for (const auto& [k, v] : report.check.values()) {
        rows.emplace_back(k, std::to_string(v));
    }
    for (const auto& f : report.check.failures()) {
        rows.emplace_back("failed", f);
    }
    rows.emplace_back("status", report.check.passed() ? "passed" : "failed");
    rows.emplace_back("timing_ms", std::to_string(report.timing_ms));
    table_text(os, rows, "");
    return os.str();
}

} // namespace liecent
