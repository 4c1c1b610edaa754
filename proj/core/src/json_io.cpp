#include "howe/json_io.hpp"

namespace howe {

namespace {

[[noreturn]] void malformed(const std::string& what, const Json& j) {
    throw Error(ErrorCode::MalformedInput, what, j.dump());
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field \"") + key + "\"", j);
    return j.at(key);
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer())
        malformed(std::string("field \"") + key + "\" must be an integer", j);
    return v.get<int>();
}

Json rational_json(const Rational& r) { return format_rational(r); }

} // namespace

Json to_json(const FormedSpace& s) {
    Json j{{"base", to_string(s.base())}, {"division", to_string(s.division())}, {"epsilon", s.epsilon()}};
    if (s.kind() == InvariantKind::Signature)
        j["signature"] = {s.p(), s.q()};
    else
        j["dim"] = s.dim();
    return j;
}

FormedSpace space_from_json(const Json& j) {
    const Json& base = field(j, "base");
    const Json& division = field(j, "division");
    if (!base.is_string() || (base != "R" && base != "C"))
        malformed("base must be \"R\" or \"C\"", j);
    if (!division.is_string() || (division != "R" && division != "C" && division != "H"))
        malformed("division must be \"R\", \"C\" or \"H\"", j);
    const int eps = int_field(j, "epsilon");
    if (eps != 1 && eps != -1)
        malformed("epsilon must be 1 or -1", j);
    SpaceType type{base == "R" ? Field::R : Field::C,
                   division == "R" ? Division::R : (division == "C" ? Division::C : Division::H), eps};
    if (type.base == Field::C && type.division != Division::C)
        malformed("base C requires division C", j);
    const bool has_sig = j.contains("signature");
    const bool has_dim = j.contains("dim");
    if (has_sig == has_dim)
        malformed("exactly one of \"signature\" and \"dim\" is required", j);
    if ((type.kind() == InvariantKind::Signature) != has_sig)
        malformed(has_sig ? "this type is classified by dimension" : "this type is classified by signature", j);
    if (has_sig) {
        const Json& sig = j.at("signature");
        if (!sig.is_array() || sig.size() != 2 || !sig[0].is_number_integer() || !sig[1].is_number_integer())
            malformed("signature must be [p, q]", j);
        return FormedSpace::with_signature(type, sig[0].get<int>(), sig[1].get<int>());
    }
    return FormedSpace::with_dim(type, int_field(j, "dim"));
}

Json to_json(const Tableau& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows())
        rows.push_back({{"t", row.t}, {"mult", to_json(row.mult)}});
    return {{"space", to_json(t.space())}, {"rows", rows}};
}

Tableau tableau_from_json(const Json& j) {
    const FormedSpace space = space_from_json(field(j, "space"));
    const Json& rows = field(j, "rows");
    if (!rows.is_array())
        malformed("rows must be an array", j);
    std::vector<Row> out;
    for (const auto& r : rows)
        out.push_back(Row{int_field(r, "t"), space_from_json(field(r, "mult"))});
    return Tableau(space, std::move(out));
}

Json to_json(const GroupDescriptor& g) {
    Json factors = Json::array();
    for (const auto& f : g.factors)
        factors.push_back({{"name", f.name()}, {"lie_dim", f.lie_dim()}});
    return {{"name", g.name()}, {"lie_dim", g.lie_dim()}, {"factors", factors}};
}

Json to_json(const DescentResult& dr) {
    return {{"source", to_json(dr.source)}, {"target", to_json(dr.target)}, {"U", to_json(dr.U)},
            {"U1", to_json(dr.U1)},         {"kernel", to_json(dr.kernel())}, {"a", dr.a},
            {"b", dr.b},                    {"s", dr.s},                      {"strict", dr.strict}};
}

Json to_json(const PairFactorization& pf) {
    return {{"M_XXp", to_json(pf.M_XXp)},
            {"L", to_json(pf.L)},
            {"Lp", to_json(pf.Lp)},
            {"L_space", to_json(pf.L_space)},
            {"Lp_space", to_json(pf.Lp_space)}};
}

Json to_json(const ReducedPairDims& r) { return {{"W_gamma", r.W_gamma}, {"W0", r.W0}}; }

Json to_json(const WhittakerDatum& w) {
    Json grading = Json::object();
    for (auto [k, dim] : w.grading)
        grading[std::to_string(k)] = dim;
    return {{"grading", grading},
            {"dim_u", w.dim_u},
            {"dim_n", w.dim_n},
            {"dim_g_minus1", w.dim_g_minus1},
            {"heisenberg_case", w.heisenberg_case},
            {"stabilizer", to_json(w.stabilizer)}};
}

Json to_json(const Cycle& c) {
    Json terms = Json::array();
    for (const auto& [orbit, m] : c.terms)
        terms.push_back({{"orbit", to_json(orbit)}, {"mult", m}});
    return {{"complex_orbit", to_json(c.complex_orbit)}, {"real_space", to_json(c.real_space)}, {"terms", terms}};
}

Cycle cycle_from_json(const Json& j) {
    Cycle c{tableau_from_json(field(j, "complex_orbit")), space_from_json(field(j, "real_space")), {}};
    const Json& terms = field(j, "terms");
    if (!terms.is_array())
        malformed("terms must be an array", j);
    validate(c);
    for (const auto& t : terms) {
        const Json& m = field(t, "mult");
        if (!m.is_number_integer())
            malformed("mult must be an integer", t);
        add_term(c, tableau_from_json(field(t, "orbit")), m.get<long>());
    }
    return c;
}

Json to_json(const RangeReport& r) {
    return {{"dim_circ_V", rational_json(r.dim_circ_V)},
            {"exponent", rational_json(r.exponent)},
            {"threshold", rational_json(r.threshold)},
            {"nu", rational_json(r.nu)},
            {"in_range", r.in_range}};
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(format_rational(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array())
        malformed("matrix must be an array of rows", j);
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            malformed("matrix row must be an array", j);
        std::vector<Rational> row;
        for (const auto& x : r) {
            try {
                if (x.is_number_integer())
                    row.emplace_back(x.get<long>());
                else if (x.is_string())
                    row.push_back(parse_rational(x.get<std::string>()));
                else
                    malformed("matrix entries are \"p/q\" strings", j);
            } catch (const std::invalid_argument&) {
                malformed("bad rational entry", x);
            }
        }
        rows.push_back(std::move(row));
    }
    try {
        return Matrix::from_rows(rows);
    } catch (const std::invalid_argument&) {
        malformed("ragged matrix", j);
    }
}

Json to_json(const DimensionIdentityReport& r) {
    return {{"g_minus1", r.g_minus1}, {"gp_minus1", r.gp_minus1}, {"W0", r.W0},         {"ker_T", r.ker_T},
            {"invariants", r.invariants}, {"d", r.d},            {"rhs", r.rhs()}, {"holds", r.holds()}};
}

Json to_json(const DescentCheck& c) {
    return {{"phi", to_json(c.phi)},
            {"phi_prime", to_json(c.phi_prime)},
            {"space_matches", c.space_matches},
            {"target_matches", c.target_matches},
            {"source_matches", c.source_matches},
            {"lifts", c.lifts},
            {"kernel_nondegenerate", c.kernel_nondegenerate},
            {"ok", c.ok()}};
}

Json error_json(const Error& e) {
    return {{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"context", e.context()}};
}

} // namespace howe
