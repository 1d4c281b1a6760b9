#include "gqt/json_io.hpp"

#include <sstream>

namespace gqt {

Json to_json(const FieldSpec& spec) { return Json{{"p", spec.p()}, {"k", spec.k()}, {"modulus", spec.modulus()}}; }

Json to_json(const FieldElement& x) { return Json{{"coeffs", x.coeffs()}}; }

Json to_json(const FieldVector& v) {
    Json out = Json::array();
    for (const auto& e : v.entries()) out.push_back(to_json(e));
    return out;
}

Json to_json(const FieldMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

Json to_json(const HermitianForm& f) { return Json{{"dim", f.dim()}, {"gram", to_json(f.gram())}}; }

Json to_json(const TheoryDescriptor& d) {
    return Json{{"coordinates", {{"i", d.i}, {"m", d.m}, {"p", d.p}}},
                {"field", to_json(d.field)},
                {"field_order", d.field.order()},
                {"subfield_order", d.subfield_order},
                {"dimension", d.dimension},
                {"involution_exponent", d.involution_exponent},
                {"kappa", to_json(d.field.kappa())}};
}

namespace {

Json catalog_header(const KernelGeometry& geom) {
    const FieldSpec& spec = geom.form.spec();
    return Json{{"p", spec.p()}, {"k", spec.k()}, {"dim", geom.form.dim()}, {"modulus", spec.modulus()}};
}

Json histogram(const std::map<std::size_t, std::size_t>& h) {
    Json out = Json::object();
    for (const auto& [k, v] : h) out[std::to_string(k)] = v;
    return out;
}

Json violations(const std::vector<IncidenceViolation>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back({{"point", x.point}, {"line", x.line}, {"count", x.count}});
    return out;
}

Json labeled_state(const LabeledState& s) {
    Json coeffs = Json::object();
    for (std::size_t i = 0; i < s.state.size(); ++i) {
        coeffs[i < s.basis_labels.size() ? s.basis_labels[i] : std::to_string(i)] = to_json(s.state[i]);
    }
    return Json{{"label", s.label}, {"vector", to_json(s.state)}, {"coefficients", coeffs}};
}

Json witness_json(const RoundtripWitness& w) {
    return Json{{"trial", w.trial},
                {"state", to_json(w.state)},
                {"curve_points", {to_json(w.plain[0]), to_json(w.plain[1]), to_json(w.plain[2])}},
                {"span_rank", w.span_rank}};
}

}  // namespace

Json catalog_json(const KernelGeometry& geom) {
    Json points = Json::array();
    for (const auto& p : geom.points) points.push_back(to_json(p.coords()));
    Json lines = Json::array();
    for (const auto& l : geom.lines) lines.push_back(l);
    return Json{{"header", catalog_header(geom)},
                {"point_count", geom.points.size()},
                {"line_count", geom.lines.size()},
                {"point_degrees", histogram(geom.point_degree_histogram())},
                {"line_sizes", histogram(geom.line_size_histogram())},
                {"points", points},
                {"lines", lines}};
}

std::string catalog_csv(const KernelGeometry& geom) {
    const FieldSpec& spec = geom.form.spec();
    std::ostringstream os;
    os << "# p=" << spec.p() << " k=" << spec.k() << " dim=" << geom.form.dim() << " modulus=";
    for (std::size_t i = 0; i < spec.modulus().size(); ++i) os << (i ? ";" : "") << spec.modulus()[i];
    os << "\n# points\nindex";
    for (std::size_t j = 0; j < geom.form.dim(); ++j) os << ",x" << j;
    os << "\n";
    for (std::size_t i = 0; i < geom.points.size(); ++i) {
        os << i;
        for (const auto& e : geom.points[i].coords().entries()) {
            os << ",";
            const auto c = e.coeffs();
            for (std::size_t t = 0; t < c.size(); ++t) os << (t ? ";" : "") << c[t];
        }
        os << "\n";
    }
    os << "# lines\nindex,points\n";
    for (std::size_t l = 0; l < geom.lines.size(); ++l) {
        os << l << ",";
        for (std::size_t t = 0; t < geom.lines[l].size(); ++t) os << (t ? ";" : "") << geom.lines[l][t];
        os << "\n";
    }
    return os.str();
}

Json to_json(const OneOrAllReport& r) {
    Json non_iso = Json::array();
    for (auto l : r.non_isotropic_lines) non_iso.push_back(l);
    return Json{{"ok", r.ok()},
                {"pairs_checked", r.pairs_checked},
                {"collinear_count_distribution", histogram(r.collinear_count_distribution)},
                {"one_or_all_violations", violations(r.one_or_all_violations)},
                {"unique_line_violations", violations(r.unique_line_violations)},
                {"non_isotropic_lines", non_iso}};
}

Json to_json(const CloneClassification& c) {
    Json out{{"kind", c.kind == ObstructionKind::Cloning ? "cloning" : "deleting"},
             {"verdict", std::string(to_string(c.verdict))},
             {"tensor_obstruction", to_json(c.tensor_obstruction)},
             {"obstruction_vanishes", c.obstruction_vanishes()},
             {"entrywise_condition", c.entrywise_condition},
             {"commutators_vanish", c.commutators_vanish}};
    out["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
    return out;
}

Json to_json(const NoGoScan& s) {
    Json counts = Json::object();
    Json witnesses = Json::object();
    for (const auto& [v, n] : s.verdict_counts) counts[std::string(to_string(v))] = n;
    for (const auto& [v, pair] : s.witnesses) {
        witnesses[std::string(to_string(v))] = {{"phi", to_json(pair.first)}, {"psi", to_json(pair.second)}};
    }
    return Json{{"pairs", s.pairs},
                {"verdict_counts", counts},
                {"theorem_violations", s.theorem_violations},
                {"entrywise_disagreements", s.entrywise_disagreements},
                {"witnesses", witnesses}};
}

Json to_json(const ProtocolTranscript& t) {
    Json inputs = Json::object();
    if (t.alpha) inputs["alpha"] = to_json(*t.alpha);
    if (t.beta) inputs["beta"] = to_json(*t.beta);
    if (!t.input_message.empty()) inputs["message"] = t.input_message;
    Json states = Json::array();
    for (const auto& s : t.states) states.push_back(labeled_state(s));
    Json out{{"protocol", t.protocol}, {"field", to_json(t.field)}, {"inputs", inputs}};
    out["seed"] = t.seed ? Json(*t.seed) : Json(nullptr);
    out["states"] = states;
    out["branch_labels"] = t.branch_labels;
    out["possible_branches"] = t.possible_branches;
    out["branch"] = t.branch;
    out["branch_label"] = t.branch < t.branch_labels.size() ? t.branch_labels[t.branch] : "";
    out["classical_message"] = t.classical_message;
    out["correction"] = t.correction;
    out["expansion_factor"] = t.expansion_factor ? to_json(*t.expansion_factor) : Json(nullptr);
    out["bob_before_correction"] = t.bob_before_correction.size() ? to_json(t.bob_before_correction) : Json(nullptr);
    out["final_state"] = to_json(t.final_state);
    out["notes"] = t.notes;
    return out;
}

Json to_json(const GeoCiphertext& ct) {
    Json points = Json::array();
    for (const auto& p : ct.points) points.push_back(to_json(p.coords()));
    return Json{{"layout", kGeoBitLayout}, {"points", points}, {"bit_count", ct.bits.size()}, {"hex", bits_to_hex(ct.bits)}};
}

Json to_json(const RoundtripReport& r) {
    Json degenerate = Json::array();
    for (const auto& w : r.degenerate_witnesses) degenerate.push_back(witness_json(w));
    Json failed = Json::array();
    for (const auto& w : r.failure_witnesses) failed.push_back(witness_json(w));
    return Json{{"trials", r.trials},
                {"successes", r.successes},
                {"degenerate_count", r.degenerate_count},
                {"failures", r.failures},
                {"witnesses", {{"degenerate", degenerate}, {"failed", failed}}}};
}

FieldSpec field_from_json(const Json& j) {
    try {
        std::optional<std::vector<std::uint32_t>> modulus;
        if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
        return build_field(j.at("p").get<std::uint32_t>(), j.at("k").get<std::uint32_t>(), modulus);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("field spec: ") + e.what());
    }
}

FieldElement element_from_json(const FieldSpec& spec, const Json& j) {
    try {
        if (j.is_object()) return spec.element(j.at("coeffs").get<std::vector<std::uint32_t>>());
        if (j.is_array()) return spec.element(j.get<std::vector<std::uint32_t>>());
        if (j.is_string()) return parse_element(spec, j.get<std::string>());
        if (j.is_number_integer()) return spec.from_int(j.get<std::int64_t>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("element: ") + e.what());
    }
    throw Error(ErrorCode::ParseError, "unsupported element encoding: " + j.dump());
}

FieldVector vector_from_json(const FieldSpec& spec, const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "vector must be a list of elements");
    std::vector<FieldElement> entries;
    for (const auto& e : j) entries.push_back(element_from_json(spec, e));
    return FieldVector(spec, std::move(entries));
}

FieldMatrix matrix_from_json(const FieldSpec& spec, const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be a list of rows");
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(spec, r).entries());
    return FieldMatrix::from_rows(spec, rows);
}

HermitianForm form_from_json(const FieldSpec& spec, const Json& j) {
    if (!j.is_object() || !j.contains("gram")) throw Error(ErrorCode::ParseError, "form needs a gram matrix");
    FieldMatrix gram = matrix_from_json(spec, j.at("gram"));
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != gram.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "form dim disagrees with its gram matrix");
    }
    return HermitianForm(std::move(gram));
}

}  // namespace gqt
