#include "tpalg/report_json.hpp"

namespace tpalg {

using nlohmann::json;

json element_json(const Element& e) {
    json arr = json::array();
    for (const auto& c : e.coords) arr.push_back(c.str());
    return arr;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json subspace_json(const Subspace& s) {
    return json{{"ambient_dim", s.ambient_dim()},
                {"dim", s.dim()},
                {"basis", matrix_json(s.basis())}};
}

json defect_json(const Defect& d) {
    if (std::holds_alternative<Element>(d))
        return json{{"kind", "element"},
                    {"coords", element_json(std::get<Element>(d))}};
    return json{{"kind", "operator"},
                {"entries", matrix_json(std::get<Matrix>(d))}};
}

json identity_report_json(const IdentityReport& r) {
    json out{{"identity", identity_name(r.identity)},
             {"verdict", r.pass ? "PASS" : "FAIL"}};
    if (!r.pass) {
        out["counterexample"] = *r.counterexample;
        out["defect"] = defect_json(*r.defect);
    }
    return out;
}

json simplicity_json(const SimplicityReport& r) {
    json out{{"verdict", verdict_name(r.verdict)},
             {"strategy", r.strategy_used},
             {"candidates", r.candidates},
             {"note", r.note}};
    out["witness"] = r.witness ? subspace_json(*r.witness) : json(nullptr);
    return out;
}

json structure_json(const SuperAlgebra& a) {
    StructureSummary s = series(a);
    auto series_json = [](const std::vector<Subspace>& terms) {
        json dims = json::array(), bases = json::array();
        for (const auto& t : terms) {
            dims.push_back(t.dim());
            bases.push_back(subspace_json(t));
        }
        return json{{"dims", dims}, {"terms", bases}};
    };
    json out;
    out["algebra"] = a.name();
    out["center_circ"] = subspace_json(s.center_circ);
    out["center_bracket"] = subspace_json(s.center_bracket);
    out["derived_series"] = series_json(s.derived_series);
    out["lower_central_bracket"] = series_json(s.lower_central_bracket);
    out["circ_powers"] = series_json(s.circ_powers);
    out["radical"] = s.radical ? subspace_json(*s.radical) : json(nullptr);
    out["unit"] = s.unit ? element_json(*s.unit) : json(nullptr);
    out["perfect_circ"] = s.perfect_circ;
    out["perfect_bracket"] = s.perfect_bracket;
    out["annihilator"] = subspace_json(annihilator(a));
    return out;
}

json halfderiv_json(const HalfDerivationSpace& s) {
    json basis = json::array();
    for (const auto& op : s.basis) basis.push_back(matrix_json(op));
    return json{{"product", s.which == Product::Circ ? "CIRC" : "BRACKET"},
                {"parity", s.parity},
                {"dimension", s.dim()},
                {"basis", basis}};
}

json window_report_json(const witt::WindowReport& r) {
    json out{{"identity", identity_name(r.identity)},
             {"verdict", r.pass ? "PASS" : "FAIL"},
             {"evidence_only", r.evidence_only}};
    if (!r.pass) {
        out["counterexample"] = *r.counterexample;
        json terms = json::object();
        for (const auto& [k, c] : r.defect->terms())
            terms[std::to_string(k)] = c.str();
        out["defect"] = json{{"kind", "z_element"}, {"terms", terms}};
    }
    return out;
}

json algebra_json(const SuperAlgebra& a) {
    return json::parse(save_algebra(a));
}

} // namespace tpalg
