#include "qcgeo/report.hpp"

#include "qcgeo/corpus.hpp"

#include "json.hpp"

#include <sstream>

namespace qcgeo {

using json = nlohmann::ordered_json;

GeometryReport build_report(const CoframeModel& model) {
    GeometryReport r;
    r.name = model.name;
    r.n = model.n;
    for (const auto& f : validate_jacobi(model)) r.jacobi_failures.push_back(render(f.residual));
    r.valid = r.jacobi_failures.empty();
    if (!r.valid) {
        r.note = "structure constants violate d² = 0";
        return r;
    }

    const QcCheck check = qc_check(model);
    r.qc_adapted = check.adapted;
    r.qc_orbit = check.orbit_compatible;
    if (!check.adapted) {
        r.note = check.orbit_compatible ? "frame is qc-compatible but not adapted" : "not a qc structure: " + check.witness;
        return r;
    }

    r.integrable = integrability_check(model).integrable;
    if (!r.integrable) {
        r.note = "not an integrable qc structure";
        return r;
    }

    r.qc = qc_connection(model);
    r.curvature = curvature_module_membership(tangent_curvature(model, *r.qc), model.n);

    CoframeModel metric_model = model;
    ConnectionForm qc_on_metric_model = *r.qc;
    try {
        r.qcm = qcm_connection(model);
    } catch (const PipelineError&) {
        try {
            metric_model = adapt_complement(model).model;
            r.qcm = qcm_connection(metric_model);
            qc_on_metric_model = qc_connection(metric_model);
            r.note = "vertical complement adapted before the metric constructions";
        } catch (const PipelineError& e) {
            r.note = e.what();
            return r;
        }
    }
    r.einstein = einstein_flat_report(metric_model, *r.qcm, qc_on_metric_model);
    r.biquard = biquard_connection(metric_model, *r.qcm);
    r.duchemin = duchemin_connection(metric_model, *r.qcm);
    return r;
}

namespace {

json term_table(const Tensor& t) {
    json out = json::array();
    for (const auto& [k, v] : t.terms()) {
        json row = json::array();
        for (int p = 0; p < k.size; ++p) row.push_back(k[p] + 1);
        row.push_back(to_string(v));
        out.push_back(std::move(row));
    }
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        out.push_back(std::move(r));
    }
    return out;
}

template <class T, class F>
json or_null(const std::optional<T>& x, F f) {
    return x ? f(*x) : json(nullptr);
}

}  // namespace

std::string report_to_json(const GeometryReport& r) {
    json j;
    j["name"] = r.name;
    j["n"] = r.n;
    j["valid"] = r.valid;
    j["qc_adapted"] = r.qc_adapted;
    j["qc_orbit"] = r.qc_orbit;
    j["integrable"] = r.integrable;
    j["qc_connection"] = or_null(r.qc, [](const ConnectionForm& w) { return term_table(w.tangent_coefficients()); });
    j["curvature_components"] = or_null(r.curvature, [](const CurvatureReport& c) {
        json out;
        for (int g = 0; g < 4; ++g) out["R" + std::to_string(g + 1)] = term_table(c.components[g]);
        return out;
    });
    j["chi_V"] = or_null(r.qcm, [](const QcmData& q) { return matrix_json(q.chi_v_matrix); });
    j["chi_W"] = or_null(r.qcm, [](const QcmData& q) { return matrix_json(q.chi_w_matrix); });
    j["ricci"] = or_null(r.einstein, [](const EinsteinFlags& e) { return matrix_json(e.ricci.ric); });
    j["scalar_curvature"] = or_null(r.einstein, [](const EinsteinFlags& e) { return json(to_string(e.ricci.scalar)); });
    j["qc_einstein"] = or_null(r.einstein, [](const EinsteinFlags& e) { return json(e.traceless_chi_v_zero); });
    j["four_form_closed"] = or_null(r.einstein, [](const EinsteinFlags& e) { return json(e.four_form_closed); });
    j["flat"] = or_null(r.einstein, [](const EinsteinFlags& e) { return json(e.flat); });
    j["biquard_torsion"] = or_null(r.biquard, [](const MetricConnection& b) {
        return json{{"t11", term_table(b.t11)}, {"t02", term_table(b.t02)}};
    });
    j["duchemin_torsion"] = or_null(r.duchemin, [](const MetricConnection& b) {
        return json{{"t11", term_table(b.t11)}, {"t02", term_table(b.t02)}};
    });
    j["jacobi_failures"] = r.jacobi_failures;
    j["note"] = r.note;
    return j.dump(2) + "\n";
}

std::string report_to_text(const GeometryReport& r) {
    std::ostringstream out;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << r.name << " (n = " << r.n << ")\n";
    out << "  valid:        " << yes(r.valid) << "\n";
    for (const auto& f : r.jacobi_failures) out << "    d² ≠ 0: " << f << "\n";
    out << "  qc adapted:   " << yes(r.qc_adapted) << "\n";
    out << "  qc orbit:     " << yes(r.qc_orbit) << "\n";
    out << "  integrable:   " << yes(r.integrable) << "\n";
    if (r.qc) out << "  qc connection: " << render(r.qc->tangent_coefficients()) << "\n";
    if (r.curvature)
        for (int g = 0; g < 4; ++g)
            out << "  curvature R" << g + 1 << ": " << render(r.curvature->components[g]) << "\n";
    if (r.qcm) {
        out << "  chi_V:\n";
        for (const auto& row : r.qcm->chi_v_matrix) {
            out << "   ";
            for (const auto& x : row) out << " " << to_string(x);
            out << "\n";
        }
        out << "  chi_W: " << render(r.qcm->chi_w) << "\n";
    }
    if (r.einstein) {
        out << "  scalar curvature: " << to_string(r.einstein->ricci.scalar) << "\n";
        out << "  qc-Einstein:      " << yes(r.einstein->traceless_chi_v_zero) << "\n";
        out << "  four-form closed: " << yes(r.einstein->four_form_closed) << "\n";
        out << "  flat:             " << yes(r.einstein->flat) << "\n";
    }
    if (r.biquard) {
        out << "  Biquard torsion (1,1): " << render(r.biquard->t11) << "\n";
        out << "  Biquard torsion (0,2): " << render(r.biquard->t02) << "\n";
    }
    if (r.duchemin) out << "  Duchemin torsion (0,2): " << render(r.duchemin->t02) << "\n";
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
    return out.str();
}

}  // namespace qcgeo
