#include "qcgeo/corpus.hpp"
#include "qcgeo/qc_pipeline.hpp"

namespace qcgeo {

namespace {

Matrix horizontal_matrix(const Tensor& two_form, int v) {
    Matrix m(v, std::vector<Rational>(v));
    for (const auto& [k, c] : two_form.terms()) {
        if (k[0] >= v || k[1] >= v) continue;
        m[k[0]][k[1]] += c;
        m[k[1]][k[0]] -= c;
    }
    return m;
}

Matrix negate(Matrix m) {
    for (auto& row : m)
        for (auto& x : row) x = -x;
    return m;
}

}  // namespace

Tensor horizontal_values(const Tensor& t) {
    const int pos = t.signature().form_degree();
    return t.filter([&](const Key& k) { return t.layout().is_horizontal(k[pos]); });
}

Tensor vertical_values(const Tensor& t) {
    const int pos = t.signature().form_degree();
    return t.filter([&](const Key& k) { return t.layout().is_vertical(k[pos]); });
}

QcCheck qc_check(const CoframeModel& model) {
    const int n = model.n;
    const int v = 4 * n;
    const auto& c = ModelSpaces::get(n).constants();
    QcCheck out;

    out.adapted = true;
    for (int s = 0; s < 3; ++s) {
        const Tensor part = bigrade_part(model.differentials[vertical_index(n, s)], 2, 0);
        out.gamma[s] = horizontal_matrix(part, v);
        if (!(part.relayout(c.layout) == c.omega[s])) out.adapted = false;
    }

    auto fail = [&](std::string why) {
        out.witness = std::move(why);
        return out;
    };

    std::array<Matrix, 3> inv;
    for (int s = 0; s < 3; ++s) {
        auto i = inverse(out.gamma[s]);
        if (!i) return fail("γ" + std::to_string(s + 1) + " is degenerate");
        inv[s] = std::move(*i);
    }
    // I₃ = −γ₁⁻¹γ₂ and cyclically.
    std::array<Matrix, 3> I = {negate(multiply(inv[1], out.gamma[2])), negate(multiply(inv[2], out.gamma[0])),
                               negate(multiply(inv[0], out.gamma[1]))};
    const Matrix minus_id = negate(identity_matrix(v));
    for (int s = 0; s < 3; ++s)
        if (!operator_equal(multiply(I[s], I[s]), minus_id))
            return fail("I" + std::to_string(s + 1) + "² ≠ −1");
    if (!operator_equal(multiply(I[0], I[1]), I[2])) return fail("I1 I2 ≠ I3");
    Matrix g = negate(multiply(out.gamma[0], I[0]));
    if (!is_symmetric(g)) return fail("g = −γ1 I1 is not symmetric");
    if (!is_positive_definite(g)) return fail("g = −γ1 I1 is not positive definite");
    for (int s = 0; s < 3; ++s)
        if (!operator_equal(multiply(g, I[s]), out.gamma[s]))
            return fail("γ" + std::to_string(s + 1) + " ≠ g I" + std::to_string(s + 1));
    out.orbit_compatible = true;
    out.complex_structures = I;
    out.metric = std::move(g);
    return out;
}

ConnectionForm base_connection(const CoframeModel& model, AlgebraName algebra) {
    const ConnectionForm iso = isotropy_connection(model);
    return ConnectionForm(model.layout(), algebra, iso.coefficients());
}

TorsionDecomposition torsion_decomposition(const CoframeModel& model, const ConnectionForm& w) {
    const auto& spaces = ModelSpaces::get(model.n);
    const Tensor theta = tangent_torsion(model, w);
    const auto parts = project_components(theta, spaces.torsion_split().parts());

    TorsionDecomposition out;
    out.theta_star = parts[0];
    out.theta_q = parts[1];
    out.theta_1 = parts[2];
    out.theta_2 = parts[3];
    out.theta_minus1 = vertical_values(bigrade_part(out.theta_star, 1, 1));

    const auto iso = isotypic_split(spaces.sp1_casimir(), out.theta_2, {Rational(-15), Rational(-35)});
    out.theta_2_es3h = iso[0];
    out.theta_2_es5h = iso[1];
    return out;
}

Integrability integrability_check(const CoframeModel& model) {
    const auto dec = torsion_decomposition(model, base_connection(model, AlgebraName::B));
    Integrability out{dec.theta_2_es5h.is_zero(), dec.theta_2_es3h, dec.theta_2_es5h};
    if (model.n > 1 && !out.integrable)
        throw InvariantViolation("ES⁵H torsion is nonzero although n > 1: " + render(dec.theta_2_es5h));
    return out;
}

}  // namespace qcgeo
